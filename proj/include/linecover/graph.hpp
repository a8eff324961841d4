#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace linecover {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n, const std::vector<Edge>& edges = {}) : adj_(n) {
    for (const auto& [u, v] : edges) add_edge(u, v);
  }

  std::size_t add_vertex() {
    adj_.emplace_back();
    return adj_.size() - 1;
  }

  void add_edge(std::size_t u, std::size_t v) {
    if (u >= adj_.size() || v >= adj_.size()) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (!keys_.insert(key(u, v)).second)
      throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
  std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
  bool has_edge(std::size_t u, std::size_t v) const { return keys_.contains(key(u, v)); }

 private:
  static std::uint64_t key(std::size_t u, std::size_t v) {
    return (static_cast<std::uint64_t>(std::min(u, v)) << 32) | static_cast<std::uint64_t>(std::max(u, v));
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> keys_;
};

struct PropertyReport {
  bool cubic = false;
  bool subcubic = false;
  bool bipartite = false;
  bool connected = false;
  std::vector<int> coloring;            // filled when bipartite
  std::vector<std::size_t> odd_cycle;   // filled otherwise
};

namespace detail {

// Connectivity after deleting the vertices flagged in `gone`.
inline bool connected_without(const Graph& g, const std::vector<char>& gone) {
  const std::size_t n = g.vertex_count();
  std::size_t start = n, alive = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (!gone[v]) {
      ++alive;
      if (start == n) start = v;
    }
  if (alive <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{start};
  seen[start] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : g.neighbors(v))
      if (!gone[w] && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == alive;
}

// True when the graph minus `gone` has an articulation point. Iterative
// lowpoint search; assumes the remaining graph is connected.
inline bool has_cut_vertex_without(const Graph& g, const std::vector<char>& gone) {
  const std::size_t n = g.vertex_count();
  const std::size_t none = n;
  std::size_t root = none;
  for (std::size_t v = 0; v < n && root == none; ++v)
    if (!gone[v]) root = v;
  if (root == none) return false;
  std::vector<std::size_t> disc(n, none), low(n, 0), parent(n, none), it(n, 0);
  std::size_t timer = 0, root_children = 0;
  std::vector<std::size_t> stack{root};
  disc[root] = low[root] = timer++;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    const auto& nb = g.neighbors(v);
    if (it[v] < nb.size()) {
      const std::size_t w = nb[it[v]++];
      if (gone[w]) continue;
      if (disc[w] == none) {
        parent[w] = v;
        disc[w] = low[w] = timer++;
        if (v == root) ++root_children;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      stack.pop_back();
      const std::size_t p = parent[v];
      if (p != none) {
        low[p] = std::min(low[p], low[v]);
        if (p != root && low[v] >= disc[p]) return true;
      }
    }
  }
  return root_children > 1;
}

}  // namespace detail

inline PropertyReport check_properties(const Graph& g) {
  PropertyReport r;
  const std::size_t n = g.vertex_count();
  r.cubic = true;
  r.subcubic = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) != 3) r.cubic = false;
    if (g.degree(v) > 3) r.subcubic = false;
  }
  r.connected = detail::connected_without(g, std::vector<char>(n, 0));

  std::vector<int> color(n, -1);
  std::vector<std::size_t> parent(n, n), depth(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (std::size_t w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          q.push(w);
        } else if (color[w] == color[v]) {
          // walk both ends up the BFS tree to their meeting point
          std::vector<std::size_t> left{v}, right{w};
          std::size_t a = v, b = w;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          r.odd_cycle = std::move(left);
          return r;
        }
      }
    }
  }
  r.bipartite = true;
  r.coloring = std::move(color);
  return r;
}

/// Vertex k-connectivity for k <= 3: no set of fewer than k vertices
/// disconnects the graph. Pairs are handled by deleting one vertex and
/// searching the rest for an articulation point.
inline bool is_k_connected(const Graph& g, int k) {
  const std::size_t n = g.vertex_count();
  if (k < 1 || k > 3) throw std::invalid_argument("is_k_connected: k must be 1, 2 or 3");
  if (n <= static_cast<std::size_t>(k)) throw std::invalid_argument("is_k_connected: need more than k vertices");
  std::vector<char> gone(n, 0);
  if (!detail::connected_without(g, gone)) return false;
  if (k == 1) return true;
  if (detail::has_cut_vertex_without(g, gone)) return false;
  if (k == 2) return true;
  for (std::size_t v = 0; v < n; ++v) {
    gone[v] = 1;
    const bool bad = detail::has_cut_vertex_without(g, gone);
    gone[v] = 0;
    if (bad) return false;
  }
  return true;
}

}  // namespace linecover
