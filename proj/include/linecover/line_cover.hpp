#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "linecover/geom.hpp"

namespace linecover {

struct LineCoverLimits {
  std::size_t max_points = 64;
  int max_budget = 8;
};

namespace detail {

class CoverSearch {
 public:
  CoverSearch(const std::vector<Point>& pts) : pts_(pts) {
    std::map<std::uint64_t, Line> by_mask;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        Line l = Line::through(pts[i], pts[j]);
        std::uint64_t mask = 0;
        for (std::size_t k = 0; k < pts.size(); ++k)
          if (l.contains(pts[k])) mask |= std::uint64_t{1} << k;
        by_mask.emplace(mask, std::move(l));
      }
    }
    for (auto& [mask, line] : by_mask) {
      masks_.push_back(mask);
      lines_.push_back(line);
    }
  }

  std::optional<std::vector<Line>> solve(int k) {
    chosen_.clear();
    const std::uint64_t all = pts_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pts_.size()) - 1;
    if (!search(all, k)) return std::nullopt;
    return chosen_;
  }

 private:
  bool search(std::uint64_t uncovered, int k) {
    if (uncovered == 0) return true;
    if (k == 0) return false;

    int best = 1;
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      const int c = std::popcount(masks_[i] & uncovered);
      if (c > k) return take(i, uncovered, k);  // kernel rule: forced line
      best = std::max(best, c);
    }
    if (std::popcount(uncovered) > k * best) return false;

    const int p = std::countr_zero(uncovered);
    const std::uint64_t pbit = std::uint64_t{1} << p;
    std::vector<std::size_t> through;
    for (std::size_t i = 0; i < masks_.size(); ++i)
      if ((masks_[i] & pbit) && std::popcount(masks_[i] & uncovered) >= 2) through.push_back(i);
    std::sort(through.begin(), through.end(), [&](std::size_t a, std::size_t b) {
      return std::popcount(masks_[a] & uncovered) > std::popcount(masks_[b] & uncovered);
    });
    for (std::size_t i : through)
      if (take(i, uncovered, k)) return true;
    if (!through.empty()) return false;

    chosen_.push_back(Line::horizontal(pts_[static_cast<std::size_t>(p)].y));
    if (search(uncovered & ~pbit, k - 1)) return true;
    chosen_.pop_back();
    return false;
  }

  bool take(std::size_t i, std::uint64_t uncovered, int k) {
    chosen_.push_back(lines_[i]);
    if (search(uncovered & ~masks_[i], k - 1)) return true;
    chosen_.pop_back();
    return false;
  }

  const std::vector<Point>& pts_;
  std::vector<std::uint64_t> masks_;
  std::vector<Line> lines_;
  std::vector<Line> chosen_;
};

}  // namespace detail

/// Minimum number of lines covering the points, when that minimum is at most
/// budget. Exact branch and bound over lines spanned by point pairs.
inline std::optional<std::vector<Line>> min_line_cover(const std::vector<Point>& points, int budget,
                                                       const LineCoverLimits& limits = {}) {
  if (budget < 1 || budget > limits.max_budget) throw std::invalid_argument("min_line_cover: budget out of range");
  std::set<Point> unique(points.begin(), points.end());
  if (unique.size() > limits.max_points || unique.size() > 64)
    throw std::invalid_argument("min_line_cover: too many points");
  std::vector<Point> pts(unique.begin(), unique.end());
  if (pts.empty()) return std::vector<Line>{};

  detail::CoverSearch search(pts);
  for (int k = 1; k <= budget; ++k)
    if (auto cover = search.solve(k)) return cover;
  return std::nullopt;
}

}  // namespace linecover
