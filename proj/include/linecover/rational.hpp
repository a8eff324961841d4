#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace linecover {

/// Exact rational number. GMP keeps the value canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Serialized form is always "num/den", including integers ("3/1").
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "num/den" or a plain integer "num".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    mpz_class num(slash == std::string::npos ? s : s.substr(0, slash), 10);
    mpz_class den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1), 10);
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
}

inline int sign(const Rational& q) { return sgn(q); }

/// Integer value when the rational is an integer that fits in int64.
inline std::optional<std::int64_t> as_small_integer(const Rational& q) {
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(q.get_num().get_si());
}

}  // namespace linecover
