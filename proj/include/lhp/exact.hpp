#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "lhp/error.hpp"

namespace lhp {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

/// Parses "7", "-3" or "5/2".
inline Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0 || q.get_den() == 0)
    throw invalid_input("not a rational number: '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

/// a/b compared with c/d for positive denominators, without division.
inline int compare_fractions(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const std::int64_t lhs = a * d;
  const std::int64_t rhs = c * b;
  return (lhs > rhs) - (lhs < rhs);
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Resource caps shared by every enumerator. Environment variables override
/// the defaults: LHP_MAX_POSET_SIZE, LHP_MAX_COLORED, LHP_MAX_POINTS.
struct Limits {
  int max_poset_size = 10;
  std::uint64_t max_colored = 50'000'000;
  std::uint64_t max_points = 200'000'000;

  static Limits from_environment() {
    Limits limits;
    auto read = [](const char* name) -> std::optional<std::uint64_t> {
      const char* value = std::getenv(name);
      if (value == nullptr || *value == '\0') return std::nullopt;
      char* end = nullptr;
      const unsigned long long parsed = std::strtoull(value, &end, 10);
      if (end == value || *end != '\0')
        throw invalid_input(std::string(name) + " must be a nonnegative integer");
      return parsed;
    };
    if (auto v = read("LHP_MAX_POSET_SIZE")) limits.max_poset_size = static_cast<int>(*v);
    if (auto v = read("LHP_MAX_COLORED")) limits.max_colored = *v;
    if (auto v = read("LHP_MAX_POINTS")) limits.max_points = *v;
    return limits;
  }
};

}  // namespace lhp
