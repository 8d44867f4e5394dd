#pragma once

#include <compare>
#include <ostream>
#include <string>

namespace bilie {

/// Bidegree (m1, m2) of the two-generator bigrading. The total degree |m| is
/// the sum of the coordinates.
struct MultiDegree {
  int m1 = 0;
  int m2 = 0;

  constexpr int total() const { return m1 + m2; }

  constexpr bool nonnegative() const { return m1 >= 0 && m2 >= 0; }
  constexpr bool strictly_positive() const { return m1 > 0 && m2 > 0; }
  constexpr bool strictly_negative() const { return m1 < 0 && m2 < 0; }
  constexpr bool is_zero() const { return m1 == 0 && m2 == 0; }

  friend constexpr MultiDegree operator+(MultiDegree a, MultiDegree b) {
    return {a.m1 + b.m1, a.m2 + b.m2};
  }
  friend constexpr MultiDegree operator-(MultiDegree a) { return {-a.m1, -a.m2}; }

  friend constexpr auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

  std::string str() const {
    return "(" + std::to_string(m1) + "," + std::to_string(m2) + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const MultiDegree& m) {
    return os << m.str();
  }
};

/// Ordering used for all table output: by total degree, then by first
/// coordinate. Map storage uses the default lexicographic order instead.
struct ByTotalThenM1 {
  constexpr bool operator()(const MultiDegree& a, const MultiDegree& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    if (a.m1 != b.m1) return a.m1 < b.m1;
    return a.m2 < b.m2;
  }
};

}  // namespace bilie
