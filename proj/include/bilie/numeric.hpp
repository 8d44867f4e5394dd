#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

#include "bilie/errors.hpp"

namespace bilie {

/// All scalar arithmetic is exact: arbitrary-precision integers and
/// rationals. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: product of (i+1) consecutive integers
  }
  return r;
}

inline int mobius(std::int64_t n) {
  if (n <= 0) throw DomainError("mobius: argument must be positive");
  int result = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace bilie
