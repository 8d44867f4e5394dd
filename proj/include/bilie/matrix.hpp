#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "bilie/errors.hpp"
#include "bilie/numeric.hpp"

namespace bilie {

/// Dense matrix of exact integers. Row-major.
class IntMatrix {
public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

struct Echelon {
  IntMatrix m;                  // fraction-free row echelon form
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Bareiss fraction-free Gaussian elimination. All intermediate entries are
/// exact integers (minors of the input); the exact divisions below never
/// truncate. Pivots are chosen as the smallest nonzero magnitude in the
/// column to limit entry growth, ties broken by row index, so the result is
/// deterministic.
inline Echelon fraction_free_echelon(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  Int prev_pivot = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m.at(i, c) == 0) continue;
      if (best == rows || abs(m.at(i, c)) < abs(m.at(best, c))) best = i;
    }
    if (best == rows) continue;
    if (best != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(best, j));
    const Int pivot = m.at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Int factor = m.at(i, c);
      m.at(i, c) = 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int v = m.at(i, j) * pivot - factor * m.at(r, j);
        v /= prev_pivot;  // exact (Sylvester identity)
        m.at(i, j) = std::move(v);
      }
    }
    prev_pivot = pivot;
    pivots.push_back(c);
    ++r;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

inline std::size_t rank(const IntMatrix& m) { return fraction_free_echelon(m).rank(); }

namespace detail {

inline Int vector_gcd(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

}  // namespace detail

/// Basis of the right kernel {v : M v = 0} as primitive integer vectors, one
/// per free column, sign-normalized so the first nonzero entry is positive.
/// Deterministic: vectors are ordered by free column index.
inline std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m) {
  const Echelon e = fraction_free_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Int>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    // Back-substitute over the rationals, then clear denominators.
    std::vector<Rat> v(cols, Rat(0));
    v[f] = 1;
    for (std::size_t i = e.rank(); i-- > 0;) {
      const std::size_t p = e.pivot_cols[i];
      Rat s = 0;
      for (std::size_t j = p + 1; j < cols; ++j)
        if (v[j] != 0) s += Rat(e.m.at(i, j)) * v[j];
      v[p] = -s / Rat(e.m.at(i, p));
    }
    Int lcd = 1;
    for (const Rat& x : v)
      lcd = boost::multiprecision::lcm(lcd, Int(boost::multiprecision::denominator(x)));
    std::vector<Int> w(cols);
    for (std::size_t j = 0; j < cols; ++j)
      w[j] = Int(boost::multiprecision::numerator(v[j])) *
             (lcd / Int(boost::multiprecision::denominator(v[j])));
    Int g = detail::vector_gcd(w);
    if (g != 0)
      for (Int& x : w) x /= g;
    for (const Int& x : w) {
      if (x == 0) continue;
      if (x < 0)
        for (Int& y : w) y = -y;
      break;
    }
    basis.push_back(std::move(w));
  }
  return basis;
}

}  // namespace bilie
