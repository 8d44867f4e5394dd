#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bilie/errors.hpp"
#include "bilie/multidegree.hpp"
#include "bilie/numeric.hpp"

namespace bilie {

/// Degrees are capped so that every dimension count fits in a machine
/// integer; basis-level computations are infeasible long before this bound.
inline constexpr int kMaxTotalDegree = 30;

inline bool is_lyndon(std::string_view w) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  // Strictly smaller than every proper rotation, hence aperiodic.
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const char a = w[j];
      const char b = w[(i + j) % n];
      if (a != b) {
        if (a > b) return false;
        break;
      }
      if (j + 1 == n) return false;  // equal to a proper rotation: periodic
    }
  }
  return true;
}

/// A Lyndon word over the ordered alphabet X < Y. Basis label for the
/// homogeneous components of the free Lie algebra on x, y: the standard
/// bracketing of the word is the basis element it names.
class LyndonWord {
public:
  explicit LyndonWord(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_)
      if (c != 'X' && c != 'Y')
        throw DomainError("LyndonWord: letters must be X or Y, got '" +
                          std::string(1, c) + "'");
    if (!is_lyndon(letters_))
      throw DomainError("LyndonWord: \"" + letters_ + "\" is not a Lyndon word");
  }

  const std::string& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }

  MultiDegree bidegree() const {
    const int x = static_cast<int>(std::count(letters_.begin(), letters_.end(), 'X'));
    return {x, length() - x};
  }
  int total_degree() const { return length(); }

  /// Standard factorization w = (u, v) with v the longest proper Lyndon
  /// suffix; both factors are Lyndon and the standard bracketing of w is
  /// [bracketing(u), bracketing(v)]. Requires length >= 2.
  std::pair<LyndonWord, LyndonWord> standard_factorization() const {
    if (length() < 2)
      throw DomainError("standard_factorization: single letter has no factorization");
    for (std::size_t i = 1; i < letters_.size(); ++i) {
      if (is_lyndon(std::string_view(letters_).substr(i)))
        return {LyndonWord(letters_.substr(0, i)), LyndonWord(letters_.substr(i))};
    }
    throw InternalError("standard_factorization: no Lyndon suffix in \"" + letters_ + "\"");
  }

  friend auto operator<=>(const LyndonWord& a, const LyndonWord& b) {
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(const LyndonWord& a, const LyndonWord& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const LyndonWord& w) {
    return os << w.letters_;
  }

private:
  std::string letters_;
};

inline void require_valid_bidegree(MultiDegree m) {
  if (!m.nonnegative() || m.is_zero())
    throw DomainError("bidegree " + m.str() +
                      " invalid: coordinates must be nonnegative and not both zero");
  if (m.total() > kMaxTotalDegree)
    throw DomainError("bidegree " + m.str() + " beyond supported total degree " +
                      std::to_string(kMaxTotalDegree));
}

/// All Lyndon words with the given letter content, lexicographically sorted.
inline std::vector<LyndonWord> lyndon_basis(MultiDegree m) {
  require_valid_bidegree(m);
  std::vector<LyndonWord> out;
  // Walk words with fixed content in lexicographic order via the sorted
  // word's permutations (X < Y matches char order).
  std::string w(static_cast<std::size_t>(m.m1), 'X');
  w.append(static_cast<std::size_t>(m.m2), 'Y');
  do {
    if (is_lyndon(w)) out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// dim of the (p,q) component of the free Lie algebra on two generators:
///   N(p,q) = (1/(p+q)) sum_{d | gcd(p,q)} mu(d) * binom((p+q)/d, p/d).
inline std::int64_t witt_dim(MultiDegree m) {
  require_valid_bidegree(m);
  const std::int64_t n = m.total();
  const std::int64_t g = std::gcd(m.m1, m.m2);
  Int sum = 0;
  for (std::int64_t d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    sum += mobius(d) * binomial(n / d, m.m1 / d);
  }
  if (sum % n != 0)
    throw InternalError("witt_dim: necklace count not divisible at " + m.str());
  return static_cast<std::int64_t>(sum / n);
}

/// dim L^m / L^{m+1} for the free Lie algebra on two generators: the m-th
/// lower-central-series layer is the sum of all bidegree components of total
/// degree m, and the total equals the classical Witt number
/// (1/m) sum_{d|m} mu(d) 2^{m/d}.
inline std::int64_t lcs_dim(int m) {
  if (m < 1) throw DomainError("lcs_dim: degree must be >= 1");
  if (m > kMaxTotalDegree)
    throw DomainError("lcs_dim: degree beyond supported total degree " +
                      std::to_string(kMaxTotalDegree));
  std::int64_t sum = 0;
  for (int p = 0; p <= m; ++p) sum += witt_dim({p, m - p});
  return sum;
}

}  // namespace bilie
