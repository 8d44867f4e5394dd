#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bilie/errors.hpp"
#include "bilie/lyndon.hpp"
#include "bilie/multidegree.hpp"
#include "bilie/numeric.hpp"

namespace bilie {

/// Integer coefficients indexed by nonnegative bidegrees up to a strict
/// total-degree truncation. Zero coefficients are never stored.
class BivariateSeries {
public:
  explicit BivariateSeries(int truncation) : trunc_(truncation) {
    if (truncation < 1) throw DomainError("BivariateSeries: truncation must be >= 1");
  }

  int truncation() const { return trunc_; }
  const std::map<MultiDegree, Int>& coefficients() const { return c_; }
  bool empty() const { return c_.empty(); }

  Int coefficient(MultiDegree m) const {
    auto it = c_.find(m);
    return it == c_.end() ? Int(0) : it->second;
  }

  void set(MultiDegree m, Int v) {
    check_index(m);
    if (v == 0)
      c_.erase(m);
    else
      c_[m] = std::move(v);
  }

  void add(MultiDegree m, const Int& v) {
    if (v == 0) return;
    check_index(m);
    auto [it, inserted] = c_.emplace(m, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }

  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
    return a.trunc_ == b.trunc_ && a.c_ == b.c_;
  }

private:
  void check_index(MultiDegree m) const {
    if (!m.nonnegative())
      throw DomainError("BivariateSeries: negative index " + m.str());
    if (m.total() > trunc_)
      throw TruncationError(m.total(), trunc_);
  }

  int trunc_;
  std::map<MultiDegree, Int> c_;
};

/// Entry n = sum of coefficients over |m| = n, for n = 0..truncation.
inline std::vector<Int> total_collapse(const BivariateSeries& s) {
  std::vector<Int> out(static_cast<std::size_t>(s.truncation()) + 1, Int(0));
  for (const auto& [m, c] : s.coefficients())
    out[static_cast<std::size_t>(m.total())] += c;
  return out;
}

/// Multiset of generator bidegrees with multiplicities. Keys must be
/// nonnegative with total degree >= 1 (the two-letter case uses (1,0) and
/// (0,1)); multiplicities are >= 1.
class GeneratorSpec {
public:
  GeneratorSpec() = default;
  GeneratorSpec(std::initializer_list<std::pair<MultiDegree, std::int64_t>> init) {
    for (const auto& [m, r] : init) add(m, r);
  }

  void add(MultiDegree m, std::int64_t multiplicity = 1) {
    if (!m.nonnegative() || m.total() < 1)
      throw DomainError("GeneratorSpec: key " + m.str() +
                        " must be nonnegative with positive total degree");
    if (multiplicity < 1)
      throw DomainError("GeneratorSpec: multiplicity must be >= 1 at " + m.str());
    mult_[m] += multiplicity;
  }

  const std::map<MultiDegree, std::int64_t>& multiplicities() const { return mult_; }
  bool empty() const { return mult_.empty(); }

  std::int64_t multiplicity(MultiDegree m) const {
    auto it = mult_.find(m);
    return it == mult_.end() ? 0 : it->second;
  }

  friend bool operator==(const GeneratorSpec& a, const GeneratorSpec& b) {
    return a.mult_ == b.mult_;
  }

private:
  std::map<MultiDegree, std::int64_t> mult_;
};

namespace detail {

inline BivariateSeries series_mul(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries out(a.truncation());
  for (const auto& [ma, ca] : a.coefficients())
    for (const auto& [mb, cb] : b.coefficients())
      if ((ma + mb).total() <= out.truncation()) out.add(ma + mb, ca * cb);
  return out;
}

/// 1 / (1 - g) for a series g with zero constant term (word-counting series
/// of the free monoid on the generators).
inline BivariateSeries geometric_inverse(const BivariateSeries& g, int T) {
  if (g.coefficient({0, 0}) != 0)
    throw InternalError("geometric_inverse: nonzero constant term");
  BivariateSeries h(T);
  h.set({0, 0}, 1);
  BivariateSeries layer(T);
  layer.set({0, 0}, 1);
  while (!layer.empty()) {
    layer = series_mul(layer, g);
    for (const auto& [m, c] : layer.coefficients()) h.add(m, c);
  }
  return h;
}

/// binom(d + k - 1, k) with big-integer d.
inline Int binomial_rising(const Int& d, const Int& k) {
  Int r = 1;
  for (Int i = 0; i < k; ++i) {
    r *= d + i;
    r /= i + 1;
  }
  return r;
}

/// Multiply s by (1 - x^m)^(-d) = sum_k binom(d+k-1, k) x^(k m).
inline BivariateSeries mul_geometric_power(const BivariateSeries& s, MultiDegree m, const Int& d) {
  const int T = s.truncation();
  BivariateSeries factor(T);
  factor.set({0, 0}, 1);
  if (m.total() >= 1) {
    Int k = 1;
    for (MultiDegree km = m; km.total() <= T; km = km + m) {
      factor.set(km, binomial_rising(d, k));
      k += 1;
    }
  }
  return series_mul(s, factor);
}

}  // namespace detail

/// Generating series of the spec restricted to total degree <= T.
inline BivariateSeries generating_series(const GeneratorSpec& gens, int T) {
  BivariateSeries g(T);
  for (const auto& [m, r] : gens.multiplicities())
    if (m.total() <= T) g.add(m, Int(r));
  return g;
}

/// Dimensions d_m of the free bigraded Lie algebra on the given generators,
/// solved from the graded Poincare--Birkhoff--Witt identity
///   prod_m (1 - x^m)^(-d_m) = 1 / (1 - g)
/// by increasing total degree: at each layer the unknown d_m is the defect
/// between the word-counting series and the partial product.
inline BivariateSeries free_lie_dims(const GeneratorSpec& gens, int T) {
  if (T < 1) throw DomainError("free_lie_dims: truncation must be >= 1");
  const BivariateSeries g = generating_series(gens, T);
  const BivariateSeries words = detail::geometric_inverse(g, T);

  BivariateSeries partial(T);  // product over already-solved layers
  partial.set({0, 0}, 1);
  BivariateSeries dims(T);
  for (int n = 1; n <= T; ++n) {
    std::vector<std::pair<MultiDegree, Int>> layer;
    for (int m1 = 0; m1 <= n; ++m1) {
      const MultiDegree m{m1, n - m1};
      const Int d = words.coefficient(m) - partial.coefficient(m);
      if (d < 0)
        throw InternalError("free_lie_dims: negative defect " + d.str() + " at " + m.str());
      if (d != 0) layer.emplace_back(m, d);
    }
    for (const auto& [m, d] : layer) {
      dims.set(m, d);
      partial = detail::mul_geometric_power(partial, m, d);
    }
  }
  for (const auto& [m, r] : gens.multiplicities())
    if (m.total() <= T && dims.coefficient(m) < r)
      throw InternalError("free_lie_dims: dimension below multiplicity at " + m.str());
  return dims;
}

/// Inverse problem: assuming dims comes from a free bigraded Lie algebra,
/// recover the generator multiplicities layer by layer as the defect against
/// the free algebra on the generators found so far. A negative defect means
/// the input is not free; the offending bidegree is reported, never clamped.
inline GeneratorSpec generator_count_from_dims(const BivariateSeries& dims) {
  const int T = dims.truncation();
  GeneratorSpec gens;
  BivariateSeries partial(T);
  partial.set({0, 0}, 1);
  // partial tracks the PBW product over all layers of the algebra freely
  // generated by `gens`; its defect against `dims` at layer n is new
  // generator content.
  BivariateSeries free_dims(T);
  for (int n = 1; n <= T; ++n) {
    for (int m1 = 0; m1 <= n; ++m1) {
      const MultiDegree m{m1, n - m1};
      const Int defect = dims.coefficient(m) - partial.coefficient(m);
      if (defect < 0)
        throw NotFreeError(m.m1, m.m2,
                           "dimension table is not free at bidegree " + m.str() +
                               ": defect " + defect.str());
      if (defect != 0) {
        if (defect > std::numeric_limits<std::int64_t>::max())
          throw DomainError("generator_count_from_dims: multiplicity overflow at " + m.str());
        gens.add(m, static_cast<std::int64_t>(defect));
      }
    }
    // fold the full layer n of the free algebra into the partial product
    for (int m1 = 0; m1 <= n; ++m1) {
      const MultiDegree m{m1, n - m1};
      const Int d = dims.coefficient(m);
      if (d != 0) partial = detail::mul_geometric_power(partial, m, d);
    }
  }
  return gens;
}

/// Second, independent route to the free-Lie dimensions: enumerate Lyndon
/// words over an alphabet with multiplicity(m) letters of bidegree m and
/// count them by summed bidegree. Uses Duval's generation algorithm.
inline BivariateSeries lyndon_count_over_graded_alphabet(const GeneratorSpec& gens, int T) {
  if (T < 1)
    throw DomainError("lyndon_count_over_graded_alphabet: truncation must be >= 1");
  std::vector<MultiDegree> letters;  // multiplicity r => r distinct letters
  int min_degree = T + 1;
  for (const auto& [m, r] : gens.multiplicities()) {
    if (m.total() > T) continue;
    for (std::int64_t i = 0; i < r; ++i) letters.push_back(m);
    min_degree = std::min(min_degree, m.total());
  }
  BivariateSeries out(T);
  if (letters.empty()) return out;

  const int k = static_cast<int>(letters.size());
  const int max_len = T / min_degree;
  std::vector<int> w{0};
  while (!w.empty()) {
    // w is Lyndon by construction; keep it if its weight fits.
    MultiDegree weight{0, 0};
    for (int c : w) weight = weight + letters[static_cast<std::size_t>(c)];
    if (weight.total() <= T) out.add(weight, 1);
    // extend periodically to max length, then increment the last
    // non-maximal letter
    const std::size_t n = w.size();
    w.resize(static_cast<std::size_t>(max_len));
    for (std::size_t i = n; i < w.size(); ++i) w[i] = w[i - n];
    while (!w.empty() && w.back() == k - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

}  // namespace bilie
