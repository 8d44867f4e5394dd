#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bilie/errors.hpp"
#include "bilie/multidegree.hpp"

namespace bilie {

inline void require_valid_wk(int wk) {
  if (wk != 2 && wk != 4 && wk != 6)
    throw DomainError("w_K must be 2, 4 or 6, got " + std::to_string(wk));
}

/// The index set I_K: strictly positive bidegrees congruent modulo w_K,
/// excluding (1,1). Sorted by (total degree, m1).
inline std::vector<MultiDegree> index_set(int wk, int max_total_degree) {
  require_valid_wk(wk);
  if (max_total_degree < 2)
    throw DomainError("index_set: bound must be >= 2");
  std::vector<MultiDegree> out;
  for (int n = 2; n <= max_total_degree; ++n)
    for (int m1 = 1; m1 < n; ++m1) {
      const MultiDegree m{m1, n - m1};
      if (m == MultiDegree{1, 1}) continue;
      if (((m.m1 - m.m2) % wk + wk) % wk == 0) out.push_back(m);
    }
  return out;  // loop order is already (total, m1)
}

/// A character index of the rank-two torus quotient: a bidegree satisfying
/// the congruence m1 = m2 (mod w_K) that lets the character descend.
struct CharacterIndex {
  int wk;
  MultiDegree m;

  CharacterIndex(int wk_, MultiDegree m_) : wk(wk_), m(m_) {
    require_valid_wk(wk);
    if (((m.m1 - m.m2) % wk + wk) % wk != 0)
      throw DomainError("character index " + m.str() + " violates m1 = m2 (mod " +
                        std::to_string(wk) + ")");
  }
};

/// Express a character of the quotient torus through the isogeny
/// (x, y) -> (xy, (x y^{-1})^{w_K/2}): the exponent pair (a, b) satisfies
/// m1 = a + b w_K/2 and m2 = a - b w_K/2.
inline std::pair<int, int> descend_character(MultiDegree m, int wk) {
  require_valid_wk(wk);
  if (((m.m1 - m.m2) % wk + wk) % wk != 0)
    throw DomainError("descend_character: " + m.str() + " violates m1 = m2 (mod " +
                      std::to_string(wk) + ")");
  return {(m.m1 + m.m2) / 2, (m.m1 - m.m2) / wk};
}

inline MultiDegree ascend_character(int a, int b, int wk) {
  require_valid_wk(wk);
  return {a + b * (wk / 2), a - b * (wk / 2)};
}

/// Finitely supported dimension table graded by Z^Rank (Rank = 1 or 2 in
/// practice). Dimensions are nonnegative; zero entries are never stored.
template <std::size_t Rank>
class GradedModule {
public:
  using Index = std::array<int, Rank>;

  static int total(const Index& i) {
    int t = 0;
    for (int c : i) t += c;
    return t;
  }

  const std::map<Index, std::int64_t>& components() const { return comp_; }
  bool empty() const { return comp_.empty(); }

  std::int64_t dimension(const Index& i) const {
    auto it = comp_.find(i);
    return it == comp_.end() ? 0 : it->second;
  }

  std::int64_t total_dimension() const {
    std::int64_t t = 0;
    for (const auto& [i, d] : comp_) t += d;
    return t;
  }

  void set(const Index& i, std::int64_t dim) {
    if (dim < 0) throw DomainError("GradedModule: negative dimension");
    if (dim == 0)
      comp_.erase(i);
    else
      comp_[i] = dim;
  }

  friend bool operator==(const GradedModule& a, const GradedModule& b) {
    return a.comp_ == b.comp_;
  }

private:
  std::map<Index, std::int64_t> comp_;
};

/// W_n V: the sum of components of total degree <= n.
template <std::size_t Rank>
GradedModule<Rank> weight_filtration(const GradedModule<Rank>& v, int n) {
  GradedModule<Rank> out;
  for (const auto& [i, d] : v.components())
    if (GradedModule<Rank>::total(i) <= n) out.set(i, d);
  return out;
}

/// Gr_n V = W_n V / W_{n-1} V: the slice of total degree exactly n.
template <std::size_t Rank>
GradedModule<Rank> graded_quotient(const GradedModule<Rank>& v, int n) {
  GradedModule<Rank> out;
  for (const auto& [i, d] : v.components())
    if (GradedModule<Rank>::total(i) == n) out.set(i, d);
  return out;
}

template <std::size_t Rank>
struct NegativityReport {
  bool negatively_weighted = true;
  std::optional<std::array<int, Rank>> first_violation;  // lexicographically first
};

/// True iff the support lies in the strictly negative orthant.
template <std::size_t Rank>
NegativityReport<Rank> check_negatively_weighted(const GradedModule<Rank>& v) {
  NegativityReport<Rank> report;
  for (const auto& [i, d] : v.components()) {
    bool negative = true;
    for (int c : i) negative = negative && c < 0;
    if (!negative) {
      report.negatively_weighted = false;
      report.first_violation = i;  // map iterates in lexicographic order
      return report;
    }
  }
  return report;
}

/// Rank-2 bridge: a bidegree-indexed dimension table with all indices
/// negated, as used when passing generator data to the weight formalism.
inline GradedModule<2> negated_module(const std::map<MultiDegree, std::int64_t>& dims) {
  GradedModule<2> out;
  for (const auto& [m, d] : dims)
    if (d != 0) out.set({-m.m1, -m.m2}, d);
  return out;
}

}  // namespace bilie
