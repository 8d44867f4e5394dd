#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bilie/derivation.hpp"
#include "bilie/lie_element.hpp"
#include "bilie/lyndon.hpp"
#include "bilie/multidegree.hpp"
#include "bilie/numeric.hpp"
#include "bilie/series.hpp"
#include "bilie/weights.hpp"

namespace bilie {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // empty on success, verbatim mismatch report on failure
};

struct VerifyOptions {
  int max_degree = 12;
  int truncation = kDefaultTruncation;
  int threads = 1;
  std::uint32_t seed = 87654321u;
  int leibniz_samples = 1000;
  int roundtrip_specs = 20;
  int character_bound = 20;
  /// Negative-control hook: corrupts one bracket inside the Jacobi check.
  bool inject_bracket_fault = false;
};

/// Reference sequences checked against the computed tables, at total degrees
/// 2, 4, ..., 12.
inline constexpr std::int64_t kFreeUpperBoundTable[6] = {0, 3, 5, 10, 24, 50};
inline constexpr std::int64_t kOuterSpecialTable[6] = {0, 3, 6, 10, 25, 50};

namespace checkdetail {

inline LieElement random_homogeneous(MultiDegree m, std::mt19937& rng) {
  LieElement e(m);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (const auto& w : lyndon_basis(m)) e.add_term(w, Rat(coeff(rng)));
  return e;
}

inline MultiDegree random_bidegree(int min_total, int max_total, std::mt19937& rng) {
  std::uniform_int_distribution<int> total(min_total, max_total);
  while (true) {
    const int n = total(rng);
    std::uniform_int_distribution<int> first(0, n);
    const MultiDegree m{first(rng), 0};
    const MultiDegree out{m.m1, n - m.m1};
    if (!out.is_zero()) return out;
  }
}

}  // namespace checkdetail

/// Lyndon enumeration agrees with the Moebius formula on every bidegree, and
/// the total-degree sums match (1/n) sum_{d|n} mu(d) 2^{n/d}.
inline CheckResult check_witt_lyndon(int max_total) {
  CheckResult r{"witt-lyndon-agreement", true, ""};
  for (int n = 1; n <= max_total && r.passed; ++n) {
    std::int64_t total = 0;
    for (int p = 0; p <= n; ++p) {
      const MultiDegree m{p, n - p};
      const std::int64_t formula = witt_dim(m);
      const std::int64_t enumerated = static_cast<std::int64_t>(lyndon_basis(m).size());
      total += enumerated;
      if (formula != enumerated) {
        r.passed = false;
        r.detail = "witt_dim" + m.str() + " = " + std::to_string(formula) +
                   " but enumeration gives " + std::to_string(enumerated);
        break;
      }
    }
    if (!r.passed) break;
    Int necklaces = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) necklaces += mobius(d) * boost::multiprecision::pow(Int(2), unsigned(n / d));
    if (necklaces / n != total) {
      r.passed = false;
      r.detail = "classical Witt number at degree " + std::to_string(n) + " is " +
                 Int(necklaces / n).str() + ", sum of bidegrees is " + std::to_string(total);
    }
  }
  return r;
}

/// Jacobi identity on all basis-word triples up to the degree bound. The
/// fault-injection hook perturbs the bracket [x, y] before use.
inline CheckResult check_jacobi(int max_total, BracketTable& table, bool inject_fault) {
  CheckResult r{"jacobi", true, ""};
  std::vector<LyndonWord> words;
  for (int n = 1; n <= max_total - 2; ++n)
    for (int p = 0; p <= n; ++p)
      for (const auto& w : lyndon_basis({p, n - p})) words.push_back(w);

  const LieElement x = LieElement::basis("X"), y = LieElement::basis("Y");
  auto bkt = [&](const LieElement& a, const LieElement& b) {
    LieElement out = bracket(a, b, table);
    if (inject_fault && a == x && b == y) out.add_term(LyndonWord("XY"), 1);
    return out;
  };

  for (std::size_t i = 0; i < words.size() && r.passed; ++i)
    for (std::size_t j = 0; j < words.size() && r.passed; ++j)
      for (std::size_t k = 0; k < words.size(); ++k) {
        const int deg = words[i].total_degree() + words[j].total_degree() +
                        words[k].total_degree();
        if (deg > max_total) continue;
        const LieElement u = LieElement::basis(words[i]);
        const LieElement v = LieElement::basis(words[j]);
        const LieElement w = LieElement::basis(words[k]);
        const LieElement jac =
            bkt(u, bkt(v, w)) + bkt(v, bkt(w, u)) + bkt(w, bkt(u, v));
        if (!jac.is_zero()) {
          r.passed = false;
          r.detail = "jacobiator of (" + words[i].letters() + ", " + words[j].letters() +
                     ", " + words[k].letters() + ") = " + jac.str();
          break;
        }
      }
  return r;
}

/// Brackets of homogeneous elements carry the componentwise-sum tag.
inline CheckResult check_bidegree_additivity(int samples, std::uint32_t seed,
                                             BracketTable& table) {
  CheckResult r{"bidegree-additivity", true, ""};
  std::mt19937 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const MultiDegree ma = checkdetail::random_bidegree(1, 5, rng);
    const MultiDegree mb = checkdetail::random_bidegree(1, 5, rng);
    const LieElement a = checkdetail::random_homogeneous(ma, rng);
    const LieElement b = checkdetail::random_homogeneous(mb, rng);
    const LieElement c = bracket(a, b, table);
    if (!c.degree() || *c.degree() != ma + mb) {
      r.passed = false;
      r.detail = "bracket of " + ma.str() + " and " + mb.str() + " lost its bidegree tag";
      return r;
    }
    for (const auto& [w, coeff] : c.terms())
      if (w.bidegree() != ma + mb) {
        r.passed = false;
        r.detail = "term " + w.letters() + " off-degree in bracket of " + ma.str() +
                   " and " + mb.str();
        return r;
      }
  }
  return r;
}

/// apply(d, [a,b]) = [apply(d,a), b] + [a, apply(d,b)] on random homogeneous
/// data within the truncation bound.
inline CheckResult check_leibniz(int samples, int truncation, std::uint32_t seed,
                                 BracketTable& table) {
  CheckResult r{"leibniz", true, ""};
  std::mt19937 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const MultiDegree md = checkdetail::random_bidegree(0, 3, rng);
    const MultiDegree ma = checkdetail::random_bidegree(1, 4, rng);
    const MultiDegree mb = checkdetail::random_bidegree(1, 4, rng);
    if (md.total() + ma.total() + mb.total() > truncation) continue;
    LieElement ix = checkdetail::random_homogeneous(md + MultiDegree{1, 0}, rng);
    LieElement iy = checkdetail::random_homogeneous(md + MultiDegree{0, 1}, rng);
    const Derivation d(std::move(ix), std::move(iy), truncation, md);
    const LieElement a = checkdetail::random_homogeneous(ma, rng);
    const LieElement b = checkdetail::random_homogeneous(mb, rng);
    const LieElement lhs = apply(d, bracket(a, b, table), table);
    const LieElement rhs =
        bracket(apply(d, a, table), b, table) + bracket(a, apply(d, b, table), table);
    if (!(lhs == rhs)) {
      r.passed = false;
      r.detail = "Leibniz fails for d of bidegree -" + md.str() + " on degrees " +
                 ma.str() + ", " + mb.str();
      break;
    }
  }
  return r;
}

/// Expanding prod_m (1 - x^m)^(-d_m) from the computed dimensions reproduces
/// the word-counting series 1/(1 - g) coefficient-wise.
inline CheckResult check_pbw_identity(const GeneratorSpec& gens, int T) {
  CheckResult r{"pbw-identity", true, ""};
  const BivariateSeries dims = free_lie_dims(gens, T);
  BivariateSeries product(T);
  product.set({0, 0}, 1);
  for (const auto& [m, d] : dims.coefficients())
    product = detail::mul_geometric_power(product, m, d);
  const BivariateSeries words = detail::geometric_inverse(generating_series(gens, T), T);
  if (!(product == words)) {
    r.passed = false;
    r.detail = "PBW product differs from word series at truncation " + std::to_string(T);
  }
  return r;
}

/// The series inversion and the graded-alphabet Lyndon enumeration agree on
/// a family of generator specifications.
inline CheckResult check_pbw_vs_lyndon(int max_degree) {
  CheckResult r{"pbw-vs-lyndon-enumeration", true, ""};
  std::vector<std::pair<GeneratorSpec, int>> cases;
  cases.emplace_back(GeneratorSpec{{{1, 0}, 1}, {{0, 1}, 1}}, std::min(max_degree, 10));
  cases.emplace_back(GeneratorSpec{{{1, 1}, 1}}, 6);
  cases.emplace_back(GeneratorSpec{{{2, 2}, 3}}, 8);
  GeneratorSpec ik;
  for (const MultiDegree& m : index_set(2, max_degree)) ik.add(m);
  cases.emplace_back(std::move(ik), max_degree);
  for (const auto& [gens, T] : cases) {
    const BivariateSeries a = free_lie_dims(gens, T);
    const BivariateSeries b = lyndon_count_over_graded_alphabet(gens, T);
    if (!(a == b)) {
      for (const auto& [m, c] : a.coefficients())
        if (b.coefficient(m) != c) {
          r.detail = "dimension " + c.str() + " vs count " + b.coefficient(m).str() +
                     " at " + m.str();
          break;
        }
      if (r.detail.empty()) r.detail = "count has extra coefficients";
      r.passed = false;
      return r;
    }
  }
  return r;
}

/// generator_count_from_dims inverts free_lie_dims on random specifications.
inline CheckResult check_pbw_roundtrip(int spec_count, int T, std::uint32_t seed) {
  CheckResult r{"pbw-roundtrip", true, ""};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coord(0, 4);
  std::uniform_int_distribution<int> mult(1, 3);
  std::uniform_int_distribution<int> keys(1, 4);
  for (int s = 0; s < spec_count; ++s) {
    GeneratorSpec gens;
    const int k = keys(rng);
    for (int i = 0; i < k; ++i) {
      const MultiDegree m{coord(rng), coord(rng)};
      if (m.total() < 1 || m.total() > T) continue;
      gens.add(m, mult(rng));
    }
    if (gens.empty()) continue;
    const BivariateSeries dims = free_lie_dims(gens, T);
    const GeneratorSpec back = generator_count_from_dims(dims);
    if (!(back == gens)) {
      r.passed = false;
      r.detail = "round trip failed on spec #" + std::to_string(s);
      break;
    }
  }
  return r;
}

/// Explicit kernel solve vanishes on the axes (m1 * m2 = 0, |m| >= 2).
inline CheckResult check_axis_vanishing(int max_total, int truncation, BracketTable& table) {
  CheckResult r{"axis-vanishing", true, ""};
  for (int k = 2; k <= max_total; ++k)
    for (const MultiDegree m : {MultiDegree{k, 0}, MultiDegree{0, k}}) {
      const SpecialDim d = special_dim(m, truncation, &table);
      if (d.dim != 0) {
        r.passed = false;
        r.detail = "special dimension " + std::to_string(d.dim) + " at axis bidegree " +
                   m.str();
        return r;
      }
    }
  return r;
}

/// Pre-computed kernel bases for all strictly positive bidegrees up to a
/// total-degree bound; shared by several checks.
using SpecialKernels = std::map<MultiDegree, SpecialBasis, ByTotalThenM1>;

inline SpecialKernels compute_special_kernels(int max_total, int truncation,
                                              BracketTable& table) {
  SpecialKernels out;
  for (int n = 2; n <= max_total; ++n)
    for (int m1 = 1; m1 < n; ++m1) {
      const MultiDegree m{m1, n - m1};
      out.emplace(m, special_kernel_basis(m, truncation, &table));
    }
  return out;
}

/// special_dim matches the explicit kernel dimension, the surjectivity flag
/// matches rank = witt_dim(m+(1,1)), and the closed-form identity holds when
/// the map is surjective.
inline CheckResult check_rank_nullity(const SpecialKernels& kernels, int truncation,
                                      BracketTable& table) {
  CheckResult r{"rank-nullity-consistency", true, ""};
  for (const auto& [m, basis] : kernels) {
    const SpecialDim d = special_dim(m, truncation, &table);
    const std::int64_t kdim = static_cast<std::int64_t>(basis.vectors.size());
    const std::int64_t target = witt_dim(m + MultiDegree{1, 1});
    bool ok = d.dim == kdim && d.surjective == (basis.rank == target);
    if (ok && d.surjective)
      ok = d.dim == witt_dim(m + MultiDegree{1, 0}) + witt_dim(m + MultiDegree{0, 1}) - target;
    if (!ok) {
      r.passed = false;
      r.detail = "rank/nullity mismatch at " + m.str();
      return r;
    }
  }
  return r;
}

/// Brackets of special derivations annihilate z.
inline CheckResult check_special_closure(const SpecialKernels& kernels, int max_combined,
                                         BracketTable& table) {
  CheckResult r{"special-bracket-closure", true, ""};
  const LieElement z = LieElement::basis("XY");
  for (const auto& [ma, basis_a] : kernels)
    for (const auto& [mb, basis_b] : kernels) {
      if (mb < ma) continue;
      if (ma.total() + mb.total() > max_combined) continue;
      for (const auto& da : basis_a.vectors)
        for (const auto& db : basis_b.vectors) {
          const Derivation c = derivation_bracket(da, db, table);
          if (!apply(c, z, table).is_zero()) {
            r.passed = false;
            r.detail = "bracket of specials at " + ma.str() + ", " + mb.str() +
                       " does not annihilate [x,y]";
            return r;
          }
        }
    }
  return r;
}

/// Exactly one kernel basis vector is inner, it sits at (1,1), and it is a
/// rational multiple of ad([x,y]).
inline CheckResult check_inner_intersection(const SpecialKernels& kernels,
                                            BracketTable& table) {
  CheckResult r{"inner-intersection", true, ""};
  std::vector<std::pair<MultiDegree, Rat>> hits;
  for (const auto& [m, basis] : kernels)
    for (const auto& d : basis.vectors)
      if (const auto c = is_inner_special(d, table)) hits.emplace_back(m, *c);
  if (hits.size() != 1 || hits[0].first != MultiDegree{1, 1} || hits[0].second == 0) {
    r.passed = false;
    std::ostringstream os;
    os << "inner detections:";
    for (const auto& [m, c] : hits) os << " " << m.str() << " (scale " << c << ")";
    r.detail = os.str();
  }
  return r;
}

/// The bracket map onto p_{m+(1,1)} is surjective at every computed bidegree.
inline CheckResult check_bracket_surjectivity(const OuterDims& od) {
  CheckResult r{"bracket-surjectivity", true, ""};
  for (const auto& [m, surj] : od.surjective)
    if (!surj) {
      r.passed = false;
      r.detail = "bracket map not surjective at " + m.str();
      return r;
    }
  return r;
}

/// descend/ascend are mutually inverse on the congruence sublattice.
inline CheckResult check_character_roundtrip(int bound) {
  CheckResult r{"character-roundtrip", true, ""};
  for (int wk : {2, 4, 6})
    for (int m1 = -bound; m1 <= bound; ++m1)
      for (int m2 = -bound; m2 <= bound; ++m2) {
        const MultiDegree m{m1, m2};
        if ((((m1 - m2) % wk) + wk) % wk != 0) continue;
        const auto [a, b] = descend_character(m, wk);
        if (ascend_character(a, b, wk) != m) {
          r.passed = false;
          r.detail = "round trip failed for " + m.str() + " at w_K = " + std::to_string(wk);
          return r;
        }
      }
  return r;
}

namespace checkdetail {

inline std::string table_mismatch_detail(const char* label,
                                         const std::vector<std::int64_t>& collapse,
                                         const std::int64_t (&expected)[6], int max_degree) {
  std::ostringstream os;
  os << label << " mismatch (degree: expected vs computed):";
  for (int i = 0; i < 6; ++i) {
    const int deg = 2 * (i + 1);
    if (deg > max_degree) break;
    os << " " << deg << ": " << expected[i] << " vs "
       << collapse[static_cast<std::size_t>(deg)] << ";";
  }
  return os.str();
}

}  // namespace checkdetail

/// Free bigraded Lie algebra on one generator per index-set member (w_K = 2):
/// even-degree totals against the reference sequence, computed by both the
/// series inversion and the graded-alphabet enumeration.
inline CheckResult check_table_free_upper_bound(int max_degree) {
  CheckResult r{"table-free-upper-bound", true, ""};
  GeneratorSpec gens;
  for (const MultiDegree& m : index_set(2, max_degree)) gens.add(m);
  const BivariateSeries dims = free_lie_dims(gens, max_degree);
  const BivariateSeries counted = lyndon_count_over_graded_alphabet(gens, max_degree);
  if (!(dims == counted)) {
    r.passed = false;
    r.detail = "series inversion and Lyndon enumeration disagree";
    return r;
  }
  const std::vector<Int> collapse = total_collapse(dims);
  for (int i = 0; i < 6; ++i) {
    const int deg = 2 * (i + 1);
    if (deg > max_degree) break;
    if (collapse[static_cast<std::size_t>(deg)] != kFreeUpperBoundTable[i]) {
      std::vector<std::int64_t> c64(collapse.size());
      for (std::size_t k = 0; k < collapse.size(); ++k)
        c64[k] = static_cast<std::int64_t>(collapse[k]);
      r.passed = false;
      r.detail = checkdetail::table_mismatch_detail("free upper-bound table", c64,
                                                    kFreeUpperBoundTable, max_degree);
      return r;
    }
  }
  return r;
}

/// Outer special dimensions against the reference sequence at even degrees.
/// Mismatches are reported verbatim, never adjusted.
inline CheckResult check_table_outer_special(const OuterDims& od, int max_degree) {
  CheckResult r{"table-outer-special", true, ""};
  for (int i = 0; i < 6; ++i) {
    const int deg = 2 * (i + 1);
    if (deg > max_degree) break;
    if (od.collapse[static_cast<std::size_t>(deg)] != kOuterSpecialTable[i]) {
      r.passed = false;
      r.detail = checkdetail::table_mismatch_detail("outer special table", od.collapse,
                                                    kOuterSpecialTable, max_degree);
      return r;
    }
  }
  return r;
}

/// The full named-check suite, in deterministic order.
inline std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  if (opt.max_degree < 2) throw DomainError("verify: max degree must be >= 2");
  if (opt.max_degree + 2 > opt.truncation)
    throw TruncationError(opt.max_degree + 2, opt.truncation);

  BracketTable table;
  std::vector<CheckResult> out;
  out.push_back(check_witt_lyndon(std::min(opt.max_degree + 2, 14)));
  out.push_back(check_character_roundtrip(opt.character_bound));
  out.push_back(check_jacobi(std::min(opt.max_degree, 10), table, opt.inject_bracket_fault));
  out.push_back(check_bidegree_additivity(50, opt.seed, table));
  out.push_back(check_leibniz(opt.leibniz_samples, opt.truncation, opt.seed, table));
  {
    GeneratorSpec ik;
    for (const MultiDegree& m : index_set(2, opt.max_degree)) ik.add(m);
    out.push_back(check_pbw_identity(ik, opt.max_degree));
  }
  out.push_back(check_pbw_vs_lyndon(opt.max_degree));
  out.push_back(check_pbw_roundtrip(opt.roundtrip_specs, 10, opt.seed));
  out.push_back(check_axis_vanishing(opt.max_degree, opt.truncation, table));

  const SpecialKernels kernels =
      compute_special_kernels(opt.max_degree, opt.truncation, table);
  out.push_back(check_rank_nullity(kernels, opt.truncation, table));
  out.push_back(check_special_closure(kernels, std::min(opt.max_degree, 10), table));
  out.push_back(check_inner_intersection(kernels, table));

  const OuterDims od =
      outer_special_dims(opt.max_degree, opt.truncation, &table, opt.threads);
  out.push_back(check_bracket_surjectivity(od));
  out.push_back(check_table_free_upper_bound(opt.max_degree));
  out.push_back(check_table_outer_special(od, opt.max_degree));
  return out;
}

}  // namespace bilie
