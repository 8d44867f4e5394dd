#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bilie/checks.hpp"
#include "bilie/derivation.hpp"
#include "bilie/errors.hpp"
#include "bilie/lyndon.hpp"
#include "bilie/record.hpp"
#include "bilie/series.hpp"
#include "bilie/weights.hpp"

namespace bilie {

/// Exit-status contract of the command-line surface.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomainError = 2,
  kExitTruncation = 3,
  kExitVerifyFailed = 4,
  kExitInternal = 70,
};

enum class DimsMode { kFreeUpperBound, kOuterSpecial, kClassicalWitt };

inline std::string to_string(DimsMode m) {
  switch (m) {
    case DimsMode::kFreeUpperBound: return "free-upper-bound";
    case DimsMode::kOuterSpecial: return "outer-special";
    case DimsMode::kClassicalWitt: return "classical-witt";
  }
  throw InternalError("unreachable dims mode");
}

inline DimsMode dims_mode_from_string(const std::string& s) {
  if (s == "free-upper-bound") return DimsMode::kFreeUpperBound;
  if (s == "outer-special") return DimsMode::kOuterSpecial;
  if (s == "classical-witt") return DimsMode::kClassicalWitt;
  throw DomainError("unknown mode \"" + s + "\"");
}

/// Bidegree dimension table plus total-degree collapse for the selected
/// algebra, with the checks that vouch for it recorded as provenance.
inline OutputRecord cmd_dims(int wk, int max_degree, DimsMode mode,
                             int truncation = kDefaultTruncation, int threads = 1) {
  if (max_degree < 2) throw DomainError("dims: max degree must be >= 2");
  if (max_degree > truncation) throw TruncationError(max_degree, truncation);

  OutputRecord rec;
  rec.command = "dims";
  rec.parameters["wk"] = std::to_string(wk);
  rec.parameters["max_degree"] = std::to_string(max_degree);
  rec.parameters["mode"] = to_string(mode);
  rec.parameters["truncation"] = std::to_string(truncation);

  switch (mode) {
    case DimsMode::kFreeUpperBound: {
      GeneratorSpec gens;
      for (const MultiDegree& m : index_set(wk, max_degree)) gens.add(m);
      const BivariateSeries dims = free_lie_dims(gens, max_degree);
      const BivariateSeries counted = lyndon_count_over_graded_alphabet(gens, max_degree);
      std::map<MultiDegree, Int, ByTotalThenM1> sorted(dims.coefficients().begin(),
                                                       dims.coefficients().end());
      for (const auto& [m, c] : sorted) rec.table.push_back({m, std::nullopt, c});
      const std::vector<Int> collapse = total_collapse(dims);
      for (int n = 2; n <= max_degree; ++n)
        rec.table.push_back({std::nullopt, n, collapse[static_cast<std::size_t>(n)]});
      rec.provenance.emplace_back("pbw-vs-lyndon-enumeration", dims == counted);
      break;
    }
    case DimsMode::kOuterSpecial: {
      if (max_degree + 2 > truncation) throw TruncationError(max_degree + 2, truncation);
      BracketTable table;
      const OuterDims od = outer_special_dims(max_degree, truncation, &table, threads);
      for (const auto& [m, d] : od.by_bidegree) rec.table.push_back({m, std::nullopt, Int(d)});
      for (int n = 2; n <= max_degree; ++n)
        rec.table.push_back({std::nullopt, n, Int(od.collapse[static_cast<std::size_t>(n)])});
      rec.provenance.push_back(
          {"bracket-surjectivity", check_bracket_surjectivity(od).passed});
      const SpecialBasis at11 = special_kernel_basis({1, 1}, truncation, &table);
      bool inner_ok = at11.vectors.size() == 1;
      if (inner_ok) inner_ok = is_inner_special(at11.vectors[0], table).has_value();
      rec.provenance.emplace_back("inner-correction-at-(1,1)", inner_ok);
      break;
    }
    case DimsMode::kClassicalWitt: {
      std::vector<Int> collapse(static_cast<std::size_t>(max_degree) + 1, Int(0));
      for (int n = 1; n <= max_degree; ++n)
        for (int m1 = 0; m1 <= n; ++m1) {
          const MultiDegree m{m1, n - m1};
          const std::int64_t d = witt_dim(m);
          rec.table.push_back({m, std::nullopt, Int(d)});
          collapse[static_cast<std::size_t>(n)] += d;
        }
      for (int n = 1; n <= max_degree; ++n)
        rec.table.push_back({std::nullopt, n, collapse[static_cast<std::size_t>(n)]});
      rec.provenance.push_back(
          {"witt-lyndon-agreement", check_witt_lyndon(std::min(max_degree, 14)).passed});
      break;
    }
  }
  return rec;
}

enum class BasisKind { kLyndon, kSpecialDerivation };

inline BasisKind basis_kind_from_string(const std::string& s) {
  if (s == "lyndon") return BasisKind::kLyndon;
  if (s == "special-derivation") return BasisKind::kSpecialDerivation;
  throw DomainError("unknown basis kind \"" + s + "\"");
}

/// Basis elements at one bidegree in a stable text encoding.
inline OutputRecord cmd_basis(MultiDegree m, BasisKind kind,
                              int truncation = kDefaultTruncation) {
  OutputRecord rec;
  rec.command = "basis";
  rec.parameters["m1"] = std::to_string(m.m1);
  rec.parameters["m2"] = std::to_string(m.m2);
  rec.parameters["truncation"] = std::to_string(truncation);

  if (kind == BasisKind::kLyndon) {
    rec.parameters["kind"] = "lyndon";
    const auto basis = lyndon_basis(m);
    for (const auto& w : basis) rec.elements.push_back(w.letters());
    rec.table.push_back({m, std::nullopt, Int(basis.size())});
  } else {
    rec.parameters["kind"] = "special-derivation";
    const SpecialBasis basis = special_kernel_basis(m, truncation);
    for (const auto& d : basis.vectors)
      rec.elements.push_back("d(x) = " + d.image_x().str() +
                             " ; d(y) = " + d.image_y().str());
    rec.table.push_back({m, std::nullopt, Int(basis.vectors.size())});
  }
  return rec;
}

/// Members of the index set I_K up to the bound, one generator each.
inline OutputRecord cmd_index_set(int wk, int bound) {
  OutputRecord rec;
  rec.command = "index-set";
  rec.parameters["wk"] = std::to_string(wk);
  rec.parameters["max_degree"] = std::to_string(bound);
  for (const MultiDegree& m : index_set(wk, bound)) rec.table.push_back({m, std::nullopt, 1});
  return rec;
}

/// Full invariant suite; the record carries one provenance entry per check.
inline OutputRecord cmd_verify(const VerifyOptions& opt) {
  OutputRecord rec;
  rec.command = "verify";
  rec.parameters["max_degree"] = std::to_string(opt.max_degree);
  rec.parameters["truncation"] = std::to_string(opt.truncation);
  rec.parameters["seed"] = std::to_string(opt.seed);
  if (opt.inject_bracket_fault) rec.parameters["inject_bracket_fault"] = "true";
  for (const CheckResult& c : run_verification(opt)) {
    rec.provenance.emplace_back(c.name + (c.detail.empty() ? "" : ": " + c.detail),
                                c.passed);
  }
  return rec;
}

inline bool all_checks_passed(const OutputRecord& rec) {
  for (const auto& [name, passed] : rec.provenance)
    if (!passed) return false;
  return true;
}

}  // namespace bilie
