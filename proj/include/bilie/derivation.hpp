#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bilie/errors.hpp"
#include "bilie/lie_element.hpp"
#include "bilie/lyndon.hpp"
#include "bilie/matrix.hpp"
#include "bilie/multidegree.hpp"
#include "bilie/numeric.hpp"

namespace bilie {

/// Default degree truncation; covers both reference tables with margin.
inline constexpr int kDefaultTruncation = 14;

/// A degree-truncated derivation of the free Lie algebra on x, y, determined
/// by the images of the two generators. An optional tag m records that the
/// derivation is homogeneous of bidegree -m, i.e. d(x) lands in bidegree
/// m+(1,0) and d(y) in m+(0,1).
class Derivation {
public:
  Derivation(LieElement image_x, LieElement image_y, int truncation = kDefaultTruncation,
             std::optional<MultiDegree> bidegree = std::nullopt)
      : image_x_(std::move(image_x)), image_y_(std::move(image_y)),
        truncation_(truncation), bidegree_(bidegree) {
    if (truncation_ < 1) throw DomainError("Derivation: truncation must be >= 1");
    check_image(image_x_, {1, 0}, "image_x");
    check_image(image_y_, {0, 1}, "image_y");
  }

  static Derivation zero(int truncation = kDefaultTruncation) {
    return Derivation(LieElement(), LieElement(), truncation);
  }

  const LieElement& image_x() const { return image_x_; }
  const LieElement& image_y() const { return image_y_; }
  int truncation() const { return truncation_; }
  const std::optional<MultiDegree>& bidegree() const { return bidegree_; }

  /// How much the derivation raises total degree; 0 for the zero derivation.
  int degree_shift() const {
    if (bidegree_) return bidegree_->total();
    int shift = 0;
    for (const auto* img : {&image_x_, &image_y_})
      for (const auto& [w, c] : img->terms())
        shift = std::max(shift, w.total_degree() - 1);
    return shift;
  }

  bool is_zero() const { return image_x_.is_zero() && image_y_.is_zero(); }

  Derivation& operator*=(const Rat& s) {
    image_x_ *= s;
    image_y_ *= s;
    return *this;
  }
  friend Derivation operator*(const Rat& s, Derivation d) { return d *= s; }

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.image_x_ == b.image_x_ && a.image_y_ == b.image_y_;
  }

private:
  void check_image(const LieElement& img, MultiDegree generator, const char* name) const {
    for (const auto& [w, c] : img.terms())
      if (w.total_degree() > truncation_)
        throw TruncationError(w.total_degree(), truncation_);
    if (bidegree_ && !img.is_zero()) {
      const MultiDegree want = *bidegree_ + generator;
      for (const auto& [w, c] : img.terms())
        if (w.bidegree() != want)
          throw DomainError(std::string("Derivation: ") + name + " term " + w.letters() +
                            " not homogeneous of bidegree " + want.str());
    }
  }

  LieElement image_x_, image_y_;
  int truncation_;
  std::optional<MultiDegree> bidegree_;
};

namespace detail {

inline const LieElement& apply_to_word(const Derivation& d, const LyndonWord& w,
                                       BracketTable& table,
                                       std::map<std::string, LieElement>& memo) {
  auto it = memo.find(w.letters());
  if (it != memo.end()) return it->second;
  LieElement result;
  if (w.length() == 1) {
    result = w.letters() == "X" ? d.image_x() : d.image_y();
  } else {
    // Leibniz over the standard bracketing: d([u,v]) = [d(u),v] + [u,d(v)].
    auto [u, v] = w.standard_factorization();
    const LieElement du = apply_to_word(d, u, table, memo);
    const LieElement dv = apply_to_word(d, v, table, memo);
    result = bracket(du, LieElement::basis(v), table) +
             bracket(LieElement::basis(u), dv, table);
  }
  return memo.emplace(w.letters(), std::move(result)).first->second;
}

}  // namespace detail

/// Leibniz extension of d from the generators to an arbitrary element.
/// The image must fit inside the truncation; overflow raises, never clips.
inline LieElement apply(const Derivation& d, const LieElement& e, BracketTable& table) {
  if (e.is_zero() || d.is_zero()) {
    LieElement out;
    if (d.bidegree() && e.degree()) out = LieElement(*d.bidegree() + *e.degree());
    return out;
  }
  const int shift = d.degree_shift();
  if (const auto deg = e.max_total_degree())
    if (*deg + shift > d.truncation()) throw TruncationError(*deg + shift, d.truncation());

  LieElement out;
  if (d.bidegree() && e.degree()) out = LieElement(*d.bidegree() + *e.degree());
  std::map<std::string, LieElement> memo;
  for (const auto& [w, c] : e.terms()) {
    LieElement dw = detail::apply_to_word(d, w, table, memo);
    out += c * dw;
  }
  return out;
}

/// [d1, d2] determined on the generators by d1(d2(.)) - d2(d1(.)).
/// Bidegree tags add; special derivations are closed under this bracket.
inline Derivation derivation_bracket(const Derivation& d1, const Derivation& d2,
                                     BracketTable& table) {
  if (d1.truncation() != d2.truncation())
    throw DomainError("derivation_bracket: incompatible truncations " +
                      std::to_string(d1.truncation()) + " vs " +
                      std::to_string(d2.truncation()));
  std::optional<MultiDegree> tag;
  if (d1.bidegree() && d2.bidegree()) tag = *d1.bidegree() + *d2.bidegree();
  LieElement ix = apply(d1, d2.image_x(), table) - apply(d2, d1.image_x(), table);
  LieElement iy = apply(d1, d2.image_y(), table) - apply(d2, d1.image_y(), table);
  return Derivation(std::move(ix), std::move(iy), d1.truncation(), tag);
}

/// ad([x,y]) as a derivation: x -> [[x,y],x], y -> [[x,y],y].
inline Derivation ad_z(int truncation = kDefaultTruncation, BracketTable* table = nullptr) {
  BracketTable local;
  BracketTable& tab = table ? *table : local;
  const LieElement z = LieElement::basis("XY");
  LieElement zx = bracket(z, LieElement::basis("X"), tab);
  LieElement zy = bracket(z, LieElement::basis("Y"), tab);
  return Derivation(std::move(zx), std::move(zy), truncation, MultiDegree{1, 1});
}

/// Basis of the homogeneous special derivations of bidegree -m: solutions of
/// [d(x), y] + [x, d(y)] = 0, i.e. derivations annihilating z = [x,y].
struct SpecialBasis {
  MultiDegree bidegree;
  std::vector<Derivation> vectors;
  bool surjective = false;  // whether (a,b) -> [a,y]+[x,b] hits all of p_{m+(1,1)}
  std::int64_t rank = 0;
};

struct SpecialDim {
  std::int64_t dim = 0;
  bool surjective = false;
};

namespace detail {

/// Matrix of (a, b) -> [a, y] + [x, b] from p_{m+(1,0)} x p_{m+(0,1)} to
/// p_{m+(1,1)}, in Lyndon-basis coordinates. Columns are the concatenated
/// domain bases, rows the codomain basis.
inline IntMatrix special_condition_matrix(MultiDegree m,
                                          const std::vector<LyndonWord>& basis_a,
                                          const std::vector<LyndonWord>& basis_b,
                                          BracketTable& table) {
  const std::vector<LyndonWord> target = lyndon_basis(m + MultiDegree{1, 1});
  std::map<LyndonWord, std::size_t> row_of;
  for (std::size_t i = 0; i < target.size(); ++i) row_of.emplace(target[i], i);

  IntMatrix mat(target.size(), basis_a.size() + basis_b.size());
  const LyndonWord x("X"), y("Y");
  for (std::size_t j = 0; j < basis_a.size(); ++j)
    for (const auto& [w, c] : table.pair_bracket(basis_a[j], y))
      mat.at(row_of.at(w), j) = c;
  for (std::size_t j = 0; j < basis_b.size(); ++j)
    for (const auto& [w, c] : table.pair_bracket(x, basis_b[j]))
      mat.at(row_of.at(w), basis_a.size() + j) = c;
  return mat;
}

inline void require_special_input(MultiDegree m, int truncation) {
  if (!m.nonnegative())
    throw DomainError("special derivations: bidegree " + m.str() +
                      " has a negative coordinate");
  if (m.total() + 2 > truncation) throw TruncationError(m.total() + 2, truncation);
}

}  // namespace detail

/// Kernel basis of the z-annihilation condition at bidegree -m, computed by
/// an explicit solve (never the closed-form count). At m = (0,0) the domain
/// of derivations trivial on the abelianization is already zero, so the
/// result is empty by definition rather than by elimination.
inline SpecialBasis special_kernel_basis(MultiDegree m, int truncation = kDefaultTruncation,
                                         BracketTable* shared_table = nullptr) {
  detail::require_special_input(m, truncation);
  SpecialBasis out{m, {}, false, 0};
  if (m.is_zero()) return out;

  BracketTable local;
  BracketTable& table = shared_table ? *shared_table : local;
  const auto basis_a = lyndon_basis(m + MultiDegree{1, 0});
  const auto basis_b = lyndon_basis(m + MultiDegree{0, 1});
  const IntMatrix mat = detail::special_condition_matrix(m, basis_a, basis_b, table);
  const auto kernel = kernel_basis(mat);

  out.rank = static_cast<std::int64_t>(basis_a.size() + basis_b.size() - kernel.size());
  out.surjective = out.rank == witt_dim(m + MultiDegree{1, 1});
  for (const auto& v : kernel) {
    LieElement ix(m + MultiDegree{1, 0}), iy(m + MultiDegree{0, 1});
    for (std::size_t j = 0; j < basis_a.size(); ++j) ix.add_term(basis_a[j], Rat(v[j]));
    for (std::size_t j = 0; j < basis_b.size(); ++j)
      iy.add_term(basis_b[j], Rat(v[basis_a.size() + j]));
    out.vectors.emplace_back(std::move(ix), std::move(iy), truncation, m);
  }
  return out;
}

/// Kernel dimension plus a surjectivity report for the bracket map onto
/// p_{m+(1,1)}. When the map is surjective the dimension agrees with
/// witt_dim(m+(1,0)) + witt_dim(m+(0,1)) - witt_dim(m+(1,1)).
inline SpecialDim special_dim(MultiDegree m, int truncation = kDefaultTruncation,
                              BracketTable* shared_table = nullptr) {
  detail::require_special_input(m, truncation);
  if (m.is_zero()) return {0, false};
  BracketTable local;
  BracketTable& table = shared_table ? *shared_table : local;
  const auto basis_a = lyndon_basis(m + MultiDegree{1, 0});
  const auto basis_b = lyndon_basis(m + MultiDegree{0, 1});
  const IntMatrix mat = detail::special_condition_matrix(m, basis_a, basis_b, table);
  const std::int64_t r = static_cast<std::int64_t>(rank(mat));
  return {static_cast<std::int64_t>(basis_a.size() + basis_b.size()) - r,
          r == witt_dim(m + MultiDegree{1, 1})};
}

/// If d is a rational multiple c * ad([x,y]), returns c (0 for the zero
/// derivation); otherwise empty. Requires d special: apply(d, z) must vanish.
inline std::optional<Rat> is_inner_special(const Derivation& d, BracketTable& table) {
  const LieElement z = LieElement::basis("XY");
  if (!apply(d, z, table).is_zero())
    throw ContractError("is_inner_special: derivation does not annihilate [x,y]");
  if (d.is_zero()) return Rat(0);

  const Derivation adz = ad_z(d.truncation(), &table);
  // ad(z) sends x to -[x,[x,y]]; read off the candidate scalar and compare.
  const Rat c = -d.image_x().coefficient(LyndonWord("XXY"));
  if (c == 0) return std::nullopt;
  if (c * adz == d) return c;
  return std::nullopt;
}

/// Per-bidegree outer dimensions (kernel dimension, reduced by 1 exactly at
/// (1,1) where the inner line ad([x,y]) lives) for all strictly positive m
/// with |m| <= max_total_degree, plus the total-degree collapse.
struct OuterDims {
  std::map<MultiDegree, std::int64_t, ByTotalThenM1> by_bidegree;
  std::map<MultiDegree, bool, ByTotalThenM1> surjective;
  std::vector<std::int64_t> collapse;  // index = total degree, 0..max_total_degree
};

inline OuterDims outer_special_dims(int max_total_degree,
                                    int truncation = kDefaultTruncation,
                                    BracketTable* shared_table = nullptr,
                                    int threads = 1) {
  if (max_total_degree < 2)
    throw DomainError("outer_special_dims: max total degree must be >= 2");
  if (max_total_degree + 2 > truncation)
    throw TruncationError(max_total_degree + 2, truncation);

  std::vector<MultiDegree> degrees;
  for (int n = 2; n <= max_total_degree; ++n)
    for (int m1 = 1; m1 < n; ++m1) degrees.push_back({m1, n - m1});

  std::vector<SpecialDim> dims(degrees.size());
  if (threads <= 1) {
    BracketTable local;
    BracketTable& table = shared_table ? *shared_table : local;
    for (std::size_t i = 0; i < degrees.size(); ++i)
      dims[i] = special_dim(degrees[i], truncation, &table);
  } else {
    // Independent bidegrees; each worker owns its matrix workspace and a
    // private bracket table.
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      BracketTable table;
      for (std::size_t i = next.fetch_add(1); i < degrees.size(); i = next.fetch_add(1))
        dims[i] = special_dim(degrees[i], truncation, &table);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  OuterDims out;
  out.collapse.assign(static_cast<std::size_t>(max_total_degree) + 1, 0);
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const MultiDegree m = degrees[i];
    std::int64_t outer = dims[i].dim;
    if (m == MultiDegree{1, 1}) outer -= 1;  // the inner line ad([x,y])
    out.by_bidegree[m] = outer;
    out.surjective[m] = dims[i].surjective;
    out.collapse[static_cast<std::size_t>(m.total())] += outer;
  }
  return out;
}

}  // namespace bilie
