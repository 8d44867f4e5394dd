#include <catch2/catch_amalgamated.hpp>

#include "bilie/checks.hpp"
#include "bilie/derivation.hpp"
#include "oracles.hpp"

using namespace bilie;

namespace {

BracketTable& table() {
  static BracketTable t;
  return t;
}

const LieElement& z() {
  static const LieElement e = LieElement::basis("XY");
  return e;
}

/// Kernel dimension recomputed in tensor-algebra coordinates with naive
/// rational elimination; fully independent of the Lyndon rewriting and the
/// fraction-free solver.
std::int64_t kernel_dim_by_tensor_oracle(MultiDegree m) {
  const auto basis_a = lyndon_basis(m + MultiDegree{1, 0});
  const auto basis_b = lyndon_basis(m + MultiDegree{0, 1});
  std::vector<oracle::Tensor> columns;
  for (const auto& a : basis_a)
    columns.push_back(oracle::tensor_bracket(
        oracle::standard_bracketing_tensor(a.letters()), {{"Y", Rat(1)}}));
  for (const auto& b : basis_b)
    columns.push_back(oracle::tensor_bracket(
        {{"X", Rat(1)}}, oracle::standard_bracketing_tensor(b.letters())));
  std::map<std::string, std::size_t> word_index;
  for (const auto& col : columns)
    for (const auto& [w, c] : col) word_index.emplace(w, 0);
  std::size_t next = 0;
  for (auto& [w, idx] : word_index) idx = next++;
  // rows = columns of the map: rank is transpose-invariant
  std::vector<std::vector<Rat>> rows(columns.size(), std::vector<Rat>(word_index.size()));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [w, c] : columns[j]) rows[j][word_index.at(w)] = c;
  return static_cast<std::int64_t>(columns.size() - oracle::rational_rank(rows));
}

}  // namespace

TEST_CASE("leibniz extension of a derivation", "[derivations]") {
  SECTION("ad(z) annihilates z") {
    const Derivation adz = ad_z(14, &table());
    CHECK(apply(adz, z(), table()).is_zero());
  }

  SECTION("frozen example: d(x) = 0, d(y) = XXY") {
    LieElement iy = LieElement::basis("XXY");
    const Derivation d(LieElement(), iy, 14, MultiDegree{1, 1});
    const LieElement out = apply(d, z(), table());
    REQUIRE(out.terms().size() == 1);
    CHECK(out.coefficient(LyndonWord("XXXY")) == 1);  // [x,[x,[x,y]]]
  }

  SECTION("linearity: zero input") {
    const Derivation adz = ad_z(14, &table());
    CHECK(apply(adz, LieElement(), table()).is_zero());
  }

  SECTION("truncation overflow is loud") {
    const Derivation adz = ad_z(4, &table());
    const LieElement deep = LieElement::basis("XXYY");
    CHECK_THROWS_AS(apply(adz, deep, table()), TruncationError);
  }

  SECTION("leibniz rule on random data") {
    CHECK(check_leibniz(300, 12, 987654u, table()).passed);
  }
}

TEST_CASE("special kernel bases", "[derivations]") {
  SECTION("(1,1): the line through ad(z)") {
    const SpecialBasis b = special_kernel_basis({1, 1}, 14, &table());
    REQUIRE(b.vectors.size() == 1);
    CHECK(b.surjective);
    const Derivation& d = b.vectors[0];
    // spanned by (image_x, image_y) = ([z,x], [z,y]) up to a scalar
    const auto c = is_inner_special(d, table());
    REQUIRE(c.has_value());
    CHECK(*c != 0);
    CHECK(*c * ad_z(14, &table()) == d);
  }

  SECTION("axis bidegrees vanish") {
    CHECK(special_kernel_basis({3, 0}, 14, &table()).vectors.empty());
    CHECK(special_kernel_basis({0, 4}, 14, &table()).vectors.empty());
    CHECK(special_dim({2, 0}, 14, &table()).dim == 0);
  }

  SECTION("(2,2) is one-dimensional") {
    const SpecialBasis b = special_kernel_basis({2, 2}, 14, &table());
    CHECK(b.vectors.size() == 1);
    CHECK(b.surjective);
    // members annihilate z
    for (const auto& d : b.vectors) CHECK(apply(d, z(), table()).is_zero());
  }

  SECTION("degenerate (0,0) is trivial by definition") {
    CHECK(special_kernel_basis({0, 0}, 14, &table()).vectors.empty());
    CHECK(special_dim({0, 0}, 14, &table()).dim == 0);
  }

  SECTION("errors") {
    CHECK_THROWS_AS(special_kernel_basis({-1, 3}, 14, &table()), DomainError);
    CHECK_THROWS_AS(special_kernel_basis({5, 5}, 10, &table()), TruncationError);
  }
}

TEST_CASE("special dimensions and surjectivity", "[derivations]") {
  SECTION("frozen examples") {
    const SpecialDim d13 = special_dim({1, 3}, 14, &table());
    CHECK(d13.dim == 1);  // witt(2,3) + witt(1,4) - witt(2,4) = 2 + 1 - 2
    CHECK(d13.surjective);

    const SpecialDim d11 = special_dim({1, 1}, 14, &table());
    CHECK(d11.dim == 1);
    CHECK(d11.surjective);

    for (int m = 1; m <= 8; ++m) CHECK(special_dim({m, 0}, 14, &table()).dim == 0);
  }

  SECTION("explicit solve agrees with the tensor oracle") {
    for (const MultiDegree m : {MultiDegree{1, 1}, MultiDegree{2, 2}, MultiDegree{1, 3},
                                MultiDegree{3, 2}, MultiDegree{2, 4}, MultiDegree{4, 0}})
      CHECK(special_dim(m, 14, &table()).dim == kernel_dim_by_tensor_oracle(m));
  }

  SECTION("rank-nullity against kernel bases") {
    const SpecialKernels kernels = compute_special_kernels(8, 14, table());
    CHECK(check_rank_nullity(kernels, 14, table()).passed);
  }
}

TEST_CASE("inner detection", "[derivations]") {
  const Derivation adz = ad_z(14, &table());

  SECTION("ad(z) itself") {
    const auto c = is_inner_special(adz, table());
    REQUIRE(c.has_value());
    CHECK(*c == 1);
  }

  SECTION("zero derivation") {
    const auto c = is_inner_special(Derivation::zero(14), table());
    REQUIRE(c.has_value());
    CHECK(*c == 0);
  }

  SECTION("scaled ad(z)") {
    const auto c = is_inner_special(Rat(-7) / 3 * adz, table());
    REQUIRE(c.has_value());
    CHECK(*c == Rat(-7) / 3);
  }

  SECTION("the (1,3) generator is outer") {
    const SpecialBasis b = special_kernel_basis({1, 3}, 14, &table());
    REQUIRE(b.vectors.size() == 1);
    CHECK_FALSE(is_inner_special(b.vectors[0], table()).has_value());
  }

  SECTION("non-special input violates the contract") {
    const Derivation bad(LieElement::basis("XXY"), LieElement(), 14, MultiDegree{1, 1});
    CHECK_THROWS_AS(is_inner_special(bad, table()), ContractError);
  }
}

TEST_CASE("derivation bracket", "[derivations]") {
  const Derivation adz = ad_z(14, &table());

  SECTION("antisymmetry") {
    CHECK(derivation_bracket(adz, adz, table()).is_zero());
    const SpecialBasis b13 = special_kernel_basis({1, 3}, 14, &table());
    CHECK(derivation_bracket(b13.vectors[0], b13.vectors[0], table()).is_zero());
  }

  SECTION("bracket of the (1,3) and (3,1) generators") {
    const SpecialBasis b13 = special_kernel_basis({1, 3}, 14, &table());
    const SpecialBasis b31 = special_kernel_basis({3, 1}, 14, &table());
    REQUIRE(b13.vectors.size() == 1);
    REQUIRE(b31.vectors.size() == 1);
    const Derivation c = derivation_bracket(b13.vectors[0], b31.vectors[0], table());
    REQUIRE(c.bidegree().has_value());
    CHECK(*c.bidegree() == MultiDegree{4, 4});
    CHECK(apply(c, z(), table()).is_zero());
  }

  SECTION("specialness is closed under bracket") {
    const SpecialKernels kernels = compute_special_kernels(6, 14, table());
    CHECK(check_special_closure(kernels, 8, table()).passed);
  }

  SECTION("incompatible truncations") {
    CHECK_THROWS_AS(derivation_bracket(ad_z(10), ad_z(12), table()), DomainError);
  }
}

TEST_CASE("outer dimension table", "[derivations]") {
  const OuterDims od = outer_special_dims(8, 14, &table());

  SECTION("inner correction only at (1,1)") {
    CHECK(od.by_bidegree.at({1, 1}) == 0);
    CHECK(od.collapse[2] == 0);
    CHECK(od.collapse[4] == 3);
    CHECK(od.collapse[6] == 6);
  }

  SECTION("surjectivity everywhere computed") {
    CHECK(check_bracket_surjectivity(od).passed);
  }

  SECTION("threaded computation matches") {
    const OuterDims parallel = outer_special_dims(8, 14, nullptr, 4);
    CHECK(parallel.by_bidegree == od.by_bidegree);
    CHECK(parallel.surjective == od.surjective);
    CHECK(parallel.collapse == od.collapse);
  }

  SECTION("truncation guard") {
    CHECK_THROWS_AS(outer_special_dims(13, 14, &table()), TruncationError);
  }
}
