#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "bilie/checks.hpp"
#include "bilie/lie_element.hpp"
#include "oracles.hpp"

using namespace bilie;

namespace {
BracketTable& table() {
  static BracketTable t;
  return t;
}
}  // namespace

TEST_CASE("bracket frozen examples", "[bracket]") {
  const LieElement x = LieElement::basis("X");
  const LieElement y = LieElement::basis("Y");

  CHECK(bracket(x, x, table()).is_zero());

  const LieElement xy = bracket(x, y, table());
  REQUIRE(xy.terms().size() == 1);
  CHECK(xy.coefficient(LyndonWord("XY")) == 1);

  // [ [x,y], x ] = -[x,[x,y]] = -XXY
  const LieElement zx = bracket(LieElement::basis("XY"), x, table());
  REQUIRE(zx.terms().size() == 1);
  CHECK(zx.coefficient(LyndonWord("XXY")) == -1);
}

TEST_CASE("bracket matches the tensor-algebra oracle", "[bracket]") {
  // Every basis pair up to combined degree 9, expanded two independent ways.
  std::vector<LyndonWord> words;
  for (int n = 1; n <= 8; ++n)
    for (int p = 0; p <= n; ++p)
      for (const auto& w : lyndon_basis({p, n - p})) words.push_back(w);

  for (const auto& u : words)
    for (const auto& v : words) {
      if (u.total_degree() + v.total_degree() > 9) continue;
      const LieElement lhs =
          bracket(LieElement::basis(u), LieElement::basis(v), table());
      const oracle::Tensor want =
          oracle::tensor_bracket(oracle::standard_bracketing_tensor(u.letters()),
                                 oracle::standard_bracketing_tensor(v.letters()));
      REQUIRE(oracle::lie_in_tensor(lhs) == want);
    }
}

TEST_CASE("bracket structural properties", "[bracket]") {
  std::mt19937 rng(24601);

  SECTION("antisymmetry on random homogeneous elements") {
    for (int s = 0; s < 200; ++s) {
      const MultiDegree m = checkdetail::random_bidegree(1, 8, rng);
      const LieElement a = checkdetail::random_homogeneous(m, rng);
      CHECK(bracket(a, a, table()).is_zero());
      const LieElement b = checkdetail::random_homogeneous(m, rng);
      CHECK((bracket(a, b, table()) + bracket(b, a, table())).is_zero());
    }
  }

  SECTION("bidegree additivity") {
    const CheckResult r = check_bidegree_additivity(100, 424242u, table());
    CHECK(r.passed);
  }

  SECTION("closure: results are normalized basis combinations") {
    // Validity of every LyndonWord in a bracket expansion is enforced by the
    // constructor; spot-check the bidegree bookkeeping at a composite pair.
    const LieElement r = bracket(LieElement::basis("XXY"), LieElement::basis("XYY"), table());
    REQUIRE(!r.is_zero());
    REQUIRE(r.degree().has_value());
    CHECK(*r.degree() == MultiDegree{3, 3});
    for (const auto& [w, c] : r.terms()) CHECK(w.bidegree() == MultiDegree{3, 3});
  }
}

TEST_CASE("jacobi identity on basis triples", "[bracket]") {
  const CheckResult r = check_jacobi(8, table(), false);
  CHECK(r.passed);
  CHECK(r.detail.empty());
}

TEST_CASE("jacobi fault injection is detected", "[bracket]") {
  const CheckResult r = check_jacobi(4, table(), true);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.detail.empty());
}

TEST_CASE("lie element bookkeeping", "[bracket]") {
  SECTION("no zero coefficients are stored") {
    LieElement e;
    e.add_term(LyndonWord("XY"), Rat(2));
    e.add_term(LyndonWord("XY"), Rat(-2));
    CHECK(e.is_zero());
    e.add_term(LyndonWord("XY"), Rat(0));
    CHECK(e.terms().empty());
  }

  SECTION("homogeneity tag is enforced") {
    LieElement e(MultiDegree{1, 1});
    e.add_term(LyndonWord("XY"), Rat(1));
    CHECK_THROWS_AS(e.add_term(LyndonWord("XXY"), Rat(1)), DomainError);
  }

  SECTION("tags combine across sums") {
    LieElement a = LieElement::basis("XY");
    LieElement b = LieElement::basis("XXY");
    const LieElement c = a + b;
    CHECK_FALSE(c.degree().has_value());
    const LieElement d = a + LieElement();  // adding zero keeps the tag
    REQUIRE(d.degree().has_value());
    CHECK(*d.degree() == MultiDegree{1, 1});
  }

  SECTION("stable text encoding") {
    LieElement e;
    e.add_term(LyndonWord("XYY"), Rat(1));
    e.add_term(LyndonWord("XXY"), Rat(-1));
    CHECK(e.str() == "-1*XXY + 1*XYY");
    CHECK(LieElement().str() == "0");
    LieElement half;
    half.add_term(LyndonWord("XY"), Rat(1) / 2);
    CHECK(half.str() == "1/2*XY");
  }
}
