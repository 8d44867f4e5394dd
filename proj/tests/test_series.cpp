#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "bilie/checks.hpp"
#include "bilie/series.hpp"
#include "bilie/weights.hpp"

using namespace bilie;

namespace {

GeneratorSpec rank_two() { return GeneratorSpec{{{1, 0}, 1}, {{0, 1}, 1}}; }

GeneratorSpec index_set_gens(int wk, int bound) {
  GeneratorSpec g;
  for (const MultiDegree& m : index_set(wk, bound)) g.add(m);
  return g;
}

}  // namespace

TEST_CASE("free lie dimensions from the PBW identity", "[series]") {
  SECTION("one generator: rank-one abelian") {
    const BivariateSeries d = free_lie_dims(GeneratorSpec{{{1, 1}, 1}}, 6);
    CHECK(d.coefficient({1, 1}) == 1);
    CHECK(d.coefficients().size() == 1);
  }

  SECTION("two letters reproduce the Witt dimensions") {
    const BivariateSeries d = free_lie_dims(rank_two(), 8);
    for (int n = 1; n <= 8; ++n)
      for (int p = 0; p <= n; ++p)
        CHECK(d.coefficient({p, n - p}) == witt_dim({p, n - p}));
  }

  SECTION("reference table at w_K = 2") {
    const BivariateSeries d = free_lie_dims(index_set_gens(2, 12), 12);
    const std::vector<Int> c = total_collapse(d);
    const std::int64_t expected[] = {0, 3, 5, 10, 24, 50};
    for (int i = 0; i < 6; ++i) CHECK(c[static_cast<std::size_t>(2 * i + 2)] == expected[i]);
    // odd layers are empty for this congruence
    for (int n = 3; n <= 11; n += 2) CHECK(c[static_cast<std::size_t>(n)] == 0);
  }

  SECTION("collapse of the Witt series at T = 5") {
    const std::vector<Int> c = total_collapse(free_lie_dims(rank_two(), 5));
    const std::vector<Int> expected{0, 2, 1, 2, 3, 6};
    CHECK(c == expected);
  }
}

TEST_CASE("graded-alphabet Lyndon counting", "[series]") {
  SECTION("two letters") {
    const BivariateSeries counted = lyndon_count_over_graded_alphabet(rank_two(), 8);
    CHECK(counted == free_lie_dims(rank_two(), 8));
  }

  SECTION("three letters of one bidegree") {
    const BivariateSeries counted =
        lyndon_count_over_graded_alphabet(GeneratorSpec{{{2, 2}, 3}}, 8);
    CHECK(counted.coefficient({2, 2}) == 3);
    CHECK(counted.coefficient({4, 4}) == 3);  // pairs of distinct letters
    CHECK(counted.coefficients().size() == 2);
  }

  SECTION("reference configuration") {
    const GeneratorSpec gens = index_set_gens(2, 12);
    CHECK(lyndon_count_over_graded_alphabet(gens, 12) == free_lie_dims(gens, 12));
  }
}

TEST_CASE("pbw identity holds after solving", "[series]") {
  CHECK(check_pbw_identity(rank_two(), 8).passed);
  CHECK(check_pbw_identity(index_set_gens(2, 10), 10).passed);
  CHECK(check_pbw_identity(GeneratorSpec{{{1, 1}, 2}, {{2, 1}, 1}}, 9).passed);
}

TEST_CASE("generator extraction inverts the dimension map", "[series]") {
  SECTION("witt series yields the two letters") {
    const GeneratorSpec back = generator_count_from_dims(free_lie_dims(rank_two(), 8));
    CHECK(back == rank_two());
  }

  SECTION("reference series yields one generator per index") {
    const GeneratorSpec gens = index_set_gens(2, 10);
    const GeneratorSpec back = generator_count_from_dims(free_lie_dims(gens, 10));
    CHECK(back == gens);
  }

  SECTION("a hole is diagnosed as non-free") {
    BivariateSeries dims = free_lie_dims(rank_two(), 6);
    dims.set({1, 1}, 0);  // remove [x,y]
    dims.set({2, 2}, 2);
    try {
      generator_count_from_dims(dims);
      FAIL("expected NotFreeError");
    } catch (const NotFreeError& e) {
      CHECK(e.m1() == 1);
      CHECK(e.m2() == 1);
    }
  }

  SECTION("random round trips") {
    CHECK(check_pbw_roundtrip(20, 10, 11223344u).passed);
  }
}

TEST_CASE("monotonicity under extra generators", "[series]") {
  std::mt19937 rng(555);
  std::uniform_int_distribution<int> coord(0, 3);
  for (int t = 0; t < 20; ++t) {
    GeneratorSpec gens;
    gens.add({1, 0});
    gens.add({0, 1});
    const MultiDegree extra{coord(rng), coord(rng) + 1};
    const BivariateSeries base = free_lie_dims(gens, 8);
    gens.add(extra);
    const BivariateSeries more = free_lie_dims(gens, 8);
    for (const auto& [m, c] : base.coefficients()) CHECK(more.coefficient(m) >= c);
  }
}

TEST_CASE("series and spec bookkeeping", "[series]") {
  SECTION("no zero coefficients, truncation enforced") {
    BivariateSeries s(4);
    s.set({1, 1}, 5);
    s.add({1, 1}, -5);
    CHECK(s.empty());
    CHECK_THROWS_AS(s.set({3, 3}, 1), TruncationError);
    CHECK_THROWS_AS(s.set({-1, 1}, 1), DomainError);
  }

  SECTION("generator spec rejects bad keys") {
    CHECK_THROWS_AS((GeneratorSpec{{{0, 0}, 1}}), DomainError);
    CHECK_THROWS_AS((GeneratorSpec{{{-1, 2}, 1}}), DomainError);
    CHECK_THROWS_AS((GeneratorSpec{{{1, 1}, 0}}), DomainError);
  }
}
