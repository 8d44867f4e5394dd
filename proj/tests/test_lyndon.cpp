#include <catch2/catch_amalgamated.hpp>

#include "bilie/lyndon.hpp"
#include "oracles.hpp"

using namespace bilie;

TEST_CASE("lyndon words of a bidegree", "[lyndon]") {
  SECTION("frozen examples") {
    auto b11 = lyndon_basis({1, 1});
    REQUIRE(b11.size() == 1);
    CHECK(b11[0].letters() == "XY");

    auto b22 = lyndon_basis({2, 2});
    REQUIRE(b22.size() == 1);
    CHECK(b22[0].letters() == "XXYY");

    auto b21 = lyndon_basis({2, 1});
    REQUIRE(b21.size() == 1);
    CHECK(b21[0].letters() == "XXY");
  }

  SECTION("single generators") {
    CHECK(lyndon_basis({1, 0})[0].letters() == "X");
    CHECK(lyndon_basis({0, 1})[0].letters() == "Y");
    CHECK(lyndon_basis({3, 0}).empty());
  }

  SECTION("sorted lexicographically and valid under the rotation oracle") {
    for (int n = 1; n <= 10; ++n)
      for (int p = 0; p <= n; ++p) {
        const auto basis = lyndon_basis({p, n - p});
        const auto expected = oracle::lyndon_words_by_filter({p, n - p});
        REQUIRE(basis.size() == expected.size());
        for (std::size_t i = 0; i < basis.size(); ++i)
          CHECK(basis[i].letters() == expected[i]);
        CHECK(std::is_sorted(basis.begin(), basis.end()));
      }
  }

  SECTION("invalid bidegrees") {
    CHECK_THROWS_AS(lyndon_basis({0, 0}), DomainError);
    CHECK_THROWS_AS(lyndon_basis({-1, 2}), DomainError);
    CHECK_THROWS_AS(LyndonWord("YX"), DomainError);
    CHECK_THROWS_AS(LyndonWord("XYXY"), DomainError);
    CHECK_THROWS_AS(LyndonWord(""), DomainError);
    CHECK_THROWS_AS(LyndonWord("XZ"), DomainError);
  }
}

TEST_CASE("witt dimensions", "[lyndon]") {
  SECTION("frozen examples") {
    CHECK(witt_dim({1, 0}) == 1);
    CHECK(witt_dim({3, 3}) == 3);  // (binom(6,3) - binom(2,1)) / 6
    CHECK(witt_dim({2, 4}) == 2);  // (binom(6,2) - binom(3,1)) / 6
  }

  SECTION("agree with enumeration up to total degree 14") {
    for (int n = 1; n <= 14; ++n)
      for (int p = 0; p <= n; ++p)
        CHECK(witt_dim({p, n - p}) ==
              static_cast<std::int64_t>(lyndon_basis({p, n - p}).size()));
  }

  SECTION("domain errors") {
    CHECK_THROWS_AS(witt_dim({0, 0}), DomainError);
    CHECK_THROWS_AS(witt_dim({-2, 5}), DomainError);
  }
}

TEST_CASE("lower central series dimensions", "[lyndon]") {
  CHECK(lcs_dim(1) == 2);
  CHECK(lcs_dim(2) == 1);
  CHECK(lcs_dim(5) == 6);

  SECTION("classical closed form") {
    for (int m = 1; m <= 14; ++m) {
      Int necklaces = 0;
      for (int d = 1; d <= m; ++d)
        if (m % d == 0)
          necklaces += mobius(d) * boost::multiprecision::pow(Int(2), unsigned(m / d));
      CHECK(Int(lcs_dim(m)) == necklaces / m);
    }
  }

  CHECK_THROWS_AS(lcs_dim(0), DomainError);
  CHECK_THROWS_AS(lcs_dim(-3), DomainError);
}

TEST_CASE("standard factorization", "[lyndon]") {
  auto [u, v] = LyndonWord("XXYY").standard_factorization();
  CHECK(u.letters() == "X");
  CHECK(v.letters() == "XYY");

  auto [u2, v2] = LyndonWord("XYY").standard_factorization();
  CHECK(u2.letters() == "XY");
  CHECK(v2.letters() == "Y");

  SECTION("right factor is the longest Lyndon proper suffix") {
    for (int n = 2; n <= 10; ++n)
      for (int p = 0; p <= n; ++p)
        for (const auto& w : lyndon_basis({p, n - p})) {
          const auto [a, b] = w.standard_factorization();
          const auto [oa, ob] = oracle::std_factor_by_suffix(w.letters());
          CHECK(a.letters() == oa);
          CHECK(b.letters() == ob);
        }
  }

  CHECK_THROWS_AS(LyndonWord("X").standard_factorization(), DomainError);
}
