#include <doctest.h>

#include <stdexcept>

#include "rsdist/aj.hpp"

using namespace rsdist;

TEST_CASE("small closed forms") {
  // A_0 = 1 and A_1 = u w for every characteristic.
  for (std::uint64_t p : {2, 3, 5}) {
    CHECK(aj_binsum(0, p, mpq_class(7, 3), mpq_class(1, 4)) == 1);
    CHECK(aj_binsum(1, p, mpq_class(5), mpq_class(1, 2)) == mpq_class(5, 2));
  }
  // p = 2: the 2-cycle contributes u alone, so A_2 = (u^2 w^2 + u)/2.
  CHECK(aj_binsum(2, 2, mpq_class(4), mpq_class(1, 2)) == 4);
  CHECK(aj_permutation(2, 2, mpq_class(4), mpq_class(1, 2)) == 4);
  CHECK(aj_series(2, 2, mpq_class(4), mpq_class(1, 2)) == 4);
  // p = 3: the 2-cycle length is coprime to p, so A_2 = (u^2 w^2 + u w)/2.
  CHECK(aj_binsum(2, 3, mpq_class(4), mpq_class(1, 2)) == mpq_class(3));
  CHECK(aj_binsum(5, 2, mpq_class(2), mpq_class(1)) == 6);
}

TEST_CASE("w = 1 collapses to a single binomial") {
  for (std::uint64_t p : {2, 3, 7}) {
    for (std::uint64_t j = 0; j <= 7; ++j) {
      const mpq_class u(9, 2);
      CHECK(aj_binsum(j, p, u, mpq_class(1)) == gen_binom(u + mpq_class(j) - 1, j));
    }
  }
}

TEST_CASE("w = 0 keeps only full p-cycle covers") {
  // (1-z^p)^(-u/p): nonzero exactly at multiples of p.
  CHECK(aj_binsum(6, 3, mpq_class(6), mpq_class(0)) == gen_binom(mpq_class(2 + 2 - 1), 2));
  CHECK(aj_binsum(4, 3, mpq_class(6), mpq_class(0)) == 0);
  CHECK(aj_binsum(5, 2, mpq_class(8), mpq_class(0)) == 0);
  CHECK(aj_binsum(4, 2, mpq_class(8), mpq_class(0)) == gen_binom(mpq_class(4 + 2 - 1), 2));
}

TEST_CASE("three evaluators agree on rational parameters") {
  const mpq_class us[] = {mpq_class(1), mpq_class(2), mpq_class(5, 2), mpq_class(7)};
  const mpq_class ws[] = {mpq_class(0), mpq_class(1, 3), mpq_class(1)};
  for (std::uint64_t p : {2, 3}) {
    for (const mpq_class& u : us) {
      for (const mpq_class& w : ws) {
        for (std::uint64_t j = 0; j <= 6; ++j) {
          const mpq_class perm = aj_permutation(j, p, u, w);
          CHECK(perm == aj_series(j, p, u, w));
          CHECK(perm == aj_binsum(j, p, u, w));
          CHECK(perm >= 0);
        }
      }
    }
  }
  CHECK_THROWS_AS(aj_permutation(kAjPermutationMaxJ + 1, 2, mpq_class(1), mpq_class(1)),
                  std::invalid_argument);
}

TEST_CASE("normalization at u = w = 1") {
  for (std::uint64_t p : {2, 5}) {
    const auto all = aj_series_all(30, p, mpq_class(1), mpq_class(1));
    REQUIRE(all.size() == 31);
    for (const mpq_class& v : all) CHECK(v == 1);
  }
}

TEST_CASE("series batch matches per-index evaluation") {
  const auto all = aj_series_all(12, 3, mpq_class(7, 2), mpq_class(2, 5));
  for (std::uint64_t j = 0; j <= 12; ++j)
    CHECK(all[j] == aj_series(j, 3, mpq_class(7, 2), mpq_class(2, 5)));
}

TEST_CASE("field-derived parameters") {
  // q = 9, ell = 2: q1 = min(9, sqrt(9)) = 3 exactly, gamma = 1/3.
  const AjParams params = AjParams::for_field(9, 2, 4);
  CHECK(params.p == 3);
  REQUIRE(params.u.is_exact());
  CHECK(params.u.rational() == 9);
  REQUIRE(params.w.is_exact());
  CHECK(params.w.rational() == mpq_class(1, 3));
  const Scalar v = aj_binsum(params);
  REQUIRE(v.is_exact());
  CHECK(v.rational() == aj_binsum(4, 3, mpq_class(9), mpq_class(1, 3)));

  // ell - 1 >= sqrt(q): q1 saturates at q, gamma = 1.
  const Q1Gamma sat = q1_gamma(2, 5);
  REQUIRE(sat.gamma.is_exact());
  CHECK(sat.gamma.rational() == 1);

  // Non-square q with 1 < (ell-1) sqrt(q) < q: enclosure of sqrt(8).
  const Q1Gamma irr = q1_gamma(8, 2);
  CHECK(!irr.q1.is_exact());
  CHECK(irr.gamma.interval().cmp_lower(mpq_class(35, 100)) > 0);
  CHECK(irr.gamma.interval().cmp_upper(mpq_class(36, 100)) < 0);

  CHECK_THROWS_AS(q1_gamma(8, 0), std::invalid_argument);
  CHECK_THROWS_AS(AjParams::for_field(6, 1, 0), std::invalid_argument);
}

TEST_CASE("log-space binomial") {
  const LogValue ten = log_gen_binom(Scalar::exact(mpq_class(5)), 2);
  REQUIRE(!ten.is_zero);
  CHECK(exp(ten.log).contains(10));
  // Integer upper argument below k: one factor is exactly zero.
  CHECK(log_gen_binom(Scalar::exact(mpq_class(3)), 5).is_zero);
  // C(x, 0) is the empty product.
  const LogValue empty = log_gen_binom(Scalar::exact(mpq_class(7, 3)), 0);
  REQUIRE(!empty.is_zero);
  CHECK(empty.log.cmp_lower(mpq_class(0)) == 0);
  CHECK(empty.log.cmp_upper(mpq_class(0)) == 0);
  // A negative factor has no real log.
  CHECK_THROWS_AS(log_gen_binom(Scalar::exact(mpq_class(1, 2)), 2),
                  std::domain_error);
}

TEST_CASE("log-space A_j encloses the exact value") {
  for (std::uint64_t j : {1, 3, 7, 20}) {
    const LogValue lv = log_aj_binsum(j, 3, Scalar::exact(mpq_class(9)),
                                      Scalar::exact(mpq_class(1, 3)));
    const mpq_class exact = aj_binsum(j, 3, mpq_class(9), mpq_class(1, 3));
    REQUIRE(!lv.is_zero);
    CHECK(exp(lv.log).contains(exact));
  }
}

TEST_CASE("ln A_j for field parameters") {
  // ell = 1 means gamma = 0: A_j vanishes off multiples of p.
  CHECK(ln_aj(9, 1, 2).is_zero);
  const LogValue v = ln_aj(9, 1, 3);
  REQUIRE(!v.is_zero);
  CHECK(exp(v.log).contains(3));  // C(3 + 1 - 1, 1)
  // Exact-gamma path at ell = 2, q = 9.
  const LogValue w = ln_aj(9, 2, 5);
  REQUIRE(!w.is_zero);
  CHECK(exp(w.log).contains(aj_binsum(5, 3, mpq_class(9), mpq_class(1, 3))));
}
