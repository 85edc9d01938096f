#include <doctest.h>

#include <stdexcept>

#include "rsdist/bounds.hpp"
#include "rsdist/counting.hpp"
#include "rsdist/distance.hpp"

using namespace rsdist;

TEST_CASE("main terms") {
  CHECK(wj_main_term(3, 1, 2) == 1);  // C(3,2) 3^-1
  CHECK(wj_main_term(4, 2, 3) == 1);  // C(4,3) 4^-1
  // Truncated alternating sum: empty below zero, telescoping at small limits.
  CHECK(ndr_main_term(3, 1, 0, -1) == 0);
  CHECK(ndr_main_term(3, 1, 0, 1) == 0);   // 3 (1 - 3/3)
  CHECK(ndr_main_term(3, 1, 0, 2) == 1);   // 3 (1 - 1 + C(3,2)/9)
  CHECK(ndr_main_term(3, 1, 4, 5) == 0);   // r > n
}

TEST_CASE("deviation bound vanishes where the A factor vanishes") {
  // ell = 1 gives gamma = 0; p = 3 does not divide j = 2, so A_2 = 0.
  const Scalar b = wj_error_bound(3, 1, 1, 2);
  REQUIRE(b.is_exact());
  CHECK(b.rational() == 0);
  const Scalar nb = ndr_error_bound(3, 1, 1, 0);
  REQUIRE(nb.is_exact());
  CHECK(nb.rational() == 0);
  CHECK_THROWS_AS(wj_error_bound(3, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(wj_error_bound(3, 1, 1, 3), std::invalid_argument);
}

TEST_CASE("deviation bounds hold on a small instance") {
  const Field F = Field::from_order(4);
  const EvalSet D = EvalSet::full(F);
  const std::uint32_t k = 1, ell = 2, d = 3;
  for (std::uint32_t j = k + 1; j <= k + ell; ++j) {
    const auto table = wj_table(F, ell, j, d, D);
    const mpq_class main = wj_main_term(4, k, j);
    const Scalar bound = wj_error_bound(4, k, ell, j);
    for (const mpz_class& w : table) {
      const mpq_class dev = abs(mpq_class(w) - main);
      if (bound.is_exact()) {
        CHECK(dev <= bound.rational());
      } else {
        CHECK(bound.interval().cmp_upper(dev) >= 0);
      }
    }
  }
  // Dropping r past k + ell empties the deviation sum exactly.
  const Scalar zero = ndr_error_bound(4, k, ell, k + ell + 1);
  REQUIRE(zero.is_exact());
  CHECK(zero.rational() == 0);
}

TEST_CASE("bound chain at sampled field points") {
  struct Point { std::uint64_t q; std::uint32_t ell; std::uint64_t j; };
  for (const Point pt : {Point{81, 10, 27}, Point{256, 5, 64}, Point{64, 2, 16}}) {
    const LogValue lnaj = ln_aj(pt.q, pt.ell, pt.j, 192);
    const IntervalScalar gen = lemma_general(pt.q, pt.ell, pt.j, 192);
    REQUIRE(!lnaj.is_zero);
    CHECK(certainly_leq(lnaj.log, gen) == Trilean::holds);
    CHECK(lemma_large_minus_general(pt.q, pt.ell, pt.j, 192).cmp_lower(mpq_class(0)) >= 0);
  }
  // The simplified bound's derivation window: ln((q+j)/j)/p <= 3/5.
  CHECK(lemma_large(81, 10, 27).window_ok == Trilean::holds);
  CHECK(lemma_large(256, 5, 64).window_ok == Trilean::fails);
  // Inside the window the simplified bound dominates the general one.
  const LemmaLarge lg = lemma_large(81, 10, 27, 192);
  CHECK(certainly_leq(lemma_general(81, 10, 27, 192), lg.value) == Trilean::holds);
}

TEST_CASE("saddle point satisfies its defining equation") {
  const mpq_class c(1, 4);
  const SaddleP2 s = saddle_p2(Scalar::exact(mpq_class(1, 8)), c);
  // (1+c) y^2 + gamma y - c = 0 at the saddle.
  const IntervalScalar residual =
      IntervalScalar::from_rational(mpq_class(5, 4)) * s.y * s.y +
      IntervalScalar::from_rational(mpq_class(1, 8)) * s.y -
      IntervalScalar::from_rational(c);
  CHECK(residual.contains_zero());
  CHECK(s.y.certainly_positive());
  CHECK(s.y.cmp_upper(mpq_class(1)) < 0);
  CHECK(s.bound_per_q.certainly_positive());
}

TEST_CASE("saddle refinement never exceeds the general bound") {
  for (std::uint64_t j : {8, 16, 32, 48}) {
    const IntervalScalar gen = lemma_general(64, 2, j, 192);
    const IntervalScalar sad = saddle_p2_bound(64, 2, j, 192);
    CHECK(certainly_less(gen, sad) != Trilean::holds);
  }
  CHECK_THROWS_AS(saddle_p2_bound(27, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(saddle_p2(Scalar::exact(mpq_class(0)), mpq_class(0)),
                  std::invalid_argument);
}

TEST_CASE("region function values") {
  // f(3, 1/2) = (5/6) ln 2 - (1/2) ln(3/2)
  const IntervalScalar f3 = region_f(3, mpq_class(1, 2));
  CHECK(f3.cmp_lower(mpq_class(374, 1000)) > 0);
  CHECK(f3.cmp_upper(mpq_class(376, 1000)) < 0);
  // g(32, 1/2) ~ 0.17469
  const IntervalScalar g32 = region_g(32, mpq_class(1, 2));
  CHECK(g32.cmp_lower(mpq_class(174, 1000)) > 0);
  CHECK(g32.cmp_upper(mpq_class(175, 1000)) < 0);
  // The crossover past which f(2, .) goes negative.
  CHECK(region_f(2, mpq_class(9, 10)).certainly_negative());
  CHECK(region_f(2, mpq_class(1, 2)).certainly_positive());
  CHECK_THROWS_AS(region_f(2, mpq_class(1)), std::invalid_argument);
  CHECK_THROWS_AS(region_g(32, mpq_class(0)), std::invalid_argument);

  const RegionFunctions rf = region_functions(2, 32, mpq_class(1, 2));
  CHECK((rf.h1 - rf.h2).certainly_positive());  // they differ by (ln q)/(2 sqrt q)
  CHECK(rf.f.contains(mpq_class(0)) == false);
}

TEST_CASE("closed-form second derivative matches a central difference") {
  const std::uint64_t p = 3, q = 27;
  const mpq_class c(1, 4), h(1, 1024);
  const auto fg = [&](const mpq_class& x) {
    return region_f(p, x, 192) - region_g(q, x, 192);
  };
  const IntervalScalar cd =
      (fg(c + h) - IntervalScalar::from_rational(mpq_class(2), 192) * fg(c) + fg(c - h)) /
      IntervalScalar::from_rational(h * h, 192);
  const IntervalScalar d2 = region_fg_second_derivative(p, q, c, 192);
  CHECK(abs(cd - d2).certainly_within(mpq_class(1, 200)) == Trilean::holds);
  CHECK(d2.certainly_negative());  // f - g is concave here
}

TEST_CASE("ordinary-word condition certification") {
  const Verdict ok = thm7_check(RegionParams{2, 32, 15, 1}, RegionBranch::b);
  CHECK(ok.verdict == Trilean::holds);
  CHECK(ok.condition == "thm7b");
  CHECK(ok.margin.certainly_positive());

  const Verdict ok_a = thm7_check(RegionParams{2, 32, 15, 1}, RegionBranch::a);
  CHECK(ok_a.verdict == Trilean::holds);
  CHECK(ok_a.condition == "thm7a");

  // c = 29/32 puts f well below zero: the condition certifiably fails.
  const Verdict bad = thm7_check(RegionParams{2, 32, 28, 1}, RegionBranch::a);
  CHECK(bad.verdict == Trilean::fails);
  CHECK(bad.margin.certainly_negative());

  CHECK_THROWS_AS(thm7_check(RegionParams{2, 4, 3, 1}, RegionBranch::a),
                  std::invalid_argument);
}

TEST_CASE("largest admissible gamma clamps at zero") {
  const IntervalScalar zero =
      gamma_max(2, 32, mpq_class(9, 10), RegionBranch::b);
  CHECK(zero.cmp_lower(mpq_class(0)) == 0);
  CHECK(zero.cmp_upper(mpq_class(0)) == 0);

  const IntervalScalar gm = gamma_max(2, 32, mpq_class(1, 2), RegionBranch::a);
  CHECK(gm.cmp_lower(mpq_class(2, 100)) > 0);
  CHECK(gm.cmp_upper(mpq_class(3, 100)) < 0);
  // Wide-range variant replaces g(q, c) by g(q, 1/2); at c = 1/2 they agree.
  const IntervalScalar gw =
      gamma_max(2, 32, mpq_class(1, 2), RegionBranch::a, true);
  CHECK(certainly_less(abs(gw - gm), IntervalScalar::from_rational(mpq_class(1, 1000000))) == Trilean::holds);
}

TEST_CASE("derived constants for a target rate") {
  const Thm23Report r = thm23_constants_for_c(mpq_class(1, 2));
  REQUIRE(r.p0.has_value());
  CHECK(*r.p0 == 3);
  REQUIRE(r.p_prime.has_value());
  CHECK(*r.p_prime == 3);
  REQUIRE(r.q0.has_value());
  CHECK(*r.q0 == 81);
  REQUIRE(r.gamma0.has_value());
  CHECK(r.gamma0->certainly_positive());
  CHECK(r.gamma0->cmp_lower(mpq_class(12, 100)) > 0);
  CHECK(r.gamma0->cmp_upper(mpq_class(13, 100)) < 0);
  for (const GChainCheck& gc : r.g_chain) {
    CHECK(gc.g_le_g_half == Trilean::holds);  // c == 1/2: decided exactly
    CHECK(gc.g_half_le_display == Trilean::holds);
  }

  const Thm23Report s = thm23_constants_for_c(mpq_class(9, 10));
  CHECK(*s.p0 == 19);
  CHECK(*s.p_prime == 19);

  CHECK_THROWS_AS(thm23_constants_for_c(mpq_class(1)), std::invalid_argument);
}

TEST_CASE("derived constants per characteristic") {
  // The characteristic-2 case is certifiably broken at its lower endpoint:
  // f(2, 3/2401) - g(2401, 1/2) < 0, so the derived gamma0 is negative and
  // the wide-range statement is vacuous there.  Report it faithfully.
  const Thm23Report r2 = thm23_constants_for_p(2);
  CHECK(*r2.base_p == 2);
  CHECK(*r2.c_low == mpq_class(3, 2401));
  CHECK(*r2.c_high == mpq_class(7, 10));
  CHECK(r2.margin_low->certainly_negative());
  CHECK(r2.margin_high->certainly_positive());
  CHECK(r2.gamma0->certainly_negative());
  for (const GChainCheck& c : r2.g_chain) {
    CHECK(c.g_le_g_half == Trilean::holds);
    CHECK(c.g_half_le_display == Trilean::holds);
  }

  const Thm23Report r3 = thm23_constants_for_p(3);
  CHECK(*r3.c_low == mpq_class(3, 2401));
  CHECK(*r3.c_high == mpq_class(4, 5));
  CHECK(r3.margin_low->certainly_positive());
  CHECK(r3.margin_high->certainly_positive());
  CHECK(r3.gamma0->certainly_positive());

  const Thm23Report r5 = thm23_constants_for_p(5);
  CHECK(*r5.base_p == 5);
  CHECK(*r5.c_low == mpq_class(2, 2401));
  CHECK(*r5.c_high == mpq_class(9, 10));
  CHECK(r5.gamma0->certainly_positive());

  // Characteristics past 7 route through the p = 7 case.
  const Thm23Report r11 = thm23_constants_for_p(11);
  CHECK(*r11.base_p == 7);
  CHECK(*r11.c_high == mpq_class(19, 20));
  CHECK(r11.margin_low->certainly_positive());
  CHECK(r11.margin_high->certainly_positive());
  CHECK(r11.gamma0->certainly_positive());

  CHECK_THROWS_AS(thm23_constants_for_p(4), std::invalid_argument);
}

TEST_CASE("comparison against the older binomial factor") {
  // j = 0: both factors are empty products, so both logs are exactly zero.
  const LiwanReport z = liwan_compare(9, 2, 0);
  REQUIRE(z.difference.has_value());
  CHECK(z.difference->cmp_lower(mpq_class(0)) == 0);
  CHECK(z.difference->cmp_upper(mpq_class(0)) == 0);
  CHECK(!z.difference_infinite);

  // Typical point: the new factor is strictly smaller.
  const LiwanReport r = liwan_compare(81, 3, 20);
  REQUIRE(r.difference.has_value());
  CHECK(r.difference->certainly_positive());

  // p = q: the difference collapses to ln((q1 + j)/q1).
  const LiwanReport id = liwan_compare(7, 2, 3);
  REQUIRE(id.identity_difference.has_value());
  REQUIRE(id.difference.has_value());
  CHECK(certainly_less(*id.difference, *id.identity_difference) != Trilean::holds);
  CHECK(certainly_less(*id.identity_difference, *id.difference) != Trilean::holds);
}

TEST_CASE("figure scan brackets the sign change") {
  const FigureTable t = figure_scan({2}, mpq_class(1, 4));
  REQUIRE(t.rows.size() == 3);  // c = 1/4, 1/2, 3/4
  CHECK(t.rows[0].sign == 1);
  CHECK(t.rows[1].sign == 1);
  CHECK(t.rows[2].sign == -1);
  REQUIRE(t.brackets.size() == 1);
  CHECK(t.brackets[0].p == 2);
  CHECK(t.brackets[0].c_pos == mpq_class(1, 2));
  CHECK(t.brackets[0].c_neg == mpq_class(3, 4));
  CHECK_THROWS_AS(figure_scan({2}, mpq_class(0)), std::invalid_argument);
  CHECK_THROWS_AS(figure_scan({2}, mpq_class(1)), std::invalid_argument);
}
