#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "rsdist/counting.hpp"
#include "rsdist/distance.hpp"
#include "rsdist/numbers.hpp"

using namespace rsdist;

TEST_CASE("boundary factorization counts over F_3") {
  const Field F = Field::from_order(3);
  const EvalSet D = EvalSet::full(F);
  // d = 2, ell = 1: three (class, point) factorizations land on each class...
  CHECK(wj_table(F, 1, 1, 2, D) == std::vector<mpz_class>{3, 3, 3});
  // ...and each class arises from exactly one 2-subset of F_3.
  CHECK(wj_table(F, 1, 2, 2, D) == std::vector<mpz_class>{1, 1, 1});
  // j = 0 is the trivial factorization.
  CHECK(wj_table(F, 1, 0, 2, D) == std::vector<mpz_class>{1, 1, 1});
}

TEST_CASE("single-class W agrees with the table") {
  const Field F = Field::from_order(4);
  const EvalSet D = EvalSet::full(F);
  for (std::uint32_t j = 0; j <= 3; ++j) {
    const auto table = wj_table(F, 2, j, 3, D);
    REQUIRE(table.size() == 16);
    for (std::uint64_t rank = 0; rank < 16; ++rank)
      CHECK(wj_exact(F, class_from_rank(F, rank, 2), j, 3, D) == table[rank]);
  }
  CHECK_THROWS_AS(wj_table(F, 2, 4, 3, D), std::invalid_argument);
}

TEST_CASE("root-count distribution of x^2 + c over F_3") {
  const Field F = Field::from_order(3);
  const EvalSet D = EvalSet::full(F);
  const DistTable t = dist_table_formula(F, LeadClass{{0}}, 2, D);
  CHECK(t.counts == std::vector<mpz_class>{1, 1, 1});
  CHECK(t.source == DistTable::Source::formula);
  CHECK(t.q == 3);
  CHECK(count_formula(F, LeadClass{{0}}, 2, 2, D) == 1);
}

TEST_CASE("rows sum to the class size") {
  const Field F = Field::from_order(5);
  const EvalSet D = EvalSet::full(F);
  for (const DistTable& t : dist_tables_formula(F, 2, 4, D)) {
    mpz_class sum = 0;
    for (const mpz_class& c : t.counts) sum += c;
    CHECK(sum == 25);  // q^(d - ell)
  }
}

TEST_CASE("formula matches enumeration on a small instance") {
  const Field F = Field::from_order(4);
  const EvalSet D = EvalSet::full(F);
  const auto formula = dist_tables_formula(F, 2, 3, D);
  const auto brute = dist_tables_bruteforce(F, 2, 3, D);
  REQUIRE(formula.size() == brute.size());
  for (std::size_t i = 0; i < formula.size(); ++i) {
    CHECK(formula[i].counts == brute[i].counts);
    CHECK(formula[i].epsilon == brute[i].epsilon);
  }
}

TEST_CASE("formula handles restricted evaluation sets") {
  const Field F = Field::from_order(5);
  const EvalSet D(F, {0, 2, 3});
  const auto formula = dist_tables_formula(F, 1, 3, D);
  const auto brute = dist_tables_bruteforce(F, 1, 3, D);
  for (std::size_t i = 0; i < formula.size(); ++i)
    CHECK(formula[i].counts == brute[i].counts);
}

TEST_CASE("factorial moments of the agreement count") {
  const Field F = Field::from_order(3);
  const EvalSet D = EvalSet::full(F);
  const Poly f(std::vector<Elem>{0, 0, 1});  // x^2, k = 1, ell = 1

  const MomentValue m1 = moments_formula(F, f, 1, D, 1);
  CHECK(m1.value == 1);  // n / q
  CHECK(m1.branch == MomentBranch::trivial);

  const MomentValue m2 = moments_formula(F, f, 1, D, 2);
  CHECK(m2.value == mpq_class(2, 3));  // q^-k m! W_m
  CHECK(m2.branch == MomentBranch::boundary);

  const MomentValue m3 = moments_formula(F, f, 1, D, 3);
  CHECK(m3.value == 0);  // m > k + ell
  CHECK(m3.branch == MomentBranch::zero);

  CHECK(std::string(to_string(MomentBranch::trivial)) == "trivial");
  CHECK(std::string(to_string(MomentBranch::boundary)) == "boundary");
  CHECK(std::string(to_string(MomentBranch::zero)) == "zero");
}

TEST_CASE("moment formula matches enumeration") {
  const Field F = Field::from_order(5);
  const EvalSet D = EvalSet::full(F);
  const Poly f(std::vector<Elem>{1, 2, 0, 1});  // monic cubic, k = 2
  for (std::uint32_t m = 1; m <= 5; ++m)
    CHECK(moments_formula(F, f, 2, D, m).value == moments_bruteforce(F, f, 2, D, m));

  const EvalSet S(F, {0, 1, 2, 4});
  const Poly g(std::vector<Elem>{3, 0, 1});  // k = 1 on a 4-point set
  CHECK(moments_formula(F, g, 1, S, 1).value == mpq_class(4, 5));
  for (std::uint32_t m = 1; m <= 4; ++m)
    CHECK(moments_formula(F, g, 1, S, m).value == moments_bruteforce(F, g, 1, S, m));
}

TEST_CASE("moment formula validates its polynomial") {
  const Field F = Field::from_order(5);
  const EvalSet D = EvalSet::full(F);
  // deg f must exceed k and f must be monic.
  CHECK_THROWS_AS(moments_formula(F, Poly(std::vector<Elem>{0, 0, 1}), 2, D, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(moments_formula(F, Poly(std::vector<Elem>{0, 0, 2}), 1, D, 1),
                  std::invalid_argument);
}

TEST_CASE("counting respects the budget") {
  const Field F = Field::from_order(9);
  const EvalSet D = EvalSet::full(F);
  CHECK_THROWS_AS(dist_tables_bruteforce(F, 1, 6, D, Budget(10)), BudgetError);
  try {
    dist_tables_bruteforce(F, 1, 6, D, Budget(10));
  } catch (const BudgetError& e) {
    CHECK(e.limit() == 10);
    CHECK(e.estimate() > 10);
  }
}
