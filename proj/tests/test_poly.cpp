#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "rsdist/numbers.hpp"
#include "rsdist/poly.hpp"

using namespace rsdist;

TEST_CASE("polynomial storage trims trailing zeros") {
  CHECK(Poly(std::vector<Elem>{1, 2, 0, 0}).degree() == 1);
  CHECK(Poly(std::vector<Elem>{0, 0}).is_zero());
  CHECK(Poly::zero().degree() == Poly::kZeroDegree);
  CHECK(Poly::constant(3).degree() == 0);
  const Poly m = Poly::monomial(4);
  CHECK(m.degree() == 4);
  CHECK(m.is_monic());
  CHECK(m.coeff(4) == 1);
  CHECK(m.coeff(2) == 0);
  CHECK(m.coeff(7) == 0);
}

TEST_CASE("ring operations agree with pointwise evaluation") {
  const Field F = Field::from_order(8);
  const EvalSet D = EvalSet::full(F);
  DetRng rng(0x9019ull);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Elem> ca(1 + rng.below(5)), cb(1 + rng.below(5));
    for (Elem& c : ca) c = Elem(rng.below(8));
    for (Elem& c : cb) c = Elem(rng.below(8));
    const Poly a(ca), b(cb);
    const Poly sum = poly_add(F, a, b);
    const Poly diff = poly_sub(F, a, b);
    const Poly prod = poly_mul(F, a, b);
    for (std::size_t i = 0; i < D.size(); ++i) {
      const Elem x = D[i];
      CHECK(poly_eval(F, sum, x) == F.add(poly_eval(F, a, x), poly_eval(F, b, x)));
      CHECK(poly_eval(F, diff, x) == F.sub(poly_eval(F, a, x), poly_eval(F, b, x)));
      CHECK(poly_eval(F, prod, x) == F.mul(poly_eval(F, a, x), poly_eval(F, b, x)));
    }
    if (!a.is_zero() && !b.is_zero())
      CHECK(prod.degree() == a.degree() + b.degree());
  }
}

TEST_CASE("char-2 square") {
  const Field F = Field::from_order(4);
  const Poly xp1(std::vector<Elem>{1, 1});
  CHECK(poly_mul(F, xp1, xp1) == Poly(std::vector<Elem>{1, 0, 1}));
}

TEST_CASE("interpolation inverts evaluation") {
  const Field F = Field::from_order(9);
  const EvalSet D = EvalSet::full(F);
  DetRng rng(0x1A7Eull);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Elem> word(D.size());
    for (Elem& w : word) w = Elem(rng.below(9));
    const Poly f = lagrange_poly(F, word, D);
    CHECK(f.degree() < int(D.size()));
    CHECK(eval_word(F, f, D) == word);
  }
  CHECK(lagrange_poly(F, std::vector<Elem>(9, 0), D).is_zero());

  // Subsets interpolate too, and low-degree data comes back exactly.
  const EvalSet S(F, {0, 1, 5, 7});
  const Poly f(std::vector<Elem>{2, 0, 1});
  CHECK(lagrange_poly(F, eval_word(F, f, S), S) == f);
}

TEST_CASE("distinct root counting ignores multiplicity") {
  const Field F = Field::from_order(5);
  const EvalSet D = EvalSet::full(F);
  // x(x-1) = x^2 + 4x
  CHECK(distinct_roots_in(F, Poly(std::vector<Elem>{0, 4, 1}), D) == 2);
  // x^2 has the single distinct root 0
  CHECK(distinct_roots_in(F, Poly(std::vector<Elem>{0, 0, 1}), D) == 1);
  // x^2 + 2 has no roots mod 5
  CHECK(distinct_roots_in(F, Poly(std::vector<Elem>{2, 0, 1}), D) == 0);
  CHECK(distinct_roots_in(F, Poly::constant(3), D) == 0);
  CHECK_THROWS_AS(distinct_roots_in(F, Poly::zero(), D), std::invalid_argument);
  // Restricting D restricts the roots counted.
  const EvalSet S(F, {2, 3});
  CHECK(distinct_roots_in(F, Poly(std::vector<Elem>{0, 4, 1}), S) == 0);
}

TEST_CASE("evaluation sets validate their points") {
  const Field F = Field::from_order(5);
  CHECK(EvalSet::full(F).size() == 5);
  CHECK(EvalSet::full(F)[3] == 3);
  const EvalSet S(F, {4, 1});
  CHECK(S.size() == 2);
  CHECK(S[0] == 4);  // order preserved
  CHECK(S.contains(1));
  CHECK(!S.contains(0));
  CHECK_THROWS_AS(EvalSet(F, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(EvalSet(F, {5}), std::invalid_argument);
}
