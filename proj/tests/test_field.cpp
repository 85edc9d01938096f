#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "rsdist/field.hpp"
#include "rsdist/numbers.hpp"

using namespace rsdist;

TEST_CASE("prime fields use modular arithmetic") {
  const Field F = Field::from_order(7);
  CHECK(F.p() == 7);
  CHECK(F.s() == 1);
  CHECK(F.modulus().empty());
  CHECK(F.add(5, 4) == 2);
  CHECK(F.mul(3, 5) == 1);
  CHECK(F.neg(3) == 4);
  CHECK(F.inv(3) == 5);
  CHECK(F.pow(3, 6) == 1);
}

TEST_CASE("extension moduli are the smallest irreducibles") {
  // Low-to-high coefficient comparison picks x^2+x+1, x^3+x+1, x^2+1.
  CHECK(Field::from_order(4).modulus() == std::vector<Elem>{1, 1, 1});
  CHECK(Field::from_order(8).modulus() == std::vector<Elem>{1, 1, 0, 1});
  CHECK(Field::from_order(9).modulus() == std::vector<Elem>{1, 0, 1});
}

TEST_CASE("field axioms hold on sampled triples") {
  for (std::uint64_t q : {4, 8, 9, 25, 27, 49}) {
    const Field F = Field::from_order(q);
    DetRng rng(0xF1E1Dull + q);
    for (int trial = 0; trial < 400; ++trial) {
      const Elem a = Elem(rng.below(q));
      const Elem b = Elem(rng.below(q));
      const Elem c = Elem(rng.below(q));
      CHECK(F.add(a, F.add(b, c)) == F.add(F.add(a, b), c));
      CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
      CHECK(F.add(a, b) == F.add(b, a));
      CHECK(F.mul(a, b) == F.mul(b, a));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.add(a, F.neg(a)) == 0);
      CHECK(F.sub(a, b) == F.add(a, F.neg(b)));
      if (b != 0) CHECK(F.mul(F.div(a, b), b) == a);
      // Frobenius: x -> x^p is additive in characteristic p.
      CHECK(F.pow(F.add(a, b), F.p()) ==
            F.add(F.pow(a, F.p()), F.pow(b, F.p())));
    }
    for (Elem a = 1; a < F.q(); ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  }
}

TEST_CASE("generator has full multiplicative order") {
  for (std::uint64_t q : {5, 8, 9, 16, 27}) {
    const Field F = Field::from_order(q);
    const Elem g = F.generator();
    CHECK(g != 0);
    CHECK(F.pow(g, q - 1) == 1);
    for (std::uint64_t m = 1; m < q - 1; ++m)
      if ((q - 1) % m == 0) CHECK(F.pow(g, m) != 1);
    // Antilog table starts at g^0 = 1 and enumerates all nonzero elements.
    REQUIRE(F.has_log_tables());
    CHECK(F.antilog_table()[0] == 1);
    std::vector<bool> seen(q, false);
    for (std::uint64_t e = 0; e + 1 < q; ++e) {
      const Elem v = F.antilog_table()[e];
      CHECK(!seen[v]);
      seen[v] = true;
      CHECK(F.log_table()[v] == e);
    }
  }
}

TEST_CASE("digit encoding round-trips") {
  const Field F = Field::from_order(27);
  for (Elem a = 0; a < 27; ++a) {
    const auto digits = F.to_digits(a);
    REQUIRE(digits.size() == 3);
    CHECK(F.from_digits(digits) == a);
  }
  CHECK_THROWS_AS(F.from_digits({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(F.from_digits({3, 0, 0}), std::invalid_argument);
}

TEST_CASE("construction is deterministic") {
  const Field a = Field::from_order(64);
  const Field b = Field::from_order(64);
  CHECK(a.modulus() == b.modulus());
  CHECK(a.generator() == b.generator());
  CHECK(a.log_table() == b.log_table());
  CHECK(a.antilog_table() == b.antilog_table());
}

TEST_CASE("invalid orders are rejected") {
  CHECK_THROWS_AS(Field::from_order(6), std::invalid_argument);
  CHECK_THROWS_AS(Field::from_order(1), std::invalid_argument);
  CHECK_THROWS_AS(Field::from_order(0), std::invalid_argument);
  CHECK_THROWS_AS(Field::build(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(Field::from_order(7).inv(0), std::domain_error);
}

TEST_CASE("prime power decomposition") {
  auto pp = prime_power_decompose(1024);
  REQUIRE(pp.has_value());
  CHECK(pp->p == 2);
  CHECK(pp->s == 10);
  CHECK(!prime_power_decompose(12).has_value());
  CHECK(!prime_power_decompose(1).has_value());
  CHECK(is_prime(2401 / 343));
  CHECK(!is_prime(2401));
}
