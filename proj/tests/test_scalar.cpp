#include <doctest.h>

#include <stdexcept>

#include "rsdist/scalar.hpp"

using namespace rsdist;

TEST_CASE("intervals enclose rational inputs and arithmetic results") {
  const IntervalScalar third = IntervalScalar::from_rational(mpq_class(1, 3));
  CHECK(third.contains(mpq_class(1, 3)));
  CHECK(third.certainly_positive());
  CHECK(third.width_d() < 1e-30);

  const IntervalScalar sixth = IntervalScalar::from_rational(mpq_class(1, 6));
  CHECK((third + sixth).contains(mpq_class(1, 2)));
  CHECK((third - sixth).contains(mpq_class(1, 6)));
  CHECK((third * IntervalScalar(3)).contains(1));
  CHECK((third / sixth).contains(2));
  CHECK((-third).certainly_negative());
  CHECK(abs(-third).contains(mpq_class(1, 3)));
}

TEST_CASE("transcendental enclosures") {
  const IntervalScalar two(2);
  const IntervalScalar r = sqrt(two);
  CHECK((r * r).contains(2));
  const IntervalScalar x = IntervalScalar::from_rational(mpq_class(7, 5));
  CHECK(exp(log(x)).contains(mpq_class(7, 5)));
  CHECK(IntervalScalar::pi().cmp_lower(mpq_class("314159265358979/100000000000000")) > 0);
  CHECK(IntervalScalar::pi().cmp_upper(mpq_class("314159265358980/100000000000000")) < 0);
  CHECK(!IntervalScalar::pi().contains(mpq_class(22, 7)));
  CHECK(x.pow_int(-2).contains(mpq_class(25, 49)));
  CHECK(pow(two, IntervalScalar::from_rational(mpq_class(1, 2))).contains_zero() == false);
  CHECK_THROWS_AS(log(IntervalScalar(0)), std::domain_error);
  CHECK_THROWS_AS(sqrt(IntervalScalar(-1)), std::domain_error);
  CHECK_THROWS_AS(two / IntervalScalar(0), std::domain_error);
}

TEST_CASE("certified comparisons are three-valued") {
  const IntervalScalar a = IntervalScalar::from_endpoints(mpq_class(0), mpq_class(1));
  const IntervalScalar b = IntervalScalar::from_endpoints(mpq_class(2), mpq_class(3));
  const IntervalScalar c = IntervalScalar::from_endpoints(mpq_class(1, 2), mpq_class(5, 2));
  CHECK(certainly_less(a, b) == Trilean::holds);
  CHECK(certainly_less(b, a) == Trilean::fails);
  CHECK(certainly_less(a, c) == Trilean::unknown);
  CHECK(certainly_leq(IntervalScalar(1), IntervalScalar::from_endpoints(mpq_class(1), mpq_class(2))) == Trilean::holds);
  CHECK(max(a, b).cmp_lower(mpq_class(2)) == 0);
  CHECK_THROWS_AS(IntervalScalar::from_endpoints(mpq_class(1), mpq_class(0)),
                  std::invalid_argument);
}

TEST_CASE("endpoint comparisons against rationals are exact") {
  const IntervalScalar v = IntervalScalar::from_endpoints(mpq_class(1, 4), mpq_class(1, 2));
  CHECK(v.cmp_lower(mpq_class(1, 4)) == 0);
  CHECK(v.cmp_upper(mpq_class(1, 2)) == 0);
  CHECK(v.cmp_lower(mpq_class(1, 8)) > 0);
  CHECK(v.cmp_upper(mpq_class(1)) < 0);
  CHECK(v.contains(mpq_class(2, 5)));
  CHECK(!v.contains(mpq_class(3, 5)));
  CHECK(v.certainly_within(mpq_class(1, 2)) == Trilean::holds);
  CHECK(v.certainly_within(mpq_class(1, 8)) == Trilean::fails);
  CHECK(v.certainly_within(mpq_class(1, 3)) == Trilean::unknown);
  CHECK(!v.contains_zero());
  CHECK(IntervalScalar(0).contains_zero());
  CHECK(v.midpoint().is_point());
}

TEST_CASE("interval strings round outward") {
  const IntervalScalar third = IntervalScalar::from_rational(mpq_class(1, 3));
  const std::string lo = third.lower_str(6);
  const std::string hi = third.upper_str(6);
  CHECK(std::stod(lo) <= 1.0 / 3.0);
  CHECK(std::stod(hi) >= 1.0 / 3.0);
  CHECK(third.to_string(6) == "[" + lo + ", " + hi + "]");
}

TEST_CASE("scalar values stay exact under rational arithmetic") {
  const Scalar a = Scalar::exact(mpq_class(1, 3));
  const Scalar b = Scalar::exact(mpq_class(1, 6));
  const Scalar s = a + b;
  REQUIRE(s.is_exact());
  CHECK(s.rational() == mpq_class(1, 2));
  CHECK((a * b).rational() == mpq_class(1, 18));
  CHECK((a - b).rational() == mpq_class(1, 6));
  CHECK((a / b).rational() == 2);
  CHECK((-a).rational() == mpq_class(-1, 3));
  CHECK(s.to_string() == "1/2");
  CHECK(s.interval().contains(mpq_class(1, 2)));

  const Scalar e = Scalar::enclosure(sqrt(IntervalScalar(2)));
  CHECK(!e.is_exact());
  CHECK(!(a + e).is_exact());
  CHECK((a + e).interval().contains_zero() == false);
  CHECK_THROWS_AS(e.rational(), std::logic_error);
  CHECK_THROWS_AS(a / Scalar::exact(mpq_class(0)), std::domain_error);
}

TEST_CASE("precision escalation stops at the first definite verdict") {
  int calls = 0;
  const Resolved r = resolve_with_precision(
      [&](mpfr_prec_t prec) {
        ++calls;
        return prec >= 256 ? Trilean::holds : Trilean::unknown;
      },
      53, 512);
  CHECK(r.verdict == Trilean::holds);
  CHECK(r.precision_bits == 256);
  CHECK(calls == 3);  // 53, 128, 256

  const Resolved stuck = resolve_with_precision(
      [](mpfr_prec_t) { return Trilean::unknown; }, 53, 256);
  CHECK(stuck.verdict == Trilean::unknown);
  CHECK(stuck.precision_bits == 256);
}

TEST_CASE("trilean names") {
  CHECK(std::string(to_string(Trilean::holds)) == "holds");
  CHECK(std::string(to_string(Trilean::fails)) == "fails");
  CHECK(std::string(to_string(Trilean::unknown)) == "unknown");
  CHECK(trilean_and(Trilean::holds, Trilean::unknown) == Trilean::unknown);
  CHECK(trilean_and(Trilean::unknown, Trilean::fails) == Trilean::fails);
  CHECK(trilean_and(Trilean::holds, Trilean::holds) == Trilean::holds);
}
