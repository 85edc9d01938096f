#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <optional>
#include <string>

namespace rsdist {

// Three-valued outcome of an interval comparison or certified check.
enum class Trilean { holds, fails, unknown };

const char* to_string(Trilean t);

inline Trilean trilean_and(Trilean a, Trilean b) {
  if (a == Trilean::fails || b == Trilean::fails) return Trilean::fails;
  if (a == Trilean::unknown || b == Trilean::unknown) return Trilean::unknown;
  return Trilean::holds;
}

inline constexpr mpfr_prec_t kDefaultPrecision = 128;
inline constexpr mpfr_prec_t kMaxPrecision = 512;

// Closed interval [lo, hi] with MPFR endpoints rounded outward, so every
// derived interval encloses the exact real result of the same expression.
class IntervalScalar {
 public:
  IntervalScalar() : IntervalScalar(0, kDefaultPrecision) {}
  explicit IntervalScalar(long v, mpfr_prec_t prec = kDefaultPrecision);
  IntervalScalar(const IntervalScalar& o);
  IntervalScalar(IntervalScalar&& o) noexcept;
  IntervalScalar& operator=(const IntervalScalar& o);
  IntervalScalar& operator=(IntervalScalar&& o) noexcept;
  ~IntervalScalar();

  static IntervalScalar from_rational(const mpq_class& v,
                                      mpfr_prec_t prec = kDefaultPrecision);
  static IntervalScalar from_integer(const mpz_class& v,
                                     mpfr_prec_t prec = kDefaultPrecision);
  static IntervalScalar from_endpoints(const mpq_class& lo, const mpq_class& hi,
                                       mpfr_prec_t prec = kDefaultPrecision);
  static IntervalScalar pi(mpfr_prec_t prec = kDefaultPrecision);

  mpfr_prec_t precision() const { return prec_; }
  const mpfr_t& lower() const { return lo_; }
  const mpfr_t& upper() const { return hi_; }

  bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
  bool contains_zero() const;
  bool certainly_positive() const;  // lo > 0
  bool certainly_negative() const;  // hi < 0

  friend IntervalScalar operator+(const IntervalScalar& a, const IntervalScalar& b);
  friend IntervalScalar operator-(const IntervalScalar& a, const IntervalScalar& b);
  friend IntervalScalar operator*(const IntervalScalar& a, const IntervalScalar& b);
  friend IntervalScalar operator/(const IntervalScalar& a, const IntervalScalar& b);
  IntervalScalar operator-() const;

  friend IntervalScalar abs(const IntervalScalar& a);
  friend IntervalScalar max(const IntervalScalar& a, const IntervalScalar& b);
  friend IntervalScalar sqrt(const IntervalScalar& a);   // needs lo >= 0
  friend IntervalScalar log(const IntervalScalar& a);    // needs lo > 0
  friend IntervalScalar exp(const IntervalScalar& a);
  IntervalScalar pow_int(long e) const;
  // base^expo for positive base, via exp(expo * log(base)).
  friend IntervalScalar pow(const IntervalScalar& base, const IntervalScalar& expo);

  // Certified order relations: holds / fails only when every pair of points
  // from the two intervals agrees; unknown when the intervals overlap.
  friend Trilean certainly_less(const IntervalScalar& a, const IntervalScalar& b);
  friend Trilean certainly_leq(const IntervalScalar& a, const IntervalScalar& b);

  // Exact comparisons of one endpoint against a rational (no rounding).
  int cmp_lower(const mpq_class& v) const;  // sign of (lo - v)
  int cmp_upper(const mpq_class& v) const;  // sign of (hi - v)
  bool contains(const mpq_class& v) const;

  // Certified |this| <= bound for exact rational bound.
  Trilean certainly_within(const mpq_class& bound) const;

  IntervalScalar midpoint() const;  // point interval
  double width_d() const;           // upper estimate of hi - lo

  // Decimal endpoints, outward-rounded, so the printed interval is valid.
  std::string lower_str(int digits = 0) const;
  std::string upper_str(int digits = 0) const;
  std::string to_string(int digits = 0) const;  // "[lo, hi]"

 private:
  void init(mpfr_prec_t prec);
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

// A value that is either exactly rational (with an enclosure kept alongside)
// or known only through an interval enclosure.
class Scalar {
 public:
  Scalar() : exact_(mpq_class(0)), iv_(0, kDefaultPrecision) {}
  static Scalar exact(mpq_class v, mpfr_prec_t prec = kDefaultPrecision);
  static Scalar enclosure(IntervalScalar v);

  bool is_exact() const { return exact_.has_value(); }
  const mpq_class& rational() const;          // requires is_exact()
  const IntervalScalar& interval() const { return iv_; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  // "num/den" (or plain integer) when exact, else "[lo, hi]".
  std::string to_string() const;

 private:
  std::optional<mpq_class> exact_;
  IntervalScalar iv_;
};

// Runs `check` at increasing precisions from `start` until it returns a
// definite verdict or `cap` is exhausted; reports the final verdict and the
// precision that produced it.
struct Resolved {
  Trilean verdict;
  mpfr_prec_t precision_bits;
};

template <typename F>
Resolved resolve_with_precision(F&& check, mpfr_prec_t start = 53,
                                mpfr_prec_t cap = 256) {
  mpfr_prec_t prec = start;
  while (true) {
    Trilean v = check(prec);
    if (v != Trilean::unknown || prec >= cap) return {v, prec};
    mpfr_prec_t next = prec < 128 ? 128 : prec * 2;
    prec = next > cap ? cap : next;
  }
}

}  // namespace rsdist
