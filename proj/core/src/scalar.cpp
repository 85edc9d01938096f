#include "rsdist/scalar.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace rsdist {

const char* to_string(Trilean t) {
  switch (t) {
    case Trilean::holds: return "holds";
    case Trilean::fails: return "fails";
    default: return "unknown";
  }
}

void IntervalScalar::init(mpfr_prec_t prec) {
  prec_ = prec;
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
}

IntervalScalar::IntervalScalar(long v, mpfr_prec_t prec) {
  init(prec);
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

IntervalScalar::IntervalScalar(const IntervalScalar& o) {
  init(o.prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

IntervalScalar::IntervalScalar(IntervalScalar&& o) noexcept {
  prec_ = o.prec_;
  lo_[0] = o.lo_[0];
  hi_[0] = o.hi_[0];
  // Leave the source valid for its destructor.
  mpfr_init2(o.lo_, MPFR_PREC_MIN);
  mpfr_init2(o.hi_, MPFR_PREC_MIN);
}

IntervalScalar& IntervalScalar::operator=(const IntervalScalar& o) {
  if (this == &o) return *this;
  if (prec_ != o.prec_) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
  }
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

IntervalScalar& IntervalScalar::operator=(IntervalScalar&& o) noexcept {
  if (this == &o) return *this;
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  std::swap(prec_, o.prec_);
  return *this;
}

IntervalScalar::~IntervalScalar() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

IntervalScalar IntervalScalar::from_rational(const mpq_class& v, mpfr_prec_t prec) {
  IntervalScalar r(0, prec);
  mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

IntervalScalar IntervalScalar::from_integer(const mpz_class& v, mpfr_prec_t prec) {
  IntervalScalar r(0, prec);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

IntervalScalar IntervalScalar::from_endpoints(const mpq_class& lo,
                                              const mpq_class& hi,
                                              mpfr_prec_t prec) {
  if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
  IntervalScalar r(0, prec);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

IntervalScalar IntervalScalar::pi(mpfr_prec_t prec) {
  IntervalScalar r(0, prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

bool IntervalScalar::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool IntervalScalar::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool IntervalScalar::certainly_negative() const { return mpfr_sgn(hi_) < 0; }

IntervalScalar operator+(const IntervalScalar& a, const IntervalScalar& b) {
  IntervalScalar r(0, std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

IntervalScalar operator-(const IntervalScalar& a, const IntervalScalar& b) {
  IntervalScalar r(0, std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

IntervalScalar operator*(const IntervalScalar& a, const IntervalScalar& b) {
  IntervalScalar r(0, std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  // Lower endpoint: minimum of the four products rounded down.
  mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  // Upper endpoint: maximum of the four products rounded up.
  mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

IntervalScalar operator/(const IntervalScalar& a, const IntervalScalar& b) {
  if (b.contains_zero())
    throw std::domain_error("interval division by interval containing zero");
  IntervalScalar r(0, std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

IntervalScalar IntervalScalar::operator-() const {
  IntervalScalar r(0, prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

IntervalScalar abs(const IntervalScalar& a) {
  IntervalScalar r(0, a.prec_);
  if (mpfr_sgn(a.lo_) >= 0) return a;
  if (mpfr_sgn(a.hi_) <= 0) return -a;
  // Straddles zero: [0, max(-lo, hi)].
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

IntervalScalar max(const IntervalScalar& a, const IntervalScalar& b) {
  IntervalScalar r(0, std::max(a.prec_, b.prec_));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

IntervalScalar sqrt(const IntervalScalar& a) {
  if (mpfr_sgn(a.lo_) < 0)
    throw std::domain_error("interval sqrt of possibly negative value");
  IntervalScalar r(0, a.prec_);
  mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

IntervalScalar log(const IntervalScalar& a) {
  if (mpfr_sgn(a.lo_) <= 0)
    throw std::domain_error("interval log of possibly nonpositive value");
  IntervalScalar r(0, a.prec_);
  mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

IntervalScalar exp(const IntervalScalar& a) {
  IntervalScalar r(0, a.prec_);
  mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

IntervalScalar IntervalScalar::pow_int(long e) const {
  if (e < 0) return IntervalScalar(1, prec_) / pow_int(-e);
  IntervalScalar acc(1, prec_);
  IntervalScalar base = *this;
  unsigned long n = (unsigned long)e;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

IntervalScalar pow(const IntervalScalar& base, const IntervalScalar& expo) {
  return exp(expo * log(base));
}

Trilean certainly_less(const IntervalScalar& a, const IntervalScalar& b) {
  if (mpfr_less_p(a.hi_, b.lo_)) return Trilean::holds;
  if (mpfr_greaterequal_p(a.lo_, b.hi_)) return Trilean::fails;
  return Trilean::unknown;
}

Trilean certainly_leq(const IntervalScalar& a, const IntervalScalar& b) {
  if (mpfr_lessequal_p(a.hi_, b.lo_)) return Trilean::holds;
  if (mpfr_greater_p(a.lo_, b.hi_)) return Trilean::fails;
  return Trilean::unknown;
}

int IntervalScalar::cmp_lower(const mpq_class& v) const {
  return mpfr_cmp_q(lo_, v.get_mpq_t());
}

int IntervalScalar::cmp_upper(const mpq_class& v) const {
  return mpfr_cmp_q(hi_, v.get_mpq_t());
}

bool IntervalScalar::contains(const mpq_class& v) const {
  return cmp_lower(v) <= 0 && cmp_upper(v) >= 0;
}

Trilean IntervalScalar::certainly_within(const mpq_class& bound) const {
  mpq_class neg = -bound;
  if (cmp_upper(bound) <= 0 && cmp_lower(neg) >= 0) return Trilean::holds;
  if (cmp_lower(bound) > 0 || cmp_upper(neg) < 0) return Trilean::fails;
  return Trilean::unknown;
}

IntervalScalar IntervalScalar::midpoint() const {
  IntervalScalar r(0, prec_);
  mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
  mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
  return r;
}

double IntervalScalar::width_d() const {
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_sub(t, hi_, lo_, MPFR_RNDU);
  double w = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return w;
}

namespace {

std::string format_endpoint(const mpfr_t v, mpfr_rnd_t rnd, int digits,
                            mpfr_prec_t prec) {
  if (digits <= 0) digits = int(double(prec) * 0.302) + 2;
  char* buf = nullptr;
  // Endpoints are printed with directed rounding so the decimal interval
  // still encloses the value.
  int n = mpfr_asprintf(&buf, "%.*R*e", digits, rnd, v);
  if (n < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace

std::string IntervalScalar::lower_str(int digits) const {
  return format_endpoint(lo_, MPFR_RNDD, digits, prec_);
}

std::string IntervalScalar::upper_str(int digits) const {
  return format_endpoint(hi_, MPFR_RNDU, digits, prec_);
}

std::string IntervalScalar::to_string(int digits) const {
  return "[" + lower_str(digits) + ", " + upper_str(digits) + "]";
}

Scalar Scalar::exact(mpq_class v, mpfr_prec_t prec) {
  Scalar s;
  s.iv_ = IntervalScalar::from_rational(v, prec);
  s.exact_ = std::move(v);
  return s;
}

Scalar Scalar::enclosure(IntervalScalar v) {
  Scalar s;
  s.exact_.reset();
  s.iv_ = std::move(v);
  return s;
}

const mpq_class& Scalar::rational() const {
  if (!exact_) throw std::logic_error("Scalar::rational on enclosure value");
  return *exact_;
}

namespace {

mpfr_prec_t scalar_prec(const Scalar& a, const Scalar& b) {
  return std::max(a.interval().precision(), b.interval().precision());
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact())
    return Scalar::exact(a.rational() + b.rational(), scalar_prec(a, b));
  return Scalar::enclosure(a.interval() + b.interval());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact())
    return Scalar::exact(a.rational() - b.rational(), scalar_prec(a, b));
  return Scalar::enclosure(a.interval() - b.interval());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact())
    return Scalar::exact(a.rational() * b.rational(), scalar_prec(a, b));
  return Scalar::enclosure(a.interval() * b.interval());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    if (b.rational() == 0) throw std::domain_error("division by exact zero");
    return Scalar::exact(mpq_class(a.rational() / b.rational()), scalar_prec(a, b));
  }
  return Scalar::enclosure(a.interval() / b.interval());
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar::exact(mpq_class(-rational()), iv_.precision());
  return Scalar::enclosure(-iv_);
}

std::string Scalar::to_string() const {
  if (is_exact()) {
    mpq_class c = rational();
    c.canonicalize();
    return c.get_str();
  }
  return iv_.to_string();
}

}  // namespace rsdist
