#include "rsdist/aj.hpp"

#include <stdexcept>

#include "rsdist/numbers.hpp"

namespace rsdist {

Q1Gamma q1_gamma(std::uint64_t q, std::uint32_t ell, mpfr_prec_t prec) {
  if (ell == 0) throw std::invalid_argument("q1_gamma: ell must be positive");
  if (q < 2) throw std::invalid_argument("q1_gamma: q must be at least 2");
  const std::uint64_t e = ell - 1;
  // min(q, e sqrt(q)) = q exactly when e^2 >= q (both sides nonnegative).
  if (e * e >= q)
    return {Scalar::exact(mpq_class(long(q)), prec), Scalar::exact(1, prec)};
  if (e == 0) return {Scalar::exact(0, prec), Scalar::exact(0, prec)};
  mpz_class qz{long(q)};
  if (mpz_perfect_square_p(qz.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), qz.get_mpz_t());
    mpq_class q1(mpz_class(root * long(e)));
    mpq_class gamma = q1 / qz;
    gamma.canonicalize();
    return {Scalar::exact(q1, prec), Scalar::exact(gamma, prec)};
  }
  IntervalScalar sq = sqrt(IntervalScalar(long(q), prec));
  IntervalScalar q1 = IntervalScalar(long(e), prec) * sq;
  IntervalScalar gamma = q1 / IntervalScalar(long(q), prec);
  return {Scalar::enclosure(q1), Scalar::enclosure(gamma)};
}

mpq_class gen_binom(const mpq_class& a, std::uint64_t k) {
  mpq_class acc = 1;
  for (std::uint64_t i = 0; i < k; ++i) acc *= a - long(i);
  acc /= mpq_class(factorial(k));
  acc.canonicalize();
  return acc;
}

IntervalScalar gen_binom(const IntervalScalar& a, std::uint64_t k) {
  IntervalScalar acc(1, a.precision());
  for (std::uint64_t i = 0; i < k; ++i)
    acc = acc * (a - IntervalScalar(long(i), a.precision()));
  return acc / IntervalScalar::from_integer(factorial(k), a.precision());
}

Scalar gen_binom(const Scalar& a, std::uint64_t k) {
  if (a.is_exact())
    return Scalar::exact(gen_binom(a.rational(), k), a.interval().precision());
  return Scalar::enclosure(gen_binom(a.interval(), k));
}

AjParams AjParams::for_field(std::uint64_t q, std::uint32_t ell, std::uint64_t j,
                             mpfr_prec_t prec) {
  auto pp = prime_power_decompose(q);
  if (!pp) throw std::invalid_argument("AjParams: q must be a prime power");
  Q1Gamma qg = q1_gamma(q, ell, prec);
  return AjParams{j, pp->p, Scalar::exact(mpq_class(long(q)), prec), qg.gamma};
}

namespace {

// One cycle type of S_j: the rational weight (number of permutations with
// that type divided by j!) together with the two cycle counts.
struct CycleType {
  mpq_class coeff;
  std::uint32_t l;        // total cycles
  std::uint32_t l_prime;  // cycles of length not divisible by p
};

void cycle_types_rec(std::uint64_t remaining, std::uint64_t max_part,
                     std::uint64_t p, mpq_class coeff, std::uint32_t l,
                     std::uint32_t l_prime, std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.push_back({coeff, l, l_prime});
    return;
  }
  for (std::uint64_t part = std::min(remaining, max_part); part >= 1; --part) {
    // Take m >= 1 copies of `part`; weight contribution 1 / (part^m * m!).
    mpq_class c = coeff;
    for (std::uint64_t m = 1; m * part <= remaining; ++m) {
      c /= long(part);
      c /= long(m);
      std::uint32_t extra = std::uint32_t(m);
      std::uint32_t extra_prime = (part % p != 0) ? extra : 0;
      cycle_types_rec(remaining - m * part, part - 1, p, c, l + extra,
                      l_prime + extra_prime, out);
    }
  }
}

std::vector<CycleType> cycle_types(std::uint64_t j, std::uint64_t p) {
  if (j > kAjPermutationMaxJ)
    throw std::invalid_argument("aj_permutation: j exceeds factorial cap");
  std::vector<CycleType> out;
  cycle_types_rec(j, j, p, mpq_class(1), 0, 0, out);
  return out;
}

}  // namespace

mpq_class aj_permutation(std::uint64_t j, std::uint64_t p, const mpq_class& u,
                         const mpq_class& w) {
  std::vector<mpq_class> upow(j + 1), wpow(j + 1);
  upow[0] = 1;
  wpow[0] = 1;
  for (std::uint64_t i = 1; i <= j; ++i) {
    upow[i] = upow[i - 1] * u;
    wpow[i] = wpow[i - 1] * w;
  }
  mpq_class acc = 0;
  for (const CycleType& t : cycle_types(j, p))
    acc += t.coeff * upow[t.l] * wpow[t.l_prime];
  acc.canonicalize();
  return acc;
}

IntervalScalar aj_permutation(std::uint64_t j, std::uint64_t p,
                              const IntervalScalar& u, const IntervalScalar& w) {
  mpfr_prec_t prec = std::max(u.precision(), w.precision());
  std::vector<IntervalScalar> upow(j + 1, IntervalScalar(1, prec));
  std::vector<IntervalScalar> wpow(j + 1, IntervalScalar(1, prec));
  for (std::uint64_t i = 1; i <= j; ++i) {
    upow[i] = upow[i - 1] * u;
    wpow[i] = wpow[i - 1] * w;
  }
  IntervalScalar acc(0, prec);
  for (const CycleType& t : cycle_types(j, p))
    acc = acc + IntervalScalar::from_rational(t.coeff, prec) * upow[t.l] *
                    wpow[t.l_prime];
  return acc;
}

namespace {

// Shared series computation: bn[n] = [z^n](1-z)^(-uw), cn[i] = [z^i]
// (1-z)^(-v) with v = (u - uw)/p, then A_m = sum_{ip <= m} cn[i] bn[m-ip].
template <typename S, typename FromLong>
std::vector<S> aj_series_all_impl(std::uint64_t j, std::uint64_t p, const S& u,
                                  const S& w, const S& one,
                                  const FromLong& from_long) {
  S uw = u * w;
  S v = (u - uw) / from_long(long(p));
  std::vector<S> bn(j + 1, one), cn(j / p + 1, one);
  for (std::uint64_t n = 1; n <= j; ++n)
    bn[n] = bn[n - 1] * (uw + from_long(long(n) - 1)) / from_long(long(n));
  for (std::uint64_t i = 1; i <= j / p; ++i)
    cn[i] = cn[i - 1] * (v + from_long(long(i) - 1)) / from_long(long(i));
  std::vector<S> out(j + 1, one);
  for (std::uint64_t m = 0; m <= j; ++m) {
    S acc = bn[m];
    for (std::uint64_t i = 1; i * p <= m; ++i) acc = acc + cn[i] * bn[m - i * p];
    out[m] = acc;
  }
  return out;
}

}  // namespace

std::vector<mpq_class> aj_series_all(std::uint64_t j, std::uint64_t p,
                                     const mpq_class& u, const mpq_class& w) {
  auto from_long = [](long v) { return mpq_class(v); };
  auto out = aj_series_all_impl<mpq_class>(j, p, u, w, mpq_class(1), from_long);
  for (mpq_class& x : out) x.canonicalize();
  return out;
}

std::vector<IntervalScalar> aj_series_all(std::uint64_t j, std::uint64_t p,
                                          const IntervalScalar& u,
                                          const IntervalScalar& w) {
  mpfr_prec_t prec = std::max(u.precision(), w.precision());
  auto from_long = [prec](long v) { return IntervalScalar(v, prec); };
  return aj_series_all_impl<IntervalScalar>(j, p, u, w, IntervalScalar(1, prec),
                                            from_long);
}

mpq_class aj_series(std::uint64_t j, std::uint64_t p, const mpq_class& u,
                    const mpq_class& w) {
  return aj_series_all(j, p, u, w).back();
}

IntervalScalar aj_series(std::uint64_t j, std::uint64_t p,
                         const IntervalScalar& u, const IntervalScalar& w) {
  return aj_series_all(j, p, u, w).back();
}

mpq_class aj_binsum(std::uint64_t j, std::uint64_t p, const mpq_class& u,
                    const mpq_class& w) {
  mpq_class uw = u * w;
  mpq_class v = (u - uw) / long(p);
  mpq_class acc = 0;
  for (std::uint64_t i = 0; i * p <= j; ++i) {
    std::uint64_t n = j - i * p;
    acc += gen_binom(mpq_class(uw + long(n) - 1), n) *
           gen_binom(mpq_class(v + long(i) - 1), i);
  }
  acc.canonicalize();
  return acc;
}

IntervalScalar aj_binsum(std::uint64_t j, std::uint64_t p,
                         const IntervalScalar& u, const IntervalScalar& w) {
  mpfr_prec_t prec = std::max(u.precision(), w.precision());
  IntervalScalar uw = u * w;
  IntervalScalar v = (u - uw) / IntervalScalar(long(p), prec);
  IntervalScalar acc(0, prec);
  IntervalScalar one(1, prec);
  for (std::uint64_t i = 0; i * p <= j; ++i) {
    std::uint64_t n = j - i * p;
    acc = acc + gen_binom(uw + IntervalScalar(long(n), prec) - one, n) *
                    gen_binom(v + IntervalScalar(long(i), prec) - one, i);
  }
  return acc;
}

namespace {

template <typename Fn>
Scalar dispatch_aj(const AjParams& params, const Fn& fn) {
  if (params.u.is_exact() && params.w.is_exact()) {
    mpfr_prec_t prec = std::max(params.u.interval().precision(),
                                params.w.interval().precision());
    return Scalar::exact(
        fn(params.j, params.p, params.u.rational(), params.w.rational()), prec);
  }
  return Scalar::enclosure(
      fn(params.j, params.p, params.u.interval(), params.w.interval()));
}

}  // namespace

Scalar aj_permutation(const AjParams& params) {
  return dispatch_aj(params, [](std::uint64_t j, std::uint64_t p, const auto& u,
                                const auto& w) { return aj_permutation(j, p, u, w); });
}

Scalar aj_series(const AjParams& params) {
  return dispatch_aj(params, [](std::uint64_t j, std::uint64_t p, const auto& u,
                                const auto& w) { return aj_series(j, p, u, w); });
}

Scalar aj_binsum(const AjParams& params) {
  return dispatch_aj(params, [](std::uint64_t j, std::uint64_t p, const auto& u,
                                const auto& w) { return aj_binsum(j, p, u, w); });
}

LogValue log_gen_binom(const Scalar& a, std::uint64_t k, mpfr_prec_t prec) {
  IntervalScalar acc(0, prec);
  if (a.is_exact()) {
    const mpq_class& av = a.rational();
    for (std::uint64_t i = 0; i < k; ++i) {
      mpq_class factor = av - long(i);
      if (factor == 0) return {true, IntervalScalar(0, prec)};
      if (factor < 0)
        throw std::domain_error("log_gen_binom: negative factor");
      acc = acc + log(IntervalScalar::from_rational(factor, prec));
    }
  } else {
    IntervalScalar av = a.interval();
    for (std::uint64_t i = 0; i < k; ++i) {
      IntervalScalar factor = av - IntervalScalar(long(i), prec);
      if (!factor.certainly_positive())
        throw std::domain_error("log_gen_binom: factor not certainly positive");
      acc = acc + log(factor);
    }
  }
  acc = acc - log(IntervalScalar::from_integer(factorial(k), prec));
  return {false, acc};
}

LogValue log_aj_binsum(std::uint64_t j, std::uint64_t p, const Scalar& u,
                       const Scalar& w, mpfr_prec_t prec) {
  Scalar uw = u * w;
  Scalar v = (u - uw) / Scalar::exact(mpq_class(long(p)), prec);
  IntervalScalar sum(0, prec);
  bool any = false;
  for (std::uint64_t i = 0; i * p <= j; ++i) {
    std::uint64_t n = j - i * p;
    LogValue lb = log_gen_binom(uw + Scalar::exact(long(n) - 1, prec), n, prec);
    if (lb.is_zero) continue;
    LogValue lc = log_gen_binom(v + Scalar::exact(long(i) - 1, prec), i, prec);
    if (lc.is_zero) continue;
    sum = sum + exp(lb.log + lc.log);
    any = true;
  }
  if (!any) return {true, IntervalScalar(0, prec)};
  return {false, log(sum)};
}

LogValue ln_aj(std::uint64_t q, std::uint32_t ell, std::uint64_t j,
               mpfr_prec_t prec) {
  AjParams params = AjParams::for_field(q, ell, j, prec);
  if (params.w.is_exact()) {
    mpq_class a = aj_binsum(j, params.p, params.u.rational(), params.w.rational());
    if (a == 0) return {true, IntervalScalar(0, prec)};
    if (a < 0) throw std::logic_error("ln_aj: negative A_j");
    return {false, log(IntervalScalar::from_rational(a, prec))};
  }
  return log_aj_binsum(j, params.p, params.u, params.w, prec);
}

}  // namespace rsdist
