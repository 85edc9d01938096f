#pragma once

#include <cstdint>
#include <vector>

#include "rsdist/scalar.hpp"

namespace rsdist {

// q1 = min(q, (ell-1) sqrt(q)) and gamma = q1/q.  Both are exact rationals
// whenever (ell-1)^2 >= q, ell == 1, or q is a perfect square; otherwise they
// carry interval enclosures of (ell-1) sqrt(q).
struct Q1Gamma {
  Scalar q1;
  Scalar gamma;
};
Q1Gamma q1_gamma(std::uint64_t q, std::uint32_t ell,
                 mpfr_prec_t prec = kDefaultPrecision);

// Generalized binomial coefficient C(a, k) = a (a-1) ... (a-k+1) / k! for
// arbitrary (possibly non-integer) upper argument.
mpq_class gen_binom(const mpq_class& a, std::uint64_t k);
IntervalScalar gen_binom(const IntervalScalar& a, std::uint64_t k);
Scalar gen_binom(const Scalar& a, std::uint64_t k);

// Parameters of A_j(u, w) over characteristic p.
struct AjParams {
  std::uint64_t j;
  std::uint64_t p;  // prime
  Scalar u;
  Scalar w;

  // u = q, w = gamma for the field-derived instance.
  static AjParams for_field(std::uint64_t q, std::uint32_t ell, std::uint64_t j,
                            mpfr_prec_t prec = kDefaultPrecision);
};

// A_j(u, w) = (1/j!) sum over permutations tau of S_j of u^l(tau) w^l'(tau),
// where l counts all cycles and l' the cycles of length not divisible by p.
// Three independent evaluators; they must agree wherever all are defined.

// Direct sum over cycle types.  Exact but factorial-sized bookkeeping, so j
// is capped.
inline constexpr std::uint64_t kAjPermutationMaxJ = 20;
mpq_class aj_permutation(std::uint64_t j, std::uint64_t p, const mpq_class& u,
                         const mpq_class& w);
IntervalScalar aj_permutation(std::uint64_t j, std::uint64_t p,
                              const IntervalScalar& u, const IntervalScalar& w);

// Coefficient extraction from (1-z)^(-uw) (1-z^p)^(-(u-uw)/p) by
// multiplicative recurrences and a stride-p convolution.
mpq_class aj_series(std::uint64_t j, std::uint64_t p, const mpq_class& u,
                    const mpq_class& w);
IntervalScalar aj_series(std::uint64_t j, std::uint64_t p,
                         const IntervalScalar& u, const IntervalScalar& w);
// All of A_0 .. A_j in one pass (the series route computes them anyway).
std::vector<mpq_class> aj_series_all(std::uint64_t j, std::uint64_t p,
                                     const mpq_class& u, const mpq_class& w);
std::vector<IntervalScalar> aj_series_all(std::uint64_t j, std::uint64_t p,
                                          const IntervalScalar& u,
                                          const IntervalScalar& w);

// Closed finite sum of generalized-binomial products.
mpq_class aj_binsum(std::uint64_t j, std::uint64_t p, const mpq_class& u,
                    const mpq_class& w);
IntervalScalar aj_binsum(std::uint64_t j, std::uint64_t p,
                         const IntervalScalar& u, const IntervalScalar& w);

// Scalar-level dispatch: exact when both u and w are exact.
Scalar aj_permutation(const AjParams& params);
Scalar aj_series(const AjParams& params);
Scalar aj_binsum(const AjParams& params);

// Nonnegative quantity tracked in log space: either exactly zero or
// enclosed by [exp(log.lower), exp(log.upper)].
struct LogValue {
  bool is_zero;
  IntervalScalar log;
};

// ln C(a, k), taking ln of each factor individually so huge values never
// leave log space.  Zero factors (exact integer a with 0 <= a < k) make the
// value exactly zero; possibly-negative factors are a domain error.
LogValue log_gen_binom(const Scalar& a, std::uint64_t k,
                       mpfr_prec_t prec = kDefaultPrecision);

// ln A_j(u, w) through the binomial-sum route, entirely in log space.
LogValue log_aj_binsum(std::uint64_t j, std::uint64_t p, const Scalar& u,
                       const Scalar& w, mpfr_prec_t prec = kDefaultPrecision);

// Enclosure of ln A_j(q, gamma) for field parameters: exact summation when
// gamma is rational, the log-space route otherwise.
LogValue ln_aj(std::uint64_t q, std::uint32_t ell, std::uint64_t j,
               mpfr_prec_t prec = kDefaultPrecision);

}  // namespace rsdist
