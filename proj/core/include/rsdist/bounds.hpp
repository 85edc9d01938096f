#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsdist/aj.hpp"
#include "rsdist/scalar.hpp"

namespace rsdist {

// --- Error bounds around the main counting terms ---------------------------

// Expected main value of W_j over a random class: C(q, j) q^(k-j).
mpq_class wj_main_term(std::uint64_t q, std::uint32_t k, std::uint32_t j);

// Truncated alternating main term for the count of degree-(k+ell) class
// members with r roots: C(q, r) q^(k-r) sum_{j=0}^{limit} C(q-r, j) (-q)^(-j).
// The exact identity truncates at limit = k - r; the bound display extends it
// to limit = k + ell - r.  Negative limit yields an empty sum.
mpq_class ndr_main_term(std::uint64_t q, std::uint32_t k, std::uint32_t r,
                        std::int64_t limit);

// |W_j - C(q,j) q^(k-j)|  <=  (1 - q^-ell) C(ell-1, ell+k-j) q^((ell+k-j)/2)
//                             A_j(q, q1/q).
// Exact rational whenever q1 is (ell = 1, perfect-square q, or q1 = q).
Scalar wj_error_bound(std::uint64_t q, std::uint32_t k, std::uint32_t ell,
                      std::uint32_t j, mpfr_prec_t prec = kDefaultPrecision);

// |N_(k+ell)(eps, r) - main term| <= (1 - q^-ell) sum_{j=k+1}^{k+ell}
//     C(j, r) C(ell-1, k+ell-j) q^((k+ell-j)/2) A_j(q, q1/q).
Scalar ndr_error_bound(std::uint64_t q, std::uint32_t k, std::uint32_t ell,
                       std::uint32_t r, mpfr_prec_t prec = kDefaultPrecision);

// --- Upper bounds on ln A_j(q, q1/q) ----------------------------------------

// (j/p) ln((q+j)/j) + ((q-q1)/p) ln((q+j)/q) - q1 ln(1 - (j/(q+j))^(1/p)).
IntervalScalar lemma_general(std::uint64_t q, std::uint32_t ell, std::uint64_t j,
                             mpfr_prec_t prec = kDefaultPrecision);

// q ( (c/p) ln((1+c)/c) + ((1-gamma)/p) ln(1+c) + gamma ln(2p) ), c = j/q.
// Valid as a bound only inside the window ln((q+j)/j)/p <= 0.6 used by its
// derivation; `window_ok` records the certified check of that precondition.
struct LemmaLarge {
  IntervalScalar value;
  Trilean window_ok;
};
LemmaLarge lemma_large(std::uint64_t q, std::uint32_t ell, std::uint64_t j,
                       mpfr_prec_t prec = kDefaultPrecision);

// The simplified bound minus the general one, computed after cancelling their
// two shared terms: q1 (ln(2p) + ln(1 - (j/(q+j))^(1/p))).  Exactly zero when
// q1 = 0, so the comparison "general <= large" stays certifiable at equality.
IntervalScalar lemma_large_minus_general(std::uint64_t q, std::uint32_t ell,
                                         std::uint64_t j,
                                         mpfr_prec_t prec = kDefaultPrecision);

// Exact p = 2 saddle point y = (sqrt(gamma^2 + 4c^2 + 4c) - gamma)/(2(1+c))
// and the bound it yields, normalized by q:
//   -c ln y - gamma ln(1-y) - ((1-gamma)/2) ln(1-y^2).
struct SaddleP2 {
  IntervalScalar y;
  IntervalScalar bound_per_q;
};
SaddleP2 saddle_p2(const Scalar& gamma, const mpq_class& c,
                   mpfr_prec_t prec = kDefaultPrecision);

// Absolute version of the saddle bound for field parameters (p = 2 required).
IntervalScalar saddle_p2_bound(std::uint64_t q, std::uint32_t ell,
                               std::uint64_t j,
                               mpfr_prec_t prec = kDefaultPrecision);

// --- Region functions and sufficient conditions -----------------------------

struct RegionFunctions {
  IntervalScalar f;   // ((p-1)c/p) ln(1/c) + (1-c) ln(1/(1-c)) - ((1+c)/p) ln(1+c)
  IntervalScalar g;   // 1/(6q) + (ln q)/q + (1/(2q)) ln(2 q pi c (1-c))
  IntervalScalar h1;  // (ln q)/sqrt(q) + ln(2p) - (1/p) ln(1+c)
  IntervalScalar h2;  // (ln q)/(2 sqrt(q)) + ln(2p) - (1/p) ln(1+c)
};
RegionFunctions region_functions(std::uint64_t p, std::uint64_t q,
                                 const mpq_class& c,
                                 mpfr_prec_t prec = kDefaultPrecision);

// f alone (used by the figure and by f-monotonicity checks).
IntervalScalar region_f(std::uint64_t p, const mpq_class& c,
                        mpfr_prec_t prec = kDefaultPrecision);
// g alone.
IntervalScalar region_g(std::uint64_t q, const mpq_class& c,
                        mpfr_prec_t prec = kDefaultPrecision);

// Closed-form second derivative of c -> f(p,c) - g(q,c):
//   (1+c)/(c(c-1)) + 1/(cp) + (1 - 2c + 2c^2)/(2 q c^2 (1-c)^2).
IntervalScalar region_fg_second_derivative(std::uint64_t p, std::uint64_t q,
                                           const mpq_class& c,
                                           mpfr_prec_t prec = kDefaultPrecision);

struct RegionParams {
  std::uint64_t p;
  std::uint64_t q;
  std::uint32_t k;
  std::uint32_t ell;
};

enum class RegionBranch { a, b };  // a: c = (k+ell)/q with h1; b: c = (k+1)/q with h2

struct Verdict {
  std::string condition;
  Trilean verdict;
  IntervalScalar margin;
  mpfr_prec_t precision_bits;
};

// Certifies f(p,c) - g(q,c) >= gamma h_branch(p,q,c) with gamma=(ell-1)/sqrt(q),
// escalating precision until the margin's sign resolves or `cap` is reached.
Verdict thm7_check(const RegionParams& params, RegionBranch branch,
                   mpfr_prec_t start = 53, mpfr_prec_t cap = 256);

// Largest admissible gamma: (f(p,c) - g)/h_branch clamped below at 0, where
// g is g(q,c), or g(q,1/2) when `g_at_half` is set (the wide-range variant).
IntervalScalar gamma_max(std::uint64_t p, std::uint64_t q, const mpq_class& c,
                         RegionBranch branch, bool g_at_half = false,
                         mpfr_prec_t prec = kDefaultPrecision);

// --- Derived-constant reports -----------------------------------------------

struct GChainCheck {
  std::uint64_t q;
  Trilean g_le_g_half;       // g(q, c) <= g(q, 1/2)
  Trilean g_half_le_display; // g(q, 1/2) <= 2/(3q) + 3 ln(q) / (2q)
};

struct Thm23Report {
  // Mode "c": asymptotic constants for a target rate.
  std::optional<mpq_class> c;
  std::optional<mpq_class> p0;             // (1+c)/(1-c)
  std::optional<std::uint64_t> p_prime;    // smallest prime >= p0
  std::optional<std::uint64_t> q0;         // smallest p_prime power passing the display
  std::optional<IntervalScalar> gamma0;    // (f(p0,c) - g(q0,1/2)) / h1(p0,q0,0)
  // Mode "p": per-characteristic constants routed through the wide-range cases.
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> base_p;     // min(p, 7): the case actually used
  std::optional<mpq_class> c_low;          // lower endpoint at q0 (3/q0 or 2/q0)
  std::optional<mpq_class> c_high;         // claimed upper endpoint of the case
  std::optional<IntervalScalar> margin_low;   // f(base, c_low) - g(q0, 1/2)
  std::optional<IntervalScalar> margin_high;  // f(base, c_high) - g(q0, 1/2)
  std::vector<GChainCheck> g_chain;
};

Thm23Report thm23_constants_for_c(const mpq_class& c,
                                  mpfr_prec_t prec = kDefaultPrecision);
Thm23Report thm23_constants_for_p(std::uint64_t p,
                                  mpfr_prec_t prec = kDefaultPrecision);

// --- Comparison against the older binomial factor ---------------------------

struct LiwanReport {
  std::uint64_t q;
  std::uint64_t p;
  std::uint32_t ell;
  std::uint64_t j;
  Scalar q1;
  LogValue ln_old_factor;  // ln C(q/p + q1 + j - 1, j)
  LogValue ln_aj_value;    // ln A_j(q, q1/q)
  // ln_old - ln_aj when both are finite; +infinity when A_j = 0.
  std::optional<IntervalScalar> difference;
  bool difference_infinite = false;
  // For p = q: the simplification ln((q1+j)/q1) of the difference.
  std::optional<IntervalScalar> identity_difference;
};

LiwanReport liwan_compare(std::uint64_t q, std::uint32_t ell, std::uint64_t j,
                          mpfr_prec_t prec = kDefaultPrecision);

// --- Figure data -------------------------------------------------------------

struct FigureRow {
  std::uint64_t p;
  mpq_class c;
  IntervalScalar f;
  int sign;  // +1 certified positive, -1 certified negative, 0 undecided
};

struct RootBracket {
  std::uint64_t p;
  mpq_class c_neg;  // endpoint with certified f < 0
  mpq_class c_pos;  // endpoint with certified f > 0
};

struct FigureTable {
  std::vector<FigureRow> rows;
  std::vector<RootBracket> brackets;  // consecutive grid points of opposite sign
};

FigureTable figure_scan(const std::vector<std::uint64_t>& ps, const mpq_class& step,
                        mpfr_prec_t prec = kDefaultPrecision);

}  // namespace rsdist
