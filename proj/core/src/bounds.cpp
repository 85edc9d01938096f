#include "rsdist/bounds.hpp"

#include <stdexcept>

#include "rsdist/numbers.hpp"

namespace rsdist {

namespace {

mpq_class mpq_of(std::uint64_t v) { return mpq_class(long(v)); }

IntervalScalar iv_of(const mpq_class& v, mpfr_prec_t prec) {
  return IntervalScalar::from_rational(v, prec);
}

// q^(e/2): exact when e is even or q is a perfect square, else via sqrt.
Scalar q_pow_half(std::uint64_t q, std::uint32_t e, mpfr_prec_t prec) {
  if (e % 2 == 0)
    return Scalar::exact(pow_q_int(mpq_of(q), e / 2), prec);
  mpz_class qz{long(q)};
  if (mpz_perfect_square_p(qz.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), qz.get_mpz_t());
    return Scalar::exact(pow_q_int(mpq_class(root), e), prec);
  }
  return Scalar::enclosure(sqrt(IntervalScalar(long(q), prec)).pow_int(long(e)));
}

std::uint64_t char_of(std::uint64_t q) {
  auto pp = prime_power_decompose(q);
  if (!pp) throw std::invalid_argument("q must be a prime power");
  return pp->p;
}

}  // namespace

mpq_class wj_main_term(std::uint64_t q, std::uint32_t k, std::uint32_t j) {
  mpq_class v = mpq_class(binom(q, long(j))) *
                pow_q_int(mpq_of(q), std::int64_t(k) - std::int64_t(j));
  v.canonicalize();
  return v;
}

mpq_class ndr_main_term(std::uint64_t q, std::uint32_t k, std::uint32_t r,
                        std::int64_t limit) {
  if (limit < 0 || r > q) return 0;
  mpq_class acc = 0;
  mpq_class term_scale = mpq_class(-1, long(q));
  mpq_class power = 1;
  for (std::int64_t j = 0; j <= limit; ++j) {
    acc += mpq_class(binom(q - r, j)) * power;
    power *= term_scale;
  }
  mpq_class v = mpq_class(binom(q, long(r))) *
                pow_q_int(mpq_of(q), std::int64_t(k) - std::int64_t(r)) * acc;
  v.canonicalize();
  return v;
}

Scalar wj_error_bound(std::uint64_t q, std::uint32_t k, std::uint32_t ell,
                      std::uint32_t j, mpfr_prec_t prec) {
  if (ell == 0 || j < k + 1 || j > k + ell)
    throw std::invalid_argument("wj_error_bound: requires k+1 <= j <= k+ell");
  mpq_class one_minus = 1 - pow_q_int(mpq_of(q), -std::int64_t(ell));
  mpz_class comb = binom(ell - 1, long(ell + k - j));
  Scalar front = Scalar::exact(mpq_class(one_minus * comb), prec);
  Scalar power = q_pow_half(q, ell + k - j, prec);
  Scalar aj = aj_binsum(AjParams::for_field(q, ell, j, prec));
  return front * power * aj;
}

Scalar ndr_error_bound(std::uint64_t q, std::uint32_t k, std::uint32_t ell,
                       std::uint32_t r, mpfr_prec_t prec) {
  if (ell == 0) throw std::invalid_argument("ndr_error_bound: ell must be positive");
  if (r > k + ell) return Scalar::exact(0, prec);
  mpq_class one_minus = 1 - pow_q_int(mpq_of(q), -std::int64_t(ell));
  Scalar acc = Scalar::exact(0, prec);
  for (std::uint32_t j = k + 1; j <= k + ell; ++j) {
    mpz_class combs = binom(j, long(r)) * binom(ell - 1, long(k + ell - j));
    if (combs == 0) continue;
    Scalar aj = aj_binsum(AjParams::for_field(q, ell, j, prec));
    acc = acc + Scalar::exact(mpq_class(combs), prec) *
                    q_pow_half(q, k + ell - j, prec) * aj;
  }
  return Scalar::exact(one_minus, prec) * acc;
}

namespace {

// (j/(q+j))^(1/p) as an enclosure.
IntervalScalar approx_root(std::uint64_t q, std::uint64_t p, std::uint64_t j,
                           mpfr_prec_t prec) {
  IntervalScalar ratio = iv_of(mpq_class(long(j), long(q + j)), prec);
  return exp(log(ratio) / IntervalScalar(long(p), prec));
}

}  // namespace

IntervalScalar lemma_general(std::uint64_t q, std::uint32_t ell, std::uint64_t j,
                             mpfr_prec_t prec) {
  if (j == 0) throw std::invalid_argument("lemma_general: j must be positive");
  const std::uint64_t p = char_of(q);
  Q1Gamma qg = q1_gamma(q, ell, prec);
  IntervalScalar q1 = qg.q1.interval();
  IntervalScalar t1 = iv_of(mpq_class(long(j), long(p)), prec) *
                      log(iv_of(mpq_class(long(q + j), long(j)), prec));
  IntervalScalar t2 =
      (IntervalScalar(long(q), prec) - q1) / IntervalScalar(long(p), prec) *
      log(iv_of(mpq_class(long(q + j), long(q)), prec));
  IntervalScalar one(1, prec);
  IntervalScalar t3 = -(q1 * log(one - approx_root(q, p, j, prec)));
  return t1 + t2 + t3;
}

LemmaLarge lemma_large(std::uint64_t q, std::uint32_t ell, std::uint64_t j,
                       mpfr_prec_t prec) {
  if (j == 0) throw std::invalid_argument("lemma_large: j must be positive");
  const std::uint64_t p = char_of(q);
  Q1Gamma qg = q1_gamma(q, ell, prec);
  IntervalScalar gamma = qg.gamma.interval();
  const mpq_class c{long(j), long(q)};
  IntervalScalar one(1, prec);
  IntervalScalar pv(long(p), prec);
  IntervalScalar t1 = iv_of(mpq_class(c / long(p)), prec) *
                      log(iv_of(mpq_class((1 + c) / c), prec));
  IntervalScalar ln1c = log(iv_of(mpq_class(1 + c), prec));
  IntervalScalar t2 = (one - gamma) / pv * ln1c;
  IntervalScalar t3 = gamma * log(IntervalScalar(long(2 * p), prec));
  IntervalScalar value = IntervalScalar(long(q), prec) * (t1 + t2 + t3);

  // The derivation is valid for ln((q+j)/j)/p within [0, 3/5].
  IntervalScalar window =
      log(iv_of(mpq_class(long(q + j), long(j)), prec)) / pv;
  const mpq_class limit(3, 5);
  Trilean ok;
  if (window.cmp_upper(limit) <= 0)
    ok = Trilean::holds;
  else if (window.cmp_lower(limit) > 0)
    ok = Trilean::fails;
  else
    ok = Trilean::unknown;
  return {value, ok};
}

IntervalScalar lemma_large_minus_general(std::uint64_t q, std::uint32_t ell,
                                         std::uint64_t j, mpfr_prec_t prec) {
  const std::uint64_t p = char_of(q);
  Q1Gamma qg = q1_gamma(q, ell, prec);
  IntervalScalar one(1, prec);
  return qg.q1.interval() *
         (log(IntervalScalar(long(2 * p), prec)) +
          log(one - approx_root(q, p, j, prec)));
}

SaddleP2 saddle_p2(const Scalar& gamma, const mpq_class& c, mpfr_prec_t prec) {
  if (c <= 0) throw std::invalid_argument("saddle_p2: c must be positive");
  IntervalScalar g = gamma.interval();
  IntervalScalar disc = g * g + iv_of(mpq_class(4 * c * c + 4 * c), prec);
  IntervalScalar y = (sqrt(disc) - g) / iv_of(mpq_class(2 * (1 + c)), prec);
  IntervalScalar one(1, prec);
  IntervalScalar two(2, prec);
  IntervalScalar bound = -(iv_of(c, prec) * log(y)) - g * log(one - y) -
                         (one - g) / two * log(one - y * y);
  return {y, bound};
}

IntervalScalar saddle_p2_bound(std::uint64_t q, std::uint32_t ell,
                               std::uint64_t j, mpfr_prec_t prec) {
  if (char_of(q) != 2)
    throw std::invalid_argument("saddle_p2_bound: characteristic must be 2");
  Q1Gamma qg = q1_gamma(q, ell, prec);
  SaddleP2 s = saddle_p2(qg.gamma, mpq_class(long(j), long(q)), prec);
  return IntervalScalar(long(q), prec) * s.bound_per_q;
}

namespace {

IntervalScalar region_f_impl(const mpq_class& p, const mpq_class& c,
                             mpfr_prec_t prec) {
  if (c <= 0 || c >= 1)
    throw std::invalid_argument("region f: c must lie in (0,1)");
  IntervalScalar ln_c = log(iv_of(c, prec));
  IntervalScalar ln_1mc = log(iv_of(mpq_class(1 - c), prec));
  IntervalScalar ln_1pc = log(iv_of(mpq_class(1 + c), prec));
  mpq_class coef1 = (p - 1) * c / p;
  mpq_class coef3 = (1 + c) / p;
  return -(iv_of(coef1, prec) * ln_c) - iv_of(mpq_class(1 - c), prec) * ln_1mc -
         iv_of(coef3, prec) * ln_1pc;
}

IntervalScalar ln_2p_impl(const mpq_class& p, mpfr_prec_t prec) {
  return log(iv_of(mpq_class(2 * p), prec));
}

IntervalScalar h_common(const mpq_class& p, const mpq_class& c,
                        mpfr_prec_t prec) {
  // ln(2p) - (1/p) ln(1+c)
  return ln_2p_impl(p, prec) -
         log(iv_of(mpq_class(1 + c), prec)) / iv_of(p, prec);
}

}  // namespace

IntervalScalar region_f(std::uint64_t p, const mpq_class& c, mpfr_prec_t prec) {
  return region_f_impl(mpq_of(p), c, prec);
}

IntervalScalar region_g(std::uint64_t q, const mpq_class& c, mpfr_prec_t prec) {
  if (c <= 0 || c >= 1)
    throw std::invalid_argument("region g: c must lie in (0,1)");
  IntervalScalar lnq = log(IntervalScalar(long(q), prec));
  IntervalScalar arg = IntervalScalar::pi(prec) *
                       iv_of(mpq_class(2 * long(q) * c * (1 - c)), prec);
  return iv_of(mpq_class(1, 6 * long(q)), prec) +
         lnq / IntervalScalar(long(q), prec) +
         log(arg) / IntervalScalar(2 * long(q), prec);
}

RegionFunctions region_functions(std::uint64_t p, std::uint64_t q,
                                 const mpq_class& c, mpfr_prec_t prec) {
  RegionFunctions r{region_f(p, c, prec), region_g(q, c, prec),
                    IntervalScalar(0, prec), IntervalScalar(0, prec)};
  IntervalScalar lnq = log(IntervalScalar(long(q), prec));
  IntervalScalar sq = sqrt(IntervalScalar(long(q), prec));
  IntervalScalar hc = h_common(mpq_of(p), c, prec);
  r.h1 = lnq / sq + hc;
  r.h2 = lnq / (IntervalScalar(2, prec) * sq) + hc;
  return r;
}

IntervalScalar region_fg_second_derivative(std::uint64_t p, std::uint64_t q,
                                           const mpq_class& c,
                                           mpfr_prec_t prec) {
  if (c <= 0 || c >= 1)
    throw std::invalid_argument("second derivative: c must lie in (0,1)");
  mpq_class t1 = mpq_class(1 - long(p)) / (c * long(p));
  mpq_class t2 = mpq_class(-1) / (1 - c);
  mpq_class t3 = mpq_class(-1) / (long(p) * (1 + c));
  mpq_class t4 = (1 - 2 * c + 2 * c * c) /
                 (2 * long(q) * c * c * (1 - c) * (1 - c));
  mpq_class v = t1 + t2 + t3 + t4;
  v.canonicalize();
  return iv_of(v, prec);
}

namespace {

// gamma = (ell-1)/sqrt(q) as used by the region conditions.
Scalar region_gamma(std::uint64_t q, std::uint32_t ell, mpfr_prec_t prec) {
  if (std::uint64_t(ell - 1) * (ell - 1) > q)
    throw std::invalid_argument("region check: gamma exceeds 1");
  if (ell == 1) return Scalar::exact(0, prec);
  mpz_class qz{long(q)};
  if (mpz_perfect_square_p(qz.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), qz.get_mpz_t());
    mpq_class g(long(ell - 1), 1);
    g /= mpq_class(root);
    g.canonicalize();
    return Scalar::exact(g, prec);
  }
  return Scalar::enclosure(IntervalScalar(long(ell) - 1, prec) /
                           sqrt(IntervalScalar(long(q), prec)));
}

}  // namespace

Verdict thm7_check(const RegionParams& params, RegionBranch branch,
                   mpfr_prec_t start, mpfr_prec_t cap) {
  const std::uint64_t top =
      branch == RegionBranch::a ? params.k + params.ell : params.k + 1;
  if (top >= params.q)
    throw std::invalid_argument("thm7_check: c must be below 1");
  const mpq_class c{long(top), long(params.q)};
  Verdict out;
  out.condition = branch == RegionBranch::a ? "thm7a" : "thm7b";
  auto attempt = [&](mpfr_prec_t prec) {
    RegionFunctions fns = region_functions(params.p, params.q, c, prec);
    Scalar gamma = region_gamma(params.q, params.ell, prec);
    const IntervalScalar& h = branch == RegionBranch::a ? fns.h1 : fns.h2;
    out.margin = fns.f - fns.g - gamma.interval() * h;
    if (out.margin.cmp_lower(0) >= 0) return Trilean::holds;
    if (out.margin.cmp_upper(0) < 0) return Trilean::fails;
    return Trilean::unknown;
  };
  Resolved res = resolve_with_precision(attempt, start, cap);
  out.verdict = res.verdict;
  out.precision_bits = res.precision_bits;
  return out;
}

IntervalScalar gamma_max(std::uint64_t p, std::uint64_t q, const mpq_class& c,
                         RegionBranch branch, bool g_at_half, mpfr_prec_t prec) {
  RegionFunctions fns = region_functions(p, q, c, prec);
  IntervalScalar g = g_at_half ? region_g(q, mpq_class(1, 2), prec) : fns.g;
  const IntervalScalar& h = branch == RegionBranch::a ? fns.h1 : fns.h2;
  IntervalScalar ratio = (fns.f - g) / h;
  return max(ratio, IntervalScalar(0, prec));
}

namespace {

// Certified check of 2/(3q) + 3 ln(q)/(2q) < rhs.
Trilean display_below(std::uint64_t q, const IntervalScalar& rhs,
                      mpfr_prec_t prec) {
  IntervalScalar lhs =
      iv_of(mpq_class(2, 3 * long(q)), prec) +
      IntervalScalar(3, prec) * log(IntervalScalar(long(q), prec)) /
          IntervalScalar(2 * long(q), prec);
  return certainly_less(lhs, rhs);
}

std::vector<GChainCheck> g_chain_checks(const mpq_class& c, mpfr_prec_t prec) {
  const mpq_class half(1, 2);
  std::vector<GChainCheck> out;
  for (std::uint64_t q : {16ull, 81ull, 1024ull, 2401ull}) {
    IntervalScalar gh = region_g(q, half, prec);
    // At c = 1/2 the two sides are the same value; an interval comparison of
    // two independent enclosures cannot certify that, so decide it exactly.
    Trilean le_half = c == half
                          ? Trilean::holds
                          : certainly_leq(region_g(q, c, prec), gh);
    IntervalScalar display =
        iv_of(mpq_class(2, 3 * long(q)), prec) +
        IntervalScalar(3, prec) * log(IntervalScalar(long(q), prec)) /
            IntervalScalar(2 * long(q), prec);
    out.push_back({q, le_half, certainly_leq(gh, display)});
  }
  return out;
}

IntervalScalar h1_at_zero(const mpq_class& p, std::uint64_t q0,
                          mpfr_prec_t prec) {
  // h1 with the (1/p) ln(1+c) term dropped (its c -> 0 limit).
  return log(IntervalScalar(long(q0), prec)) /
             sqrt(IntervalScalar(long(q0), prec)) +
         ln_2p_impl(p, prec);
}

}  // namespace

Thm23Report thm23_constants_for_c(const mpq_class& c, mpfr_prec_t prec) {
  if (c <= 0 || c >= 1)
    throw std::invalid_argument("thm23_constants: c must lie in (0,1)");
  Thm23Report rep;
  rep.c = c;
  mpq_class p0 = (1 + c) / (1 - c);
  p0.canonicalize();
  rep.p0 = p0;
  // Smallest prime at or above p0.
  mpz_class ceil_p0;
  mpz_cdiv_q(ceil_p0.get_mpz_t(), p0.get_num().get_mpz_t(),
             p0.get_den().get_mpz_t());
  std::uint64_t pp = ceil_p0.get_ui();
  if (pp < 2) pp = 2;
  while (!is_prime(pp)) ++pp;
  rep.p_prime = pp;
  // Smallest power of that prime certified to satisfy the display bound
  // 2/(3q) + 3 ln(q)/(2q) < (c/2) ln(1/c).
  IntervalScalar rhs = -(iv_of(mpq_class(c / 2), prec) * log(iv_of(c, prec)));
  std::uint64_t q0 = pp;
  for (int iter = 0; iter < 64; ++iter) {
    auto attempt = [&](mpfr_prec_t pr) { return display_below(q0, rhs, pr); };
    Resolved res = resolve_with_precision(attempt, 53, kMaxPrecision);
    if (res.verdict == Trilean::holds) break;
    if (q0 > (std::uint64_t(1) << 50))
      throw std::runtime_error("thm23_constants: q0 search exceeded range");
    q0 *= pp;
  }
  rep.q0 = q0;
  IntervalScalar f0 = region_f_impl(p0, c, prec);
  IntervalScalar num = f0 - region_g(q0, mpq_class(1, 2), prec);
  rep.gamma0 = num / h1_at_zero(p0, q0, prec);
  rep.g_chain = g_chain_checks(c, prec);
  return rep;
}

Thm23Report thm23_constants_for_p(std::uint64_t p, mpfr_prec_t prec) {
  if (!is_prime(p)) throw std::invalid_argument("thm23_constants: p must be prime");
  Thm23Report rep;
  rep.p = p;
  const std::uint64_t base = p < 7 ? p : 7;
  rep.base_p = base;
  const std::uint64_t q0 = 2401;  // 7^4, the uniform threshold of the proof
  rep.q0 = q0;
  mpq_class c_low(base <= 3 ? 3 : 2, long(q0));
  mpq_class c_high;
  switch (base) {
    case 2: c_high = mpq_class(7, 10); break;
    case 3: c_high = mpq_class(4, 5); break;
    case 5: c_high = mpq_class(9, 10); break;
    default: c_high = mpq_class(19, 20); break;
  }
  rep.c_low = c_low;
  rep.c_high = c_high;
  IntervalScalar gh = region_g(q0, mpq_class(1, 2), prec);
  rep.margin_low = region_f(base, c_low, prec) - gh;
  rep.margin_high = region_f(base, c_high, prec) - gh;
  // The margin over [c_low, c_high] is minimized at an endpoint, so the
  // admissible gamma0 comes from the smaller of the two endpoint margins.
  IntervalScalar worst = -max(-*rep.margin_low, -*rep.margin_high);
  rep.gamma0 = worst / h1_at_zero(mpq_of(base), q0, prec);
  rep.g_chain = g_chain_checks(c_high, prec);
  return rep;
}

LiwanReport liwan_compare(std::uint64_t q, std::uint32_t ell, std::uint64_t j,
                          mpfr_prec_t prec) {
  const std::uint64_t p = char_of(q);
  Q1Gamma qg = q1_gamma(q, ell, prec);
  LiwanReport rep;
  rep.q = q;
  rep.p = p;
  rep.ell = ell;
  rep.j = j;
  rep.q1 = qg.q1;
  Scalar upper = Scalar::exact(mpq_class(long(q / p) + long(j) - 1), prec) + qg.q1;
  rep.ln_old_factor = log_gen_binom(upper, j, prec);
  rep.ln_aj_value = ln_aj(q, ell, j, prec);
  if (rep.ln_aj_value.is_zero && !rep.ln_old_factor.is_zero) {
    rep.difference_infinite = true;
  } else if (!rep.ln_aj_value.is_zero && !rep.ln_old_factor.is_zero) {
    rep.difference = rep.ln_old_factor.log - rep.ln_aj_value.log;
  }
  if (p == q && j >= 1) {
    // When q = p the two factors differ by exactly ln((q1+j)/q1).
    const IntervalScalar& q1iv = qg.q1.interval();
    if (q1iv.certainly_positive()) {
      IntervalScalar jv(long(j), prec);
      rep.identity_difference = log((q1iv + jv) / q1iv);
    }
  }
  return rep;
}

FigureTable figure_scan(const std::vector<std::uint64_t>& ps,
                        const mpq_class& step, mpfr_prec_t prec) {
  if (step <= 0 || step >= 1)
    throw std::invalid_argument("figure_scan: step must lie in (0,1)");
  FigureTable table;
  for (std::uint64_t p : ps) {
    int last_sign = 0;
    mpq_class last_c;
    for (mpq_class c = step; c < 1; c += step) {
      IntervalScalar f = region_f(p, c, prec);
      int sign = f.certainly_positive() ? 1 : (f.certainly_negative() ? -1 : 0);
      table.rows.push_back({p, c, f, sign});
      if (sign != 0) {
        if (last_sign != 0 && sign != last_sign) {
          if (sign > 0)
            table.brackets.push_back({p, last_c, c});
          else
            table.brackets.push_back({p, c, last_c});
        }
        last_sign = sign;
        last_c = c;
      }
    }
  }
  return table;
}

}  // namespace rsdist
