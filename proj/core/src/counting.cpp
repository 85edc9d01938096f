#include "rsdist/counting.hpp"

#include <functional>
#include <stdexcept>

#include "rsdist/numbers.hpp"

namespace rsdist {

namespace {

std::uint64_t pow_u64(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t wj_cost_estimate(std::uint64_t q, std::uint32_t ell,
                               std::uint32_t j, std::uint32_t d,
                               std::uint64_t n) {
  std::uint64_t subsets = 1;
  for (std::uint32_t i = 0; i < j; ++i)
    subsets = sat_mul(subsets, n - i) / (i + 1);
  std::uint64_t etas = sat_pow(q, std::min(std::uint32_t(d - j), ell));
  return sat_mul(sat_mul(subsets, etas), std::uint64_t(ell) + 1);
}

}  // namespace

std::vector<mpz_class> wj_table(const Field& F, std::uint32_t ell,
                                std::uint32_t j, std::uint32_t d,
                                const EvalSet& D, const Budget& budget) {
  if (ell == 0) throw std::invalid_argument("wj_table: ell must be positive");
  if (j > d) throw std::invalid_argument("wj_table: j exceeds d");
  const std::uint64_t q = F.q();
  const std::uint64_t n = D.size();
  const std::uint64_t table_size = pow_u64(q, ell);
  budget.check(sat_add(table_size, j > n ? 0 : wj_cost_estimate(q, ell, j, d, n)),
               "wj_table enumeration");
  std::vector<mpz_class> table(table_size, mpz_class(0));
  if (j > n) return table;  // no j-subsets exist

  const std::vector<LeadClass> etas = enumerate_classes(F, d - j, ell);
  // DFS over ascending index subsets, carrying the running class product of
  // the linear factors <x - alpha>, alpha in D, so that the assembled counts
  // classify polynomials by their number of distinct roots inside D itself.
  std::vector<LeadClass> stack;
  stack.reserve(j + 1);
  stack.push_back(class_identity(ell));
  std::function<void(std::size_t, std::uint32_t)> rec =
      [&](std::size_t start, std::uint32_t depth) {
        if (depth == j) {
          const LeadClass& prefix = stack.back();
          for (const LeadClass& eta : etas)
            table[class_rank(F, class_mul(F, eta, prefix))] += 1;
          return;
        }
        for (std::size_t i = start; i + (j - depth) <= n; ++i) {
          stack.push_back(class_mul(
              F, stack.back(), class_of_linear(F, F.neg(D[i]), ell)));
          rec(i + 1, depth + 1);
          stack.pop_back();
        }
      };
  rec(0, 0);
  return table;
}

mpz_class wj_exact(const Field& F, const LeadClass& epsilon, std::uint32_t j,
                   std::uint32_t d, const EvalSet& D, const Budget& budget) {
  if (epsilon.ell() == 0)
    throw std::invalid_argument("wj_exact: ell must be positive");
  std::vector<mpz_class> table = wj_table(F, epsilon.ell(), j, d, D, budget);
  return table[class_rank(F, epsilon)];
}

namespace {

// Shared assembly: counts[r] from the main term plus the boundary terms,
// given W_j(epsilon) for j = max(d-ell+1, 0) .. d.
mpz_class assemble_count(const Field& F, std::uint32_t d, std::uint32_t ell,
                         std::uint32_t r, std::uint64_t n,
                         const std::vector<mpz_class>& wjs,
                         std::uint32_t j_lo) {
  const std::uint64_t q = F.q();
  mpq_class total = 0;
  if (r <= n && int(d) - int(ell) - int(r) >= 0) {
    const std::uint32_t top = d - ell - r;
    mpq_class acc = 0;
    mpq_class minus_inv_q = mpq_class(-1, long(q));
    mpq_class power = 1;
    for (std::uint32_t jj = 0; jj <= top; ++jj) {
      acc += mpq_class(binom(n - r, long(jj))) * power;
      power *= minus_inv_q;
    }
    total = mpq_class(binom(n, long(r))) * pow_q_int(mpq_class(long(q)), top) * acc;
  }
  for (std::uint32_t j = j_lo; j <= d; ++j) {
    const mpz_class& w = wjs[j - j_lo];
    if (w == 0) continue;
    mpz_class c = binom(j, long(r));
    if (c == 0) continue;
    if ((j - r) % 2 == 0)
      total += mpq_class(c * w);
    else
      total -= mpq_class(c * w);
  }
  total.canonicalize();
  if (total.get_den() != 1)
    throw std::logic_error("count formula produced a non-integer");
  mpz_class result = total.get_num();
  if (result < 0) throw std::logic_error("count formula produced a negative count");
  return result;
}

}  // namespace

mpz_class count_formula(const Field& F, const LeadClass& epsilon, std::uint32_t d,
                        std::uint32_t r, const EvalSet& D, const Budget& budget) {
  const std::uint32_t ell = epsilon.ell();
  if (ell == 0) throw std::invalid_argument("count_formula: ell must be positive");
  if (d < ell) throw std::invalid_argument("count_formula: requires d >= ell");
  if (r > d) throw std::invalid_argument("count_formula: requires r <= d");
  const std::uint32_t j_lo = d - ell + 1;
  std::vector<mpz_class> wjs;
  wjs.reserve(d - j_lo + 1);
  for (std::uint32_t j = j_lo; j <= d; ++j)
    wjs.push_back(wj_exact(F, epsilon, j, d, D, budget));
  return assemble_count(F, d, ell, r, D.size(), wjs, j_lo);
}

DistTable dist_table_formula(const Field& F, const LeadClass& epsilon,
                             std::uint32_t d, const EvalSet& D,
                             const Budget& budget) {
  const std::uint32_t ell = epsilon.ell();
  if (ell == 0 || d < ell)
    throw std::invalid_argument("dist_table_formula: requires 1 <= ell <= d");
  const std::uint32_t j_lo = d - ell + 1;
  std::vector<mpz_class> wjs;
  for (std::uint32_t j = j_lo; j <= d; ++j)
    wjs.push_back(wj_exact(F, epsilon, j, d, D, budget));
  DistTable t{F.q(), ell, d, epsilon, {}, DistTable::Source::formula};
  t.counts.reserve(d + 1);
  for (std::uint32_t r = 0; r <= d; ++r)
    t.counts.push_back(assemble_count(F, d, ell, r, D.size(), wjs, j_lo));
  return t;
}

std::vector<DistTable> dist_tables_formula(const Field& F, std::uint32_t ell,
                                           std::uint32_t d, const EvalSet& D,
                                           const Budget& budget) {
  if (ell == 0 || d < ell)
    throw std::invalid_argument("dist_tables_formula: requires 1 <= ell <= d");
  const std::uint32_t j_lo = d - ell + 1;
  std::vector<std::vector<mpz_class>> wjs;  // [j - j_lo][class rank]
  for (std::uint32_t j = j_lo; j <= d; ++j)
    wjs.push_back(wj_table(F, ell, j, d, D, budget));
  const std::uint64_t total = pow_u64(F.q(), ell);
  std::vector<DistTable> out;
  out.reserve(total);
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    DistTable t{F.q(), ell, d, class_from_rank(F, rank, ell), {},
                DistTable::Source::formula};
    std::vector<mpz_class> per_class;
    per_class.reserve(wjs.size());
    for (const auto& tab : wjs) per_class.push_back(tab[rank]);
    for (std::uint32_t r = 0; r <= d; ++r)
      t.counts.push_back(assemble_count(F, d, ell, r, D.size(), per_class, j_lo));
    out.push_back(std::move(t));
  }
  return out;
}

const char* to_string(MomentBranch b) {
  switch (b) {
    case MomentBranch::trivial: return "trivial";
    case MomentBranch::boundary: return "boundary";
    default: return "zero";
  }
}

MomentValue moments_formula(const Field& F, const Poly& f, std::uint32_t k,
                            const EvalSet& D, std::uint32_t m,
                            const Budget& budget) {
  if (!f.is_monic() || f.degree() <= int(k))
    throw std::invalid_argument("moments_formula: f must be monic of degree > k");
  const std::uint32_t ell = std::uint32_t(f.degree()) - k;
  const std::uint64_t n = D.size();
  const std::uint64_t q = F.q();
  if (m <= k) {
    // Below the degree boundary, the moment matches a uniformly random word.
    mpq_class v = mpq_class(falling_factorial(n, m)) /
                  pow_q_int(mpq_class(long(q)), m);
    v.canonicalize();
    return {m, v, MomentBranch::trivial};
  }
  if (m > k + ell) return {m, mpq_class(0), MomentBranch::zero};
  LeadClass eps = class_of(F, f, ell);
  mpz_class w = wj_exact(F, eps, m, k + ell, D, budget);
  mpq_class v = mpq_class(factorial(m) * w) / pow_q_int(mpq_class(long(q)), k);
  v.canonicalize();
  return {m, v, MomentBranch::boundary};
}

}  // namespace rsdist
