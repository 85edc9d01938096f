#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "rsdist/budget.hpp"
#include "rsdist/lead_class.hpp"
#include "rsdist/poly.hpp"

namespace rsdist {

// Distribution of root counts over the monic degree-d polynomials in one
// leading-coefficient class: counts[r] = #{f : class(f) = epsilon, f has
// exactly r distinct roots in D}, r = 0..d.  Row sum is q^(d-ell).
struct DistTable {
  std::uint64_t q;
  std::uint32_t ell;
  std::uint32_t d;
  LeadClass epsilon;
  std::vector<mpz_class> counts;
  enum class Source { formula, brute_force } source;
};

// W_j(epsilon, d, D): number of pairs (eta, S) with eta a class of a monic
// degree (d-j) polynomial, S a j-subset of D, and eta * prod_{alpha in S}
// <x+alpha> = epsilon.  Computed for every epsilon at once (indexed by class
// rank), or for a single class.
std::vector<mpz_class> wj_table(const Field& F, std::uint32_t ell,
                                std::uint32_t j, std::uint32_t d,
                                const EvalSet& D, const Budget& budget = Budget());
mpz_class wj_exact(const Field& F, const LeadClass& epsilon, std::uint32_t j,
                   std::uint32_t d, const EvalSet& D,
                   const Budget& budget = Budget());

// Exact count of monic degree-d polynomials in class epsilon with exactly r
// distinct roots in D, via the inclusion-exclusion main term plus boundary
// correction terms W_j for j in (d-ell, d].
mpz_class count_formula(const Field& F, const LeadClass& epsilon, std::uint32_t d,
                        std::uint32_t r, const EvalSet& D,
                        const Budget& budget = Budget());

DistTable dist_table_formula(const Field& F, const LeadClass& epsilon,
                             std::uint32_t d, const EvalSet& D,
                             const Budget& budget = Budget());
// All classes at once (shares the W_j enumeration across classes).
std::vector<DistTable> dist_tables_formula(const Field& F, std::uint32_t ell,
                                           std::uint32_t d, const EvalSet& D,
                                           const Budget& budget = Budget());

// Factorial moment E[Y^(m)] of the agreement count Y = n - dist(u, c) between
// the word of f and a uniformly random codeword of degree < k.
enum class MomentBranch { trivial, boundary, zero };

struct MomentValue {
  std::uint32_t m;
  mpq_class value;
  MomentBranch branch;
};

const char* to_string(MomentBranch b);

// f must be monic with deg f > k; ell = deg f - k.
MomentValue moments_formula(const Field& F, const Poly& f, std::uint32_t k,
                            const EvalSet& D, std::uint32_t m,
                            const Budget& budget = Budget());

}  // namespace rsdist
