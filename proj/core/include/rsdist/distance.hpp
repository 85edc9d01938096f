#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "rsdist/budget.hpp"
#include "rsdist/counting.hpp"
#include "rsdist/poly.hpp"

namespace rsdist {

// Hamming distance from `word` (indexed like D) to the code of evaluations
// of polynomials of degree < k on D, by exhaustive search over codewords.
// Shortcut: every word is a codeword when k >= |D|.
std::uint32_t rs_distance(const Field& F, std::span<const Elem> word,
                          std::uint32_t k, const EvalSet& D,
                          const Budget& budget = Budget());

struct WordClassification {
  Poly interpolant;
  int degree;              // degree of the interpolant (-1 for the zero word)
  std::uint32_t distance;  // Hamming distance to the code
  bool is_codeword;        // distance == 0, equivalently degree < k
  bool is_deep_hole;       // distance == n - k (the covering radius)
  bool is_ordinary;        // degree >= k and distance == n - degree
};

WordClassification classify_word(const Field& F, std::span<const Elem> word,
                                 std::uint32_t k, const EvalSet& D,
                                 const Budget& budget = Budget());

// #{g : deg g < k, f - g has exactly r distinct roots in D}, i.e. codewords
// agreeing with the word of f in exactly r positions.
mpz_class count_Nfr_bruteforce(const Field& F, const Poly& f, std::uint32_t k,
                               std::uint32_t r, const EvalSet& D,
                               const Budget& budget = Budget());
std::vector<mpz_class> count_Nfr_all(const Field& F, const Poly& f,
                                     std::uint32_t k, const EvalSet& D,
                                     const Budget& budget = Budget());

// Exhaustive counterpart of dist_tables_formula: enumerate all monic degree-d
// polynomials and bucket root counts by leading-coefficient class.
std::vector<DistTable> dist_tables_bruteforce(const Field& F, std::uint32_t ell,
                                              std::uint32_t d, const EvalSet& D,
                                              const Budget& budget = Budget());

// Exhaustive counterpart of moments_formula.
mpq_class moments_bruteforce(const Field& F, const Poly& f, std::uint32_t k,
                             const EvalSet& D, std::uint32_t m,
                             const Budget& budget = Budget());

struct ScanRecord {
  Poly f;
  int degree;
  std::uint32_t distance;
  bool deep_hole;
  bool ordinary;
};

struct ScanSummary {
  std::uint64_t words_scanned = 0;
  std::uint64_t deep_hole_count = 0;
  bool degree_k_all_deep_holes = true;
  std::vector<ScanRecord> deep_holes_above_k;     // deg > k and deep
  std::vector<ScanRecord> bound_violations;       // outside [n-deg, n-k]
  std::map<int, std::uint64_t> ordinary_by_degree;
  std::map<int, std::uint64_t> scanned_by_degree;
};

// Classifies monic f with k <= deg f <= k + ell over D = F_q, one
// representative per coset of the code (coefficients below x^k fixed to 0;
// adding a codeword never changes the distance).  Each record is passed to
// `sink` when provided.  Requires k + ell <= q - 1 so degrees stay below |D|.
ScanSummary scan_deep_holes(const Field& F, std::uint32_t k, std::uint32_t ell,
                            const Budget& budget = Budget(),
                            const std::function<void(const ScanRecord&)>& sink = {});

}  // namespace rsdist
