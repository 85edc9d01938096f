#include "rsdist/distance.hpp"

#include <stdexcept>

#include "rsdist/numbers.hpp"

namespace rsdist {

namespace {

// Advance a base-q odometer (lowest digit first); false when it wraps.
bool next_tuple(std::vector<Elem>& digits, std::uint64_t q) {
  for (Elem& d : digits) {
    if (++d < q) return true;
    d = 0;
  }
  return false;
}

std::uint64_t enum_cost(std::uint64_t q, std::uint32_t k, std::uint64_t n) {
  return sat_mul(sat_pow(q, k), sat_mul(n, std::uint64_t(k) + 1));
}

}  // namespace

std::uint32_t rs_distance(const Field& F, std::span<const Elem> word,
                          std::uint32_t k, const EvalSet& D,
                          const Budget& budget) {
  const std::uint64_t n = D.size();
  if (word.size() != n)
    throw std::invalid_argument("rs_distance: word length != |D|");
  if (k >= n) return 0;  // interpolation: the code is the whole space
  budget.check(enum_cost(F.q(), k, n), "rs_distance codeword enumeration");
  if (k == 0) {
    std::uint32_t weight = 0;
    for (Elem x : word) weight += (x != 0);
    return weight;
  }
  std::vector<Elem> coeff(k, 0);
  std::uint32_t best = std::uint32_t(n);
  do {
    std::uint32_t dist = 0;
    for (std::size_t i = 0; i < n && dist < best; ++i) {
      Elem acc = 0;
      const Elem alpha = D[i];
      for (std::uint32_t t = k; t-- > 0;) acc = F.add(F.mul(acc, alpha), coeff[t]);
      dist += (acc != word[i]);
    }
    if (dist < best) {
      best = dist;
      if (best == 0) return 0;
    }
  } while (next_tuple(coeff, F.q()));
  return best;
}

WordClassification classify_word(const Field& F, std::span<const Elem> word,
                                 std::uint32_t k, const EvalSet& D,
                                 const Budget& budget) {
  const std::uint64_t n = D.size();
  WordClassification c;
  c.interpolant = lagrange_poly(F, word, D);
  c.degree = c.interpolant.degree();
  c.distance = rs_distance(F, word, k, D, budget);
  c.is_codeword = (c.distance == 0);
  c.is_deep_hole = (k < n) && (c.distance == n - k);
  c.is_ordinary = c.degree >= int(k) && c.distance == n - std::uint32_t(c.degree);
  return c;
}

std::vector<mpz_class> count_Nfr_all(const Field& F, const Poly& f,
                                     std::uint32_t k, const EvalSet& D,
                                     const Budget& budget) {
  const std::uint64_t n = D.size();
  budget.check(enum_cost(F.q(), k, n), "codeword agreement enumeration");
  std::vector<Elem> target = eval_word(F, f, D);
  std::vector<mpz_class> counts(n + 1, mpz_class(0));
  std::vector<Elem> coeff(k, 0);
  if (k == 0) {
    std::uint32_t agree = 0;
    for (std::size_t i = 0; i < n; ++i) agree += (target[i] == 0);
    counts[agree] = 1;
    return counts;
  }
  do {
    std::uint32_t agree = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Elem acc = 0;
      const Elem alpha = D[i];
      for (std::uint32_t t = k; t-- > 0;) acc = F.add(F.mul(acc, alpha), coeff[t]);
      agree += (acc == target[i]);
    }
    counts[agree] += 1;
  } while (next_tuple(coeff, F.q()));
  return counts;
}

mpz_class count_Nfr_bruteforce(const Field& F, const Poly& f, std::uint32_t k,
                               std::uint32_t r, const EvalSet& D,
                               const Budget& budget) {
  if (r > D.size())
    throw std::invalid_argument("count_Nfr_bruteforce: r exceeds |D|");
  return count_Nfr_all(F, f, k, D, budget)[r];
}

std::vector<DistTable> dist_tables_bruteforce(const Field& F, std::uint32_t ell,
                                              std::uint32_t d, const EvalSet& D,
                                              const Budget& budget) {
  if (ell == 0 || d < ell)
    throw std::invalid_argument("dist_tables_bruteforce: requires 1 <= ell <= d");
  const std::uint64_t q = F.q();
  const std::uint64_t n = D.size();
  budget.check(sat_mul(sat_pow(q, d), sat_mul(n, std::uint64_t(d) + 1)),
               "monic polynomial enumeration");
  std::uint64_t classes = 1;
  for (std::uint32_t i = 0; i < ell; ++i) classes *= q;
  // counts[rank][r]
  std::vector<std::vector<mpz_class>> counts(
      classes, std::vector<mpz_class>(d + 1, mpz_class(0)));
  std::vector<Elem> coeff(d, 0);  // low coefficients; leading 1 implicit
  do {
    std::uint32_t roots = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Elem alpha = D[i];
      Elem acc = 1;  // start with the monic leading coefficient
      for (std::uint32_t t = d; t-- > 0;) acc = F.add(F.mul(acc, alpha), coeff[t]);
      roots += (acc == 0);
    }
    std::uint64_t rank = 0;
    for (std::uint32_t t = 1; t <= ell; ++t) rank = rank * q + coeff[d - t];
    counts[rank][roots] += 1;
  } while (next_tuple(coeff, q));

  std::vector<DistTable> out;
  out.reserve(classes);
  for (std::uint64_t rank = 0; rank < classes; ++rank)
    out.push_back(DistTable{q, ell, d, class_from_rank(F, rank, ell),
                            std::move(counts[rank]),
                            DistTable::Source::brute_force});
  return out;
}

mpq_class moments_bruteforce(const Field& F, const Poly& f, std::uint32_t k,
                             const EvalSet& D, std::uint32_t m,
                             const Budget& budget) {
  if (!f.is_monic() || f.degree() <= int(k))
    throw std::invalid_argument("moments_bruteforce: f must be monic, deg > k");
  std::vector<mpz_class> byr = count_Nfr_all(F, f, k, D, budget);
  mpz_class acc = 0;
  for (std::size_t y = 0; y < byr.size(); ++y)
    acc += byr[y] * falling_factorial(y, m);
  mpq_class v = mpq_class(acc) / pow_q_int(mpq_class(long(F.q())), k);
  v.canonicalize();
  return v;
}

ScanSummary scan_deep_holes(const Field& F, std::uint32_t k, std::uint32_t ell,
                            const Budget& budget,
                            const std::function<void(const ScanRecord&)>& sink) {
  const std::uint64_t q = F.q();
  if (k + ell > q - 1)
    throw std::invalid_argument("scan_deep_holes: requires k + ell <= q - 1");
  std::uint64_t est = 0;
  for (std::uint32_t jj = 0; jj <= ell; ++jj)
    est = sat_add(est, sat_mul(sat_pow(q, jj), enum_cost(q, k, q)));
  budget.check(est, "deep-hole scan");

  EvalSet D = EvalSet::full(F);
  ScanSummary summary;
  std::vector<Elem> word(q);
  for (std::uint32_t jj = 0; jj <= ell; ++jj) {
    const std::uint32_t deg = k + jj;
    const std::uint32_t covering = std::uint32_t(q) - k;
    std::vector<Elem> free_coeffs(jj, 0);  // coefficients of x^k .. x^(deg-1)
    do {
      std::vector<Elem> c(deg + 1, 0);
      for (std::uint32_t t = 0; t < jj; ++t) c[k + t] = free_coeffs[t];
      c[deg] = 1;
      Poly f{std::vector<Elem>(c)};
      for (std::uint64_t i = 0; i < q; ++i)
        word[i] = poly_eval(F, f, Elem(i));
      std::uint32_t dist = rs_distance(F, word, k, D, budget);
      ScanRecord rec{std::move(f), int(deg), dist, dist == covering,
                     dist == std::uint32_t(q) - deg};
      summary.words_scanned += 1;
      summary.scanned_by_degree[rec.degree] += 1;
      if (rec.deep_hole) summary.deep_hole_count += 1;
      if (deg == k && !rec.deep_hole) summary.degree_k_all_deep_holes = false;
      if (deg > k && rec.deep_hole) summary.deep_holes_above_k.push_back(rec);
      if (dist > covering || dist < std::uint32_t(q) - deg)
        summary.bound_violations.push_back(rec);
      if (rec.ordinary) summary.ordinary_by_degree[rec.degree] += 1;
      if (sink) sink(rec);
    } while (next_tuple(free_coeffs, q));
  }
  return summary;
}

}  // namespace rsdist
