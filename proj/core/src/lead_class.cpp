#include "rsdist/lead_class.hpp"

#include <stdexcept>

namespace rsdist {

std::string LeadClass::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs[i]);
  }
  return out;
}

LeadClass class_identity(std::uint32_t ell) {
  return LeadClass{std::vector<Elem>(ell, 0)};
}

LeadClass class_of(const Field& F, const Poly& f, std::uint32_t ell) {
  (void)F;
  if (!f.is_monic()) throw std::invalid_argument("class_of: polynomial not monic");
  const int d = f.degree();
  LeadClass c{std::vector<Elem>(ell, 0)};
  for (std::uint32_t t = 1; t <= ell; ++t) {
    int idx = d - int(t);
    if (idx >= 0) c.coeffs[t - 1] = f.coeff(std::uint32_t(idx));
  }
  return c;
}

LeadClass class_of_linear(const Field& F, Elem alpha, std::uint32_t ell) {
  (void)F;
  LeadClass c{std::vector<Elem>(ell, 0)};
  if (ell >= 1) c.coeffs[0] = alpha;
  return c;
}

LeadClass class_mul(const Field& F, const LeadClass& a, const LeadClass& b) {
  if (a.ell() != b.ell()) throw std::invalid_argument("class_mul: length mismatch");
  const std::uint32_t ell = a.ell();
  // (1 + a1 t + ... + a_ell t^ell)(1 + b1 t + ...) mod t^(ell+1)
  LeadClass c{std::vector<Elem>(ell, 0)};
  for (std::uint32_t t = 1; t <= ell; ++t) {
    Elem acc = F.add(a.coeffs[t - 1], b.coeffs[t - 1]);
    for (std::uint32_t i = 1; i < t; ++i)
      acc = F.add(acc, F.mul(a.coeffs[i - 1], b.coeffs[t - i - 1]));
    c.coeffs[t - 1] = acc;
  }
  return c;
}

LeadClass class_inv(const Field& F, const LeadClass& a) {
  const std::uint32_t ell = a.ell();
  // Invert the unit series term by term: coefficients of t^1..t^ell of the
  // inverse are fixed so each partial product vanishes.
  LeadClass b{std::vector<Elem>(ell, 0)};
  for (std::uint32_t t = 1; t <= ell; ++t) {
    Elem acc = a.coeffs[t - 1];
    for (std::uint32_t i = 1; i < t; ++i)
      acc = F.add(acc, F.mul(a.coeffs[i - 1], b.coeffs[t - i - 1]));
    b.coeffs[t - 1] = F.neg(acc);
  }
  return b;
}

std::uint64_t class_rank(const Field& F, const LeadClass& a) {
  std::uint64_t r = 0;
  for (Elem c : a.coeffs) r = r * F.q() + c;
  return r;
}

LeadClass class_from_rank(const Field& F, std::uint64_t rank, std::uint32_t ell) {
  LeadClass a{std::vector<Elem>(ell, 0)};
  for (std::uint32_t t = ell; t-- > 0;) {
    a.coeffs[t] = Elem(rank % F.q());
    rank /= F.q();
  }
  if (rank != 0) throw std::invalid_argument("class_from_rank: rank out of range");
  return a;
}

std::vector<LeadClass> enumerate_classes(const Field& F, std::uint32_t m,
                                         std::uint32_t ell) {
  std::vector<LeadClass> out;
  if (m >= ell) {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < ell; ++i) total *= F.q();
    out.reserve(total);
    for (std::uint64_t r = 0; r < total; ++r)
      out.push_back(class_from_rank(F, r, ell));
    return out;
  }
  // Degree m < ell: entries past position m are forced to zero.
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < m; ++i) total *= F.q();
  out.reserve(total);
  for (std::uint64_t r = 0; r < total; ++r) {
    LeadClass a{std::vector<Elem>(ell, 0)};
    std::uint64_t v = r;
    for (std::uint32_t t = m; t-- > 0;) {
      a.coeffs[t] = Elem(v % F.q());
      v /= F.q();
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace rsdist
