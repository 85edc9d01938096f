#include "rsdist/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsdist {

Poly Poly::monomial(std::uint32_t d, Elem lead) {
  if (lead == 0) return Poly();
  std::vector<Elem> c(d + 1, 0);
  c[d] = lead;
  return Poly(std::move(c));
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c_[i]);
  }
  return out;
}

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(c));
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
  return Poly(std::move(c));
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Elem> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    Elem ai = a.coeff(std::uint32_t(i));
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(ai, b.coeff(std::uint32_t(j))));
  }
  return Poly(std::move(c));
}

Poly poly_scale(const Field& F, Elem k, const Poly& a) {
  if (k == 0) return Poly();
  std::vector<Elem> c(a.coeffs());
  for (Elem& x : c) x = F.mul(k, x);
  return Poly(std::move(c));
}

Elem poly_eval(const Field& F, const Poly& f, Elem alpha) {
  Elem acc = 0;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, alpha), c[i]);
  return acc;
}

EvalSet::EvalSet(const Field& F, std::vector<Elem> points)
    : pts_(std::move(points)), member_(F.q(), false) {
  for (Elem a : pts_) {
    if (a >= F.q()) throw std::invalid_argument("evaluation point out of field");
    if (member_[a]) throw std::invalid_argument("evaluation points must be distinct");
    member_[a] = true;
  }
}

EvalSet EvalSet::full(const Field& F) {
  std::vector<Elem> pts(F.q());
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = Elem(i);
  return EvalSet(F, std::move(pts));
}

bool EvalSet::contains(Elem a) const {
  return a < member_.size() && member_[a];
}

std::uint32_t distinct_roots_in(const Field& F, const Poly& f, const EvalSet& D) {
  if (f.is_zero())
    throw std::invalid_argument("distinct_roots_in: zero polynomial");
  std::uint32_t r = 0;
  for (Elem a : D.points())
    if (poly_eval(F, f, a) == 0) ++r;
  return r;
}

Poly lagrange_poly(const Field& F, std::span<const Elem> word, const EvalSet& D) {
  const std::size_t n = D.size();
  if (word.size() != n)
    throw std::invalid_argument("lagrange_poly: word length != |D|");
  // P(x) = prod (x - D[i]); each basis numerator is P / (x - D[i]) by
  // synthetic division, scaled by word[i] / P'(D[i]).
  std::vector<Elem> P(n + 1, 0);
  P[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Elem mi = F.neg(D[i]);
    for (std::size_t t = i + 1; t-- > 0;) {
      Elem hi = P[t];
      P[t + 1] = F.add(P[t + 1], hi);
      P[t] = F.mul(hi, mi);
    }
  }
  std::vector<Elem> acc(n, 0);
  std::vector<Elem> quot(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (word[i] == 0) continue;
    // quot = P / (x - D[i]) via synthetic division (remainder is zero).
    Elem xi = D[i];
    Elem carry = P[n];
    for (std::size_t t = n; t-- > 0;) {
      quot[t] = carry;
      carry = F.add(P[t], F.mul(xi, carry));
    }
    // P'(x_i) = prod_{j != i} (x_i - x_j) = quot(x_i)
    Elem denom = poly_eval(F, Poly(quot), xi);
    Elem scale = F.div(word[i], denom);
    for (std::size_t t = 0; t < n; ++t)
      acc[t] = F.add(acc[t], F.mul(scale, quot[t]));
  }
  return Poly(std::move(acc));
}

std::vector<Elem> eval_word(const Field& F, const Poly& f, const EvalSet& D) {
  std::vector<Elem> w(D.size());
  for (std::size_t i = 0; i < D.size(); ++i) w[i] = poly_eval(F, f, D[i]);
  return w;
}

}  // namespace rsdist
