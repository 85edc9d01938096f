#pragma once

#include <span>
#include <string>
#include <vector>

#include "rsdist/field.hpp"

namespace rsdist {

// Dense polynomial over a Field, coefficients lowest-degree first with no
// trailing zeros.  The zero polynomial has empty storage and degree() == -1,
// which orders below every true degree (in particular below any k).
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly constant(Elem a) { return Poly(std::vector<Elem>{a}); }
  // x^d with given leading coefficient.
  static Poly monomial(std::uint32_t d, Elem lead = 1);

  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Elem coeff(std::uint32_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Elem>& coeffs() const { return c_; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  std::string to_string() const;  // comma-separated, lowest first; "0" if zero

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Elem> c_;
};

Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
Poly poly_scale(const Field& F, Elem c, const Poly& a);

Elem poly_eval(const Field& F, const Poly& f, Elem alpha);

// Evaluation set: distinct elements of F, order preserved as given.
class EvalSet {
 public:
  EvalSet(const Field& F, std::vector<Elem> points);

  static EvalSet full(const Field& F);

  std::size_t size() const { return pts_.size(); }
  Elem operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<Elem>& points() const { return pts_; }
  bool contains(Elem a) const;

 private:
  std::vector<Elem> pts_;
  std::vector<bool> member_;  // indexed by element value
};

// Number of distinct alpha in D with f(alpha) = 0; f must be nonzero.
std::uint32_t distinct_roots_in(const Field& F, const Poly& f, const EvalSet& D);

// Unique polynomial of degree < |D| interpolating word[i] at D[i].
// The all-zero word yields the zero polynomial.
Poly lagrange_poly(const Field& F, std::span<const Elem> word, const EvalSet& D);

// Hamming weight of (f(alpha) - g(alpha)) over D convenience helpers.
std::vector<Elem> eval_word(const Field& F, const Poly& f, const EvalSet& D);

}  // namespace rsdist
