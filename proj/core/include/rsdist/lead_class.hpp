#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsdist/poly.hpp"

namespace rsdist {

// Truncated leading-coefficient vector of a monic polynomial: entry t holds
// the coefficient of x^(deg f - 1 - t), t = 0..ell-1 (so coeffs[0] is the
// coefficient just below the leading 1).  Polynomials of degree < ell pad
// with zeros past the constant term.  Classes of fixed length ell form an
// abelian group of order q^ell: multiplying representatives multiplies the
// truncated series 1 + c1 t + ... + c_ell t^ell modulo t^(ell+1).
struct LeadClass {
  std::vector<Elem> coeffs;  // c_1 .. c_ell

  std::uint32_t ell() const { return std::uint32_t(coeffs.size()); }
  bool operator==(const LeadClass& o) const { return coeffs == o.coeffs; }
  std::string to_string() const;
};

LeadClass class_identity(std::uint32_t ell);

// Class of a monic polynomial f (deg f >= 0).
LeadClass class_of(const Field& F, const Poly& f, std::uint32_t ell);

// Class of x + alpha.
LeadClass class_of_linear(const Field& F, Elem alpha, std::uint32_t ell);

LeadClass class_mul(const Field& F, const LeadClass& a, const LeadClass& b);
LeadClass class_inv(const Field& F, const LeadClass& a);

// Rank in [0, q^ell): c_1 is the most significant digit.
std::uint64_t class_rank(const Field& F, const LeadClass& a);
LeadClass class_from_rank(const Field& F, std::uint64_t rank, std::uint32_t ell);

// Classes of all monic polynomials of degree m, in rank order: every class
// for m >= ell, otherwise the q^m classes whose entries past position m are
// zero (coefficients below x^0 do not exist and pad as 0).
std::vector<LeadClass> enumerate_classes(const Field& F, std::uint32_t m,
                                         std::uint32_t ell);

}  // namespace rsdist
