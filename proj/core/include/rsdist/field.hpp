#pragma once

#include <cstdint>
#include <vector>

#include "rsdist/budget.hpp"

namespace rsdist {

// Field element, encoded as an integer in [0, q).  For extension fields the
// encoding is base-p positional: value c0 + c1*p + ... + c_{s-1}*p^{s-1}
// stands for the residue c0 + c1*x + ... + c_{s-1}*x^{s-1}.
using Elem = std::uint32_t;

// GF(p^s) with table-backed arithmetic.  Construction is deterministic:
// the modulus is the lexicographically smallest monic irreducible of degree s
// (coefficients compared low-to-high as a base-p integer) and the log/antilog
// tables use the smallest generator, so repeated builds are bit-identical.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = 1u << 20;

  static Field build(std::uint64_t p, std::uint32_t s);
  static Field from_order(std::uint64_t q);

  std::uint64_t p() const { return p_; }
  std::uint32_t s() const { return s_; }
  std::uint64_t q() const { return q_; }

  // Monic modulus coefficients, lowest first, length s+1.  Empty when s == 1.
  const std::vector<Elem>& modulus() const { return modulus_; }

  // Smallest generator of the multiplicative group (0 when no log tables).
  Elem generator() const { return generator_; }
  bool has_log_tables() const { return !log_.empty(); }
  const std::vector<Elem>& log_table() const { return log_; }
  const std::vector<Elem>& antilog_table() const { return exp_; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (s_ == 1) {
      Elem r = a + b;
      return r >= q_ ? r - Elem(q_) : r;
    }
    if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
    return add_generic(a, b);
  }

  Elem neg(Elem a) const {
    if (p_ == 2) return a;
    if (s_ == 1) return a == 0 ? 0 : Elem(q_) - a;
    return neg_generic(a);
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
      std::uint64_t e = std::uint64_t(log_[a]) + log_[b];
      if (e >= q_ - 1) e -= q_ - 1;
      return exp_[e];
    }
    return mul_generic(a, b);
  }

  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  std::vector<Elem> to_digits(Elem a) const;
  Elem from_digits(const std::vector<Elem>& digits) const;

 private:
  Field() = default;

  Elem add_generic(Elem a, Elem b) const;
  Elem neg_generic(Elem a) const;
  Elem mul_generic(Elem a, Elem b) const;

  std::uint64_t p_ = 0;
  std::uint32_t s_ = 0;
  std::uint64_t q_ = 0;
  std::vector<Elem> modulus_;      // monic, lowest first (s >= 2 only)
  std::vector<Elem> mod_top_neg_;  // -modulus lower part, for reduction
  std::vector<Elem> add_table_;    // q*q, only for small q
  std::vector<Elem> log_;          // index: element, value: discrete log
  std::vector<Elem> exp_;          // index: exponent, value: generator^index
  Elem generator_ = 0;
};

}  // namespace rsdist
