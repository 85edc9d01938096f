#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rsdist {

// Thrown when an enumeration would exceed the configured operation budget.
// The message carries the estimate so callers can report why work was refused.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::string_view what, std::uint64_t estimate, std::uint64_t limit);

  std::uint64_t estimate() const { return estimate_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t limit_;
};

// Operation budget for exhaustive enumerations.  The default limit comes from
// the RSDIST_BUDGET environment variable, falling back to 10^8 operations.
class Budget {
 public:
  Budget() : max_ops_(default_ops()) {}
  explicit Budget(std::uint64_t max_ops) : max_ops_(max_ops) {}

  std::uint64_t max_ops() const { return max_ops_; }

  // Throws BudgetError if `estimate` exceeds the limit.
  void check(std::uint64_t estimate, std::string_view what) const;

  static std::uint64_t default_ops();

 private:
  std::uint64_t max_ops_;
};

// Saturating helpers for building cost estimates without overflow.
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t sat_add(std::uint64_t a, std::uint64_t b);
std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace rsdist
