#include "rsdist/budget.hpp"

#include <cstdlib>
#include <limits>

namespace rsdist {

namespace {

std::string format_message(std::string_view what, std::uint64_t estimate,
                           std::uint64_t limit) {
  std::string msg = "operation budget exceeded: ";
  msg += what;
  msg += " needs ~";
  msg += std::to_string(estimate);
  msg += " ops, limit is ";
  msg += std::to_string(limit);
  msg += " (override with RSDIST_BUDGET or --budget)";
  return msg;
}

}  // namespace

BudgetError::BudgetError(std::string_view what, std::uint64_t estimate,
                         std::uint64_t limit)
    : std::runtime_error(format_message(what, estimate, limit)),
      estimate_(estimate),
      limit_(limit) {}

void Budget::check(std::uint64_t estimate, std::string_view what) const {
  if (estimate > max_ops_) throw BudgetError(what, estimate, max_ops_);
}

std::uint64_t Budget::default_ops() {
  static const std::uint64_t cached = [] {
    const char* env = std::getenv("RSDIST_BUDGET");
    if (env != nullptr && *env != '\0') {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != nullptr && *end == '\0' && v > 0) return std::uint64_t(v);
    }
    return std::uint64_t{100'000'000};
  }();
  return cached;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  if (s < a) return std::numeric_limits<std::uint64_t>::max();
  return s;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

}  // namespace rsdist
