#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>

namespace rsdist {

bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t p;
  std::uint32_t s;
};

// Returns (p, s) with q = p^s and p prime, or nullopt if q is not a prime power.
std::optional<PrimePower> prime_power_decompose(std::uint64_t q);

// C(n, k) with the usual convention C(n, k) = 0 for k < 0 or k > n.
mpz_class binom(std::uint64_t n, std::int64_t k);

// Falling factorial n^(m) = n (n-1) ... (n-m+1); equals 0 once m > n.
mpz_class falling_factorial(std::uint64_t n, std::uint32_t m);

mpz_class factorial(std::uint64_t n);

// q^e for integer e of either sign, as an exact rational.
mpq_class pow_q_int(const mpq_class& base, std::int64_t e);

// Deterministic 64-bit generator (splitmix64).  Used instead of <random>
// distributions so sampled test sets are identical across platforms.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // Uniform value in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

}  // namespace rsdist
