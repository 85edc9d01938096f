#include "rsdist/numbers.hpp"

#include <cmath>
#include <stdexcept>

namespace rsdist {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  // Deterministic Miller-Rabin for 64-bit inputs with the bases above.
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  auto mul_mod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return std::uint64_t((__uint128_t)a * b % m);
  };
  auto pow_mod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1;
    a %= m;
    while (e > 0) {
      if (e & 1) acc = mul_mod(acc, a, m);
      a = mul_mod(a, a, m);
      e >>= 1;
    }
    return acc;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::optional<PrimePower> prime_power_decompose(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  // The prime divides q, so test the smallest divisor.
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t s = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++s;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{p, s};
}

mpz_class binom(std::uint64_t n, std::int64_t k) {
  if (k < 0 || std::uint64_t(k) > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, std::uint64_t(k));
  return r;
}

mpz_class falling_factorial(std::uint64_t n, std::uint32_t m) {
  mpz_class r = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    if (i > n) return 0;
    r *= mpz_class(n - i);
  }
  return r;
}

mpz_class factorial(std::uint64_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpq_class pow_q_int(const mpq_class& base, std::int64_t e) {
  if (e == 0) return 1;
  if (base == 0 && e < 0) throw std::domain_error("pow_q_int: 0 to negative power");
  mpq_class acc = 1;
  mpq_class b = base;
  std::uint64_t mag = e < 0 ? std::uint64_t(-(e + 1)) + 1 : std::uint64_t(e);
  for (std::uint64_t i = 0; i < mag; ++i) acc *= b;
  if (e < 0) acc = mpq_class(1) / acc;
  acc.canonicalize();
  return acc;
}

std::uint64_t DetRng::next() {
  // splitmix64 (Steele, Lea, Flood 2014); fixed here for reproducibility.
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t DetRng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("DetRng::below: n must be positive");
  // Rejection sampling keeps the distribution exactly uniform.
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % n;
}

}  // namespace rsdist
