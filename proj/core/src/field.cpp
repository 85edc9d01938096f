#include "rsdist/field.hpp"

#include <algorithm>
#include <stdexcept>

#include "rsdist/numbers.hpp"

namespace rsdist {

namespace {

// Dense polynomials over F_p (coefficients lowest first, no trailing zeros),
// used only while searching for the field modulus.
using PPoly = std::vector<std::uint32_t>;

void ptrim(PPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a modulo monic m.
PPoly pmod(PPoly a, const PPoly& m, std::uint64_t p) {
  ptrim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() >= m.size()) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      std::uint64_t sub = lead * m[i] % p;
      std::uint64_t cur = a[shift + i];
      a[shift + i] = std::uint32_t((cur + p - sub) % p);
    }
    ptrim(a);
  }
  return a;
}

bool pdivides(const PPoly& d, const PPoly& a, std::uint64_t p) {
  return pmod(a, d, p).empty();
}

PPoly poly_from_code(std::uint64_t code, std::uint32_t degree, std::uint64_t p) {
  PPoly f(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    f[i] = std::uint32_t(code % p);
    code /= p;
  }
  f[degree] = 1;
  return f;
}

// All monic irreducibles over F_p of degree 1..max_deg, grouped by degree.
// Degree d is validated by trial division against degrees <= d/2.
std::vector<std::vector<PPoly>> irreducibles_up_to(std::uint32_t max_deg,
                                                   std::uint64_t p) {
  std::vector<std::vector<PPoly>> by_deg(max_deg + 1);
  for (std::uint32_t d = 1; d <= max_deg; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      PPoly f = poly_from_code(code, d, p);
      if (f[0] == 0 && d > 1) continue;  // divisible by x
      bool irred = true;
      for (std::uint32_t e = 1; irred && 2 * e <= d; ++e) {
        for (const PPoly& g : by_deg[e]) {
          if (pdivides(g, f, p)) {
            irred = false;
            break;
          }
        }
      }
      if (irred) by_deg[d].push_back(std::move(f));
    }
  }
  return by_deg;
}

PPoly smallest_irreducible(std::uint64_t p, std::uint32_t s) {
  auto small = irreducibles_up_to(s / 2, p);
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < s; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    PPoly f = poly_from_code(code, s, p);
    if (f[0] == 0) continue;
    bool irred = true;
    for (std::uint32_t e = 1; irred && 2 * e <= s; ++e) {
      for (const PPoly& g : small[e]) {
        if (pdivides(g, f, p)) {
          irred = false;
          break;
        }
      }
    }
    if (irred) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

Field Field::build(std::uint64_t p, std::uint32_t s) {
  if (!is_prime(p)) throw std::invalid_argument("build_field: p must be prime");
  if (s == 0) throw std::invalid_argument("build_field: s must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < s; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("build_field: p^s exceeds 2^20");
  }

  Field f;
  f.p_ = p;
  f.s_ = s;
  f.q_ = q;

  if (s >= 2) {
    PPoly m = smallest_irreducible(p, s);
    f.modulus_.assign(m.begin(), m.end());
    f.mod_top_neg_.resize(s);
    for (std::uint32_t i = 0; i < s; ++i)
      f.mod_top_neg_[i] = Elem((p - m[i]) % p);
  }

  if (s >= 2 && p != 2 && q <= 1024) {
    f.add_table_.resize(std::size_t(q) * q);
    for (std::uint64_t a = 0; a < q; ++a)
      for (std::uint64_t b = 0; b < q; ++b)
        f.add_table_[a * q + b] = f.add_generic(Elem(a), Elem(b));
  }

  if (q <= (1u << 16)) {
    // Smallest generator: its order must not properly divide q-1.
    auto factors = prime_factors(q - 1);
    Elem g = 0;
    for (std::uint64_t cand = q > 2 ? 2 : 1; cand < q; ++cand) {
      bool ok = true;
      for (std::uint64_t r : factors) {
        if (f.pow(Elem(cand), (q - 1) / r) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        g = Elem(cand);
        break;
      }
    }
    f.generator_ = g;
    f.exp_.resize(q - 1);
    f.log_.assign(q, 0);
    Elem cur = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
      f.exp_[i] = cur;
      f.log_[cur] = Elem(i);
      cur = f.mul_generic(cur, g);
    }
  }
  return f;
}

Field Field::from_order(std::uint64_t q) {
  auto pp = prime_power_decompose(q);
  if (!pp) throw std::invalid_argument("field order must be a prime power");
  return build(pp->p, pp->s);
}

Elem Field::add_generic(Elem a, Elem b) const {
  Elem r = 0;
  std::uint64_t mult = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    std::uint64_t da = a % p_, db = b % p_;
    a /= Elem(p_);
    b /= Elem(p_);
    r += Elem((da + db) % p_ * mult);
    mult *= p_;
  }
  return r;
}

Elem Field::neg_generic(Elem a) const {
  Elem r = 0;
  std::uint64_t mult = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    std::uint64_t da = a % p_;
    a /= Elem(p_);
    r += Elem((p_ - da) % p_ * mult);
    mult *= p_;
  }
  return r;
}

Elem Field::mul_generic(Elem a, Elem b) const {
  if (s_ == 1) return Elem(std::uint64_t(a) * b % p_);
  // Schoolbook product of digit vectors, then reduction by the monic modulus.
  std::vector<std::uint64_t> da(s_), db(s_), prod(2 * s_ - 1, 0);
  for (std::uint32_t i = 0; i < s_; ++i) {
    da[i] = a % p_;
    a /= Elem(p_);
    db[i] = b % p_;
    b /= Elem(p_);
  }
  for (std::uint32_t i = 0; i < s_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < s_; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (std::uint32_t i = 2 * s_ - 2; i >= s_; --i) {
    std::uint64_t c = prod[i];
    if (c != 0) {
      prod[i] = 0;
      for (std::uint32_t t = 0; t < s_; ++t)
        prod[i - s_ + t] = (prod[i - s_ + t] + c * mod_top_neg_[t]) % p_;
    }
    if (i == s_) break;
  }
  Elem r = 0;
  std::uint64_t mult = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    r += Elem(prod[i] * mult);
    mult *= p_;
  }
  return r;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("field inverse of zero");
  if (!log_.empty()) {
    std::uint64_t e = (q_ - 1 - log_[a]) % (q_ - 1);
    return exp_[e];
  }
  return pow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  Elem acc = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::vector<Elem> Field::to_digits(Elem a) const {
  std::vector<Elem> d(s_);
  for (std::uint32_t i = 0; i < s_; ++i) {
    d[i] = a % Elem(p_);
    a /= Elem(p_);
  }
  return d;
}

Elem Field::from_digits(const std::vector<Elem>& digits) const {
  if (digits.size() != s_) throw std::invalid_argument("digit count mismatch");
  Elem r = 0;
  std::uint64_t mult = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    if (digits[i] >= p_) throw std::invalid_argument("digit out of range");
    r += Elem(digits[i] * mult);
    mult *= p_;
  }
  return r;
}

}  // namespace rsdist
