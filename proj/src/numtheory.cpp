#include "pisano/numtheory.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace pisano {

NotInvertible::NotInvertible(u64 value, u64 modulus, u64 gcd)
    : std::domain_error("value " + std::to_string(value) + " is not invertible modulo " +
                        std::to_string(modulus) + " (gcd " + std::to_string(gcd) + ")"),
      value_(value),
      modulus_(modulus),
      gcd_(gcd) {}

bool Factorization::has_prime(u64 p) const {
  return exponent_of(p) > 0;
}

unsigned Factorization::exponent_of(u64 p) const {
  for (const auto& f : factors) {
    if (f.prime == p) return f.exponent;
  }
  return 0;
}

std::vector<u64> Factorization::primes() const {
  std::vector<u64> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

u64 Factorization::reassemble() const {
  u64 n = 1;
  for (const auto& f : factors) n = checked_mul(n, checked_pow(f.prime, f.exponent));
  return n;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 checked_mul(u64 a, u64 b) {
  u128 p = static_cast<u128>(a) * b;
  if (p > static_cast<u128>(UINT64_MAX)) {
    throw ArithmeticOverflow(std::to_string(a) + " * " + std::to_string(b) +
                             " exceeds 64 bits");
  }
  return static_cast<u64>(p);
}

u64 checked_pow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) throw std::domain_error("lcm requires positive arguments");
  return checked_mul(a / gcd(a, b), b);
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 mod_pow(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 reduce(i64 value, u64 m) {
  if (value >= 0) return static_cast<u64>(value) % m;
  // -(value) without overflow at INT64_MIN
  u64 magnitude = static_cast<u64>(-(value + 1)) + 1;
  u64 r = magnitude % m;
  return r == 0 ? 0 : m - r;
}

u64 mod_pow(i64 base, u64 exp, u64 m) {
  return mod_pow(reduce(base, m), exp, m);
}

u64 mod_inv(u64 a, u64 m) {
  a %= m;
  // extended Euclid on signed 128-bit to keep the Bezout coefficients exact
  __int128 old_r = a, r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw NotInvertible(a, m, static_cast<u64>(old_r));
  __int128 x = old_s % static_cast<__int128>(m);
  if (x < 0) x += m;
  return static_cast<u64>(x);
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned r) {
  u64 x = mod_pow(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr u64 kTrialBound = 10000;

u64 pollard_brent(u64 n, u64 offset) {
  auto f = [n, offset](u64 x) { return static_cast<u64>((static_cast<u128>(x) * x + offset) % n); };
  u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
  u64 r = 1;
  constexpr u64 kBatch = 128;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      u64 lim = std::min(kBatch, r - k);
      for (u64 i = 0; i < lim; ++i) {
        y = f(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = gcd(q, n);
      k += kBatch;
    }
    r <<= 1;
  }
  if (g == n) {
    // batch overshot; walk back one step at a time
    do {
      ys = f(ys);
      g = gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

// Splits a composite n with no factors below the trial bound.
u64 find_factor(u64 n) {
  for (u64 offset = 1;; ++offset) {
    u64 d = pollard_brent(n, offset);
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = find_factor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kSmall = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kSmall) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned r = static_cast<unsigned>(std::countr_zero(d));
  d >>= r;
  // this witness set is exact for every n < 2^64
  for (u64 a : kSmall) {
    if (!miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::domain_error("factorize requires n >= 1");
  Factorization result;
  result.value = n;
  std::vector<u64> primes;
  u64 rest = n;
  for (u64 p = 2; p < kTrialBound && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      primes.push_back(p);
      rest /= p;
    }
  }
  if (rest > 1) factor_into(rest, primes);
  std::sort(primes.begin(), primes.end());
  for (u64 p : primes) {
    if (!result.factors.empty() && result.factors.back().prime == p) {
      ++result.factors.back().exponent;
    } else {
      result.factors.push_back({p, 1});
    }
  }
  return result;
}

u64 multiplicative_order(u64 a, u64 p) {
  if (!is_prime(p)) throw std::domain_error("multiplicative_order requires a prime modulus");
  a %= p;
  if (a == 0) throw NotInvertible(a, p, p);
  u64 order = p - 1;
  for (const auto& f : factorize(p - 1).factors) {
    for (unsigned i = 0; i < f.exponent; ++i) {
      if (mod_pow(a, order / f.prime, p) != 1) break;
      order /= f.prime;
    }
  }
  return order;
}

unsigned p_adic_valuation(u64 n, u64 p) {
  if (n == 0) throw std::domain_error("valuation of zero is undefined");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& pp : f.factors) {
    std::size_t current = out.size();
    u64 power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < current; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int legendre(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  return mod_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace pisano
