#pragma once

// Exact 64-bit integer primitives: gcd/lcm, modular arithmetic,
// deterministic primality, factorization and multiplicative order.
//
// All public values are unsigned 64-bit. Products are formed in 128-bit,
// and any result that would not fit in 64 bits raises ArithmeticOverflow
// instead of wrapping.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pisano {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

class ArithmeticOverflow : public std::overflow_error {
 public:
  explicit ArithmeticOverflow(const std::string& what) : std::overflow_error(what) {}
};

class NotInvertible : public std::domain_error {
 public:
  NotInvertible(u64 value, u64 modulus, u64 gcd);
  u64 value() const noexcept { return value_; }
  u64 modulus() const noexcept { return modulus_; }
  u64 gcd() const noexcept { return gcd_; }

 private:
  u64 value_;
  u64 modulus_;
  u64 gcd_;
};

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod prime^exponent, primes strictly increasing. n = 1 has no factors.
struct Factorization {
  u64 value = 1;
  std::vector<PrimePower> factors;

  bool has_prime(u64 p) const;
  unsigned exponent_of(u64 p) const;
  std::vector<u64> primes() const;
  /// Multiplies the prime powers back together (throws on overflow).
  u64 reassemble() const;
};

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

/// a * b, throwing ArithmeticOverflow if the product exceeds 64 bits.
u64 checked_mul(u64 a, u64 b);
/// base^exp over the integers, throwing on overflow.
u64 checked_pow(u64 base, unsigned exp);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 mod_pow(u64 base, u64 exp, u64 m);
/// Signed base is reduced into [0, m) first.
u64 mod_pow(i64 base, u64 exp, u64 m);

/// Canonical residue of a signed value in [0, m).
u64 reduce(i64 value, u64 m);

u64 mod_inv(u64 a, u64 m);

bool is_prime(u64 n);

Factorization factorize(u64 n);

/// Least d >= 1 with a^d = 1 (mod p). Only defined for prime p.
u64 multiplicative_order(u64 a, u64 p);

unsigned p_adic_valuation(u64 n, u64 p);

/// All positive divisors of the factored number, ascending.
std::vector<u64> divisors(const Factorization& f);

/// Euler's criterion for odd prime p: 0 if p | a, 1 for a nonzero
/// quadratic residue, -1 otherwise.
int legendre(u64 a, u64 p);

}  // namespace pisano
