#pragma once

// Pisano periods.
//
// Two independent routes are provided. period_oracle walks the state map
// (U_n, U_{n+1}) -> (U_{n+1}, a U_{n+1} + b U_n) until the state repeats; it
// works for any (a, b, c, d). pisano_structured only handles K-Fibonacci
// sequences and assembles pi_K(m) from prime-power periods:
//
//   pi_K(m)   = lcm over p^e || m of pi_K(p^e)
//   pi_K(2^e) = 3 * 2^(e-1)                      K odd
//             = 2^(e + 1 - v2(gcd(K, 2^e)))        K even
//   pi_K(p)   = 4p                               odd p | K^2 + 4
//             | p - 1                            (K^2+4 / p) = +1
//             | 2(p + 1)                         (K^2+4 / p) = -1
//   pi_K(p^e) = p^(e - e0) pi_K(p)               e >= e0, e0 the lifting exponent

#include <optional>

#include "pisano/numtheory.hpp"
#include "pisano/recurrence.hpp"

namespace pisano {

struct PeriodResult {
  u64 preperiod = 0;
  u64 period = 1;

  bool pure() const noexcept { return preperiod == 0; }

  friend bool operator==(const PeriodResult&, const PeriodResult&) = default;
};

/// Definitional period: cycle structure of the state map starting at (c, d).
/// When gcd(b, m) = 1 the map is a permutation and the result is pure.
PeriodResult period_oracle(const RecurrenceParams& params, u64 m);

/// Which branch of the prime-period dispatch produced a value.
enum class PrimeBranch {
  two,           // p = 2
  three,         // p = 3
  ramified,      // odd p dividing K^2 + 4
  split,         // K^2 + 4 a nonzero quadratic residue
  inert,         // K^2 + 4 a non-residue
};

struct PrimePeriod {
  u64 period = 0;
  PrimeBranch branch = PrimeBranch::two;
  /// Branch bound whose divisors were searched (split/inert only); 0 when
  /// 2(p + 1) does not fit in 64 bits.
  u64 bound = 0;
  /// Set when no divisor of the bound matched and the oracle was used.
  bool used_oracle_fallback = false;
};

PrimePeriod pisano_prime_detail(u64 k, u64 p);
u64 pisano_prime(u64 k, u64 p);

u64 pisano_prime_power(u64 k, u64 p, unsigned e);

u64 pisano_structured(u64 k, u64 m);

bool is_k_wall_sun_sun(u64 k, u64 p);

struct WssExponent {
  unsigned exponent = 1;
  /// No change in period was observed up to the cap.
  bool saturated = false;
};

/// Largest e <= cap with pi_K(p^e) = pi_K(p).
WssExponent max_wss_exponent(u64 k, u64 p, unsigned cap);

/// K^2 + 4, throwing ArithmeticOverflow when it does not fit.
u64 discriminant(u64 k);

}  // namespace pisano
