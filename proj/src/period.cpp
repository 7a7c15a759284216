#include "pisano/period.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pisano {

namespace {

// Next term a*v + b*u mod m. For m < 2^31 everything fits in 64 bits.
struct NarrowStep {
  u64 a, b, m;
  u64 operator()(u64 u, u64 v) const { return (a * v + b * u) % m; }
};

struct WideStep {
  u64 a, b, m;
  u64 operator()(u64 u, u64 v) const {
    return static_cast<u64>((static_cast<u128>(mul_mod(a, v, m)) + mul_mod(b, u, m)) % m);
  }
};

template <class Step>
PeriodResult brent_cycle(Step f, u64 c, u64 d) {
  struct S {
    u64 u, v;
    bool operator==(const S&) const = default;
  };
  auto next = [f](S s) { return S{s.v, f(s.u, s.v)}; };
  const S start{c, d};
  // Brent: find cycle length
  u64 power = 1, lam = 1;
  S tortoise = start, hare = next(start);
  while (!(tortoise == hare)) {
    if (power == lam) {
      tortoise = hare;
      power <<= 1;
      lam = 0;
    }
    hare = next(hare);
    ++lam;
  }
  // tail length
  tortoise = hare = start;
  for (u64 i = 0; i < lam; ++i) hare = next(hare);
  u64 mu = 0;
  while (!(tortoise == hare)) {
    tortoise = next(tortoise);
    hare = next(hare);
    ++mu;
  }
  return {mu, lam};
}

bool is_identity_power(u64 k, u64 n, u64 m) {
  // For (K, 1, 0, 1) the state (U_n, U_{n+1}) equals (0, 1) iff M^n = I.
  StatePair s = matrix_power_state(RecurrenceParams::k_fibonacci(static_cast<i64>(k % m)), n, m);
  return s.u == 0 && s.v == 1 % m;
}

u64 oracle_k(u64 k, u64 m) {
  return period_oracle(RecurrenceParams::k_fibonacci(static_cast<i64>(k % m)), m).period;
}

// First exponent j in [2, cap] with pi_K(p^j) != pi_K(p), or nothing.
std::optional<unsigned> first_lift_change(u64 k, u64 p, u64 base, unsigned cap) {
  u64 pk = p;
  for (unsigned j = 2; j <= cap; ++j) {
    pk = checked_mul(pk, p);
    if (!is_identity_power(k, base, pk)) return j;
  }
  return std::nullopt;
}

template <class Step>
PeriodResult walk_state_map(Step f, bool invertible, u64 c, u64 d) {
  if (!invertible) return brent_cycle(f, c, d);
  u64 u = c, v = d, n = 0;
  do {
    u64 w = f(u, v);
    u = v;
    v = w;
    ++n;
  } while (u != c || v != d);
  return {0, n};
}

}  // namespace

PeriodResult period_oracle(const RecurrenceParams& params, u64 m) {
  if (m < 2) throw std::domain_error("modulus must be at least 2");
  const u64 a = reduce(params.a, m);
  const u64 b = reduce(params.b, m);
  const u64 c = reduce(params.c, m);
  const u64 d = reduce(params.d, m);
  const bool invertible = gcd(b, m) == 1;
  if (m < (u64{1} << 31)) return walk_state_map(NarrowStep{a, b, m}, invertible, c, d);
  return walk_state_map(WideStep{a, b, m}, invertible, c, d);
}

u64 discriminant(u64 k) {
  u64 sq = checked_mul(k, k);
  if (sq > UINT64_MAX - 4) throw ArithmeticOverflow("K^2 + 4 exceeds 64 bits");
  return sq + 4;
}

namespace {

// Divisors of prod p^e that fit in 64 bits, ascending.
std::vector<u64> divisors_below_2_64(const std::vector<PrimePower>& factors) {
  std::vector<u128> ds{1};
  for (const auto& f : factors) {
    const std::size_t n = ds.size();
    u128 pk = 1;
    for (unsigned e = 1; e <= f.exponent; ++e) {
      pk *= f.prime;
      if (pk > std::numeric_limits<u64>::max()) break;
      for (std::size_t i = 0; i < n; ++i) {
        const u128 d = ds[i] * pk;
        if (d <= std::numeric_limits<u64>::max()) ds.push_back(d);
      }
    }
  }
  std::vector<u64> out(ds.begin(), ds.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PrimePeriod pisano_prime_detail(u64 k, u64 p) {
  PrimePeriod out;
  if (p == 2) {
    out.branch = PrimeBranch::two;
    out.period = (k % 2 == 1) ? 3 : 2;
    return out;
  }
  if (p == 3) {
    out.branch = PrimeBranch::three;
    out.period = (k % 3 == 0) ? 2 : 8;
    return out;
  }
  const u64 kr = k % p;
  const u64 disc = (mul_mod(kr, kr, p) + 4) % p;
  const int symbol = legendre(disc, p);
  if (symbol == 0) {
    out.branch = PrimeBranch::ramified;
    out.period = checked_mul(4, p);
    return out;
  }
  out.branch = symbol == 1 ? PrimeBranch::split : PrimeBranch::inert;
  // 2(p + 1) can exceed 64 bits for p near 2^64, so factor p + 1 and add the 2
  std::vector<PrimePower> bound_factors = factorize(symbol == 1 ? p - 1 : p + 1).factors;
  if (symbol == -1) {
    if (!bound_factors.empty() && bound_factors.front().prime == 2) {
      ++bound_factors.front().exponent;
    } else {
      bound_factors.insert(bound_factors.begin(), PrimePower{2, 1});
    }
  }
  const u128 wide_bound = symbol == 1 ? u128{p - 1} : u128{p + 1} * 2;
  out.bound = wide_bound > std::numeric_limits<u64>::max() ? 0 : static_cast<u64>(wide_bound);
  for (u64 d : divisors_below_2_64(bound_factors)) {
    if (is_identity_power(k, d, p)) {
      out.period = d;
      return out;
    }
  }
  out.used_oracle_fallback = true;
  out.period = oracle_k(k, p);
  return out;
}

u64 pisano_prime(u64 k, u64 p) {
  return pisano_prime_detail(k, p).period;
}

u64 pisano_prime_power(u64 k, u64 p, unsigned e) {
  if (e == 0) throw std::domain_error("exponent must be positive");
  if (p == 2) {
    if (k % 2 == 1) return checked_mul(3, checked_pow(2, e - 1));
    unsigned v = std::min(p_adic_valuation(k, 2), e);
    return checked_pow(2, e + 1 - v);
  }
  // p^e must be representable even though only the period is returned
  checked_pow(p, e);
  const u64 base = pisano_prime(k, p);
  if (e == 1) return base;
  if ((mul_mod(k % p, k % p, p) + 4) % p == 0) {
    // odd divisors of K^2 + 4 never lift: e0 = 1
    return checked_mul(checked_pow(p, e - 1), base);
  }
  auto change = first_lift_change(k, p, base, e);
  if (!change) return base;
  const unsigned e0 = *change - 1;
  return checked_mul(checked_pow(p, e - e0), base);
}

u64 pisano_structured(u64 k, u64 m) {
  if (m < 2) throw std::domain_error("modulus must be at least 2");
  u64 result = 1;
  for (const auto& f : factorize(m).factors) {
    result = lcm(result, pisano_prime_power(k, f.prime, f.exponent));
  }
  return result;
}

bool is_k_wall_sun_sun(u64 k, u64 p) {
  return oracle_k(k, p) == oracle_k(k, checked_mul(p, p));
}

WssExponent max_wss_exponent(u64 k, u64 p, unsigned cap) {
  if (cap == 0) throw std::domain_error("cap must be positive");
  checked_pow(p, cap);
  auto change = first_lift_change(k, p, pisano_prime(k, p), cap);
  if (!change) return {cap, true};
  return {*change - 1, false};
}

}  // namespace pisano
