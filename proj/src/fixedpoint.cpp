#include "pisano/fixedpoint.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pisano/period.hpp"

namespace pisano {

KCategory k_category(u64 k) {
  if (k == 0) throw std::domain_error("K must be positive");
  if (k % 2 == 1) return k % 3 == 0 ? KCategory::three_mod6 : KCategory::pm1_mod6;
  return k % 4 == 2 ? KCategory::two_mod4 : KCategory::zero_mod4;
}

std::string to_string(KCategory c) {
  switch (c) {
    case KCategory::pm1_mod6: return "PM1_MOD6";
    case KCategory::two_mod4: return "TWO_MOD4";
    case KCategory::three_mod6: return "THREE_MOD6";
    case KCategory::zero_mod4: return "ZERO_MOD4";
  }
  return "?";
}

std::string to_string(FamilyReading r) {
  switch (r) {
    case FamilyReading::calibrated: return "calibrated";
    case FamilyReading::stated: return "stated";
    case FamilyReading::stated_converse: return "stated-converse";
  }
  return "?";
}

FixedPointFamily predicted_family(u64 k) {
  return family_reading(k, FamilyReading::calibrated);
}

FixedPointFamily family_reading(u64 k, FamilyReading reading) {
  const Factorization disc = factorize(discriminant(k));
  FixedPointFamily fam;
  fam.category = k_category(k);
  auto odd_primes = [&](unsigned min_exponent) {
    std::vector<PrimeBound> out;
    for (const auto& f : disc.factors) {
      if (f.prime != 2) out.push_back({f.prime, min_exponent});
    }
    return out;
  };
  const bool calibrated = reading == FamilyReading::calibrated;

  switch (fam.category) {
    case KCategory::pm1_mod6:
      fam.composite_base = 24;
      fam.allowed_primes = odd_primes(0);
      break;
    case KCategory::two_mod4:
      fam.pure_power_prime = 2;
      // the headline wording lets the mixed family start at 2^1, which admits 2 * p
      fam.composite_base = reading == FamilyReading::stated ? 2 : 4;
      fam.allowed_primes = odd_primes(0);
      fam.allowed_primes.insert(fam.allowed_primes.begin(), PrimeBound{2, 0});
      fam.require_odd_prime = calibrated;
      break;
    case KCategory::three_mod6:
      fam.base_values = {6};
      fam.composite_base = 12;
      fam.allowed_primes = odd_primes(0);
      fam.require_odd_prime = calibrated;
      break;
    case KCategory::zero_mod4:
      fam.base_values = {2};
      fam.composite_base = 4;
      fam.allowed_primes = odd_primes(reading == FamilyReading::stated ? 1 : 0);
      fam.require_odd_prime = calibrated;
      break;
  }
  return fam;
}

namespace {

bool is_pure_power(u64 m, u64 p) {
  if (m < p) return false;
  while (m % p == 0) m /= p;
  return m == 1;
}

}  // namespace

bool family_contains(const FixedPointFamily& family, u64 m) {
  if (m < 2) return false;
  if (std::find(family.base_values.begin(), family.base_values.end(), m) != family.base_values.end()) {
    return true;
  }
  if (family.pure_power_prime && is_pure_power(m, *family.pure_power_prime)) return true;
  if (!family.composite_base || m % *family.composite_base != 0) return false;

  const Factorization rest = factorize(m / *family.composite_base);
  for (const auto& f : rest.factors) {
    auto it = std::find_if(family.allowed_primes.begin(), family.allowed_primes.end(),
                           [&](const PrimeBound& b) { return b.prime == f.prime; });
    if (it == family.allowed_primes.end()) return false;
  }
  bool has_odd = false;
  for (const auto& b : family.allowed_primes) {
    unsigned e = rest.exponent_of(b.prime);
    if (e < b.min_exponent) return false;
    if (b.prime != 2 && e > 0) has_odd = true;
  }
  return !family.require_odd_prime || has_odd;
}

std::vector<u64> family_members(const FixedPointFamily& family, u64 bound) {
  std::vector<u64> out;
  for (u64 m = 2; m <= bound; ++m) {
    if (family_contains(family, m)) out.push_back(m);
  }
  return out;
}

namespace {

std::string power_token(u64 prime, const std::string& var, unsigned offset) {
  std::string exp = offset == 0 ? var : var + "+" + std::to_string(offset);
  if (exp.size() > 1) exp = "{" + exp + "}";
  return std::to_string(prime) + "^" + exp;
}

}  // namespace

std::string describe(const FixedPointFamily& family) {
  std::vector<std::string> alternatives;
  for (u64 v : family.base_values) alternatives.push_back(std::to_string(v));
  if (family.pure_power_prime) alternatives.push_back(power_token(*family.pure_power_prime, "j", 1));

  const auto odd_allowed = std::count_if(family.allowed_primes.begin(), family.allowed_primes.end(),
                                         [](const PrimeBound& b) { return b.prime != 2; });
  if (family.composite_base && !(family.require_odd_prime && odd_allowed == 0)) {
    u64 base = *family.composite_base;
    std::vector<PrimeBound> primes = family.allowed_primes;
    std::size_t odd_count = std::count_if(primes.begin(), primes.end(), [](const PrimeBound& b) { return b.prime != 2; });
    const bool single_required = family.require_odd_prime && odd_count == 1;

    std::vector<std::pair<u64, unsigned>> tokens;  // prime, offset
    bool leading_two = false;
    if (!primes.empty() && primes.front().prime == 2 && is_pure_power(base, 2)) {
      unsigned t = p_adic_valuation(base, 2);
      tokens.push_back({2, primes.front().min_exponent + t});
      primes.erase(primes.begin());
      leading_two = true;
    }
    for (const auto& b : primes) {
      unsigned offset = b.min_exponent;
      if (single_required && b.prime != 2) offset = std::max(offset, 1u);
      tokens.push_back({b.prime, offset});
    }
    std::string term = leading_two ? "" : std::to_string(base);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      std::string var = tokens.size() == 1 ? "j" : "j" + std::to_string(i + 1);
      if (!term.empty()) term += "×";
      term += power_token(tokens[i].first, var, tokens[i].second);
    }
    if (family.require_odd_prime && odd_count > 1) term += " (some odd exponent > 0)";
    alternatives.push_back(term);
  }

  std::string out;
  for (std::size_t i = 0; i < alternatives.size(); ++i) {
    if (i > 0) out += " or ";
    out += alternatives[i];
  }
  return out;
}

bool is_fixed_point(u64 k, u64 m) {
  return pisano_structured(k, m) == m;
}

std::vector<u64> enumerate_fixed_points(u64 k, u64 bound) {
  std::vector<u64> out;
  for (u64 m = 2; m <= bound; ++m) {
    if (is_fixed_point(k, m)) out.push_back(m);
  }
  return out;
}

std::string to_string(Terminal t) {
  switch (t) {
    case Terminal::fixed_point: return "fixed";
    case Terminal::two_cycle: return "2-cycle";
    case Terminal::exhausted: return "exhausted";
  }
  return "?";
}

u64 Trajectory::terminal_value() const {
  switch (terminal) {
    case Terminal::fixed_point: return steps.back();
    case Terminal::two_cycle: return 0;
    case Terminal::exhausted: break;
  }
  throw NoConvergence("trajectory of " + std::to_string(start) + " did not converge within " +
                      std::to_string(steps.size() - 1) + " iterations");
}

Trajectory trajectory(u64 k, u64 m, u64 max_iters) {
  if (m < 2) throw std::domain_error("modulus must be at least 2");
  Trajectory t;
  t.start = m;
  t.steps.push_back(m);
  std::set<u64> seen{m};
  u64 cur = m;
  for (u64 i = 0; i < max_iters; ++i) {
    const u64 next = pisano_structured(k, cur);
    if (next == cur) {
      t.terminal = Terminal::fixed_point;
      t.length = t.steps.size() - 1;
      return t;
    }
    if (!seen.insert(next).second) {
      const auto entry = std::find(t.steps.begin(), t.steps.end(), next);
      const bool two_three = t.steps.end() - entry == 2 && (next == 2 || next == 3) && (cur == 2 || cur == 3);
      if (!two_three) {
        throw InvariantViolation("trajectory of " + std::to_string(m) + " for K=" + std::to_string(k) +
                                 " entered a non-trivial cycle at " + std::to_string(next));
      }
      if (k_category(k) != KCategory::three_mod6) {
        throw InvariantViolation("two-cycle {2,3} reached for K=" + std::to_string(k) +
                                 " outside K = 3 (mod 6)");
      }
      t.length = static_cast<u64>(entry - t.steps.begin());
      t.steps.push_back(next);
      t.terminal = Terminal::two_cycle;
      return t;
    }
    t.steps.push_back(next);
    cur = next;
  }
  t.terminal = Terminal::exhausted;
  t.length = t.steps.size() - 1;
  return t;
}

u64 terminal_value(u64 k, u64 m, u64 max_iters) {
  return trajectory(k, m, max_iters).terminal_value();
}

double s_diagnostic(u64 k, u64 m) {
  double s = 0;
  for (const auto& f : factorize(m).factors) {
    const u64 q = f.prime;
    if (q == 2 || q == 3) continue;
    if ((mul_mod(k % q, k % q, q) + 4) % q == 0) continue;
    s += f.exponent * (std::log(static_cast<double>(q)) - std::log(3.0));
  }
  return s;
}

unsigned g_valuation(u64 m) {
  return p_adic_valuation(m, 2) + p_adic_valuation(m, 3);
}

BoundRatios bound_ratios(u64 k, u64 m, u64 max_iters) {
  if (m < 2) throw std::domain_error("modulus must be at least 2");
  const Trajectory t = trajectory(k, m, max_iters);
  const u64 p = t.terminal_value();
  const double log_m = std::log(static_cast<double>(m));
  BoundRatios r;
  r.t_ratio = static_cast<double>(t.length) / log_m;
  if (p != 0) r.p_ratio = std::log(static_cast<double>(p)) / log_m;
  return r;
}

double trajectory_bound_constant() {
  return 1.0 / std::log(2.0) + 1.0 / (2 * std::log(3.0) - 3 * std::log(2.0));
}

double terminal_bound_constant() {
  return (std::log(8.0) - std::log(3.0)) / (2 * std::log(3.0) - 3 * std::log(2.0));
}

}  // namespace pisano
