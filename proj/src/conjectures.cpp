#include "pisano/conjectures.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace pisano {

RecurrenceParams params_of(NamedSequence seq) {
  switch (seq) {
    case NamedSequence::fibonacci: return {1, 1, 0, 1};
    case NamedSequence::lucas: return {1, 1, 2, 1};
    case NamedSequence::pell: return {2, 1, 0, 1};
    case NamedSequence::jacobsthal: return {1, 2, 0, 1};
  }
  throw std::domain_error("unknown sequence");
}

std::string to_string(NamedSequence seq) {
  switch (seq) {
    case NamedSequence::fibonacci: return "fibonacci";
    case NamedSequence::lucas: return "lucas";
    case NamedSequence::pell: return "pell";
    case NamedSequence::jacobsthal: return "jacobsthal";
  }
  return "?";
}

std::optional<NamedSequence> named_sequence_from_string(const std::string& name) {
  for (auto s : {NamedSequence::fibonacci, NamedSequence::lucas, NamedSequence::pell, NamedSequence::jacobsthal}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::vector<u64> named_period_row(NamedSequence seq, u64 m_lo, u64 m_hi) {
  if (m_lo < 2 || m_lo > m_hi) throw std::domain_error("need 2 <= m_lo <= m_hi");
  std::vector<u64> row;
  row.reserve(m_hi - m_lo + 1);
  for (u64 m = m_lo; m <= m_hi; ++m) row.push_back(period_oracle(params_of(seq), m).period);
  return row;
}

std::vector<u64> oracle_fixed_points(const RecurrenceParams& params, u64 bound) {
  std::vector<u64> out;
  for (u64 m = 2; m <= bound; ++m) {
    if (period_oracle(params, m).period == m) out.push_back(m);
  }
  return out;
}

std::vector<u64> lucas_fixed_points(u64 bound) {
  return oracle_fixed_points(params_of(NamedSequence::lucas), bound);
}

std::vector<u64> pell_fixed_points(u64 bound) {
  return oracle_fixed_points(params_of(NamedSequence::pell), bound);
}

std::vector<u64> jacobsthal_fixed_points(u64 bound) {
  return oracle_fixed_points(params_of(NamedSequence::jacobsthal), bound);
}

bool is_degenerate_b_minus1(i64 a) {
  return a >= -2 && a <= 2;
}

u64 degenerate_period(i64 a, u64 m) {
  if (m < 2) throw std::domain_error("modulus must be at least 2");
  switch (a) {
    case 1: return m == 2 ? 3 : 6;
    case -1: return 3;
    case 2: return m;
    case -2: return m % 2 == 0 ? m : checked_mul(2, m);
    case 0: return m == 2 ? 2 : 4;
    default: break;
  }
  throw std::domain_error("a = " + std::to_string(a) + " is not a degenerate b = -1 parameter");
}

namespace {

u64 positive_mod(i64 a, i64 n) {
  i64 r = a % n;
  return static_cast<u64>(r < 0 ? r + n : r);
}

std::vector<PrimeBound> all_primes(const Factorization& f, unsigned min_exponent, u64 skip = 0) {
  std::vector<PrimeBound> out;
  for (const auto& pp : f.factors) {
    if (pp.prime != skip) out.push_back({pp.prime, min_exponent});
  }
  return out;
}

bool form_contains(const CompositeForm& form, u64 m) {
  if (m % form.base != 0) return false;
  const Factorization rest = factorize(m / form.base);
  for (const auto& f : rest.factors) {
    if (std::none_of(form.primes.begin(), form.primes.end(), [&](const PrimeBound& b) { return b.prime == f.prime; })) {
      return false;
    }
  }
  return std::all_of(form.primes.begin(), form.primes.end(),
                     [&](const PrimeBound& b) { return rest.exponent_of(b.prime) >= b.min_exponent; });
}

}  // namespace

BMinus1Family b_minus1_family(i64 a) {
  if (is_degenerate_b_minus1(a)) {
    throw std::domain_error("a = " + std::to_string(a) + " is a degenerate b = -1 parameter");
  }
  const u64 abs_a = static_cast<u64>(std::llabs(a));
  const u64 disc = checked_mul(abs_a, abs_a) - 4;
  const Factorization f = factorize(disc);
  const u64 smallest = f.factors.front().prime;

  BMinus1Family fam;
  fam.a = a;
  fam.pure_powers_of_critical_prime = true;
  const std::string sign = a > 0 ? "a>2" : "a<-1";
  const bool odd = abs_a % 2 == 1;
  const u64 r6 = positive_mod(a, 6);
  const u64 r4 = positive_mod(a, 4);

  if (odd && r6 == 1) {
    fam.case_label = sign + " (i)";
    if (a > 0) {
      fam.composites.push_back({6, all_primes(f, 0)});
    } else {
      // 2^j1 * 3^(j2+1) * prod p^(j+1)
      CompositeForm form{3, {{2, 0}, {3, 0}}};
      for (const auto& b : all_primes(f, 1, 3)) form.primes.push_back(b);
      fam.composites.push_back(form);
    }
  } else if (!odd && r4 == 2) {
    fam.case_label = sign + " (ii)";
    CompositeForm form{2, {{2, 0}}};
    for (const auto& b : all_primes(f, 0, 2)) form.primes.push_back(b);
    fam.composites.push_back(form);
  } else if (odd && r6 == 3) {
    fam.case_label = sign + " (iii)";
    fam.composites.push_back({12, all_primes(f, 0)});
    if (a == 3) {
      fam.singular = true;
      fam.pure_powers_of_critical_prime = false;
    }
  } else if (!odd && r4 == 0) {
    fam.case_label = sign + " (iv)";
    fam.composites.push_back({2, all_primes(f, 0, 2)});
    fam.composites.push_back({4, all_primes(f, 0, 2)});
  } else {
    fam.case_label = sign + " (v)";
    if (a > 0) {
      CompositeForm form{6, {{smallest, 1}}};
      for (const auto& b : all_primes(f, 0, smallest)) form.primes.push_back(b);
      fam.composites.push_back(form);
    } else {
      fam.composites.push_back({6, all_primes(f, 0, 3)});
    }
  }
  return fam;
}

bool b_minus1_contains(const BMinus1Family& family, const std::vector<u64>& critical, u64 m) {
  if (m < 2) return false;
  if (family.pure_powers_of_critical_prime) {
    for (u64 p : critical) {
      u64 x = m;
      while (x % p == 0) x /= p;
      if (x == 1) return true;
    }
  }
  return std::any_of(family.composites.begin(), family.composites.end(),
                     [m](const CompositeForm& form) { return form_contains(form, m); });
}

std::string describe(const BMinus1Family& family) {
  std::vector<std::string> alternatives;
  if (family.pure_powers_of_critical_prime) alternatives.push_back("p^j (critical prime p)");
  for (const auto& form : family.composites) {
    std::string term = std::to_string(form.base);
    for (std::size_t i = 0; i < form.primes.size(); ++i) {
      std::string exp = "j" + std::to_string(i + 1);
      if (form.primes[i].min_exponent > 0) exp += "+" + std::to_string(form.primes[i].min_exponent);
      term += "×" + std::to_string(form.primes[i].prime) + "^{" + exp + "}";
    }
    alternatives.push_back(term);
  }
  std::string out = family.case_label + ": ";
  for (std::size_t i = 0; i < alternatives.size(); ++i) {
    if (i > 0) out += " or ";
    out += alternatives[i];
  }
  return out;
}

std::vector<u64> critical_primes(i64 a, u64 bound) {
  if (is_degenerate_b_minus1(a)) {
    throw std::domain_error("a = " + std::to_string(a) + " is a degenerate b = -1 parameter");
  }
  const u64 abs_a = static_cast<u64>(std::llabs(a));
  const RecurrenceParams params{a, -1, 0, 1};
  std::vector<u64> out;
  for (const auto& f : factorize(checked_mul(abs_a, abs_a) - 4).factors) {
    if (f.prime > bound) continue;
    bool all_fixed = true;
    for (u64 q = f.prime;; q *= f.prime) {
      if (period_oracle(params, q).period != q) {
        all_fixed = false;
        break;
      }
      if (q > bound / f.prime) break;
    }
    if (all_fixed) out.push_back(f.prime);
  }
  return out;
}

std::optional<u64> critical_prime(i64 a, u64 bound) {
  auto primes = critical_primes(a, bound);
  if (primes.size() == 1) return primes.front();
  return std::nullopt;
}

}  // namespace pisano
