#pragma once

// General (a, b, c, d) recurrences: the named sequences, the degenerate
// b = -1 parameters, and the conjectured fixed-point families for b = -1.
//
// Everything here goes through period_oracle; there is no structured fast
// path for b != 1.

#include <optional>
#include <string>
#include <vector>

#include "pisano/fixedpoint.hpp"
#include "pisano/period.hpp"
#include "pisano/recurrence.hpp"

namespace pisano {

enum class NamedSequence { fibonacci, lucas, pell, jacobsthal };

RecurrenceParams params_of(NamedSequence seq);
std::string to_string(NamedSequence seq);
std::optional<NamedSequence> named_sequence_from_string(const std::string& name);

/// Eventual cycle length for each m in [m_lo, m_hi].
std::vector<u64> named_period_row(NamedSequence seq, u64 m_lo, u64 m_hi);

/// All m in [2, bound] whose (eventual) cycle length equals m.
std::vector<u64> oracle_fixed_points(const RecurrenceParams& params, u64 bound);

std::vector<u64> lucas_fixed_points(u64 bound);
std::vector<u64> pell_fixed_points(u64 bound);
std::vector<u64> jacobsthal_fixed_points(u64 bound);

bool is_degenerate_b_minus1(i64 a);

/// Closed form of pi_(a,-1)(m) for a in {-2, -1, 0, 1, 2}.
u64 degenerate_period(i64 a, u64 m);

/// base * prod p^(j_p), j_p >= min_p, no other primes.
struct CompositeForm {
  u64 base = 1;
  std::vector<PrimeBound> primes;

  friend bool operator==(const CompositeForm&, const CompositeForm&) = default;
};

/// Conjectured fixed points of the (a, -1, 0, 1) sequence.
struct BMinus1Family {
  i64 a = 0;
  /// "a>2 (i)" .. "a<-1 (v)"
  std::string case_label;
  /// a = 3: no prime has fixed pure powers.
  bool singular = false;
  /// The case admits pure powers of the critical prime, which is found
  /// empirically (see critical_primes).
  bool pure_powers_of_critical_prime = false;
  std::vector<CompositeForm> composites;
};

BMinus1Family b_minus1_family(i64 a);

/// Membership, with pure powers taken over the supplied critical primes.
bool b_minus1_contains(const BMinus1Family& family, const std::vector<u64>& critical, u64 m);

std::string describe(const BMinus1Family& family);

/// Primes p | a^2 - 4 such that every p^j <= bound is a fixed point of
/// (a, -1, 0, 1). The critical prime is the unique such prime when one exists.
std::vector<u64> critical_primes(i64 a, u64 bound);
std::optional<u64> critical_prime(i64 a, u64 bound);

}  // namespace pisano
