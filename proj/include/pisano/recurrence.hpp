#pragma once

// Binary recurrences U_n = a*U_{n-1} + b*U_{n-2} with U_0 = c, U_1 = d,
// evaluated modulo m. Negative parameters are canonicalized to residues
// before any arithmetic.

#include <vector>

#include "pisano/numtheory.hpp"

namespace pisano {

struct RecurrenceParams {
  i64 a = 1;
  i64 b = 1;
  i64 c = 0;
  i64 d = 1;

  /// The K-Fibonacci sequence (K, 1, 0, 1).
  static constexpr RecurrenceParams k_fibonacci(i64 k) { return {k, 1, 0, 1}; }

  friend bool operator==(const RecurrenceParams&, const RecurrenceParams&) = default;
};

/// Consecutive terms (U_n, U_{n+1}) reduced modulo `modulus`.
struct StatePair {
  u64 u = 0;
  u64 v = 0;
  u64 modulus = 2;

  friend bool operator==(const StatePair&, const StatePair&) = default;
};

StatePair initial_state(const RecurrenceParams& params, u64 m);

StatePair step(const RecurrenceParams& params, const StatePair& s);

/// U_0 .. U_{count-1} modulo m.
std::vector<u64> sequence_mod(const RecurrenceParams& params, u64 m, u64 count);

/// (U_n, U_{n+1}) modulo m by squaring the companion matrix [[a, b], [1, 0]].
StatePair matrix_power_state(const RecurrenceParams& params, u64 n, u64 m);

}  // namespace pisano
