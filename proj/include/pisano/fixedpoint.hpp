#pragma once

// Fixed points of the K-Fibonacci period map m -> pi_K(m), their
// classification by K, and trajectories m, pi_K(m), pi_K^2(m), ...

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pisano/numtheory.hpp"

namespace pisano {

enum class KCategory {
  pm1_mod6,    // K = +-1 (mod 6)
  two_mod4,    // K = 2 (mod 4)
  three_mod6,  // K = 3 (mod 6)
  zero_mod4,   // K = 0 (mod 4)
};

KCategory k_category(u64 k);
std::string to_string(KCategory c);

struct PrimeBound {
  u64 prime;
  unsigned min_exponent;

  friend bool operator==(const PrimeBound&, const PrimeBound&) = default;
};

/// Symbolic fixed-point set:
///   base_values
///   U { p^j : j >= 1 }                                   if pure_power_prime
///   U { composite_base * prod p^(j_p) : j_p >= min_p }   if composite_base
/// with the extra constraint, when require_odd_prime is set, that some odd
/// allowed prime occurs with positive exponent.
struct FixedPointFamily {
  KCategory category = KCategory::pm1_mod6;
  std::vector<u64> base_values;
  std::optional<u64> composite_base;
  std::vector<PrimeBound> allowed_primes;
  std::optional<u64> pure_power_prime;
  bool require_odd_prime = false;

  friend bool operator==(const FixedPointFamily&, const FixedPointFamily&) = default;
};

/// The published classification exists in two literal wordings that do not
/// agree with each other, nor (in every category) with direct computation.
enum class FamilyReading {
  calibrated,       // agrees with the oracle on every tested (K, m)
  stated,           // the headline classification, also used for the per-K table
  stated_converse,  // the form used when deriving "fixed point => family"
};

std::string to_string(FamilyReading r);

FixedPointFamily predicted_family(u64 k);
FixedPointFamily family_reading(u64 k, FamilyReading reading);

bool family_contains(const FixedPointFamily& family, u64 m);

/// Members of the family in [2, bound], ascending.
std::vector<u64> family_members(const FixedPointFamily& family, u64 bound);

/// Human-readable form such as "2 or 4×17^{j+1}".
std::string describe(const FixedPointFamily& family);

bool is_fixed_point(u64 k, u64 m);

std::vector<u64> enumerate_fixed_points(u64 k, u64 bound);

class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a trajectory enters a cycle that is neither a fixed point nor
/// the {2, 3} two-cycle. The classification says this cannot happen.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Terminal { fixed_point, two_cycle, exhausted };

std::string to_string(Terminal t);

struct Trajectory {
  u64 start = 2;
  /// steps[0] = start, steps[i + 1] = pi_K(steps[i]).
  std::vector<u64> steps;
  Terminal terminal = Terminal::exhausted;
  /// Applications of pi_K before the terminal value (or two-cycle) is first reached.
  u64 length = 0;

  /// The terminal fixed point, 0 for the two-cycle.
  u64 terminal_value() const;
};

inline constexpr u64 kDefaultMaxIters = 200;

Trajectory trajectory(u64 k, u64 m, u64 max_iters = kDefaultMaxIters);

/// P_K(m): terminal fixed point of the trajectory, 0 for the {2, 3} cycle.
u64 terminal_value(u64 k, u64 m, u64 max_iters = kDefaultMaxIters);

/// Sum over odd primes q | m, q != 3, q not dividing K^2 + 4, of
/// v_q(m) (log q - log 3). Diagnostic only.
double s_diagnostic(u64 k, u64 m);

/// v_2(m) + v_3(m)
unsigned g_valuation(u64 m);

struct BoundRatios {
  double t_ratio = 0;
  /// Absent when the trajectory ends in the two-cycle.
  std::optional<double> p_ratio;
};

BoundRatios bound_ratios(u64 k, u64 m, u64 max_iters = kDefaultMaxIters);

/// 1/log 2 + 1/(2 log 3 - 3 log 2)
double trajectory_bound_constant();
/// (log 8 - log 3) / (2 log 3 - 3 log 2)
double terminal_bound_constant();

}  // namespace pisano
