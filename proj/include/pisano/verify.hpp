#pragma once

// Batch verification harness. Each suite sweeps a (K, m) grid, compares the
// structured engine, the classification and the closed forms against the
// brute-force oracle, and produces a VerificationReport.
//
// Work is split into per-item tasks that run on a worker pool; results are
// stored by item index and reduced in (K, m) order, so a report's content
// does not depend on the worker count.

#include <optional>
#include <string>
#include <vector>

#include "pisano/numtheory.hpp"
#include "pisano/report.hpp"

namespace pisano {

struct IntRange {
  i64 lo = 0;
  i64 hi = 0;

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// "lo..hi" (inclusive) or a single integer.
IntRange parse_range(const std::string& text);

struct SweepConfig {
  /// Unset ranges fall back to each suite's default.
  std::optional<IntRange> k_range;
  std::optional<IntRange> m_range;
  std::vector<std::string> suites;
  unsigned parallelism = 1;
  u64 max_iters = 200;
};

/// Suite identifiers in canonical order.
const std::vector<std::string>& suite_ids();
bool is_suite_id(const std::string& id);

struct SuiteDefaults {
  IntRange k_range;
  IntRange m_range;
};
SuiteDefaults suite_defaults(const std::string& suite);

/// Throws std::invalid_argument for unknown suites, empty ranges or zero
/// parallelism.
void validate(const SweepConfig& config);

std::vector<VerificationReport> run_suite(const SweepConfig& config);

/// Number of worker threads from PISANO_PARALLELISM, or `fallback`.
unsigned parallelism_from_env(unsigned fallback);

}  // namespace pisano
