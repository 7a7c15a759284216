#pragma once

// Verification reports and their JSON / CSV encodings.
//
// JSON:
//   { "suite", "checked", "passed", "counts": {classification: n},
//     "violations": [{"k", "m", "expected", "actual", "classification"}],
//     "violations_omitted", "notes": [...], "wall_time_ms" }
//
// CSV: "# key: value" metadata lines (suite, checked, passed, count.<class>,
// omitted.<class>, note, wall_time_ms), then the header
//   suite,k,m,expected,actual,classification
// and one row per violation.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pisano/numtheory.hpp"

namespace pisano {

enum class Classification {
  theorem_violation,
  paper_statement_discrepancy,
  conjecture_counterexample,
};

std::string to_string(Classification c);
std::optional<Classification> classification_from_string(const std::string& s);

struct Violation {
  i64 k = 0;
  u64 m = 0;
  std::string expected;
  std::string actual;
  Classification classification = Classification::theorem_violation;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  std::string suite;
  u64 checked = 0;
  u64 passed = 0;
  std::vector<Violation> violations;
  /// Violations dropped by a serialization cap, per classification.
  /// Zero for reports that were never capped.
  std::array<u64, 3> omitted_by_class{};
  std::vector<std::string> notes;
  u64 wall_time_ms = 0;

  u64 count(Classification c) const;
  u64 violations_omitted() const { return omitted_by_class[0] + omitted_by_class[1] + omitted_by_class[2]; }
  u64 total_violations() const { return violations.size() + violations_omitted(); }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

enum class ReportFormat { json, csv };

struct SerializeOptions {
  /// Maximum number of violations written; the rest are counted as omitted.
  std::size_t violation_cap = 1000;
  /// Timing is left out (written as 0) unless asked for, so reports of
  /// identical sweeps are byte-identical.
  bool include_timing = false;
};

std::string report_serialize(const VerificationReport& r, ReportFormat format,
                             const SerializeOptions& options = {});

/// Inverse of report_serialize. Throws std::invalid_argument on malformed input.
VerificationReport report_parse(const std::string& text, ReportFormat format);

}  // namespace pisano
