#include <doctest.h>

#include "pisano/report.hpp"

using namespace pisano;

namespace {

VerificationReport sample() {
  VerificationReport r;
  r.suite = "table1";
  r.checked = 10;
  r.passed = 8;
  r.violations.push_back({3, 12, "stated: fixed", "not fixed", Classification::paper_statement_discrepancy});
  r.violations.push_back({-5, 21, "a, \"quoted\" value", "x", Classification::conjecture_counterexample});
  r.notes = {"first note", "K=3: {6,156}"};
  r.wall_time_ms = 0;
  return r;
}

std::size_t data_lines(const std::string& csv) {
  std::size_t n = 0, start = 0;
  while (start < csv.size()) {
    const auto end = csv.find('\n', start);
    if (csv[start] != '#') ++n;
    start = end + 1;
  }
  return n;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("empty report as json") {
    VerificationReport r;
    r.suite = "parity";
    const auto text = report_serialize(r, ReportFormat::json);
    CHECK(text.find("\"violations\": []") != std::string::npos);
    CHECK(report_parse(text, ReportFormat::json) == r);
  }

  TEST_CASE("one violation as csv") {
    VerificationReport r;
    r.suite = "lcm-law";
    r.checked = r.passed = 1;
    r.violations.push_back({2, 13, "a", "b", Classification::theorem_violation});
    const auto text = report_serialize(r, ReportFormat::csv);
    CHECK(data_lines(text) == 2);
    CHECK(report_parse(text, ReportFormat::csv) == r);
  }

  TEST_CASE("round trips") {
    const auto r = sample();
    for (auto f : {ReportFormat::json, ReportFormat::csv}) {
      const auto text = report_serialize(r, f);
      CHECK(report_parse(text, f) == r);
      CHECK(report_serialize(report_parse(text, f), f) == text);
    }
  }

  TEST_CASE("counts and caps") {
    auto r = sample();
    CHECK(r.count(Classification::theorem_violation) == 0);
    CHECK(r.count(Classification::paper_statement_discrepancy) == 1);
    SerializeOptions capped;
    capped.violation_cap = 1;
    for (auto f : {ReportFormat::json, ReportFormat::csv}) {
      const auto back = report_parse(report_serialize(r, f, capped), f);
      CHECK(back.violations.size() == 1);
      CHECK(back.violations_omitted() == 1);
      CHECK(back.omitted_by_class[2] == 1);
      CHECK(back.total_violations() == 2);
      CHECK(back.count(Classification::conjecture_counterexample) == 1);
    }
  }

  TEST_CASE("timing is left out unless requested") {
    auto r = sample();
    r.wall_time_ms = 1234;
    CHECK(report_serialize(r, ReportFormat::json).find("1234") == std::string::npos);
    SerializeOptions timed;
    timed.include_timing = true;
    CHECK(report_serialize(r, ReportFormat::json, timed).find("\"wall_time_ms\": 1234") != std::string::npos);
    CHECK(report_parse(report_serialize(r, ReportFormat::csv, timed), ReportFormat::csv).wall_time_ms == 1234);
  }

  TEST_CASE("json field order") {
    const auto text = report_serialize(sample(), ReportFormat::json);
    const char* keys[] = {"\"suite\"", "\"checked\"", "\"passed\"", "\"counts\"", "\"violations\"",
                          "\"violations_omitted\"", "\"notes\"", "\"wall_time_ms\""};
    std::size_t last = 0;
    for (const char* k : keys) {
      const auto pos = text.find(k);
      REQUIRE(pos != std::string::npos);
      CHECK(pos >= last);
      last = pos;
    }
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(report_parse("{", ReportFormat::json), std::invalid_argument);
    CHECK_THROWS_AS(report_parse("{}", ReportFormat::json), std::invalid_argument);
    CHECK_THROWS_AS(report_parse("nonsense\n", ReportFormat::csv), std::invalid_argument);
    CHECK_THROWS_AS(report_parse("# checked: -1\nsuite,k,m,expected,actual,classification\n", ReportFormat::csv),
                    std::invalid_argument);
    CHECK_THROWS_AS(report_parse("suite,k,m,expected,actual,classification\nx,1,2,a,b,bogus\n", ReportFormat::csv),
                    std::invalid_argument);
    CHECK(classification_from_string("theorem-violation") == Classification::theorem_violation);
    CHECK_FALSE(classification_from_string("nope").has_value());
  }
}
