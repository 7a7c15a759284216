#include <doctest.h>

#include <cstdlib>

#include "pisano/verify.hpp"

using namespace pisano;

namespace {

std::string serialize_all(const std::vector<VerificationReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += report_serialize(r, ReportFormat::json);
    out += report_serialize(r, ReportFormat::csv);
  }
  return out;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("parse_range") {
    CHECK(parse_range("1..24") == IntRange{1, 24});
    CHECK(parse_range("7") == IntRange{7, 7});
    CHECK(parse_range("-20..20") == IntRange{-20, 20});
    CHECK_THROWS_AS(parse_range("5..2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("a..b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("1..."), std::invalid_argument);
    CHECK_THROWS_AS(parse_range(""), std::invalid_argument);
  }

  TEST_CASE("suite ids") {
    CHECK(suite_ids().size() == 17);
    for (const auto& id : suite_ids()) {
      CHECK(is_suite_id(id));
      CHECK_NOTHROW(suite_defaults(id));
    }
    CHECK_FALSE(is_suite_id("nope"));
  }

  TEST_CASE("validate") {
    SweepConfig c;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c.suites = {"nope"};
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c.suites = {"parity"};
    CHECK_NOTHROW(validate(c));
    c.parallelism = 0;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c.parallelism = 1;
    c.m_range = IntRange{1, 10};
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c.m_range.reset();
    c.k_range = IntRange{0, 3};
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c.suites = {"b-minus1"};
    CHECK_NOTHROW(validate(c));
  }

  TEST_CASE("smallest sweep") {
    SweepConfig c;
    c.suites = {"oracle-equivalence"};
    c.k_range = IntRange{5, 5};
    c.m_range = IntRange{2, 2};
    const auto reports = run_suite(c);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].suite == "oracle-equivalence");
    CHECK(reports[0].checked == 1);
    CHECK(reports[0].passed == 1);
  }

  TEST_CASE("fibonacci-special") {
    SweepConfig c;
    c.suites = {"fibonacci-special"};
    c.m_range = IntRange{2, 3000};
    const auto r = run_suite(c).at(0);
    CHECK(r.violations.empty());
    CHECK(r.passed == r.checked);
    CHECK(r.notes.at(0) == "fixed points: {24,120,600,3000}");
  }

  TEST_CASE("table1 has no theorem violations") {
    SweepConfig c;
    c.suites = {"table1"};
    c.k_range = IntRange{1, 24};
    c.m_range = IntRange{2, 1000};
    const auto r = run_suite(c).at(0);
    CHECK(r.count(Classification::theorem_violation) == 0);
    CHECK(r.count(Classification::paper_statement_discrepancy) > 0);
  }

  TEST_CASE("overflow becomes a violation") {
    SweepConfig c;
    c.suites = {"fixed-point-theorem"};
    c.k_range = IntRange{4294967296LL, 4294967296LL};
    c.m_range = IntRange{2, 3};
    std::vector<VerificationReport> reports;
    CHECK_NOTHROW(reports = run_suite(c));
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].count(Classification::theorem_violation) >= 1);
    CHECK(reports[0].violations.at(0).actual.rfind("overflow", 0) == 0);
  }

  TEST_CASE("reports do not depend on the worker count") {
    SweepConfig c;
    c.suites = {"oracle-equivalence", "bounds", "table1", "b-minus1", "jacobsthal"};
    c.k_range = IntRange{1, 6};
    c.m_range = IntRange{2, 300};
    c.suites.push_back("iteration-theorem");
    c.parallelism = 1;
    const auto one = serialize_all(run_suite(c));
    c.parallelism = 7;
    const auto seven = serialize_all(run_suite(c));
    CHECK(one == seven);
  }

  TEST_CASE("parallelism_from_env") {
    ::unsetenv("PISANO_PARALLELISM");
    CHECK(parallelism_from_env(3) == 3);
    ::setenv("PISANO_PARALLELISM", "5", 1);
    CHECK(parallelism_from_env(3) == 5);
    ::setenv("PISANO_PARALLELISM", "zero", 1);
    CHECK_THROWS_AS(parallelism_from_env(3), std::invalid_argument);
    ::unsetenv("PISANO_PARALLELISM");
  }
}
