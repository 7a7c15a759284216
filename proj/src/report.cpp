#include "pisano/report.hpp"

#include <charconv>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace pisano {

namespace {

constexpr std::array<Classification, 3> kClassifications = {
    Classification::theorem_violation,
    Classification::paper_statement_discrepancy,
    Classification::conjecture_counterexample,
};

std::size_t index_of(Classification c) {
  return static_cast<std::size_t>(c);
}

const char* const kCsvHeader = "suite,k,m,expected,actual,classification";

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in CSV line");
  out.push_back(cur);
  return out;
}

u64 parse_u64(const std::string& s) {
  u64 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not an unsigned integer: '" + s + "'");
  }
  return v;
}

Classification parse_classification(const std::string& s) {
  auto c = classification_from_string(s);
  if (!c) throw std::invalid_argument("unknown classification: " + s);
  return *c;
}

std::string to_json(const VerificationReport& r, const SerializeOptions& options) {
  using json = nlohmann::ordered_json;
  json j;
  j["suite"] = r.suite;
  j["checked"] = r.checked;
  j["passed"] = r.passed;

  std::array<u64, 3> omitted = r.omitted_by_class;
  json violations = json::array();
  for (std::size_t i = 0; i < r.violations.size(); ++i) {
    const Violation& v = r.violations[i];
    if (i >= options.violation_cap) {
      ++omitted[index_of(v.classification)];
      continue;
    }
    violations.push_back(json{{"k", v.k},
                              {"m", v.m},
                              {"expected", v.expected},
                              {"actual", v.actual},
                              {"classification", to_string(v.classification)}});
  }
  json counts = json::object();
  for (auto c : kClassifications) counts[to_string(c)] = r.count(c);
  j["counts"] = counts;
  j["violations"] = violations;
  json omitted_json = json::object();
  for (auto c : kClassifications) omitted_json[to_string(c)] = omitted[index_of(c)];
  j["violations_omitted"] = omitted_json;
  j["notes"] = r.notes;
  j["wall_time_ms"] = options.include_timing ? r.wall_time_ms : 0;
  return j.dump(2) + "\n";
}

// Summary fields go in leading "# key: value" lines so the data rows are
// exactly one per violation.
std::string to_csv(const VerificationReport& r, const SerializeOptions& options) {
  std::ostringstream rows;
  std::array<u64, 3> omitted = r.omitted_by_class;
  for (std::size_t i = 0; i < r.violations.size(); ++i) {
    const Violation& v = r.violations[i];
    if (i >= options.violation_cap) {
      ++omitted[index_of(v.classification)];
      continue;
    }
    rows << csv_field(r.suite) << "," << v.k << "," << v.m << "," << csv_field(v.expected) << ","
         << csv_field(v.actual) << "," << to_string(v.classification) << "\n";
  }
  std::ostringstream out;
  out << "# suite: " << r.suite << "\n";
  out << "# checked: " << r.checked << "\n";
  out << "# passed: " << r.passed << "\n";
  for (auto c : kClassifications) out << "# count." << to_string(c) << ": " << r.count(c) << "\n";
  for (auto c : kClassifications) out << "# omitted." << to_string(c) << ": " << omitted[index_of(c)] << "\n";
  for (const auto& note : r.notes) out << "# note: " << note << "\n";
  out << "# wall_time_ms: " << (options.include_timing ? r.wall_time_ms : 0) << "\n";
  out << kCsvHeader << "\n" << rows.str();
  return out.str();
}

VerificationReport from_json(const std::string& text) {
  using json = nlohmann::ordered_json;
  VerificationReport r;
  try {
    json j = json::parse(text);
    r.suite = j.at("suite").get<std::string>();
    r.checked = j.at("checked").get<u64>();
    r.passed = j.at("passed").get<u64>();
    for (const auto& v : j.at("violations")) {
      r.violations.push_back(Violation{v.at("k").get<i64>(), v.at("m").get<u64>(),
                                       v.at("expected").get<std::string>(), v.at("actual").get<std::string>(),
                                       parse_classification(v.at("classification").get<std::string>())});
    }
    for (auto c : kClassifications) {
      r.omitted_by_class[index_of(c)] = j.at("violations_omitted").at(to_string(c)).get<u64>();
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.wall_time_ms = j.at("wall_time_ms").get<u64>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
  }
  return r;
}

VerificationReport from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  VerificationReport r;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!header && line.rfind("# ", 0) == 0) {
      const auto colon = line.find(": ");
      if (colon == std::string::npos) throw std::invalid_argument("malformed CSV metadata: " + line);
      const std::string key = line.substr(2, colon - 2);
      const std::string value = line.substr(colon + 2);
      if (key == "suite") {
        r.suite = value;
      } else if (key == "checked") {
        r.checked = parse_u64(value);
      } else if (key == "passed") {
        r.passed = parse_u64(value);
      } else if (key == "note") {
        r.notes.push_back(value);
      } else if (key == "wall_time_ms") {
        r.wall_time_ms = parse_u64(value);
      } else if (key.rfind("omitted.", 0) == 0) {
        r.omitted_by_class[index_of(parse_classification(key.substr(8)))] = parse_u64(value);
      } else if (key.rfind("count.", 0) != 0) {
        throw std::invalid_argument("unknown CSV metadata key: " + key);
      }
      continue;
    }
    if (!header) {
      if (line != kCsvHeader) throw std::invalid_argument("missing CSV header");
      header = true;
      continue;
    }
    auto f = csv_split(line);
    if (f.size() != 6) throw std::invalid_argument("CSV row has " + std::to_string(f.size()) + " fields");
    try {
      r.violations.push_back(Violation{std::stoll(f[1]), parse_u64(f[2]), f[3], f[4], parse_classification(f[5])});
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("number out of range in CSV row: " + line);
    }
  }
  if (!header) throw std::invalid_argument("missing CSV header");
  return r;
}

}  // namespace

std::string to_string(Classification c) {
  switch (c) {
    case Classification::theorem_violation: return "theorem-violation";
    case Classification::paper_statement_discrepancy: return "paper-statement-discrepancy";
    case Classification::conjecture_counterexample: return "conjecture-counterexample";
  }
  return "?";
}

std::optional<Classification> classification_from_string(const std::string& s) {
  for (auto c : kClassifications) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

u64 VerificationReport::count(Classification c) const {
  u64 n = omitted_by_class[index_of(c)];
  for (const auto& v : violations) {
    if (v.classification == c) ++n;
  }
  return n;
}

std::string report_serialize(const VerificationReport& r, ReportFormat format, const SerializeOptions& options) {
  return format == ReportFormat::json ? to_json(r, options) : to_csv(r, options);
}

VerificationReport report_parse(const std::string& text, ReportFormat format) {
  return format == ReportFormat::json ? from_json(text) : from_csv(text);
}

}  // namespace pisano
