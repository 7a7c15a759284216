// pisano: command-line front end.
//
// Exit codes:
//   0  success (verify: no theorem-violations)
//   1  verify found theorem-violations
//   2  invalid arguments or configuration
//   3  arithmetic overflow
//   4  period --both: oracle and structured engine disagree
//   5  trajectory did not terminate within --max-iters

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pisano/conjectures.hpp"
#include "pisano/fixedpoint.hpp"
#include "pisano/period.hpp"
#include "pisano/verify.hpp"

using namespace pisano;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOverflow = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitExhausted = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool want_json(const std::string& format) {
  if (format == "json") return true;
  if (format == "text") return false;
  throw UsageError("--format must be text or json");
}

std::string factor_string(u64 n) {
  std::string out;
  for (const auto& f : factorize(n).factors) {
    if (!out.empty()) out += "·";
    out += std::to_string(f.prime);
    if (f.exponent > 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

std::string joined(const std::vector<u64>& xs) {
  std::string out;
  for (u64 x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

FamilyReading parse_reading(const std::string& s) {
  for (auto r : {FamilyReading::calibrated, FamilyReading::stated, FamilyReading::stated_converse}) {
    if (to_string(r) == s) return r;
  }
  throw UsageError("--reading must be calibrated, stated or stated-converse");
}

// ---------------------------------------------------------------------------

struct PeriodArgs {
  std::optional<i64> k, a, b, c, d;
  u64 m = 0;
  bool oracle = false, structured = false, both = false;
  std::string format = "text";
};

int cmd_period(const PeriodArgs& args) {
  const bool as_json = want_json(args.format);
  if (args.m < 2) throw UsageError("-m must be at least 2");
  const bool general = args.a || args.b || args.c || args.d;
  if (general && args.k) throw UsageError("give either -k or -a/-b/-c/-d, not both");
  if (!general && !args.k) throw UsageError("one of -k or -a/-b/-c/-d is required");
  if (int(args.oracle) + int(args.structured) + int(args.both) > 1) {
    throw UsageError("--oracle, --structured and --both are exclusive");
  }
  RecurrenceParams params = general ? RecurrenceParams{args.a.value_or(1), args.b.value_or(1), args.c.value_or(0),
                                                       args.d.value_or(1)}
                                    : RecurrenceParams::k_fibonacci(*args.k);
  const bool k_fib = params.b == 1 && params.c == 0 && params.d == 1 && params.a >= 1;
  if ((args.structured || args.both) && !k_fib) {
    throw UsageError("the structured engine only handles K-Fibonacci parameters (K,1,0,1) with K >= 1");
  }
  // K-Fibonacci defaults to the structured engine, everything else to the oracle
  const bool use_oracle = args.oracle || args.both || !k_fib;
  const bool use_structured = args.structured || args.both || (k_fib && !args.oracle);

  std::optional<PeriodResult> oracle;
  std::optional<u64> structured;
  if (use_oracle) oracle = period_oracle(params, args.m);
  if (use_structured) structured = pisano_structured(static_cast<u64>(params.a), args.m);
  const bool mismatch = oracle && structured && oracle->period != *structured;

  if (as_json) {
    json j;
    j["params"] = {{"a", params.a}, {"b", params.b}, {"c", params.c}, {"d", params.d}};
    j["m"] = args.m;
    j["period"] = structured ? *structured : oracle->period;
    j["preperiod"] = oracle ? json(oracle->preperiod) : json(nullptr);
    if (oracle) j["oracle"] = oracle->period;
    if (structured) j["structured"] = *structured;
    j["match"] = !mismatch;
    std::cout << j.dump(2) << "\n";
  } else if (args.both) {
    std::cout << "oracle " << oracle->period << "\nstructured " << *structured << "\n";
  } else {
    std::cout << (structured ? *structured : oracle->period);
    if (oracle && !oracle->pure()) std::cout << " preperiod=" << oracle->preperiod;
    std::cout << "\n";
  }
  if (mismatch) {
    std::cerr << "mismatch: oracle " << oracle->period << ", structured " << *structured << "\n";
    return kExitMismatch;
  }
  return 0;
}

struct TrajectoryArgs {
  u64 k = 0, m = 0, max_iters = kDefaultMaxIters;
  std::string format = "text";
};

int cmd_trajectory(const TrajectoryArgs& args) {
  const bool as_json = want_json(args.format);
  if (args.k < 1) throw UsageError("-k must be at least 1");
  if (args.m < 2) throw UsageError("-m must be at least 2");
  const Trajectory t = trajectory(args.k, args.m, args.max_iters);
  if (as_json) {
    json j;
    j["k"] = args.k;
    j["start"] = t.start;
    j["steps"] = t.steps;
    j["terminal"] = to_string(t.terminal);
    j["T"] = t.length;
    j["P"] = t.terminal == Terminal::exhausted ? json(nullptr) : json(t.terminal_value());
    std::cout << j.dump(2) << "\n";
  } else {
    std::string chain;
    for (u64 v : t.steps) chain += (chain.empty() ? "" : " → ") + std::to_string(v);
    switch (t.terminal) {
      case Terminal::fixed_point: std::cout << chain << " [fixed] T=" << t.length << "\n"; break;
      case Terminal::two_cycle: std::cout << chain << " [2-cycle] P=0\n"; break;
      case Terminal::exhausted: std::cout << chain << " [exhausted]\n"; break;
    }
  }
  return t.terminal == Terminal::exhausted ? kExitExhausted : 0;
}

struct FixedPointArgs {
  u64 k = 0, bound = 0;
  std::string reading = "calibrated";
  std::string format = "text";
};

int cmd_fixed_points(const FixedPointArgs& args) {
  const bool as_json = want_json(args.format);
  if (args.k < 1) throw UsageError("-k must be at least 1");
  if (args.bound < 2) throw UsageError("--bound must be at least 2");
  const FixedPointFamily family = family_reading(args.k, parse_reading(args.reading));
  const auto fixed = enumerate_fixed_points(args.k, args.bound);
  const auto predicted = family_members(family, args.bound);
  const bool agree = fixed == predicted;
  if (as_json) {
    json j;
    j["k"] = args.k;
    j["bound"] = args.bound;
    j["category"] = to_string(family.category);
    j["reading"] = args.reading;
    j["family"] = describe(family);
    j["fixed_points"] = fixed;
    j["family_members"] = predicted;
    j["agree"] = agree;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << joined(fixed) << " | family: " << describe(family) << "\n";
    if (!agree) std::cout << "disagreement: family members in range are " << joined(predicted) << "\n";
  }
  return 0;
}

struct ClassifyArgs {
  u64 k = 0;
  std::string reading = "calibrated";
  std::string format = "text";
};

int cmd_classify(const ClassifyArgs& args) {
  const bool as_json = want_json(args.format);
  if (args.k < 1) throw UsageError("-k must be at least 1");
  const FixedPointFamily family = family_reading(args.k, parse_reading(args.reading));
  const u64 disc = discriminant(args.k);
  if (as_json) {
    json j;
    j["k"] = args.k;
    j["category"] = to_string(family.category);
    j["discriminant"] = disc;
    j["discriminant_factors"] = factor_string(disc);
    j["reading"] = args.reading;
    j["family"] = describe(family);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "K=" << args.k << " " << to_string(family.category) << " K^2+4=" << factor_string(disc)
              << " family: " << describe(family) << "\n";
  }
  return 0;
}

struct TableArgs {
  std::string k_range = "1..24";
  std::string m_range = "2..24";
  u64 bound = 5000;
  bool periods = false;
  std::string format = "text";
};

int cmd_table(const TableArgs& args) {
  const bool as_json = want_json(args.format);
  if (args.periods) {
    const IntRange m = parse_range(args.m_range);
    if (m.lo < 2) throw UsageError("--m must start at 2 or above");
    json rows = json::array();
    for (auto seq : {NamedSequence::fibonacci, NamedSequence::lucas, NamedSequence::pell, NamedSequence::jacobsthal}) {
      const auto row = named_period_row(seq, static_cast<u64>(m.lo), static_cast<u64>(m.hi));
      if (as_json) {
        rows.push_back({{"sequence", to_string(seq)}, {"m_lo", m.lo}, {"m_hi", m.hi}, {"periods", row}});
      } else {
        std::cout << to_string(seq) << ": " << joined(row) << "\n";
      }
    }
    if (as_json) std::cout << rows.dump(2) << "\n";
    return 0;
  }
  const IntRange k = parse_range(args.k_range);
  if (k.lo < 1) throw UsageError("--k must start at 1 or above");
  if (args.bound < 2) throw UsageError("--bound must be at least 2");
  json rows = json::array();
  for (i64 kk = k.lo; kk <= k.hi; ++kk) {
    const u64 K = static_cast<u64>(kk);
    const FixedPointFamily family = predicted_family(K);
    const auto fixed = enumerate_fixed_points(K, args.bound);
    if (as_json) {
      rows.push_back({{"k", K},
                      {"discriminant_factors", factor_string(discriminant(K))},
                      {"category", to_string(family.category)},
                      {"family", describe(family)},
                      {"fixed_points", fixed}});
    } else {
      std::cout << K << " | " << factor_string(discriminant(K)) << " | " << to_string(family.category) << " | "
                << describe(family) << " | " << joined(fixed) << "\n";
    }
  }
  if (as_json) std::cout << rows.dump(2) << "\n";
  return 0;
}

struct VerifyArgs {
  std::string config_file;
  std::string suites;
  std::string k_range, m_range;
  std::string out = "reports";
  std::optional<unsigned> parallelism;
  u64 max_iters = kDefaultMaxIters;
  bool timing = false;
  std::string format = "text";
};

std::vector<std::string> split_suites(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "all") {
      for (const auto& id : suite_ids()) out.push_back(id);
    } else if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

// Config file: {"suites": [...] or "a,b", "k": "lo..hi", "m": "lo..hi",
//               "parallelism": n, "max_iters": n, "out": "dir"}
void load_config(const std::string& path, VerifyArgs& args) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  json j;
  try {
    j = json::parse(in);
    if (j.contains("suites")) {
      if (j["suites"].is_array()) {
        std::string joined_ids;
        for (const auto& s : j["suites"]) joined_ids += s.get<std::string>() + ",";
        if (args.suites.empty()) args.suites = joined_ids;
      } else if (args.suites.empty()) {
        args.suites = j["suites"].get<std::string>();
      }
    }
    if (j.contains("k") && args.k_range.empty()) args.k_range = j["k"].get<std::string>();
    if (j.contains("m") && args.m_range.empty()) args.m_range = j["m"].get<std::string>();
    if (j.contains("parallelism") && !args.parallelism) args.parallelism = j["parallelism"].get<unsigned>();
    if (j.contains("max_iters")) args.max_iters = j["max_iters"].get<u64>();
    if (j.contains("out")) args.out = j["out"].get<std::string>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed config: ") + e.what());
  }
}

int cmd_verify(VerifyArgs args) {
  const bool as_json = want_json(args.format);
  if (!args.config_file.empty()) load_config(args.config_file, args);
  SweepConfig config;
  config.suites = split_suites(args.suites.empty() ? "all" : args.suites);
  if (!args.k_range.empty()) config.k_range = parse_range(args.k_range);
  if (!args.m_range.empty()) config.m_range = parse_range(args.m_range);
  config.parallelism = parallelism_from_env(args.parallelism.value_or(1));
  config.max_iters = args.max_iters;
  validate(config);

  const auto reports = run_suite(config);
  std::filesystem::create_directories(args.out);
  SerializeOptions options;
  options.include_timing = args.timing;
  u64 theorem_violations = 0;
  json summary = json::array();
  for (const auto& r : reports) {
    for (auto [format, ext] : {std::pair{ReportFormat::json, ".json"}, std::pair{ReportFormat::csv, ".csv"}}) {
      std::ofstream f(std::filesystem::path(args.out) / (r.suite + ext), std::ios::binary);
      f << report_serialize(r, format, options);
      if (!f) throw std::runtime_error("failed to write report for " + r.suite);
    }
    const u64 tv = r.count(Classification::theorem_violation);
    const u64 pd = r.count(Classification::paper_statement_discrepancy);
    const u64 cc = r.count(Classification::conjecture_counterexample);
    theorem_violations += tv;
    if (as_json) {
      summary.push_back({{"suite", r.suite},
                         {"checked", r.checked},
                         {"passed", r.passed},
                         {"theorem-violation", tv},
                         {"paper-statement-discrepancy", pd},
                         {"conjecture-counterexample", cc}});
    } else {
      std::cout << r.suite << ": checked=" << r.checked << " passed=" << r.passed << " theorem-violation=" << tv
                << " paper-statement-discrepancy=" << pd << " conjecture-counterexample=" << cc << "\n";
    }
    if (pd + cc > 0) {
      std::cerr << r.suite << ": " << pd << " paper-statement discrepancies, " << cc
                << " conjecture counterexamples (see " << (std::filesystem::path(args.out) / (r.suite + ".json")).string()
                << ")\n";
    }
  }
  if (as_json) std::cout << summary.dump(2) << "\n";
  return theorem_violations == 0 ? 0 : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pisano periods of K-Fibonacci and binary recurrence sequences"};
  app.require_subcommand(1, 1);

  PeriodArgs period;
  auto* p = app.add_subcommand("period", "period of a sequence modulo m");
  p->add_option("-k", period.k, "K-Fibonacci parameter");
  p->add_option("-a", period.a, "recurrence coefficient a");
  p->add_option("-b", period.b, "recurrence coefficient b");
  p->add_option("-c", period.c, "initial term U_0");
  p->add_option("-d", period.d, "initial term U_1");
  p->add_option("-m", period.m, "modulus")->required();
  p->add_flag("--oracle", period.oracle, "brute-force state walk");
  p->add_flag("--structured", period.structured, "prime-power decomposition");
  p->add_flag("--both", period.both, "run both and compare");
  p->add_option("--format", period.format, "text or json");

  TrajectoryArgs traj;
  auto* t = app.add_subcommand("trajectory", "iterate m -> pi_K(m) to its terminal value");
  t->add_option("-k", traj.k, "K-Fibonacci parameter")->required();
  t->add_option("-m", traj.m, "starting modulus")->required();
  t->add_option("--max-iters", traj.max_iters, "iteration budget");
  t->add_option("--format", traj.format, "text or json");

  FixedPointArgs fp;
  auto* f = app.add_subcommand("fixed-points", "fixed points of pi_K up to a bound");
  f->add_option("-k", fp.k, "K-Fibonacci parameter")->required();
  f->add_option("--bound", fp.bound, "largest modulus")->required();
  f->add_option("--reading", fp.reading, "calibrated, stated or stated-converse");
  f->add_option("--format", fp.format, "text or json");

  ClassifyArgs cl;
  auto* c = app.add_subcommand("classify", "category and predicted fixed-point family of K");
  c->add_option("-k", cl.k, "K-Fibonacci parameter")->required();
  c->add_option("--reading", cl.reading, "calibrated, stated or stated-converse");
  c->add_option("--format", cl.format, "text or json");

  TableArgs tab;
  auto* tb = app.add_subcommand("table", "fixed-point table over a K range, or named-sequence period rows");
  tb->add_option("--k", tab.k_range, "K range lo..hi");
  tb->add_option("--bound", tab.bound, "largest modulus for the fixed-point column");
  tb->add_flag("--periods", tab.periods, "print Fibonacci/Lucas/Pell/Jacobsthal period rows");
  tb->add_option("--m", tab.m_range, "m range for --periods");
  tb->add_option("--format", tab.format, "text or json");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "run verification suites and write reports");
  v->add_option("--config", ver.config_file, "JSON config file");
  v->add_option("--suites", ver.suites, "comma-separated suite ids, or all");
  v->add_option("--k", ver.k_range, "K (or a) range lo..hi");
  v->add_option("--m", ver.m_range, "modulus range lo..hi");
  v->add_option("--out", ver.out, "report directory");
  v->add_option("--parallelism", ver.parallelism, "worker threads (PISANO_PARALLELISM overrides)");
  v->add_option("--max-iters", ver.max_iters, "trajectory iteration budget");
  v->add_flag("--timing", ver.timing, "record wall time in reports");
  v->add_option("--format", ver.format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*p) return cmd_period(period);
    if (*t) return cmd_trajectory(traj);
    if (*f) return cmd_fixed_points(fp);
    if (*c) return cmd_classify(cl);
    if (*tb) return cmd_table(tab);
    if (*v) return cmd_verify(ver);
  } catch (const ArithmeticOverflow& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
