// mslopes: boundary slope diameters of Montesinos knots from the command line.
#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "mslopes/oracle.hpp"
#include "mslopes/report.hpp"

using namespace mslopes;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string knot;
  std::string family;
  std::string range;
  int max_den = 5;
  int tangles = 3;
  std::string format;
  std::string out;
  int jobs = 1;
  std::vector<std::string> verify{"all"};
  std::string oracle = "all";
  std::string dump;
  bool candidates = false;
  bool include_links = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<KnotSpec> inputs(const Options& o, bool allow_suite) {
  if (!o.knot.empty() && !o.family.empty()) throw UsageError("give either --knot or --family, not both");
  if (!o.knot.empty()) return {KnotSpec::parse(o.knot)};
  if (!o.family.empty()) {
    if (o.range.empty()) throw UsageError("--family needs --range");
    return expand_family(o.family, o.range);
  }
  if (!allow_suite) throw UsageError("need --knot or --family");
  if (o.max_den < 2) throw UsageError("--max-den must be at least 2");
  return knot_suite(o.tangles, o.max_den, false);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot open " + o.out);
  f << text;
}

// Runs fn(i) for i in [0, n) on `jobs` threads; results stay in input order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, int jobs, F fn) {
  std::vector<T> out(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex m;
  auto work = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(m);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return out;
}

bool selected(const Options& o, const std::string& name) {
  static const std::map<std::string, std::string> alias{{"thm1", "theorem1"}, {"thm3", "theorem3"}};
  for (const std::string& v : o.verify) {
    if (v == "all") return true;
    auto it = alias.find(v);
    if ((it != alias.end() ? it->second : v) == name) return true;
  }
  return false;
}

bool passes(const Options& o, const KnotReport& r) {
  for (const Check& c : r.checks)
    if (selected(o, c.name) && !c.pass) return false;
  return true;
}

int run_reports(const Options& o, bool suite) {
  std::vector<KnotSpec> ks = inputs(o, suite);
  if (suite && !o.include_links) {
    std::erase_if(ks, [](const KnotSpec& k) { return component_count(k) != 1; });
  } else {
    for (const KnotSpec& k : ks)
      if (component_count(k) != 1) throw UsageError(k.str() + " is a link; only knots are supported");
  }
  AnalysisOptions ao;
  ao.keep_candidates = o.candidates;
  using Row = std::pair<std::string, bool>;
  auto rows = parallel_map<Row>(ks.size(), std::max(1, o.jobs), [&](std::size_t i) {
    KnotReport r = analyse(ks[i], ao);
    bool ok = passes(o, r);
    if (o.format == "csv") return Row{csv_row(r), ok};
    return Row{to_json(r, o.candidates).dump(2), ok};
  });
  std::ostringstream os;
  bool ok = true;
  if (o.format == "csv") {
    os << csv_header() << '\n';
    for (const auto& [line, pass] : rows) {
      os << line << '\n';
      ok = ok && pass;
    }
  } else if (rows.size() == 1 && !suite) {
    os << rows.front().first << '\n';
    ok = rows.front().second;
  } else {
    os << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << rows[i].first << (i + 1 < rows.size() ? ",\n" : "\n");
      ok = ok && rows[i].second;
    }
    os << "]\n";
  }
  emit(o, os.str());
  if (!o.dump.empty() && !o.knot.empty()) {
    std::ofstream f(o.dump);
    if (!f) throw UsageError("cannot open " + o.dump);
    f << dump_diagram_csv(ks.front());
  }
  return ok ? 0 : kExitFail;
}

int run_oracle(const Options& o) {
  std::vector<KnotSpec> ks = inputs(o, true);
  std::vector<OracleOutcome> res;
  if (o.oracle == "integration" || o.oracle == "all") res.push_back(integration_oracle(ks));
  if (o.oracle == "lv" || o.oracle == "all") res.push_back(lv_oracle(ks));
  if (o.oracle == "remainder" || o.oracle == "all") res.push_back(remainder_oracle(ks));
  if (res.empty()) throw UsageError("unknown oracle " + o.oracle);
  std::ostringstream os;
  bool ok = true;
  for (const OracleOutcome& r : res) {
    if (r.counterexample) {
      ok = false;
      os << r.name << ": counterexample after " << r.checked << " checks: " << *r.counterexample << '\n';
    } else {
      os << r.name << ": all agree (" << r.checked << " checks)\n";
    }
  }
  emit(o, os.str());
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary slope diameters and crossing numbers of Montesinos knots"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--knot", o.knot, "Knot, e.g. \"M(-1/2,1/3,1/7)\"");
    sub->add_option("--family", o.family, "Template, e.g. \"M(-1/3,1/3,1/n)\"");
    sub->add_option("--range", o.range, "Range for the family variable, e.g. n=3..40");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "Write output to this file");
  };

  auto* report = app.add_subcommand("report", "Full report for one knot or a family");
  add_input(report);
  add_output(report);
  report->add_flag("--candidates", o.candidates, "List every candidate system");
  report->add_option("--dump-diagram", o.dump, "Also write the diagram CSV to this file");
  report->add_option("--verify", o.verify, "Checks that decide the exit status")
      ->delimiter(',')
      ->check(CLI::IsMember({"thm1", "cor12", "thm3", "cor14", "prop31", "prop42", "all"}));

  auto* sweep = app.add_subcommand("sweep", "All knots with N tangles of denominator <= max-den, or a family");
  add_input(sweep);
  add_output(sweep);
  sweep->add_option("--max-den", o.max_den, "Largest tangle denominator");
  sweep->add_option("--tangles", o.tangles, "Number of tangles")->check(CLI::Range(3, 6));
  sweep->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  sweep->add_option("--verify", o.verify, "Checks that decide the exit status")
      ->delimiter(',')
      ->check(CLI::IsMember({"thm1", "cor12", "thm3", "cor14", "prop31", "prop42", "all"}));

  auto* verify = app.add_subcommand("verify", "Run the checks and report pass/fail");
  add_input(verify);
  verify->add_option("--max-den", o.max_den, "Largest tangle denominator for suite runs");
  verify->add_option("--tangles", o.tangles, "Number of tangles")->check(CLI::Range(3, 6));
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--out", o.out, "Write output to this file");
  verify->add_option("--verify", o.verify, "Checks to run")
      ->delimiter(',')
      ->check(CLI::IsMember({"thm1", "cor12", "thm3", "cor14", "prop31", "prop42", "all"}));

  auto* oracle = app.add_subcommand("oracle", "Cross-check twists, L/V counts and remainders over a suite");
  add_input(oracle);
  oracle->add_option("--oracle", o.oracle, "Which oracle")
      ->check(CLI::IsMember({"integration", "lv", "remainder", "all"}));
  oracle->add_option("--max-den", o.max_den, "Largest tangle denominator");
  oracle->add_option("--tangles", o.tangles, "Number of tangles")->check(CLI::Range(3, 6));
  oracle->add_option("--out", o.out, "Write output to this file");

  auto* dump = app.add_subcommand("dump-diagram", "CSV of the sub-diagram a knot's edgepaths touch");
  dump->add_option("--knot", o.knot, "Knot")->required();
  dump->add_option("--out", o.out, "Write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (report->parsed()) {
      if (o.format.empty()) o.format = "json";
      return run_reports(o, false);
    }
    if (sweep->parsed()) {
      if (o.format.empty()) o.format = "csv";
      return run_reports(o, o.knot.empty() && o.family.empty());
    }
    if (verify->parsed()) {
      o.format = "csv";
      return run_reports(o, o.knot.empty() && o.family.empty());
    }
    if (oracle->parsed()) return run_oracle(o);
    if (dump->parsed()) {
      emit(o, dump_diagram_csv(KnotSpec::parse(o.knot)));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
