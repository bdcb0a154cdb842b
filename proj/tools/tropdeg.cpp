// tropdeg: construct S(A_{n-1}) and Σ_{n,n-d}, check balancing, and compute
// degrees by stable intersection.
//
// Exit status: 0 success, 1 a check failed (unbalanced fan, oracle
// disagreement, probe disagreement, no generic shift found), 2 usage or
// input error.

#include "tropdeg/fan_io.hpp"
#include "tropdeg/linear_space.hpp"
#include "tropdeg/parallel.hpp"
#include "tropdeg/polyhedral_fan.hpp"
#include "tropdeg/report_io.hpp"
#include "tropdeg/stable_intersection.hpp"
#include "tropdeg/type_a.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace tropdeg;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_n(std::size_t n) {
  if (n < 3) throw UsageError("--n must be at least 3");
}

std::string vec_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string cone_string(const Cone& c) {
  std::string s = "cone{";
  for (std::size_t i = 0; i < c.rays.size(); ++i) s += (i ? " " : "") + vec_string(c.rays[i]);
  s += "}";
  if (!c.lineality.empty()) {
    s += " + span{";
    for (std::size_t i = 0; i < c.lineality.size(); ++i) s += (i ? " " : "") + vec_string(c.lineality[i]);
    s += "}";
  }
  return s;
}

std::string multiplicity_cell(const CaseRow& row) {
  if (row.count == 0) return "-";
  if (auto m = row.multiplicity()) return to_string(*m);
  std::string s;
  for (const auto& m : row.multiplicities) s += (s.empty() ? "" : "/") + to_string(m);
  return s;
}

void print_table(const DegreeReport& report, std::ostream& out) {
  out << "n = " << report.n << "\n";
  out << std::left << std::setw(8) << "case" << std::setw(8) << "count" << std::setw(14) << "multiplicity"
      << "contribution\n";
  for (const auto& row : report.rows)
    out << std::setw(8) << case_name(row.label) << std::setw(8) << row.count << std::setw(14)
        << multiplicity_cell(row) << to_string(row.contribution) << "\n";
  out << "total " << to_string(report.total) << "\n";
}

// degree --------------------------------------------------------------------

struct DegreeArgs {
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  bool json = false;
  bool points = false;
};

int run_degree(const DegreeArgs& a, unsigned threads) {
  require_n(a.n);
  const auto surface = tropical_root_surface(a.n);
  DegreeOptions opts;
  opts.threads = threads;
  opts.random_seed = a.seed;
  DegreeResult result;
  try {
    result = compute_degree(surface.fan, opts);
  } catch (const GenericityExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  if (a.json) {
    const auto report = build_degree_report(surface, result.points, result.shift);
    std::cout << degree_report_to_json(report, a.points).dump(2) << "\n";
  } else {
    std::cout << to_string(result.degree) << "\n";
  }
  return kOk;
}

// table ---------------------------------------------------------------------

struct TableArgs {
  std::size_t n = 0;
  bool json = false;
};

int run_table(const TableArgs& a, unsigned threads) {
  require_n(a.n);
  const auto surface = tropical_root_surface(a.n);
  DegreeOptions opts;
  opts.threads = threads;
  opts.max_retries = 0;
  DegreeResult result;
  try {
    result = compute_degree(surface.fan, opts);
  } catch (const GenericityExhausted& e) {
    std::cerr << "error: the super-increasing vector is not generic: " << e.what() << "\n";
    return kFailed;
  }
  const auto report = build_degree_report(surface, result.points, result.shift);
  if (a.json)
    std::cout << degree_report_to_json(report).dump(2) << "\n";
  else
    print_table(report, std::cout);
  return kOk;
}

// balance -------------------------------------------------------------------

struct BalanceArgs {
  std::optional<std::size_t> n;
  std::optional<std::size_t> sigma;
  std::string fan_path;
  bool json = false;
};

int run_balance(const BalanceArgs& a, unsigned threads) {
  std::optional<WeightedFan> fan;
  if (!a.fan_path.empty()) {
    if (a.sigma) throw UsageError("--sigma needs --n");
    try {
      fan = read_fan_file(a.fan_path);
    } catch (const std::exception& e) {
      throw UsageError(a.fan_path + ": " + e.what());
    }
  } else if (a.n) {
    if (a.sigma) {
      if (*a.n < 2 || *a.sigma < 1 || *a.sigma >= *a.n) throw UsageError("--sigma d needs 1 <= d <= n-1");
      fan = standard_tropical_linear_space(*a.n, *a.sigma).fan;
    } else {
      require_n(*a.n);
      fan = tropical_root_surface(*a.n).fan;
    }
  } else {
    throw UsageError("one of --n or --fan is required");
  }

  const auto report = is_tropical_fan(*fan, threads);
  if (a.json) {
    nlohmann::json j;
    j["balanced"] = report.balanced();
    j["ridges"] = fan->ridges().size();
    auto failing = nlohmann::json::array();
    for (auto r : report.failing_ridges) {
      const auto& tau = fan->ridges()[r];
      nlohmann::json f;
      f["ridge"] = r;
      auto gens = nlohmann::json::array();
      for (const auto& g : tau.rays) {
        auto row = nlohmann::json::array();
        for (const auto& x : g) row.push_back(x.get_si());
        gens.push_back(std::move(row));
      }
      f["generators"] = std::move(gens);
      failing.push_back(std::move(f));
    }
    j["failing"] = std::move(failing);
    std::cout << j.dump(2) << "\n";
  } else if (report.balanced()) {
    std::cout << "balanced (" << fan->ridges().size() << " ridges)\n";
  } else {
    std::cout << "not balanced at " << report.failing_ridges.size() << " of " << fan->ridges().size()
              << " ridges:\n";
    for (auto r : report.failing_ridges) std::cout << "  " << cone_string(fan->ridges()[r]) << "\n";
  }
  return report.balanced() ? kOk : kFailed;
}

// edges ---------------------------------------------------------------------

struct EdgesArgs {
  std::size_t n = 0;
  bool oracle = false;
};

int run_edges(const EdgesArgs& a) {
  require_n(a.n);
  if (a.oracle && a.n > kEdgeOracleMaxN) throw UsageError("--oracle supports n <= 6");
  const auto edges = root_polytope_edges(a.n);
  auto j = edges_to_json(a.n, edges);
  bool agree = true;
  if (a.oracle) {
    const auto found = edge_oracle(a.n);
    std::set<RootPair> from_edges;
    for (const auto& e : edges) from_edges.insert(e.endpoints());
    agree = from_edges == std::set<RootPair>(found.begin(), found.end());
    j["oracle"] = root_pairs_to_json(found);
    j["agree"] = agree;
  }
  std::cout << j.dump(2) << "\n";
  return agree ? kOk : kFailed;
}

// probe ---------------------------------------------------------------------

struct ProbeArgs {
  std::size_t n = 0;
  std::uint64_t seed = 1;
  unsigned count = 3;
};

int run_probe(const ProbeArgs& a, unsigned threads) {
  require_n(a.n);
  bool all = true;
  for (unsigned k = 0; k < a.count; ++k) {
    const std::uint64_t s = a.seed + k;
    const bool ok = genericity_probe(a.n, s, threads);
    all = all && ok;
    std::cout << "seed " << s << ": " << (ok ? "agree" : "disagree") << "\n";
  }
  return all ? kOk : kFailed;
}

// export-fan ----------------------------------------------------------------

struct ExportArgs {
  std::size_t n = 0;
  std::optional<std::size_t> sigma;
  std::string out;
};

int run_export(const ExportArgs& a) {
  std::optional<WeightedFan> fan;
  if (a.sigma) {
    if (a.n < 2 || *a.sigma < 1 || *a.sigma >= a.n) throw UsageError("--sigma d needs 1 <= d <= n-1");
    fan = standard_tropical_linear_space(a.n, *a.sigma).fan;
  } else {
    require_n(a.n);
    fan = tropical_root_surface(a.n).fan;
  }
  if (a.out.empty() || a.out == "-") {
    std::cout << fan_to_json(*fan).dump(2) << "\n";
  } else {
    write_fan_file(*fan, a.out);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical fans of type A root systems: balancing and degrees by stable intersection"};
  app.require_subcommand(1, 1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: TROPDEG_THREADS or hardware)");

  DegreeArgs degree_args;
  auto* degree = app.add_subcommand("degree", "Degree of S(A_{n-1}) against Σ_{n,n-2}");
  degree->add_option("--n", degree_args.n, "Ambient dimension (n >= 3)")->required();
  degree->add_option("--random-shift", degree_args.seed, "Start from a random rational shift with this seed");
  degree->add_flag("--json", degree_args.json, "Print the full case report as JSON");
  degree->add_flag("--points", degree_args.points, "Include intersection points in the JSON report");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Case census with the super-increasing shift");
  table->add_option("--n", table_args.n, "Ambient dimension (n >= 3)")->required();
  table->add_flag("--json", table_args.json, "Print JSON");

  BalanceArgs balance_args;
  auto* balance = app.add_subcommand("balance", "Check the balancing condition at every ridge");
  auto* bn = balance->add_option("--n", balance_args.n, "Check S(A_{n-1}) (or Σ_{n,n-d} with --sigma)");
  auto* bf = balance->add_option("--fan", balance_args.fan_path, "Check a fan read from a JSON file");
  bn->excludes(bf);
  bf->excludes(bn);
  balance->add_option("--sigma", balance_args.sigma, "Check Σ_{n,n-d} for this d instead");
  balance->add_flag("--json", balance_args.json, "Print JSON");

  EdgesArgs edges_args;
  auto* edges = app.add_subcommand("edges", "Edges of the root polytope of A_{n-1}");
  edges->add_option("--n", edges_args.n, "Ambient dimension (n >= 3)")->required();
  edges->add_flag("--oracle", edges_args.oracle, "Compare against the LP edge oracle (n <= 6)");

  ProbeArgs probe_args;
  auto* probe = app.add_subcommand("probe", "Compare intersections for v and small perturbations of v");
  probe->add_option("--n", probe_args.n, "Ambient dimension (n >= 3)")->required();
  probe->add_option("--seed", probe_args.seed, "First perturbation seed");
  probe->add_option("--count", probe_args.count, "Number of seeds")->check(CLI::PositiveNumber);

  ExportArgs export_args;
  auto* exporter = app.add_subcommand("export-fan", "Write S(A_{n-1}) or Σ_{n,n-d} as fan JSON");
  exporter->add_option("--n", export_args.n, "Ambient dimension")->required();
  exporter->add_option("--sigma", export_args.sigma, "Export Σ_{n,n-d} for this d");
  exporter->add_option("--out", export_args.out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*degree) return run_degree(degree_args, threads);
    if (*table) return run_table(table_args, threads);
    if (*balance) return run_balance(balance_args, threads);
    if (*edges) return run_edges(edges_args);
    if (*probe) return run_probe(probe_args, threads);
    if (*exporter) return run_export(export_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
