// fischerlab command-line tool.
//
// Subcommands: analyze, dirichlet, polygon, volkov, harmonic-divisor,
// decompose, scan-cs. Exit codes: 0 = ran to completion (verdicts live in the
// JSON report), 2 = input/parse error, 3 = internal verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "fischerlab/errors.hpp"
#include "fischerlab/scenario.hpp"
#include "fischerlab/text.hpp"
#include "fischerlab/version.hpp"

namespace {

using fischerlab::Json;
using fischerlab::Scenario;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitVerification = 3;

struct CommonOptions {
  std::string scenario_path;
  int dim = 0;
  int bound = -1;
  std::string operator_spec;  // inline JSON array or a file path
  std::string json_path;      // output; "-"/empty = stdout
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--scenario", opts.scenario_path, "Scenario JSON file");
  cmd->add_option("--dim", opts.dim, "Override the scenario dimension");
  cmd->add_option("--bound", opts.bound, "Override the witness degree bound M");
  cmd->add_option("--operator", opts.operator_spec,
                  "Operator matrix: inline JSON (row-major rational strings) or a file path");
  cmd->add_option("--json", opts.json_path, "Write the report to this path (default: stdout)");
  cmd->add_option("--seed", opts.seed, "Random seed")->each([&opts](const std::string&) {
    opts.seed_set = true;
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

Scenario load_scenario(const CommonOptions& opts) {
  Scenario s;
  if (!opts.scenario_path.empty()) s = fischerlab::scenario_from_json(read_json_file(opts.scenario_path));
  if (opts.dim > 0) s.dim = opts.dim;
  if (opts.bound >= 0) s.bounds.m = opts.bound;
  if (opts.seed_set) s.seed = opts.seed;
  if (!opts.operator_spec.empty()) {
    Json rows;
    if (!opts.operator_spec.empty() && opts.operator_spec.front() == '[') {
      rows = Json::parse(opts.operator_spec);
    } else {
      rows = read_json_file(opts.operator_spec);
    }
    s.operator_rows = rows.get<std::vector<std::vector<std::string>>>();
  }
  return s;
}

void emit(const Json& report, const CommonOptions& opts) {
  const std::string text = report.dump(2) + "\n";
  if (opts.json_path.empty() || opts.json_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(opts.json_path);
    if (!out) throw std::invalid_argument("cannot write file: " + opts.json_path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact laboratory for Fischer operators q -> L(psi*q) on polynomial spaces"};
  app.set_version_flag("--version", fischerlab::kVersion);
  app.require_subcommand(1);

  CommonOptions analyze_opts, dirichlet_opts, polygon_opts, volkov_opts, divisor_opts,
      decompose_opts, scan_opts;
  bool assert_nonnegative = false;
  fischerlab::ScanCsParams scan_params;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Obstruction scan, graded tables, kernel, and truncated solves for psi");
  add_common(analyze, analyze_opts);
  CLI::App* dirichlet =
      app.add_subcommand("dirichlet", "Exact polynomial Dirichlet solution on a quadric");
  add_common(dirichlet, dirichlet_opts);
  CLI::App* polygon =
      app.add_subcommand("polygon", "Edge forms and per-vertex obstruction report for a polygon");
  add_common(polygon, polygon_opts);
  CLI::App* volkov = app.add_subcommand("volkov", "L(l1*l2*l3) identity check for a triangle");
  add_common(volkov, volkov_opts);
  CLI::App* divisor =
      app.add_subcommand("harmonic-divisor", "Search a witness q != 0 with L(f*q) = 0");
  add_common(divisor, divisor_opts);
  divisor->add_flag("--assert-nonnegative", assert_nonnegative,
                    "Caller asserts f >= 0 everywhere (returns NEVER)");
  CLI::App* decompose = app.add_subcommand("decompose", "Fischer decomposition f = psi*q + h");
  add_common(decompose, decompose_opts);
  CLI::App* scan = app.add_subcommand("scan-cs", "Random truncated-rank scan over psi of a fixed degree");
  add_common(scan, scan_opts);
  scan->add_option("--degree", scan_params.degree, "Degree of the sampled psi (>= 2)");
  scan->add_option("--coeff-range", scan_params.coeff_range, "Coefficients drawn from [-range, range]");
  scan->add_option("--samples", scan_params.samples, "Number of sampled psi");

  CLI11_PARSE(app, argc, argv);

  try {
    Json report;
    CommonOptions* opts = nullptr;
    if (*analyze) {
      opts = &analyze_opts;
      report = fischerlab::run_analyze(load_scenario(*opts));
    } else if (*dirichlet) {
      opts = &dirichlet_opts;
      report = fischerlab::run_dirichlet(load_scenario(*opts));
    } else if (*polygon) {
      opts = &polygon_opts;
      report = fischerlab::run_polygon(load_scenario(*opts));
    } else if (*volkov) {
      opts = &volkov_opts;
      report = fischerlab::run_volkov(load_scenario(*opts));
    } else if (*divisor) {
      opts = &divisor_opts;
      report = fischerlab::run_harmonic_divisor(load_scenario(*opts), assert_nonnegative);
    } else if (*decompose) {
      opts = &decompose_opts;
      report = fischerlab::run_decompose(load_scenario(*opts));
    } else if (*scan) {
      opts = &scan_opts;
      if (scan_opts.dim > 0) scan_params.dim = scan_opts.dim;
      if (scan_opts.bound >= 0) scan_params.bound = scan_opts.bound;
      scan_params.seed = scan_opts.seed;
      report = fischerlab::run_scan_cs(scan_params);
    }
    emit(report, *opts);
    return kExitOk;
  } catch (const fischerlab::VerificationError& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
