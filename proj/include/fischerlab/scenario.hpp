// Scenario configuration and JSON report envelopes for the CLI.
//
// Envelope schema: {version, scenario, results[], timings} where each result
// is {command, status, witnesses[], certificates[], ranks{degree->rank},
// timings}. Polynomials travel as canonical strings, rationals as "a"/"a/b"
// strings. Output is deterministic except for the documented exception list:
// every "timings" field. strip_timings() removes exactly those.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fischerlab/polynomial.hpp"

namespace fischerlab {

using Json = nlohmann::ordered_json;

struct Bounds {
  int m = 4;             // witness degree bound M
  int n_max = 8;         // graded table depth
  int series_cutoff = 16;
};

struct Scenario {
  std::string name;
  int dim = 0;  // 0: infer from the polynomial strings
  std::optional<std::vector<std::vector<std::string>>> operator_rows;  // row-major rational strings
  std::vector<std::string> psi_factors;  // "psi": product form
  std::vector<std::string> targets;
  Bounds bounds;
  std::vector<std::vector<std::string>> hint_points;  // rational strings
  std::vector<std::vector<std::string>> vertices;     // polygon/volkov commands
  std::optional<std::vector<std::string>> semiaxes;   // dirichlet convenience
  std::uint64_t seed = 0;
};

Scenario scenario_from_json(const Json& j);
Json scenario_to_json(const Scenario& s);

struct ScanCsParams {
  int dim = 2;
  int degree = 3;
  int coeff_range = 3;
  int samples = 20;
  int bound = 3;
  std::uint64_t seed = 0;
};

/// Command runners; each returns a complete report envelope.
Json run_analyze(const Scenario& s);
Json run_dirichlet(const Scenario& s);
Json run_polygon(const Scenario& s);
Json run_volkov(const Scenario& s);
Json run_harmonic_divisor(const Scenario& s, bool assert_nonnegative);
Json run_decompose(const Scenario& s);
Json run_scan_cs(const ScanCsParams& params);

/// Copy with every "timings" member removed, recursively; the only fields
/// excluded from byte-for-byte determinism.
Json strip_timings(const Json& j);

}  // namespace fischerlab
