#include "fischerlab/scenario.hpp"

#include <chrono>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "fischerlab/basis.hpp"
#include "fischerlab/domains.hpp"
#include "fischerlab/fischer.hpp"
#include "fischerlab/harmonic.hpp"
#include "fischerlab/matrix.hpp"
#include "fischerlab/text.hpp"
#include "fischerlab/version.hpp"

namespace fischerlab {

namespace {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

Json make_result(const std::string& command) {
  Json r;
  r["command"] = command;
  r["status"] = "";
  r["witnesses"] = Json::array();
  r["certificates"] = Json::array();
  r["ranks"] = Json::object();
  r["timings"] = Json::object();
  return r;
}

void finish_result(Json& r, const Stopwatch& sw) { r["timings"]["wall_ms"] = sw.ms(); }

Json make_envelope(Json scenario_echo) {
  Json env;
  env["version"] = kVersion;
  env["scenario"] = std::move(scenario_echo);
  env["results"] = Json::array();
  return env;
}

Json point_json(const Point& p) {
  Json a = Json::array();
  for (const Rational& r : p) a.push_back(r.str());
  return a;
}

Json certificate_json(const Certificate& c) {
  Json j;
  j["rule"] = c.rule;
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (c.point) j["point"] = point_json(*c.point);
  if (c.value) j["value"] = c.value->str();
  if (c.multiplicity) j["multiplicity"] = *c.multiplicity;
  if (c.bound) j["bound"] = *c.bound;
  if (c.degree) j["degree"] = *c.degree;
  return j;
}

Json verdict_json(const ObstructionVerdict& v) {
  Json j;
  j["rule"] = to_string(v.rule);
  if (!v.factor_indices.empty()) j["factor_indices"] = v.factor_indices;
  if (!v.witness_point.empty()) j["witness_point"] = point_json(v.witness_point);
  if (v.multiplicity > 0) j["multiplicity"] = v.multiplicity;
  if (!v.unused_hints.empty()) {
    Json hints = Json::array();
    for (const Point& p : v.unused_hints) hints.push_back(point_json(p));
    j["unused_hints"] = std::move(hints);
  }
  j["conclusion"] = v.conclusion;
  return j;
}

struct ResolvedScenario {
  int dim;
  std::vector<Polynomial> factors;
  Polynomial psi;  // product of factors (when any)
  std::vector<Polynomial> targets;
  QuadraticOperator op;
  std::vector<Point> hints;
  std::vector<Point> vertices;
};

Point parse_point(const std::vector<std::string>& coords) {
  Point p;
  for (const auto& s : coords) p.push_back(Rational::from_string(s));
  return p;
}

ResolvedScenario resolve(const Scenario& s) {
  int dim = s.dim;
  if (dim < 0) throw std::invalid_argument("scenario: dim must be positive");
  if (dim == 0) {
    for (const auto& str : s.psi_factors) dim = std::max(dim, parse_polynomial(str).dim());
    for (const auto& str : s.targets) dim = std::max(dim, parse_polynomial(str).dim());
    if (!s.vertices.empty()) dim = std::max(dim, 2);
    if (s.semiaxes) dim = std::max(dim, static_cast<int>(s.semiaxes->size()));
    if (dim == 0) throw std::invalid_argument("scenario: cannot infer dim (no polynomials given)");
  }

  std::vector<Polynomial> factors;
  for (const auto& str : s.psi_factors) factors.push_back(parse_polynomial(str, dim));
  std::vector<Polynomial> targets;
  for (const auto& str : s.targets) targets.push_back(parse_polynomial(str, dim));

  QuadraticOperator op = QuadraticOperator::laplacian(dim);
  if (s.operator_rows) {
    if (static_cast<int>(s.operator_rows->size()) != dim)
      throw std::invalid_argument("scenario: operator must have dim rows");
    std::vector<Rational> entries;
    for (const auto& row : *s.operator_rows) {
      if (static_cast<int>(row.size()) != dim)
        throw std::invalid_argument("scenario: operator must have dim columns per row");
      for (const auto& e : row) entries.push_back(Rational::from_string(e));
    }
    op = QuadraticOperator(dim, std::move(entries));
  }

  std::vector<Point> hints;
  for (const auto& h : s.hint_points) {
    Point p = parse_point(h);
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("scenario: hint point length != dim");
    hints.push_back(std::move(p));
  }
  std::vector<Point> vertices;
  for (const auto& v : s.vertices) {
    Point p = parse_point(v);
    if (p.size() != 2) throw std::invalid_argument("scenario: vertices must be planar points");
    vertices.push_back(std::move(p));
  }

  Polynomial psi(dim);
  if (!factors.empty()) {
    psi = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) psi = psi * factors[i];
  }
  return {dim, std::move(factors), std::move(psi), std::move(targets), std::move(op),
          std::move(hints), std::move(vertices)};
}

void add_volkov_result(Json& env, const VolkovResult& volkov) {
  Stopwatch sw;
  Json r = make_result("volkov_check");
  r["status"] = volkov.constant ? "CONSTANT_IMAGE" : "NONCONSTANT_IMAGE";
  if (volkov.u) r["witnesses"].push_back(format_polynomial(*volkov.u));
  Json cert;
  cert["rule"] = "exact-operator-image";
  cert["psi"] = format_polynomial(volkov.psi);
  cert["image"] = format_polynomial(volkov.image);
  if (volkov.constant) cert["constant"] = volkov.constant->str();
  if (volkov.u)
    cert["detail"] = "u = psi / constant satisfies L(u) = 1 and vanishes on every edge line";
  r["certificates"].push_back(std::move(cert));
  finish_result(r, sw);
  env["results"].push_back(std::move(r));
}

}  // namespace

Scenario scenario_from_json(const Json& j) {
  Scenario s;
  if (!j.is_object()) throw std::invalid_argument("scenario: top level must be a JSON object");
  s.name = j.value("name", std::string{});
  s.dim = j.value("dim", 0);
  if (j.contains("operator")) s.operator_rows = j.at("operator").get<std::vector<std::vector<std::string>>>();
  if (j.contains("psi")) s.psi_factors = j.at("psi").get<std::vector<std::string>>();
  if (j.contains("targets")) s.targets = j.at("targets").get<std::vector<std::string>>();
  if (j.contains("bounds")) {
    const Json& b = j.at("bounds");
    s.bounds.m = b.value("M", s.bounds.m);
    s.bounds.n_max = b.value("n_max", s.bounds.n_max);
    s.bounds.series_cutoff = b.value("series_cutoff", s.bounds.series_cutoff);
  }
  if (s.bounds.m < 0 || s.bounds.n_max < 0 || s.bounds.series_cutoff < 0)
    throw std::invalid_argument("scenario: bounds must be >= 0");
  if (j.contains("hint_points"))
    s.hint_points = j.at("hint_points").get<std::vector<std::vector<std::string>>>();
  if (j.contains("vertices"))
    s.vertices = j.at("vertices").get<std::vector<std::vector<std::string>>>();
  if (j.contains("semiaxes")) s.semiaxes = j.at("semiaxes").get<std::vector<std::string>>();
  s.seed = j.value("seed", std::uint64_t{0});
  return s;
}

Json scenario_to_json(const Scenario& s) {
  Json j;
  j["name"] = s.name;
  j["dim"] = s.dim;
  if (s.operator_rows) j["operator"] = *s.operator_rows;
  if (!s.psi_factors.empty()) j["psi"] = s.psi_factors;
  if (!s.targets.empty()) j["targets"] = s.targets;
  j["bounds"] = Json{{"M", s.bounds.m}, {"n_max", s.bounds.n_max}, {"series_cutoff", s.bounds.series_cutoff}};
  if (!s.hint_points.empty()) j["hint_points"] = s.hint_points;
  if (!s.vertices.empty()) j["vertices"] = s.vertices;
  if (s.semiaxes) j["semiaxes"] = *s.semiaxes;
  j["seed"] = s.seed;
  return j;
}

Json run_analyze(const Scenario& s) {
  Stopwatch total;
  const ResolvedScenario r = resolve(s);
  if (r.factors.empty()) throw std::invalid_argument("analyze: scenario needs psi factors");
  const FischerProblem prob(r.psi, r.op);
  Json env = make_envelope(scenario_to_json(s));

  {
    Stopwatch sw;
    Json res = make_result("structural_obstruction");
    const ObstructionVerdict verdict = structural_obstruction(r.factors, r.hints);
    res["status"] = to_string(verdict.rule);
    res["certificates"].push_back(verdict_json(verdict));
    finish_result(res, sw);
    env["results"].push_back(std::move(res));
  }

  for (const Point& hint : r.hints) {
    Stopwatch sw;
    Json res = make_result("graded_bijectivity_table");
    Point neg(hint.size());
    for (std::size_t i = 0; i < hint.size(); ++i) neg[i] = -hint[i];
    const Polynomial moved = r.psi.translate(neg);  // hint point moved to the origin
    Json cert;
    cert["rule"] = "graded-invertibility-scan";
    cert["point"] = point_json(hint);
    if (moved.evaluate(Point(r.dim, Rational(0))) != Rational(0)) {
      res["status"] = "NOT_APPLICABLE";
      cert["detail"] = "psi does not vanish at the point; no graded structure to scan";
    } else {
      const Polynomial initial = moved.initial_part();
      cert["initial_part"] = format_polynomial(initial);
      cert["initial_degree"] = initial.degree();
      if (initial.degree() != 2) {
        res["status"] = "NOT_APPLICABLE";
        cert["detail"] = "initial part at the point has degree != 2";
      } else {
        bool all_invertible = true;
        for (const auto& entry : graded_bijectivity_table(initial, r.op, s.bounds.n_max)) {
          res["ranks"][std::to_string(entry.degree)] = entry.rank;
          if (!entry.invertible) {
            all_invertible = false;
            res["witnesses"].push_back(format_polynomial(*entry.kernel));
          }
        }
        res["status"] = all_invertible ? "ALL_INVERTIBLE" : "SINGULAR_DEGREE_FOUND";
      }
    }
    res["certificates"].push_back(std::move(cert));
    finish_result(res, sw);
    env["results"].push_back(std::move(res));
  }

  {
    Stopwatch sw;
    Json res = make_result("kernel_up_to");
    const auto kernel = kernel_up_to(prob, s.bounds.m);
    res["status"] = kernel.empty() ? "KERNEL_EMPTY" : "KERNEL_FOUND";
    for (const Polynomial& k : kernel) res["witnesses"].push_back(format_polynomial(k));
    Json cert;
    cert["rule"] = "exact-nullspace";
    cert["bound"] = s.bounds.m;
    cert["kernel_dimension"] = kernel.size();
    res["certificates"].push_back(std::move(cert));
    finish_result(res, sw);
    env["results"].push_back(std::move(res));
  }

  for (const Polynomial& f : r.targets) {
    Stopwatch sw;
    Json res = make_result("truncated_image_solve");
    const SolveOutcome outcome = truncated_image_solve(prob, f, s.bounds.m, r.hints);
    res["status"] = to_string(outcome.status);
    if (outcome.witness) res["witnesses"].push_back(format_polynomial(*outcome.witness));
    Json cert = certificate_json(outcome.certificate);
    cert["target"] = format_polynomial(f);
    res["certificates"].push_back(std::move(cert));
    finish_result(res, sw);
    env["results"].push_back(std::move(res));
  }

  env["timings"] = Json{{"wall_ms", total.ms()}};
  return env;
}

Json run_dirichlet(const Scenario& s) {
  Stopwatch total;
  const ResolvedScenario r = resolve(s);
  QuadricSpec spec = [&] {
    if (s.semiaxes) {
      std::vector<Rational> axes;
      for (const auto& a : *s.semiaxes) axes.push_back(Rational::from_string(a));
      return ellipsoid_psi(axes);
    }
    if (r.factors.size() != 1)
      throw std::invalid_argument("dirichlet: scenario needs either semiaxes or a single quadric psi");
    return QuadricSpec::from_polynomial(r.factors.front());
  }();
  Json env = make_envelope(scenario_to_json(s));
  for (const Polynomial& f : r.targets) {
    Stopwatch sw;
    Json res = make_result("dirichlet");
    try {
      const DirichletSolution sol = dirichlet_solve_quadric(spec, f, r.op);
      res["status"] = "SOLVED";
      res["witnesses"].push_back(format_polynomial(sol.h));
      res["witnesses"].push_back(format_polynomial(sol.q));
      Json cert;
      cert["rule"] = "exact-division";
      cert["detail"] = "L(h) = 0 and f - h = psi*q certified by exact division";
      cert["target"] = format_polynomial(f);
      cert["psi"] = format_polynomial(spec.to_polynomial());
      res["certificates"].push_back(std::move(cert));
    } catch (const DirichletInfeasible& e) {
      res["status"] = "INFEASIBLE_AT_BOUND";
      Json cert;
      cert["rule"] = "bound-exhausted";
      cert["detail"] = e.what();
      cert["target"] = format_polynomial(f);
      res["certificates"].push_back(std::move(cert));
    }
    finish_result(res, sw);
    env["results"].push_back(std::move(res));
  }
  env["timings"] = Json{{"wall_ms", total.ms()}};
  return env;
}

Json run_polygon(const Scenario& s) {
  Stopwatch total;
  const ResolvedScenario r = resolve(s);
  if (r.vertices.size() < 3) throw std::invalid_argument("polygon: scenario needs >= 3 vertices");
  if (r.op.dim() != 2) throw std::invalid_argument("polygon: operator must be planar");
  const PolygonSpec spec{r.vertices};
  const DomainReport report = vertex_obstruction_report(spec, r.op, s.bounds.m);
  Json env = make_envelope(scenario_to_json(s));

  {
    Stopwatch sw;
    Json res = make_result("polygon_psi");
    res["status"] = "OK";
    res["witnesses"].push_back(format_polynomial(report.forms.psi));
    Json cert;
    cert["rule"] = "edge-forms";
    cert["detail"] = report.description;
    Json forms = Json::array();
    for (const Polynomial& form : report.forms.edge_forms) forms.push_back(format_polynomial(form));
    cert["edge_forms"] = std::move(forms);
    cert["centroid"] = point_json(report.forms.centroid);
    res["certificates"].push_back(std::move(cert));
    finish_result(res, sw);
    env["results"].push_back(std::move(res));
  }
  {
    Stopwatch sw;
    Json res = make_result("structural_obstruction");
    res["status"] = to_string(report.obstruction.rule);
    res["certificates"].push_back(verdict_json(report.obstruction));
    finish_result(res, sw);
    env["results"].push_back(std::move(res));
  }
  for (const VertexFinding& finding : report.vertex_findings) {
    Stopwatch sw;
    Json res = make_result("vertex_kernel");
    res["status"] = finding.kernel.empty() ? "KERNEL_EMPTY" : "KERNEL_FOUND";
    for (const Polynomial& k : finding.kernel) res["witnesses"].push_back(format_polynomial(k));
    Json cert;
    cert["rule"] = "vertex-initial-part";
    cert["vertex_index"] = finding.vertex_index;
    cert["point"] = point_json(finding.vertex);
    cert["incident_edges"] = Json::array({finding.edge_in, finding.edge_out});
    cert["multiplicity"] = finding.multiplicity;
    cert["initial_part"] = format_polynomial(finding.initial_part);
    cert["bound"] = s.bounds.m;
    res["certificates"].push_back(std::move(cert));
    finish_result(res, sw);
    env["results"].push_back(std::move(res));
  }
  if (report.volkov) add_volkov_result(env, *report.volkov);
  env["timings"] = Json{{"wall_ms", total.ms()}};
  return env;
}

Json run_volkov(const Scenario& s) {
  Stopwatch total;
  const ResolvedScenario r = resolve(s);
  if (r.vertices.size() != 3) throw std::invalid_argument("volkov: scenario needs exactly 3 vertices");
  if (r.op.dim() != 2) throw std::invalid_argument("volkov: operator must be planar");
  const PolygonSpec spec{r.vertices};
  Json env = make_envelope(scenario_to_json(s));
  add_volkov_result(env, volkov_check(spec, r.op));
  env["timings"] = Json{{"wall_ms", total.ms()}};
  return env;
}

Json run_harmonic_divisor(const Scenario& s, bool assert_nonnegative) {
  Stopwatch total;
  const ResolvedScenario r = resolve(s);
  if (r.factors.empty()) throw std::invalid_argument("harmonic-divisor: scenario needs psi");
  Json env = make_envelope(scenario_to_json(s));
  Stopwatch sw;
  Json res = make_result("harmonic_divisor");
  const DivisorSearchResult search =
      find_harmonic_divisor_witness(r.psi, s.bounds.m, r.op, assert_nonnegative);
  res["status"] = to_string(search.status);
  Json cert;
  cert["rule"] = "exact-nullspace-search";
  cert["f"] = format_polynomial(r.psi);
  cert["bound"] = s.bounds.m;
  if (!search.reason.empty()) cert["detail"] = search.reason;
  if (search.witness) {
    res["witnesses"].push_back(format_polynomial(search.witness->witness()));
    cert["parts_check"] = parts_are_divisors_check(*search.witness);
  }
  res["certificates"].push_back(std::move(cert));
  finish_result(res, sw);
  env["results"].push_back(std::move(res));
  env["timings"] = Json{{"wall_ms", total.ms()}};
  return env;
}

Json run_decompose(const Scenario& s) {
  Stopwatch total;
  const ResolvedScenario r = resolve(s);
  if (r.factors.empty()) throw std::invalid_argument("decompose: scenario needs psi");
  const FischerProblem prob(r.psi, r.op);
  Json env = make_envelope(scenario_to_json(s));
  for (const Polynomial& f : r.targets) {
    Stopwatch sw;
    Json res = make_result("fischer_decompose");
    const int bound = std::max(s.bounds.m, f.is_zero() ? 0 : f.degree());
    const auto decomp = fischer_decompose(prob, f, bound);
    Json cert;
    cert["rule"] = decomp ? "exact-witness" : "bound-exhausted";
    cert["target"] = format_polynomial(f);
    cert["bound"] = bound;
    if (decomp) {
      res["status"] = "SOLVED";
      res["witnesses"].push_back(format_polynomial(decomp->q));
      res["witnesses"].push_back(format_polynomial(decomp->h));
      cert["detail"] = "f = psi*q + h with L(h) = 0, all exact";
    } else {
      res["status"] = "INFEASIBLE_AT_BOUND";
      cert["detail"] = "no decomposition with deg q <= bound; no global claim";
    }
    res["certificates"].push_back(std::move(cert));
    finish_result(res, sw);
    env["results"].push_back(std::move(res));
  }
  env["timings"] = Json{{"wall_ms", total.ms()}};
  return env;
}

Json run_scan_cs(const ScanCsParams& params) {
  Stopwatch total;
  if (params.dim < 1) throw std::invalid_argument("scan-cs: dim must be >= 1");
  if (params.degree < 2) throw std::invalid_argument("scan-cs: degree must be >= 2");
  if (params.coeff_range < 1) throw std::invalid_argument("scan-cs: coeff-range must be >= 1");
  if (params.samples < 1) throw std::invalid_argument("scan-cs: samples must be >= 1");
  if (params.bound < 0) throw std::invalid_argument("scan-cs: bound must be >= 0");

  Json echo;
  echo["name"] = "scan-cs";
  echo["dim"] = params.dim;
  echo["degree"] = params.degree;
  echo["coeff_range"] = params.coeff_range;
  echo["samples"] = params.samples;
  echo["bound"] = params.bound;
  echo["seed"] = params.seed;
  Json env = make_envelope(std::move(echo));

  std::mt19937_64 rng(params.seed);
  // Raw 64-bit draws reduced by modulus: identical streams on every platform.
  const auto draw_coeff = [&]() -> long {
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(params.coeff_range) + 1;
    return static_cast<long>(rng() % span) - params.coeff_range;
  };
  const auto monomials = monomials_up_to_degree(params.dim, params.degree);
  const QuadraticOperator op = QuadraticOperator::laplacian(params.dim);

  for (int sample = 0; sample < params.samples; ++sample) {
    Stopwatch sw;
    Polynomial psi(params.dim);
    for (;;) {
      psi = Polynomial::zero(params.dim);
      for (const auto& e : monomials) {
        const long c = draw_coeff();
        if (c != 0) psi = psi + Polynomial::monomial(params.dim, e, Rational(c));
      }
      if (!psi.is_zero() && !psi.is_constant() && psi.degree() == params.degree) break;
    }
    const FischerProblem prob(psi, op);
    const auto kernel = kernel_up_to(prob, params.bound);
    const TruncatedRankScan scan = truncated_rank_scan(prob, params.bound);
    if (static_cast<int>(kernel.size()) != scan.kernel_dimension)
      throw VerificationError("scan-cs: kernel basis size disagrees with rank-nullity");

    Json res = make_result("scan_cs_sample");
    Json cert;
    cert["rule"] = "truncated-rank-scan";
    cert["sample"] = sample;
    cert["psi"] = format_polynomial(psi);
    cert["kernel_dimension"] = scan.kernel_dimension;
    cert["image_rank"] = scan.image_rank;
    Json defects;
    bool full = kernel.empty();
    for (int t = 0; t <= params.bound; ++t) {
      defects[std::to_string(t)] = scan.defects[t];
      res["ranks"][std::to_string(t)] = scan.image_rank + scan.defects[t];
      if (scan.defects[t] != 0) full = false;
    }
    cert["defects"] = std::move(defects);
    cert["flagged_for_followup"] = full;
    res["status"] = full ? "FULL_RANK_AT_BOUND" : "OBSTRUCTED_AT_BOUND";
    for (const Polynomial& k : kernel) res["witnesses"].push_back(format_polynomial(k));
    res["certificates"].push_back(std::move(cert));
    finish_result(res, sw);
    env["results"].push_back(std::move(res));
  }
  env["timings"] = Json{{"wall_ms", total.ms()}};
  return env;
}

Json strip_timings(const Json& j) {
  if (j.is_object()) {
    Json out = Json::object();
    for (const auto& [key, value] : j.items()) {
      if (key == "timings") continue;
      out[key] = strip_timings(value);
    }
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& v : j) out.push_back(strip_timings(v));
    return out;
  }
  return j;
}

}  // namespace fischerlab
