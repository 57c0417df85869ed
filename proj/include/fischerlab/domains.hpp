// Domain-level applications: exact polynomial Dirichlet solutions on
// ellipsoids/quadrics, polygon edge forms and per-vertex obstruction reports,
// and the cubic boundary identity L(l1*l2*l3) = const for triangles.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fischerlab/fischer.hpp"
#include "fischerlab/matrix.hpp"
#include "fischerlab/polynomial.hpp"

namespace fischerlab {

/// psi(x) = x^T A x + b^T x + c with A symmetric.
struct QuadricSpec {
  ExactMatrix a;
  std::vector<Rational> b;
  Rational c;

  QuadricSpec(ExactMatrix a_, std::vector<Rational> b_, Rational c_);
  int dim() const { return a.rows(); }
  Polynomial to_polynomial() const;
  /// Extracts (A, b, c) from a polynomial of degree <= 2; throws otherwise.
  static QuadricSpec from_polynomial(const Polynomial& p);
  /// A positive definite (exact leading principal minors) and min psi < 0,
  /// so {psi < 0} is a nonempty ellipsoidal domain.
  bool valid_for_dirichlet(std::string* why = nullptr) const;
};

/// psi = sum x_i^2 / a_i^2 - 1.
QuadricSpec ellipsoid_psi(const std::vector<Rational>& semiaxes);

/// Raised when the quadric decomposition search fails at its bound. Not
/// expected for valid ellipsoid specs; reported, never silently retried.
struct DirichletInfeasible : std::runtime_error {
  explicit DirichletInfeasible(const std::string& what) : std::runtime_error(what) {}
};

struct DirichletSolution {
  Polynomial h;  // L(h) = 0 and h = f on {psi = 0}
  Polynomial q;  // f - h = psi * q, exactly
};

/// Exact polynomial Dirichlet solution for data f on {psi = 0}: h with
/// L(h) = 0 and f - h divisible by psi (certified by exact division).
DirichletSolution dirichlet_solve_quadric(const QuadricSpec& spec, const Polynomial& f,
                                          const QuadraticOperator& op);

/// Simple polygon, >= 3 rational vertices in counterclockwise order.
/// Validated: consecutive vertices distinct, no 0/180-degree corners, no
/// self-intersection (exact segment tests).
class PolygonSpec {
 public:
  explicit PolygonSpec(std::vector<Point> vertices);
  const std::vector<Point>& vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }

 private:
  std::vector<Point> vertices_;
};

struct PolygonForms {
  // Edge k joins vertex k to vertex k+1 (mod N). Each form has primitive
  // integer coefficients and evaluates positive at the centroid.
  std::vector<Polynomial> edge_forms;
  Polynomial psi;  // product of the edge forms
  Point centroid;
};

PolygonForms polygon_psi(const PolygonSpec& spec);

struct VertexFinding {
  int vertex_index;
  Point vertex;
  int edge_in, edge_out;             // incident edge indices
  int multiplicity;                  // of psi at the vertex (2 for simple polygons)
  Polynomial initial_part;           // of psi translated so this vertex is the origin
  std::vector<Polynomial> kernel;    // kernel of q -> L(initial_part * q) up to the bound
};

struct VolkovResult {
  Polynomial psi;
  Polynomial image;                  // L(psi)
  std::optional<Rational> constant;  // set iff image is constant
  std::optional<Polynomial> u;       // psi / constant when constant != 0: L(u) = 1, u = 0 on edges
};

struct DomainReport {
  std::string description;
  PolygonForms forms;
  QuadraticOperator op = QuadraticOperator::laplacian(2);
  ObstructionVerdict obstruction;
  std::vector<VertexFinding> vertex_findings;
  std::optional<VolkovResult> volkov;  // triangles only
};

/// Per-vertex analysis: translate psi so the vertex sits at the origin, take
/// the initial part (the product of the incident edge forms scaled by the
/// values of the remaining edges), and search its Fischer kernel up to the
/// bound. Attaches the structural obstruction verdict for the edge forms.
DomainReport vertex_obstruction_report(const PolygonSpec& spec, const QuadraticOperator& op,
                                       int bound);

/// Computes L(l1*l2*l3) for a triangle. If the result is a constant c, then
/// for c != 0 the polynomial u = psi/c satisfies L(u) = 1 and u = 0 on the
/// boundary edges.
VolkovResult volkov_check(const PolygonSpec& triangle, const QuadraticOperator& op);

}  // namespace fischerlab
