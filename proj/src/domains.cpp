#include "fischerlab/domains.hpp"

#include <utility>

#include "fischerlab/text.hpp"

namespace fischerlab {

QuadricSpec::QuadricSpec(ExactMatrix a_, std::vector<Rational> b_, Rational c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a.rows() != a.cols()) throw std::invalid_argument("QuadricSpec: A must be square");
  if (static_cast<int>(b.size()) != a.rows()) throw DimensionMismatch("QuadricSpec: b length != dim");
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = i + 1; j < a.cols(); ++j) {
      if (a.at(i, j) != a.at(j, i)) throw std::invalid_argument("QuadricSpec: A must be symmetric");
    }
  }
  if (to_polynomial().is_constant()) throw std::invalid_argument("QuadricSpec: psi must be nonconstant");
}

Polynomial QuadricSpec::to_polynomial() const {
  const int d = dim();
  Polynomial p = Polynomial::constant(d, c);
  for (int i = 0; i < d; ++i) {
    if (!b[i].is_zero()) p = p + Polynomial::variable(d, i) * b[i];
    for (int j = 0; j < d; ++j) {
      if (a.at(i, j).is_zero()) continue;
      Exponents e(d, 0);
      ++e[i];
      ++e[j];
      p = p + Polynomial::monomial(d, e, a.at(i, j));
    }
  }
  return p;
}

QuadricSpec QuadricSpec::from_polynomial(const Polynomial& p) {
  if (p.is_zero() || p.degree() > 2)
    throw std::invalid_argument("QuadricSpec::from_polynomial: need a polynomial of degree <= 2");
  const int d = p.dim();
  ExactMatrix a(d, d);
  std::vector<Rational> b(d, Rational(0));
  Rational c = p.coefficient(Exponents(d, 0));
  for (int i = 0; i < d; ++i) {
    Exponents lin(d, 0);
    lin[i] = 1;
    b[i] = p.coefficient(lin);
    Exponents sq(d, 0);
    sq[i] = 2;
    a.at(i, i) = p.coefficient(sq);
    for (int j = i + 1; j < d; ++j) {
      Exponents mixed(d, 0);
      mixed[i] = mixed[j] = 1;
      const Rational half = p.coefficient(mixed) / Rational(2);
      a.at(i, j) = half;
      a.at(j, i) = half;
    }
  }
  return QuadricSpec(std::move(a), std::move(b), std::move(c));
}

bool QuadricSpec::valid_for_dirichlet(std::string* why) const {
  if (!positive_definite(a)) {
    if (why) *why = "quadratic part is not positive definite";
    return false;
  }
  // Minimum at the solution of 2*A*x = -b; the sublevel set {psi < 0} is
  // nonempty iff psi there is negative.
  ExactMatrix twice_a = a;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) twice_a.at(i, j) = a.at(i, j) * Rational(2);
  }
  std::vector<Rational> neg_b(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) neg_b[i] = -b[i];
  const auto min_point = solve(twice_a, neg_b);
  if (!min_point) {
    if (why) *why = "could not locate the minimum point";  // unreachable for pd A
    return false;
  }
  if (to_polynomial().evaluate(*min_point).sign() >= 0) {
    if (why) *why = "minimum of psi is >= 0: the domain {psi < 0} is empty";
    return false;
  }
  return true;
}

QuadricSpec ellipsoid_psi(const std::vector<Rational>& semiaxes) {
  if (semiaxes.empty()) throw std::invalid_argument("ellipsoid_psi: need at least one semiaxis");
  const int d = static_cast<int>(semiaxes.size());
  ExactMatrix a(d, d);
  for (int i = 0; i < d; ++i) {
    if (semiaxes[i].sign() <= 0) throw std::invalid_argument("ellipsoid_psi: semiaxes must be positive");
    a.at(i, i) = Rational(1) / (semiaxes[i] * semiaxes[i]);
  }
  return QuadricSpec(std::move(a), std::vector<Rational>(d, Rational(0)), Rational(-1));
}

DirichletSolution dirichlet_solve_quadric(const QuadricSpec& spec, const Polynomial& f,
                                          const QuadraticOperator& op) {
  std::string why;
  if (!spec.valid_for_dirichlet(&why))
    throw std::invalid_argument("dirichlet_solve_quadric: invalid quadric: " + why);
  ExactMatrix op_matrix(op.dim(), op.dim());
  for (int i = 0; i < op.dim(); ++i) {
    for (int j = 0; j < op.dim(); ++j) op_matrix.at(i, j) = op.coeff(i, j);
  }
  if (!positive_definite(op_matrix))
    throw std::invalid_argument("dirichlet_solve_quadric: operator must be positive definite");
  const Polynomial psi = spec.to_polynomial();
  const FischerProblem prob(psi, op);
  const auto decomp = fischer_decompose(prob, f);
  if (!decomp)
    throw DirichletInfeasible("dirichlet_solve_quadric: decomposition infeasible at degree bound " +
                              std::to_string(f.is_zero() ? 0 : f.degree()));
  // Certify h = f on {psi = 0} by exact division of the difference.
  const auto quotient = exact_divide(f - decomp->h, psi);
  if (!quotient || !(*quotient == decomp->q))
    throw VerificationError("dirichlet_solve_quadric: exact-division certificate failed");
  return {decomp->h, decomp->q};
}

namespace {

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  // Assumes p collinear with segment ab.
  const auto within = [](const Rational& v, const Rational& lo, const Rational& hi) {
    return (lo <= v && v <= hi) || (hi <= v && v <= lo);
  };
  return within(p[0], a[0], b[0]) && within(p[1], a[1], b[1]);
}

bool segments_intersect(const Point& p1, const Point& p2, const Point& p3, const Point& p4) {
  const int o1 = cross(p3, p4, p1).sign();
  const int o2 = cross(p3, p4, p2).sign();
  const int o3 = cross(p1, p2, p3).sign();
  const int o4 = cross(p1, p2, p4).sign();
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p3, p4)) return true;
  if (o2 == 0 && on_segment(p2, p3, p4)) return true;
  if (o3 == 0 && on_segment(p3, p1, p2)) return true;
  if (o4 == 0 && on_segment(p4, p1, p2)) return true;
  return false;
}

}  // namespace

PolygonSpec::PolygonSpec(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const int n = static_cast<int>(vertices_.size());
  if (n < 3) throw std::invalid_argument("PolygonSpec: need at least 3 vertices");
  for (const Point& v : vertices_) {
    if (v.size() != 2) throw DimensionMismatch("PolygonSpec: vertices must be planar points");
  }
  Rational twice_area(0);
  for (int i = 0; i < n; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    if (a == b) throw std::invalid_argument("PolygonSpec: consecutive vertices must be distinct");
    twice_area += a[0] * b[1] - b[0] * a[1];
  }
  if (twice_area.sign() <= 0)
    throw std::invalid_argument("PolygonSpec: vertices must be in counterclockwise order");
  for (int i = 0; i < n; ++i) {
    const Point& prev = vertices_[(i + n - 1) % n];
    const Point& cur = vertices_[i];
    const Point& next = vertices_[(i + 1) % n];
    if (cross(prev, cur, next).is_zero())
      throw std::invalid_argument("PolygonSpec: collinear edges at vertex " + std::to_string(i));
  }
  // Exact simplicity test: non-adjacent edges must not meet at all.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(vertices_[i], vertices_[(i + 1) % n], vertices_[j],
                             vertices_[(j + 1) % n]))
        throw std::invalid_argument("PolygonSpec: polygon is not simple (edges " +
                                    std::to_string(i) + " and " + std::to_string(j) + " meet)");
    }
  }
}

namespace {

// Scales a nonzero rational linear form to primitive integer coefficients.
Polynomial make_primitive(const Polynomial& form) {
  mpz_class lcm_den(1);
  for (const auto& [e, c] : form.terms()) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
    lcm_den = l;
  }
  mpz_class gcd_num(0);
  for (const auto& [e, c] : form.terms()) {
    const mpz_class scaled = c.numerator() * (lcm_den / c.denominator());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
    gcd_num = g;
  }
  const Rational content(mpq_class(gcd_num, lcm_den));
  return form * (Rational(1) / content);
}

}  // namespace

PolygonForms polygon_psi(const PolygonSpec& spec) {
  const int n = spec.size();
  const auto& vs = spec.vertices();
  Point centroid(2, Rational(0));
  for (const Point& v : vs) {
    centroid[0] += v[0];
    centroid[1] += v[1];
  }
  centroid[0] /= Rational(n);
  centroid[1] /= Rational(n);

  PolygonForms out;
  out.centroid = centroid;
  const Polynomial x = Polynomial::variable(2, 0);
  const Polynomial y = Polynomial::variable(2, 1);
  for (int k = 0; k < n; ++k) {
    const Point& a = vs[k];
    const Point& b = vs[(k + 1) % n];
    const Rational dx = b[0] - a[0];
    const Rational dy = b[1] - a[1];
    // Line through a and b: dx*(y - a.y) - dy*(x - a.x).
    Polynomial form = (y - Polynomial::constant(2, a[1])) * dx - (x - Polynomial::constant(2, a[0])) * dy;
    form = make_primitive(form);
    const int sign_at_centroid = form.evaluate(centroid).sign();
    if (sign_at_centroid == 0)
      throw std::invalid_argument("polygon_psi: centroid lies on an edge line");
    if (sign_at_centroid < 0) form = -form;
    out.edge_forms.push_back(std::move(form));
  }
  out.psi = out.edge_forms.front();
  for (int k = 1; k < n; ++k) out.psi = out.psi * out.edge_forms[k];

  // Each vertex must be the exact intersection of its incident edge lines.
  for (int k = 0; k < n; ++k) {
    const Polynomial& in_form = out.edge_forms[(k + n - 1) % n];
    const Polynomial& out_form = out.edge_forms[k];
    if (!in_form.evaluate(vs[k]).is_zero() || !out_form.evaluate(vs[k]).is_zero())
      throw VerificationError("polygon_psi: vertex is not on its incident edge lines");
  }
  return out;
}

DomainReport vertex_obstruction_report(const PolygonSpec& spec, const QuadraticOperator& op,
                                       int bound) {
  if (op.dim() != 2) throw DimensionMismatch("vertex_obstruction_report: operator must be planar");
  if (bound < 0) throw std::invalid_argument("vertex_obstruction_report: bound must be >= 0");
  DomainReport report;
  report.forms = polygon_psi(spec);
  report.op = op;
  const int n = spec.size();
  report.description = std::to_string(n) + "-gon, psi = product of " + std::to_string(n) +
                       " primitive edge forms, deg psi = " + std::to_string(n);

  std::vector<Point> hints;
  for (const Point& v : spec.vertices()) hints.push_back(v);
  report.obstruction = structural_obstruction(report.forms.edge_forms, hints);

  for (int k = 0; k < n; ++k) {
    const Point& v = spec.vertices()[k];
    VertexFinding finding;
    finding.vertex_index = k;
    finding.vertex = v;
    finding.edge_in = (k + n - 1) % n;
    finding.edge_out = k;
    // Move the vertex to the origin: psi(x + v).
    const Point neg_v{-v[0], -v[1]};
    const Polynomial moved = report.forms.psi.translate(neg_v);
    const auto mult = moved.multiplicity_at(Point(2, Rational(0)));
    finding.multiplicity = mult.value_or(-1);
    finding.initial_part = moved.initial_part();
    if (finding.initial_part.degree() == 2) {
      finding.kernel = kernel_up_to(FischerProblem(finding.initial_part, op), bound);
    }
    report.vertex_findings.push_back(std::move(finding));
  }
  if (n == 3) report.volkov = volkov_check(spec, op);
  return report;
}

VolkovResult volkov_check(const PolygonSpec& triangle, const QuadraticOperator& op) {
  if (triangle.size() != 3) throw std::invalid_argument("volkov_check: polygon must be a triangle");
  if (op.dim() != 2) throw DimensionMismatch("volkov_check: operator must be planar");
  VolkovResult result;
  const PolygonForms forms = polygon_psi(triangle);
  result.psi = forms.psi;
  result.image = op.apply(forms.psi);
  if (result.image.is_constant()) {
    const Rational c =
        result.image.is_zero() ? Rational(0) : result.image.coefficient(Exponents(2, 0));
    result.constant = c;
    if (!c.is_zero()) {
      result.u = forms.psi * (Rational(1) / c);
      if (!(op.apply(*result.u) == Polynomial::constant(2, Rational(1))))
        throw VerificationError("volkov_check: normalized solution failed L(u) = 1");
    }
  }
  return result;
}

}  // namespace fischerlab
