#include "fischerlab/fischer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "fischerlab/text.hpp"

namespace fischerlab {

FischerProblem::FischerProblem(Polynomial psi_, QuadraticOperator op_)
    : psi(std::move(psi_)), op(std::move(op_)) {
  if (psi.is_zero()) throw ZeroPolynomialError("FischerProblem: psi must be nonzero");
  if (psi.is_constant()) throw std::invalid_argument("FischerProblem: psi must be nonconstant");
  if (psi.dim() != op.dim()) throw DimensionMismatch("FischerProblem: psi/operator dimension mismatch");
}

Polynomial fischer_apply(const FischerProblem& prob, const Polynomial& q) {
  return prob.op.apply(prob.psi * q);
}

FischerProblem translated_problem(const FischerProblem& prob, const Point& x0) {
  return FischerProblem(prob.psi.translate(x0), prob.op);
}

ExactMatrix graded_fischer_matrix(const Polynomial& psi_k, const QuadraticOperator& op, int n) {
  if (psi_k.is_zero() || !psi_k.is_homogeneous())
    throw std::invalid_argument("graded_fischer_matrix: psi_k must be nonzero homogeneous");
  const int k = psi_k.degree();
  if (k < 2) throw std::invalid_argument("graded_fischer_matrix: deg psi_k must be >= 2");
  if (n < 0) throw std::invalid_argument("graded_fischer_matrix: n must be >= 0");
  const int dim = psi_k.dim();
  const GradedBasis cols = GradedBasis::of_degree(dim, n);
  const GradedBasis rows = GradedBasis::of_degree(dim, n + k - 2);
  ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Polynomial image =
        op.apply(psi_k * Polynomial::monomial(dim, cols.monomial(c), Rational(1)));
    for (const auto& [e, coeff] : image.terms()) m.at(rows.index_of(e), static_cast<int>(c)) = coeff;
  }
  return m;
}

std::vector<GradedDegreeEntry> graded_bijectivity_table(const Polynomial& psi2,
                                                        const QuadraticOperator& op, int n_max) {
  if (psi2.is_zero() || !psi2.is_homogeneous() || psi2.degree() != 2)
    throw std::invalid_argument("graded_bijectivity_table: psi2 must be homogeneous of degree 2");
  std::vector<GradedDegreeEntry> table;
  for (int n = 0; n <= n_max; ++n) {
    const ExactMatrix m = graded_fischer_matrix(psi2, op, n);
    GradedDegreeEntry entry{n, rank(m), false, std::nullopt};
    entry.invertible = entry.rank == m.cols();
    if (!entry.invertible) {
      const auto null = nullspace_basis(m);
      entry.kernel = from_coords(null.front(), GradedBasis::of_degree(psi2.dim(), n));
    }
    table.push_back(std::move(entry));
  }
  return table;
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved: return "SOLVED";
    case SolveStatus::InfeasibleAtBound: return "INFEASIBLE_AT_BOUND";
    case SolveStatus::GloballyInfeasible: return "GLOBALLY_INFEASIBLE";
    case SolveStatus::SeriesTruncated: return "SERIES_TRUNCATED";
  }
  return "?";
}

std::string to_string(ObstructionRule r) {
  switch (r) {
    case ObstructionRule::ThreeFactorsCommonZero: return "THREE_FACTORS_COMMON_ZERO";
    case ObstructionRule::TwoFactorMult2: return "TWO_FACTOR_MULT2";
    case ObstructionRule::MultiplicityGe3: return "MULTIPLICITY_GE_3";
    case ObstructionRule::NoneFound: return "NONE_FOUND";
  }
  return "?";
}

namespace {

// Assembles the matrix of q -> L(psi*q) over the given column monomials. Rows
// cover exactly the union of the image supports and the rhs support, so a rhs
// term unreachable by any column shows up as an inconsistent row.
struct FischerSystem {
  ExactMatrix matrix;
  GradedBasis rows;
};

FischerSystem build_system(const FischerProblem& prob, const Polynomial& rhs,
                           const std::vector<Exponents>& q_monomials) {
  const int dim = prob.dim();
  std::vector<Polynomial> images;
  images.reserve(q_monomials.size());
  std::set<Exponents, ListingLess> support;
  for (const auto& e : q_monomials) {
    images.push_back(prob.op.apply(prob.psi * Polynomial::monomial(dim, e, Rational(1))));
    for (const auto& [m, c] : images.back().terms()) support.insert(m);
  }
  for (const auto& [m, c] : rhs.terms()) support.insert(m);
  GradedBasis rows = GradedBasis::from_monomials(
      dim, std::vector<Exponents>(support.begin(), support.end()));
  ExactMatrix mat(static_cast<int>(rows.size()), static_cast<int>(q_monomials.size()));
  for (std::size_t c = 0; c < images.size(); ++c) {
    for (const auto& [m, coeff] : images[c].terms()) mat.at(rows.index_of(m), static_cast<int>(c)) = coeff;
  }
  return {std::move(mat), std::move(rows)};
}

Polynomial coords_to_poly(const std::vector<Rational>& x, const std::vector<Exponents>& monomials,
                          int dim) {
  Polynomial q(dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) q = q + Polynomial::monomial(dim, monomials[i], x[i]);
  }
  return q;
}

}  // namespace

std::optional<Polynomial> solve_fischer_linear_system(const FischerProblem& prob,
                                                      const Polynomial& rhs,
                                                      const std::vector<Exponents>& q_monomials) {
  if (rhs.dim() != prob.dim()) throw DimensionMismatch("solve_fischer_linear_system: dimension mismatch");
  const FischerSystem sys = build_system(prob, rhs, q_monomials);
  const auto x = solve(sys.matrix, to_coords(rhs, sys.rows));
  if (!x) return std::nullopt;
  Polynomial q = coords_to_poly(*x, q_monomials, prob.dim());
  if (!(fischer_apply(prob, q) == rhs))
    throw VerificationError("solve_fischer_linear_system: witness failed re-verification");
  return q;
}

SolveOutcome truncated_image_solve(const FischerProblem& prob, const Polynomial& f, int bound,
                                   const std::vector<Point>& hint_points) {
  if (f.dim() != prob.dim()) throw DimensionMismatch("truncated_image_solve: dimension mismatch");
  if (bound < 0) throw std::invalid_argument("truncated_image_solve: bound must be >= 0");
  // Evaluation argument: at a zero of psi of multiplicity >= 3 every second
  // derivative of psi*q vanishes, so L(psi*q) vanishes there for all q. Any f
  // nonzero at such a point is unreachable globally, at every degree.
  for (const Point& x0 : hint_points) {
    const auto mult = prob.psi.multiplicity_at(x0);
    if (mult && *mult >= 3) {
      const Rational fval = f.evaluate(x0);
      if (!fval.is_zero()) {
        Certificate cert;
        cert.rule = "multiplicity-ge-3-evaluation";
        cert.detail = "psi has a zero of multiplicity >= 3 at the point, so L(psi*q) vanishes "
                      "there for every polynomial q, while f does not";
        cert.point = x0;
        cert.value = fval;
        cert.multiplicity = *mult;
        return {SolveStatus::GloballyInfeasible, std::nullopt, std::move(cert)};
      }
    }
  }
  auto q = solve_fischer_linear_system(prob, f, monomials_up_to_degree(prob.dim(), bound));
  if (q) {
    Certificate cert;
    cert.rule = "exact-witness";
    cert.detail = "L(psi*q) = f re-verified exactly";
    cert.bound = bound;
    return {SolveStatus::Solved, std::move(q), std::move(cert)};
  }
  Certificate cert;
  cert.rule = "bound-exhausted";
  cert.detail = "no witness of degree <= bound; no global claim";
  cert.bound = bound;
  return {SolveStatus::InfeasibleAtBound, std::nullopt, std::move(cert)};
}

std::vector<Polynomial> kernel_up_to(const FischerProblem& prob, int bound) {
  if (bound < 0) throw std::invalid_argument("kernel_up_to: bound must be >= 0");
  const auto q_monomials = monomials_up_to_degree(prob.dim(), bound);
  const FischerSystem sys = build_system(prob, Polynomial::zero(prob.dim()), q_monomials);
  std::vector<Polynomial> kernel;
  for (const auto& v : nullspace_basis(sys.matrix)) {
    Polynomial q = coords_to_poly(v, q_monomials, prob.dim());
    if (!fischer_apply(prob, q).is_zero())
      throw VerificationError("kernel_up_to: kernel vector failed re-verification");
    kernel.push_back(std::move(q));
  }
  return kernel;
}

std::optional<FischerDecomposition> fischer_decompose(const FischerProblem& prob,
                                                      const Polynomial& f,
                                                      std::optional<int> bound) {
  if (f.dim() != prob.dim()) throw DimensionMismatch("fischer_decompose: dimension mismatch");
  const int m = bound.value_or(f.is_zero() ? 0 : f.degree());
  if (m < 0) throw std::invalid_argument("fischer_decompose: bound must be >= 0");
  auto q = solve_fischer_linear_system(prob, prob.op.apply(f),
                                       monomials_up_to_degree(prob.dim(), m));
  if (!q) return std::nullopt;
  Polynomial h = f - prob.psi * *q;
  if (!prob.op.apply(h).is_zero())
    throw VerificationError("fischer_decompose: h = f - psi*q is not in the operator kernel");
  return FischerDecomposition{std::move(*q), std::move(h)};
}

SingularGradedMatrix::SingularGradedMatrix(int degree, Polynomial kernel)
    : std::runtime_error("graded matrix singular at degree " + std::to_string(degree)),
      degree_(degree),
      kernel_(std::move(kernel)) {}

SolveOutcome graded_recursive_solve(const FischerProblem& prob, const Polynomial& f, int cutoff) {
  if (f.dim() != prob.dim()) throw DimensionMismatch("graded_recursive_solve: dimension mismatch");
  if (cutoff < 0) throw std::invalid_argument("graded_recursive_solve: cutoff must be >= 0");
  const Point origin(prob.dim(), Rational(0));
  const auto mult = prob.psi.multiplicity_at(origin);
  if (!mult || *mult != 2)
    throw std::invalid_argument("graded_recursive_solve: psi must have a zero of multiplicity 2 at the origin");

  const auto psi_parts = prob.psi.homogeneous_components();  // lowest key is 2
  const Polynomial& psi2 = psi_parts.at(2);
  const int psi_deg = prob.psi.degree();
  const int window = psi_deg - 2;  // how far corrections reach back
  const int f_deg = f.is_zero() ? -1 : f.degree();

  std::map<int, Polynomial> q_parts;
  const auto solve_degree = [&](int n) -> Polynomial {
    Polynomial rhs = f.homogeneous_component(n);
    for (const auto& [k, psi_k] : psi_parts) {
      if (k < 3) continue;
      const int j = n + 2 - k;
      if (j < 0) continue;
      auto it = q_parts.find(j);
      if (it != q_parts.end() && !it->second.is_zero())
        rhs = rhs - prob.op.apply(psi_k * it->second);
    }
    const ExactMatrix g = graded_fischer_matrix(psi2, prob.op, n);
    const GradedBasis basis = GradedBasis::of_degree(prob.dim(), n);
    if (rank(g) < g.cols())
      throw SingularGradedMatrix(n, from_coords(nullspace_basis(g).front(), basis));
    const auto x = solve(g, to_coords(rhs, basis));
    if (!x) throw VerificationError("graded_recursive_solve: invertible graded system unsolvable");
    return from_coords(*x, basis);
  };

  const auto finish_solved = [&]() -> SolveOutcome {
    Polynomial q(prob.dim());
    for (const auto& [n, qn] : q_parts) q = q + qn;
    if (!(fischer_apply(prob, q) == f))
      throw VerificationError("graded_recursive_solve: assembled witness failed re-verification");
    Certificate cert;
    cert.rule = "exact-witness";
    cert.detail = "graded recursion terminated; L(psi*q) = f re-verified exactly";
    return {SolveStatus::Solved, std::move(q), std::move(cert)};
  };

  int consecutive_zero = 0;
  for (int n = 0; n <= cutoff; ++n) {
    Polynomial qn = solve_degree(n);
    if (!qn.is_zero()) q_parts.emplace(n, std::move(qn));
    if (n > f_deg) {
      consecutive_zero = q_parts.count(n) ? 0 : consecutive_zero + 1;
      // Each degree reads back at most (deg psi - 2) earlier q's, so that many
      // consecutive zeros past deg f force all later q_n to vanish.
      if (consecutive_zero >= window) return finish_solved();
    }
    if (n == f_deg && window == 0) return finish_solved();
  }
  Polynomial partial(prob.dim());
  for (const auto& [n, qn] : q_parts) partial = partial + qn;
  Certificate cert;
  cert.rule = "series-cutoff";
  cert.detail = "recursion did not terminate by the cutoff; witness is the partial sum";
  cert.degree = cutoff;
  return {SolveStatus::SeriesTruncated, std::move(partial), std::move(cert)};
}

TruncatedRankScan truncated_rank_scan(const FischerProblem& prob, int bound) {
  if (bound < 0) throw std::invalid_argument("truncated_rank_scan: bound must be >= 0");
  const int dim = prob.dim();
  const int psi_deg = prob.psi.degree();
  const GradedBasis cols = GradedBasis::up_to_degree(dim, bound);
  const GradedBasis rows = GradedBasis::up_to_degree(dim, std::max(bound + psi_deg - 2, bound));
  ExactMatrix a(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Polynomial image =
        fischer_apply(prob, Polynomial::monomial(dim, cols.monomial(c), Rational(1)));
    for (const auto& [e, coeff] : image.terms()) a.at(rows.index_of(e), static_cast<int>(c)) = coeff;
  }
  TruncatedRankScan scan;
  scan.bound = bound;
  scan.image_rank = rank(a);
  scan.kernel_dimension = static_cast<int>(cols.size()) - scan.image_rank;
  for (int t = 0; t <= bound; ++t) {
    const auto targets = monomials_up_to_degree(dim, t);
    ExactMatrix aug(a.rows(), a.cols() + static_cast<int>(targets.size()));
    for (int r = 0; r < a.rows(); ++r) {
      for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    }
    for (std::size_t m = 0; m < targets.size(); ++m) {
      aug.at(rows.index_of(targets[m]), a.cols() + static_cast<int>(m)) = Rational(1);
    }
    scan.defects.push_back(rank(aug) - scan.image_rank);
  }
  return scan;
}

namespace {

struct Candidate {
  Point point;
  bool from_hint;
  std::size_t hint_index;  // valid when from_hint
};

}  // namespace

ObstructionVerdict structural_obstruction(const std::vector<Polynomial>& factors,
                                          const std::vector<Point>& common_zero_hints) {
  if (factors.empty()) throw std::invalid_argument("structural_obstruction: no factors");
  const int dim = factors.front().dim();
  for (const auto& f : factors) {
    if (f.dim() != dim) throw DimensionMismatch("structural_obstruction: factor dimension mismatch");
    if (f.is_constant()) throw std::invalid_argument("structural_obstruction: factors must be nonconstant");
  }
  for (const auto& h : common_zero_hints) {
    if (static_cast<int>(h.size()) != dim)
      throw DimensionMismatch("structural_obstruction: hint dimension mismatch");
  }

  const int n_factors = static_cast<int>(factors.size());
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < common_zero_hints.size(); ++i)
    candidates.push_back({common_zero_hints[i], true, i});
  // Exact pairwise intersections of linear factors (particular solution,
  // free coordinates zero). Nonlinear intersections need caller hints.
  for (int i = 0; i < n_factors; ++i) {
    for (int j = i + 1; j < n_factors; ++j) {
      if (factors[i].degree() != 1 || factors[j].degree() != 1) continue;
      ExactMatrix m(2, dim);
      std::vector<Rational> b(2, Rational(0));
      for (int row = 0; row < 2; ++row) {
        const Polynomial& form = row == 0 ? factors[i] : factors[j];
        for (int v = 0; v < dim; ++v) {
          Exponents e(dim, 0);
          e[v] = 1;
          m.at(row, v) = form.coefficient(e);
        }
        b[row] = -form.coefficient(Exponents(dim, 0));
      }
      const auto x = solve(m, b);
      if (!x) continue;
      const bool dup = std::any_of(candidates.begin(), candidates.end(),
                                   [&](const Candidate& c) { return c.point == *x; });
      if (!dup) candidates.push_back({*x, false, 0});
    }
  }

  const Polynomial product = [&] {
    Polynomial p = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) p = p * factors[i];
    return p;
  }();

  // A hint is "used" if it witnesses any applicable rule; the rest are
  // reported back rather than silently dropped.
  std::vector<bool> hint_used(common_zero_hints.size(), false);
  for (const Candidate& c : candidates) {
    if (!c.from_hint) continue;
    if (n_factors >= 3) {
      int zeros = 0;
      for (const auto& f : factors) zeros += f.evaluate(c.point).is_zero() ? 1 : 0;
      if (zeros >= 2) hint_used[c.hint_index] = true;
    }
    if (n_factors >= 2) {
      for (const auto& f : factors) {
        const auto m = f.multiplicity_at(c.point);
        if (m && *m >= 2) hint_used[c.hint_index] = true;
      }
    }
    const auto mp = product.multiplicity_at(c.point);
    if (mp && *mp >= 3) hint_used[c.hint_index] = true;
  }

  ObstructionVerdict verdict;
  for (std::size_t i = 0; i < common_zero_hints.size(); ++i) {
    if (!hint_used[i]) verdict.unused_hints.push_back(common_zero_hints[i]);
  }

  if (n_factors >= 3) {
    for (const Candidate& c : candidates) {
      std::vector<int> zero_factors;
      for (int i = 0; i < n_factors; ++i) {
        if (factors[i].evaluate(c.point).is_zero()) zero_factors.push_back(i);
      }
      if (zero_factors.size() >= 2) {
        verdict.rule = ObstructionRule::ThreeFactorsCommonZero;
        verdict.factor_indices = {zero_factors[0], zero_factors[1]};
        verdict.witness_point = c.point;
        verdict.conclusion =
            "psi splits into >= 3 nonconstant factors and factors " +
            std::to_string(zero_factors[0]) + " and " + std::to_string(zero_factors[1]) +
            " share the zero " + format_point(c.point) + "; F_psi is not surjective";
        return verdict;
      }
    }
  }
  if (n_factors >= 2) {
    for (const Candidate& c : candidates) {
      for (int i = 0; i < n_factors; ++i) {
        const auto m = factors[i].multiplicity_at(c.point);
        if (m && *m >= 2) {
          verdict.rule = ObstructionRule::TwoFactorMult2;
          verdict.factor_indices = {i};
          verdict.witness_point = c.point;
          verdict.multiplicity = *m;
          verdict.conclusion = "factor " + std::to_string(i) + " has a zero of multiplicity " +
                               std::to_string(*m) + " at " + format_point(c.point) +
                               " and psi has >= 2 nonconstant factors; F_psi is not surjective";
          return verdict;
        }
      }
    }
  }
  for (const Candidate& c : candidates) {
    const auto m = product.multiplicity_at(c.point);
    if (m && *m >= 3) {
      verdict.rule = ObstructionRule::MultiplicityGe3;
      verdict.witness_point = c.point;
      verdict.multiplicity = *m;
      verdict.conclusion = "psi has a zero of multiplicity " + std::to_string(*m) + " at " +
                           format_point(c.point) +
                           "; every image L(psi*q) vanishes there, so constants are unreachable "
                           "and F_psi is not surjective";
      return verdict;
    }
  }
  verdict.rule = ObstructionRule::NoneFound;
  verdict.conclusion =
      "no structural obstruction verified at the supplied points; this is not a surjectivity "
      "certificate";
  return verdict;
}

}  // namespace fischerlab
