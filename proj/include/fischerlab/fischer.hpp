// Fischer operators q -> L(psi*q) realized as exact linear maps on graded
// pieces: truncated solvability, kernels, decomposition f = psi*q + h with
// L(h) = 0, the degree-by-degree recursion for psi with a multiplicity-2 zero
// at the origin, and structural non-surjectivity verdicts.
//
// Truncation semantics: a bounded search that fails is reported as
// INFEASIBLE_AT_BOUND and makes no global claim. The only upgrade to
// GLOBALLY_INFEASIBLE is the evaluation argument at a point where psi has a
// zero of multiplicity >= 3 (all second derivatives of psi*q vanish there, so
// no f with f(x0) != 0 is reachable). Every SOLVED outcome is re-verified by
// applying the operator before it is returned.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fischerlab/basis.hpp"
#include "fischerlab/matrix.hpp"
#include "fischerlab/polynomial.hpp"

namespace fischerlab {

struct FischerProblem {
  Polynomial psi;
  QuadraticOperator op;

  /// psi must be nonzero and nonconstant, with matching dimensions.
  FischerProblem(Polynomial psi_, QuadraticOperator op_);
  int dim() const { return psi.dim(); }
};

/// L(psi * q).
Polynomial fischer_apply(const FischerProblem& prob, const Polynomial& q);

/// The problem with psi replaced by x -> psi(x - x0), same operator.
FischerProblem translated_problem(const FischerProblem& prob, const Point& x0);

/// Matrix of q_n -> L(psi_k * q_n) from the degree-n monomial basis to the
/// degree-(n+k-2) monomial basis; square iff k == 2. psi_k must be
/// homogeneous of degree k >= 2.
ExactMatrix graded_fischer_matrix(const Polynomial& psi_k, const QuadraticOperator& op, int n);

struct GradedDegreeEntry {
  int degree;
  int rank;
  bool invertible;
  std::optional<Polynomial> kernel;  // one exact kernel polynomial when singular
};

/// Exact invertibility of the square graded matrices of a degree-2
/// homogeneous psi2 for every n <= n_max.
std::vector<GradedDegreeEntry> graded_bijectivity_table(const Polynomial& psi2,
                                                        const QuadraticOperator& op, int n_max);

enum class SolveStatus { Solved, InfeasibleAtBound, GloballyInfeasible, SeriesTruncated };
std::string to_string(SolveStatus s);

/// Machine-checkable reason attached to an outcome.
struct Certificate {
  std::string rule;                  // e.g. "exact-witness", "multiplicity-ge-3-evaluation"
  std::string detail;
  std::optional<Point> point;
  std::optional<Rational> value;     // f(point) for evaluation arguments
  std::optional<int> multiplicity;
  std::optional<int> bound;
  std::optional<int> degree;         // series cutoff / singular degree
};

struct SolveOutcome {
  SolveStatus status;
  std::optional<Polynomial> witness;  // Solved: exact witness; SeriesTruncated: partial sum
  Certificate certificate;
};

/// Solves L(psi*q) = rhs exactly over the span of the given column monomials;
/// free variables are pinned to zero in column order. Exposed so callers can
/// permute the pinning.
std::optional<Polynomial> solve_fischer_linear_system(const FischerProblem& prob,
                                                      const Polynomial& rhs,
                                                      const std::vector<Exponents>& q_monomials);

/// Bounded search for q of degree <= bound with L(psi*q) = f. Hint points are
/// screened for the multiplicity->= 3 evaluation argument before solving.
SolveOutcome truncated_image_solve(const FischerProblem& prob, const Polynomial& f, int bound,
                                   const std::vector<Point>& hint_points = {});

/// Deterministic basis of {q of degree <= bound : L(psi*q) = 0}. Nonempty
/// certifies non-injectivity.
std::vector<Polynomial> kernel_up_to(const FischerProblem& prob, int bound);

struct FischerDecomposition {
  Polynomial q;
  Polynomial h;  // f - psi*q, exactly L-harmonic
};

/// f = psi*q + h with L(h) = 0, searching deg q <= bound (default: deg f).
/// nullopt when no witness exists at the bound.
std::optional<FischerDecomposition> fischer_decompose(const FischerProblem& prob,
                                                      const Polynomial& f,
                                                      std::optional<int> bound = std::nullopt);

/// Thrown by graded_recursive_solve when the square graded matrix at some
/// degree is singular; carries the degree and an exact kernel polynomial.
class SingularGradedMatrix : public std::runtime_error {
 public:
  SingularGradedMatrix(int degree, Polynomial kernel);
  int degree() const { return degree_; }
  const Polynomial& kernel() const { return kernel_; }

 private:
  int degree_;
  Polynomial kernel_;
};

/// Degree-by-degree solve of L(psi*q) = f for psi with a multiplicity-2 zero
/// at the origin: q_n is obtained from the degree-n graded system of the
/// initial part psi_2, with corrections from the higher parts of psi feeding
/// back from lower-degree q's. Returns Solved once (deg psi - 2) consecutive
/// q_n vanish beyond deg f (all later ones then vanish identically), else
/// SeriesTruncated at the cutoff. Throws std::invalid_argument when the
/// multiplicity at the origin is not 2, SingularGradedMatrix when a graded
/// matrix is not invertible.
SolveOutcome graded_recursive_solve(const FischerProblem& prob, const Polynomial& f, int cutoff);

struct TruncatedRankScan {
  int bound;
  int image_rank;            // rank of q -> L(psi*q) over P^{<= bound}
  std::vector<int> defects;  // defects[t]: target directions of degree <= t missing from the image
  int kernel_dimension;
};

/// Bounded image/kernel evidence for one psi: defects[t] = 0 means every f of
/// degree <= t is reachable with deg q <= bound. Honest bounded statements;
/// nothing here upgrades to a global claim.
TruncatedRankScan truncated_rank_scan(const FischerProblem& prob, int bound);

enum class ObstructionRule { ThreeFactorsCommonZero, TwoFactorMult2, MultiplicityGe3, NoneFound };
std::string to_string(ObstructionRule r);

struct ObstructionVerdict {
  ObstructionRule rule = ObstructionRule::NoneFound;
  std::vector<int> factor_indices;  // factors involved in the fired rule
  Point witness_point;              // verified common zero / high-multiplicity point
  int multiplicity = 0;             // for the multiplicity rules
  std::vector<Point> unused_hints;  // hints that verified no rule (reported, not dropped)
  std::string conclusion;
};

/// Structural non-surjectivity scan over a factorization psi = f1*...*fN:
///  - THREE_FACTORS_COMMON_ZERO: >= 3 factors, two sharing a verified zero;
///  - TWO_FACTOR_MULT2: >= 2 factors and one factor with a verified zero of
///    multiplicity >= 2;
///  - MULTIPLICITY_GE_3: the product has a verified zero of multiplicity >= 3;
///  - NONE_FOUND otherwise - explicitly not a surjectivity certificate.
/// Candidate points are the hints plus, for linear factors, exact pairwise
/// intersections. All claims are re-verified by exact evaluation.
ObstructionVerdict structural_obstruction(const std::vector<Polynomial>& factors,
                                          const std::vector<Point>& common_zero_hints);

}  // namespace fischerlab
