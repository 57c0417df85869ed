// Sparse multivariate polynomials over Rational, with the differential
// machinery the Fischer computations need: second-order constant-coefficient
// operators, homogeneous structure, translation, and zero multiplicity.
//
// Polynomials are immutable values. No stored coefficient is ever zero and
// every exponent vector has length dim(); equality is equality of term maps.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fischerlab/errors.hpp"
#include "fischerlab/monomial.hpp"
#include "fischerlab/rational.hpp"

namespace fischerlab {

/// A rational point, length = ring dimension.
using Point = std::vector<Rational>;

class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, ListingLess>;

  /// The zero polynomial in `dim` variables.
  explicit Polynomial(int dim);
  /// Zero polynomial in one variable.
  Polynomial() : Polynomial(1) {}

  static Polynomial zero(int dim) { return Polynomial(dim); }
  static Polynomial constant(int dim, const Rational& c);
  /// x_index (0-based).
  static Polynomial variable(int dim, int index);
  static Polynomial monomial(int dim, const Exponents& exponents, const Rational& coeff);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Total degree; throws ZeroPolynomialError on the zero polynomial.
  int degree() const;
  bool is_constant() const;
  bool is_homogeneous() const;
  /// Coefficient of a monomial, zero if absent.
  Rational coefficient(const Exponents& exponents) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }
  bool operator==(const Polynomial& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

  Polynomial derivative(int var) const;

  /// Splits into homogeneous parts keyed by degree; no zero parts stored.
  /// Throws ZeroPolynomialError on the zero polynomial.
  std::map<int, Polynomial> homogeneous_components() const;
  /// The degree-n homogeneous part (possibly zero); no precondition.
  Polynomial homogeneous_component(int n) const;
  /// Lowest-degree nonzero homogeneous part f_t.
  Polynomial initial_part() const;
  /// Highest-degree nonzero homogeneous part f_m.
  Polynomial principal_part() const;

  /// p(x - shift), by exact binomial expansion.
  Polynomial translate(const Point& shift) const;

  Rational evaluate(const Point& point) const;

  /// Multiplicity of the zero at `point`: the largest N such that all partial
  /// derivatives of order <= N-1 vanish there, computed as the minimal total
  /// degree of translate(p, point) at the origin. 0 when p(point) != 0;
  /// nullopt (infinite) for the zero polynomial.
  std::optional<int> multiplicity_at(const Point& point) const;

 private:
  void check_same_dim(const Polynomial& o) const;

  int dim_;
  TermMap terms_;
};

/// Constant-coefficient second-order operator P(D) = sum_ij C_ij d_i d_j with
/// C symmetric rational. C = identity is the Laplacian. Applying it to a
/// degree-n polynomial yields degree <= n-2 (or zero).
class QuadraticOperator {
 public:
  /// Row-major d*d entries; throws if not symmetric.
  QuadraticOperator(int dim, std::vector<Rational> row_major);
  static QuadraticOperator laplacian(int dim);
  static QuadraticOperator diagonal(std::vector<Rational> diag);

  int dim() const { return dim_; }
  const Rational& coeff(int i, int j) const { return coeffs_[static_cast<std::size_t>(i) * dim_ + j]; }
  const std::vector<Rational>& row_major() const { return coeffs_; }
  bool operator==(const QuadraticOperator& o) const = default;

  Polynomial apply(const Polynomial& p) const;

 private:
  int dim_;
  std::vector<Rational> coeffs_;
};

/// Exact quotient q with g = psi * q, if it exists. Decided by solving the
/// linear system on the coefficients of q with deg q <= deg g - deg psi.
/// exact_divide(0, psi) = 0. Throws on zero psi or dimension mismatch.
std::optional<Polynomial> exact_divide(const Polynomial& g, const Polynomial& psi);

}  // namespace fischerlab
