// Ordered monomial bases of graded pieces and coordinate maps between
// polynomials and exact vectors.
#pragma once

#include <map>
#include <vector>

#include "fischerlab/monomial.hpp"
#include "fischerlab/polynomial.hpp"

namespace fischerlab {

/// Monomial basis of either one graded piece (exact degree n) or the whole
/// space of degree <= N, in the canonical listing order.
class GradedBasis {
 public:
  static GradedBasis of_degree(int dim, int n);
  static GradedBasis up_to_degree(int dim, int bound);
  /// Arbitrary ordered monomial list (used to permute free-variable pinning);
  /// monomials must be distinct and of the right dimension.
  static GradedBasis from_monomials(int dim, std::vector<Exponents> monomials);

  int dim() const { return dim_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Exponents>& monomials() const { return monomials_; }
  const Exponents& monomial(std::size_t i) const { return monomials_[i]; }
  /// Index of a monomial, -1 if absent.
  int index_of(const Exponents& e) const;

 private:
  GradedBasis(int dim, std::vector<Exponents> monomials);

  int dim_;
  std::vector<Exponents> monomials_;
  std::map<Exponents, int, ListingLess> index_;
};

/// Exact coordinates of p in the basis; throws std::out_of_range if a term of
/// p lies outside the basis span.
std::vector<Rational> to_coords(const Polynomial& p, const GradedBasis& basis);

Polynomial from_coords(const std::vector<Rational>& coords, const GradedBasis& basis);

}  // namespace fischerlab
