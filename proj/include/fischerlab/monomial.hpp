// Exponent vectors and the graded-lexicographic listing order used everywhere:
// term iteration, basis enumeration, and canonical printing all agree on it.
#pragma once

#include <vector>

namespace fischerlab {

/// Exponent vector of a monomial; length = ring dimension, entries >= 0.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Canonical listing order: a comes before b iff a has higher total degree,
/// or degrees tie and a is graded-lex greater (larger exponent on the
/// earliest differing variable). For d=2, degree 2 this lists x^2, x*y, y^2.
bool listed_before(const Exponents& a, const Exponents& b);

struct ListingLess {
  bool operator()(const Exponents& a, const Exponents& b) const { return listed_before(a, b); }
};

/// All exponent vectors of exact total degree `degree` in listing order.
/// Count: C(degree + dim - 1, dim - 1).
std::vector<Exponents> monomials_of_degree(int dim, int degree);

/// All exponent vectors of total degree <= bound in listing order (highest
/// degree first). Count: C(bound + dim, dim).
std::vector<Exponents> monomials_up_to_degree(int dim, int bound);

}  // namespace fischerlab
