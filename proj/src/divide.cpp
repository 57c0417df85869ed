// Exact polynomial division by one divisor, decided as a linear system on the
// quotient coefficients.
#include "fischerlab/basis.hpp"
#include "fischerlab/matrix.hpp"
#include "fischerlab/polynomial.hpp"

namespace fischerlab {

std::optional<Polynomial> exact_divide(const Polynomial& g, const Polynomial& psi) {
  if (psi.is_zero()) throw ZeroPolynomialError("exact_divide: zero divisor");
  if (g.dim() != psi.dim()) throw DimensionMismatch("exact_divide: dimension mismatch");
  if (g.is_zero()) return Polynomial::zero(g.dim());
  const int dq = g.degree() - psi.degree();
  if (dq < 0) return std::nullopt;

  const GradedBasis qbasis = GradedBasis::up_to_degree(g.dim(), dq);
  const GradedBasis gbasis = GradedBasis::up_to_degree(g.dim(), g.degree());
  ExactMatrix m(static_cast<int>(gbasis.size()), static_cast<int>(qbasis.size()));
  for (std::size_t col = 0; col < qbasis.size(); ++col) {
    const Polynomial prod = psi * Polynomial::monomial(g.dim(), qbasis.monomial(col), Rational(1));
    for (const auto& [e, c] : prod.terms()) m.at(gbasis.index_of(e), static_cast<int>(col)) = c;
  }
  const auto x = solve(m, to_coords(g, gbasis));
  if (!x) return std::nullopt;
  Polynomial q = from_coords(*x, qbasis);
  if (!(psi * q == g)) throw VerificationError("exact_divide: solver returned a non-quotient");
  return q;
}

}  // namespace fischerlab
