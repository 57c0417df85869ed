#include "fischerlab/basis.hpp"

#include <stdexcept>
#include <utility>

namespace fischerlab {

GradedBasis::GradedBasis(int dim, std::vector<Exponents> monomials)
    : dim_(dim), monomials_(std::move(monomials)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (static_cast<int>(monomials_[i].size()) != dim_)
      throw DimensionMismatch("GradedBasis: monomial dimension mismatch");
    if (!index_.emplace(monomials_[i], static_cast<int>(i)).second)
      throw std::invalid_argument("GradedBasis: duplicate monomial");
  }
}

GradedBasis GradedBasis::of_degree(int dim, int n) {
  return GradedBasis(dim, monomials_of_degree(dim, n));
}

GradedBasis GradedBasis::up_to_degree(int dim, int bound) {
  return GradedBasis(dim, monomials_up_to_degree(dim, bound));
}

GradedBasis GradedBasis::from_monomials(int dim, std::vector<Exponents> monomials) {
  return GradedBasis(dim, std::move(monomials));
}

int GradedBasis::index_of(const Exponents& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

std::vector<Rational> to_coords(const Polynomial& p, const GradedBasis& basis) {
  if (p.dim() != basis.dim()) throw DimensionMismatch("to_coords: dimension mismatch");
  std::vector<Rational> v(basis.size(), Rational(0));
  for (const auto& [e, c] : p.terms()) {
    const int i = basis.index_of(e);
    if (i < 0) throw std::out_of_range("to_coords: term outside basis span");
    v[static_cast<std::size_t>(i)] = c;
  }
  return v;
}

Polynomial from_coords(const std::vector<Rational>& coords, const GradedBasis& basis) {
  if (coords.size() != basis.size()) throw std::invalid_argument("from_coords: length mismatch");
  Polynomial p(basis.dim());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero())
      p = p + Polynomial::monomial(basis.dim(), basis.monomial(i), coords[i]);
  }
  return p;
}

}  // namespace fischerlab
