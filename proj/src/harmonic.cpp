#include "fischerlab/harmonic.hpp"

#include <utility>

#include "fischerlab/basis.hpp"
#include "fischerlab/fischer.hpp"
#include "fischerlab/matrix.hpp"

namespace fischerlab {

bool is_harmonic(const Polynomial& p, const QuadraticOperator& op) {
  return op.apply(p).is_zero();
}

std::vector<Polynomial> harmonic_basis(int dim, int n, const QuadraticOperator& op) {
  if (n < 0) throw std::invalid_argument("harmonic_basis: n must be >= 0");
  const GradedBasis domain = GradedBasis::of_degree(dim, n);
  if (n < 2) {
    // L drops the degree by 2, so everything of degree < 2 is harmonic.
    std::vector<Polynomial> all;
    for (const auto& e : domain.monomials()) all.push_back(Polynomial::monomial(dim, e, Rational(1)));
    return all;
  }
  const GradedBasis range = GradedBasis::of_degree(dim, n - 2);
  ExactMatrix m(static_cast<int>(range.size()), static_cast<int>(domain.size()));
  for (std::size_t c = 0; c < domain.size(); ++c) {
    const Polynomial image = op.apply(Polynomial::monomial(dim, domain.monomial(c), Rational(1)));
    for (const auto& [e, coeff] : image.terms()) m.at(range.index_of(e), static_cast<int>(c)) = coeff;
  }
  std::vector<Polynomial> basis;
  for (const auto& v : nullspace_basis(m)) {
    Polynomial p = from_coords(v, domain);
    if (!op.apply(p).is_zero()) throw VerificationError("harmonic_basis: basis vector not harmonic");
    basis.push_back(std::move(p));
  }
  return basis;
}

DivisorWitness::DivisorWitness(Polynomial divisor, Polynomial witness, QuadraticOperator op)
    : divisor_(std::move(divisor)), witness_(std::move(witness)), op_(std::move(op)) {
  if (witness_.is_zero()) throw std::invalid_argument("DivisorWitness: witness must be nonzero");
  if (!op_.apply(divisor_ * witness_).is_zero())
    throw VerificationError("DivisorWitness: L(f*q) != 0");
}

std::string to_string(DivisorSearchStatus s) {
  switch (s) {
    case DivisorSearchStatus::WitnessFound: return "WITNESS_FOUND";
    case DivisorSearchStatus::NotFoundAtBound: return "NOT_FOUND_AT_BOUND";
    case DivisorSearchStatus::Never: return "NEVER";
  }
  return "?";
}

DivisorSearchResult find_harmonic_divisor_witness(const Polynomial& f, int bound,
                                                  const QuadraticOperator& op,
                                                  bool caller_asserts_nonnegative) {
  if (f.is_zero()) throw ZeroPolynomialError("find_harmonic_divisor_witness: zero polynomial");
  if (bound < 0) throw std::invalid_argument("find_harmonic_divisor_witness: bound must be >= 0");
  if (caller_asserts_nonnegative) {
    return {DivisorSearchStatus::Never, std::nullopt,
            "caller asserts f >= 0 everywhere: a nonzero harmonic polynomial takes both signs, "
            "so it cannot have a nonnegative factor"};
  }
  if (f.is_constant()) {
    // Nonzero constants divide every harmonic polynomial.
    return {DivisorSearchStatus::WitnessFound,
            DivisorWitness(f, Polynomial::constant(f.dim(), Rational(1)), op), ""};
  }
  const FischerProblem prob(f, op);
  const auto kernel = kernel_up_to(prob, bound);
  if (kernel.empty()) {
    return {DivisorSearchStatus::NotFoundAtBound, std::nullopt,
            "no nonzero q of degree <= " + std::to_string(bound) + " with L(f*q) = 0"};
  }
  return {DivisorSearchStatus::WitnessFound, DivisorWitness(f, kernel.front(), op), ""};
}

bool parts_are_divisors_check(const DivisorWitness& w) {
  const Polynomial& f = w.divisor();
  const Polynomial& q = w.witness();
  const bool initial_ok = w.op().apply(f.initial_part() * q.initial_part()).is_zero();
  const bool principal_ok = w.op().apply(f.principal_part() * q.principal_part()).is_zero();
  return initial_ok && principal_ok;
}

}  // namespace fischerlab
