// Harmonicity and harmonic-divisor machinery: a polynomial f is a harmonic
// divisor (w.r.t. an operator L) when some nonzero q makes L(f*q) = 0.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fischerlab/polynomial.hpp"

namespace fischerlab {

/// True iff L(p) is the zero polynomial.
bool is_harmonic(const Polynomial& p, const QuadraticOperator& op);

/// Exact basis of {p homogeneous of degree n : L(p) = 0}.
std::vector<Polynomial> harmonic_basis(int dim, int n, const QuadraticOperator& op);

/// A verified pair (f, q) with q != 0 and L(f*q) = 0. The invariant is
/// checked exactly at construction.
class DivisorWitness {
 public:
  DivisorWitness(Polynomial divisor, Polynomial witness, QuadraticOperator op);

  const Polynomial& divisor() const { return divisor_; }
  const Polynomial& witness() const { return witness_; }
  const QuadraticOperator& op() const { return op_; }

 private:
  Polynomial divisor_;
  Polynomial witness_;
  QuadraticOperator op_;
};

enum class DivisorSearchStatus { WitnessFound, NotFoundAtBound, Never };
std::string to_string(DivisorSearchStatus s);

struct DivisorSearchResult {
  DivisorSearchStatus status;
  std::optional<DivisorWitness> witness;
  std::string reason;
};

/// Searches the exact nullspace of q -> L(f*q) over degree <= bound; the
/// reported witness is the first deterministic nullspace vector. NEVER is
/// returned only when the caller asserts f is globally nonnegative (a
/// nonnegative polynomial has constant sign, so no nonzero multiple of it is
/// harmonic); nonnegativity is never inferred here.
DivisorSearchResult find_harmonic_divisor_witness(const Polynomial& f, int bound,
                                                  const QuadraticOperator& op,
                                                  bool caller_asserts_nonnegative = false);

/// Checks the homogeneous-part consequence for a valid witness:
/// L(initial(f) * initial(q)) = 0 and L(principal(f) * principal(q)) = 0.
bool parts_are_divisors_check(const DivisorWitness& w);

}  // namespace fischerlab
