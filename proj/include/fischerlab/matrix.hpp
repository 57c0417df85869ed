// Dense exact matrices over Rational and fraction-free (Bareiss) elimination.
// Pivoting is "first nonzero in column order": deterministic results
// everywhere, including which solution is returned for underdetermined
// systems (free variables are pinned to zero).
#pragma once

#include <optional>
#include <vector>

#include "fischerlab/rational.hpp"

namespace fischerlab {

class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols);
  static ExactMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<Rational> apply(const std::vector<Rational>& x) const;  // M * x
  bool operator==(const ExactMatrix& o) const = default;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

/// Row echelon form from fraction-free elimination.
struct Echelon {
  ExactMatrix m;               // upper-echelon entries (rows below pivots are zeroed)
  std::vector<int> pivot_cols; // ascending; size = rank
  int row_swaps;               // parity matters only for determinants
};

Echelon row_echelon(const ExactMatrix& m);

int rank(const ExactMatrix& m);

/// One exact solution of M x = b with free variables set to zero, or nullopt
/// if the system is infeasible. Throws on shape mismatch.
std::optional<std::vector<Rational>> solve(const ExactMatrix& m, const std::vector<Rational>& b);

/// Deterministic basis of {x : M x = 0}, one vector per free column, each with
/// a 1 in its free coordinate. rank + nullity = cols.
std::vector<std::vector<Rational>> nullspace_basis(const ExactMatrix& m);

Rational determinant(const ExactMatrix& m);  // square only

/// Symmetric + all leading principal minors positive.
bool positive_definite(const ExactMatrix& m);

}  // namespace fischerlab
