#include "fischerlab/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace fischerlab {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative shape");
  a_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

std::vector<Rational> ExactMatrix::apply(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("ExactMatrix::apply: shape mismatch");
  std::vector<Rational> y(rows_, Rational(0));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (!at(r, c).is_zero()) y[r] += at(r, c) * x[c];
    }
  }
  return y;
}

Echelon row_echelon(const ExactMatrix& input) {
  Echelon e{input, {}, 0};
  ExactMatrix& m = e.m;
  const int rows = m.rows(), cols = m.cols();
  Rational prev_pivot(1);
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    // First nonzero entry in this column at or below pivot_row.
    int found = -1;
    for (int r = pivot_row; r < rows; ++r) {
      if (!m.at(r, col).is_zero()) { found = r; break; }
    }
    if (found < 0) continue;
    if (found != pivot_row) {
      for (int c = 0; c < cols; ++c) std::swap(m.at(found, c), m.at(pivot_row, c));
      ++e.row_swaps;
    }
    const Rational pivot = m.at(pivot_row, col);
    // Bareiss step: new = (pivot*cur - row_factor*pivot_row_entry) / prev_pivot.
    for (int r = pivot_row + 1; r < rows; ++r) {
      const Rational factor = m.at(r, col);
      for (int c = col + 1; c < cols; ++c) {
        m.at(r, c) = (pivot * m.at(r, c) - factor * m.at(pivot_row, c)) / prev_pivot;
      }
      m.at(r, col) = Rational(0);
    }
    prev_pivot = pivot;
    e.pivot_cols.push_back(col);
    ++pivot_row;
  }
  return e;
}

int rank(const ExactMatrix& m) { return static_cast<int>(row_echelon(m).pivot_cols.size()); }

namespace {

// Back-substitution on an augmented echelon form; unknowns are the columns
// left of `split`, the right-hand side lives in column rhs_col. Free
// variables stay zero.
std::vector<Rational> back_substitute(const Echelon& e, int split, int rhs_col) {
  std::vector<Rational> x(split, Rational(0));
  const int nrows = static_cast<int>(e.pivot_cols.size());
  for (int i = nrows - 1; i >= 0; --i) {
    const int pc = e.pivot_cols[i];
    if (pc >= split) continue;
    Rational acc = e.m.at(i, rhs_col);
    for (int c = pc + 1; c < split; ++c) {
      if (!e.m.at(i, c).is_zero() && !x[c].is_zero()) acc -= e.m.at(i, c) * x[c];
    }
    x[pc] = acc / e.m.at(i, pc);
  }
  return x;
}

}  // namespace

std::optional<std::vector<Rational>> solve(const ExactMatrix& m, const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  const Echelon e = row_echelon(aug);
  // A pivot in the rhs column certifies infeasibility.
  for (int c : e.pivot_cols) {
    if (c == m.cols()) return std::nullopt;
  }
  return back_substitute(e, m.cols(), m.cols());
}

std::vector<std::vector<Rational>> nullspace_basis(const ExactMatrix& m) {
  const Echelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free_col] = Rational(1);
    const int nrows = static_cast<int>(e.pivot_cols.size());
    for (int i = nrows - 1; i >= 0; --i) {
      const int pc = e.pivot_cols[i];
      Rational acc(0);
      for (int c = pc + 1; c < m.cols(); ++c) {
        if (!e.m.at(i, c).is_zero() && !v[c].is_zero()) acc -= e.m.at(i, c) * v[c];
      }
      v[pc] = acc / e.m.at(i, pc);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  if (m.rows() == 0) return Rational(1);
  const Echelon e = row_echelon(m);
  if (static_cast<int>(e.pivot_cols.size()) < m.rows()) return Rational(0);
  // Fraction-free elimination leaves det = last pivot (up to swap parity).
  Rational det = e.m.at(m.rows() - 1, m.cols() - 1);
  return (e.row_swaps % 2 == 0) ? det : -det;
}

bool positive_definite(const ExactMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const int n = m.rows();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (m.at(i, j) != m.at(j, i)) return false;
    }
  }
  for (int k = 1; k <= n; ++k) {
    ExactMatrix minor(k, k);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) minor.at(r, c) = m.at(r, c);
    }
    if (determinant(minor).sign() <= 0) return false;
  }
  return true;
}

}  // namespace fischerlab
