#include "fischerlab/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace fischerlab {

namespace {

void check_dim_positive(int dim) {
  if (dim < 1) throw std::invalid_argument("Polynomial: dim must be >= 1");
}

void check_exponents(int dim, const Exponents& e) {
  if (static_cast<int>(e.size()) != dim)
    throw DimensionMismatch("Polynomial: exponent vector length != dim");
  for (int v : e) {
    if (v < 0) throw std::invalid_argument("Polynomial: negative exponent");
  }
}

}  // namespace

Polynomial::Polynomial(int dim) : dim_(dim) { check_dim_positive(dim); }

Polynomial Polynomial::constant(int dim, const Rational& c) {
  Polynomial p(dim);
  if (!c.is_zero()) p.terms_.emplace(Exponents(dim, 0), c);
  return p;
}

Polynomial Polynomial::variable(int dim, int index) {
  check_dim_positive(dim);
  if (index < 0 || index >= dim) throw std::invalid_argument("Polynomial::variable: index out of range");
  Exponents e(dim, 0);
  e[index] = 1;
  return monomial(dim, e, Rational(1));
}

Polynomial Polynomial::monomial(int dim, const Exponents& exponents, const Rational& coeff) {
  Polynomial p(dim);
  check_exponents(dim, exponents);
  if (!coeff.is_zero()) p.terms_.emplace(exponents, coeff);
  return p;
}

int Polynomial::degree() const {
  if (is_zero()) throw ZeroPolynomialError("degree of the zero polynomial is undefined");
  return total_degree(terms_.begin()->first);  // listing order: highest degree first
}

bool Polynomial::is_constant() const {
  return is_zero() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

bool Polynomial::is_homogeneous() const {
  if (is_zero()) return true;
  return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

Rational Polynomial::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::check_same_dim(const Polynomial& o) const {
  if (dim_ != o.dim_) throw DimensionMismatch("polynomial dimensions differ");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(dim_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_dim(o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = r.terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_dim(o);
  Polynomial r(dim_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(dim_);
      for (int i = 0; i < dim_; ++i) e[i] = ea[i] + eb[i];
      const Rational c = ca * cb;
      auto [it, inserted] = r.terms_.emplace(std::move(e), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(dim_);
  if (c.is_zero()) return r;
  for (const auto& [e, tc] : terms_) r.terms_.emplace(e, tc * c);
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= dim_) throw std::invalid_argument("derivative: variable index out of range");
  Polynomial r(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    r.terms_.emplace(std::move(d), c * Rational(e[var]));
  }
  return r;
}

std::map<int, Polynomial> Polynomial::homogeneous_components() const {
  if (is_zero()) throw ZeroPolynomialError("homogeneous_components: zero polynomial");
  std::map<int, Polynomial> parts;
  for (const auto& [e, c] : terms_) {
    const int n = total_degree(e);
    auto it = parts.find(n);
    if (it == parts.end()) it = parts.emplace(n, Polynomial(dim_)).first;
    it->second.terms_.emplace(e, c);
  }
  return parts;
}

Polynomial Polynomial::homogeneous_component(int n) const {
  Polynomial r(dim_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) == n) r.terms_.emplace(e, c);
  }
  return r;
}

Polynomial Polynomial::initial_part() const {
  if (is_zero()) throw ZeroPolynomialError("initial_part: zero polynomial");
  return homogeneous_component(total_degree(terms_.rbegin()->first));
}

Polynomial Polynomial::principal_part() const {
  if (is_zero()) throw ZeroPolynomialError("principal_part: zero polynomial");
  return homogeneous_component(total_degree(terms_.begin()->first));
}

Polynomial Polynomial::translate(const Point& shift) const {
  if (static_cast<int>(shift.size()) != dim_)
    throw DimensionMismatch("translate: point length != dim");
  // Per-variable powers of (x_i - shift_i), up to the largest exponent used.
  std::vector<int> max_exp(dim_, 0);
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < dim_; ++i) max_exp[i] = std::max(max_exp[i], e[i]);
  }
  std::vector<std::vector<Polynomial>> pow(dim_);
  for (int i = 0; i < dim_; ++i) {
    pow[i].reserve(max_exp[i] + 1);
    pow[i].push_back(constant(dim_, Rational(1)));
    const Polynomial shifted = variable(dim_, i) - constant(dim_, shift[i]);
    for (int k = 1; k <= max_exp[i]; ++k) pow[i].push_back(pow[i].back() * shifted);
  }
  Polynomial r(dim_);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(dim_, c);
    for (int i = 0; i < dim_; ++i) {
      if (e[i] > 0) term = term * pow[i][e[i]];
    }
    r = r + term;
  }
  return r;
}

Rational Polynomial::evaluate(const Point& point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw DimensionMismatch("evaluate: point length != dim");
  std::vector<int> max_exp(dim_, 0);
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < dim_; ++i) max_exp[i] = std::max(max_exp[i], e[i]);
  }
  std::vector<std::vector<Rational>> pow(dim_);
  for (int i = 0; i < dim_; ++i) {
    pow[i].reserve(max_exp[i] + 1);
    pow[i].push_back(Rational(1));
    for (int k = 1; k <= max_exp[i]; ++k) pow[i].push_back(pow[i].back() * point[i]);
  }
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < dim_; ++i) t *= pow[i][e[i]];
    acc += t;
  }
  return acc;
}

std::optional<int> Polynomial::multiplicity_at(const Point& point) const {
  if (is_zero()) return std::nullopt;  // every derivative vanishes: infinite
  Point neg(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) neg[i] = -point[i];
  // x -> p(x + point) moves the zero to the origin; its lowest surviving
  // total degree equals the derivative-based multiplicity by Taylor expansion.
  const Polynomial moved = translate(neg);
  return total_degree(moved.terms_.rbegin()->first);
}

QuadraticOperator::QuadraticOperator(int dim, std::vector<Rational> row_major)
    : dim_(dim), coeffs_(std::move(row_major)) {
  check_dim_positive(dim);
  if (coeffs_.size() != static_cast<std::size_t>(dim) * dim)
    throw std::invalid_argument("QuadraticOperator: need dim*dim entries");
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      if (coeff(i, j) != coeff(j, i))
        throw std::invalid_argument("QuadraticOperator: matrix must be symmetric");
    }
  }
}

QuadraticOperator QuadraticOperator::laplacian(int dim) {
  std::vector<Rational> c(static_cast<std::size_t>(dim) * dim, Rational(0));
  for (int i = 0; i < dim; ++i) c[static_cast<std::size_t>(i) * dim + i] = Rational(1);
  return QuadraticOperator(dim, std::move(c));
}

QuadraticOperator QuadraticOperator::diagonal(std::vector<Rational> diag) {
  const int dim = static_cast<int>(diag.size());
  std::vector<Rational> c(static_cast<std::size_t>(dim) * dim, Rational(0));
  for (int i = 0; i < dim; ++i) c[static_cast<std::size_t>(i) * dim + i] = diag[i];
  return QuadraticOperator(dim, std::move(c));
}

Polynomial QuadraticOperator::apply(const Polynomial& p) const {
  if (p.dim() != dim_) throw DimensionMismatch("QuadraticOperator::apply: dimension mismatch");
  Polynomial r(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) {
      const Rational& cij = coeff(i, j);
      if (cij.is_zero()) continue;
      const Rational weight = (i == j) ? cij : cij * Rational(2);  // C_ij + C_ji
      r = r + p.derivative(i).derivative(j) * weight;
    }
  }
  return r;
}

}  // namespace fischerlab
