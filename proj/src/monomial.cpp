#include "fischerlab/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace fischerlab {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool listed_before(const Exponents& a, const Exponents& b) {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  // Same degree: graded-lex, earlier variables dominate.
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {

void enumerate_degree(int dim, int degree, Exponents& prefix, std::vector<Exponents>& out) {
  if (static_cast<int>(prefix.size()) == dim - 1) {
    prefix.push_back(degree);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    prefix.push_back(e);
    enumerate_degree(dim, degree - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Exponents> monomials_of_degree(int dim, int degree) {
  if (dim < 1) throw std::invalid_argument("monomials_of_degree: dim must be >= 1");
  if (degree < 0) throw std::invalid_argument("monomials_of_degree: degree must be >= 0");
  std::vector<Exponents> out;
  Exponents prefix;
  prefix.reserve(dim);
  enumerate_degree(dim, degree, prefix, out);
  return out;
}

std::vector<Exponents> monomials_up_to_degree(int dim, int bound) {
  if (bound < 0) throw std::invalid_argument("monomials_up_to_degree: bound must be >= 0");
  std::vector<Exponents> out;
  for (int n = bound; n >= 0; --n) {
    auto part = monomials_of_degree(dim, n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace fischerlab
