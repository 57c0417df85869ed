#include "fischerlab/rational.hpp"

#include <cctype>
#include <ostream>

namespace fischerlab {

Rational Rational::from_string(const std::string& text) {
  // Validate before handing to GMP so malformed input fails predictably.
  std::size_t i = 0;
  const auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw std::invalid_argument("Rational: malformed literal '" + text + "'");
  i = num_end;
  if (i < text.size()) {
    if (text[i] != '/') throw std::invalid_argument("Rational: malformed literal '" + text + "'");
    std::size_t den_end = digits(i + 1);
    if (den_end == i + 1 || den_end != text.size())
      throw std::invalid_argument("Rational: malformed literal '" + text + "'");
    if (mpz_class(text.substr(i + 1)) == 0)
      throw std::domain_error("Rational: zero denominator in '" + text + "'");
  }
  mpq_class v(text);
  v.canonicalize();
  return Rational(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace fischerlab
