// Parsing and canonical formatting of polynomial expressions. This grammar is
// the wire format for every CLI flag and config field that carries a
// polynomial:
//
//   expression := ('+'|'-')? term (('+'|'-') term)*
//   term       := factor ('*' factor)*
//   factor     := base ('^' nonneg-int)?
//   base       := rational | variable | '(' expression ')'
//   rational   := int ('/' posint)?
//   variable   := 'x' | 'y' | 'z' | 'x' posint
//
// Whitespace is insignificant. There is no implicit multiplication ("2x" is a
// syntax error). 'x','y','z' alias x1,x2,x3 and cannot be mixed with indexed
// names in one expression.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "fischerlab/polynomial.hpp"

namespace fischerlab {

/// Byte range [start, end) into the original input text.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  bool operator==(const SourceSpan&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, SourceSpan span)
      : std::runtime_error(message + " at byte " + std::to_string(span.start) + ".." +
                           std::to_string(span.end)),
        message_(std::move(message)),
        span_(span) {}

  const std::string& message() const { return message_; }
  SourceSpan span() const { return span_; }

 private:
  std::string message_;
  SourceSpan span_;
};

/// Parses an expression. If dim is omitted it is inferred as the highest
/// variable index used (1 for a constant expression). Throws ParseError with
/// a span covering the offending token.
Polynomial parse_polynomial(const std::string& text, std::optional<int> dim = std::nullopt);

/// Canonical form: terms in descending graded-lex order, coefficients as "a"
/// or "a/b", "0" for zero. parse_polynomial(format_polynomial(p), p.dim()) == p.
std::string format_polynomial(const Polynomial& p);

/// Variable name used by the canonical form: x,y,z for dim <= 3, else x1..xd.
std::string variable_name(int dim, int index);

std::string format_point(const Point& point);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace fischerlab
