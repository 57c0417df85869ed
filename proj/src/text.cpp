#include "fischerlab/text.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace fischerlab {

namespace {

enum class TokKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::string text;
  SourceSpan span;
};

std::vector<Token> tokenize(const std::string& in) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto single = [&](TokKind k) {
    out.push_back({k, in.substr(i, 1), {i, i + 1}});
    ++i;
  };
  while (i < in.size()) {
    const char c = in[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j]))) ++j;
      out.push_back({TokKind::Number, in.substr(i, j - i), {i, j}});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < in.size() && std::isalnum(static_cast<unsigned char>(in[j]))) ++j;
      out.push_back({TokKind::Ident, in.substr(i, j - i), {i, j}});
      i = j;
      continue;
    }
    switch (c) {
      case '+': single(TokKind::Plus); break;
      case '-': single(TokKind::Minus); break;
      case '*': single(TokKind::Star); break;
      case '/': single(TokKind::Slash); break;
      case '^': single(TokKind::Caret); break;
      case '(': single(TokKind::LParen); break;
      case ')': single(TokKind::RParen); break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'", {i, i + 1});
    }
  }
  out.push_back({TokKind::End, "", {in.size(), in.size()}});
  return out;
}

// Minimal expression tree; evaluated once the dimension is resolved.
struct Node {
  enum class Kind { Constant, Variable, Add, Sub, Mul, Pow, Neg } kind;
  Rational value;                 // Constant
  int var = -1;                   // Variable (0-based)
  int exponent = 0;               // Pow
  std::unique_ptr<Node> lhs, rhs;
  SourceSpan span;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make_node(Node::Kind kind, SourceSpan span) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->span = span;
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  NodePtr parse() {
    NodePtr e = expression();
    if (peek().kind != TokKind::End) throw ParseError("unexpected trailing input", peek().span);
    return e;
  }

  int max_var_index() const { return max_var_index_; }
  SourceSpan max_var_span() const { return max_var_span_; }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(TokKind k) {
    if (peek().kind != k) return false;
    advance();
    return true;
  }

  NodePtr expression() {
    bool negate = false;
    if (peek().kind == TokKind::Minus) { advance(); negate = true; }
    else if (peek().kind == TokKind::Plus) { advance(); }
    NodePtr acc = term();
    if (negate) {
      NodePtr n = make_node(Node::Kind::Neg, acc->span);
      n->lhs = std::move(acc);
      acc = std::move(n);
    }
    while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
      const bool minus = advance().kind == TokKind::Minus;
      NodePtr t = term();
      NodePtr n = make_node(minus ? Node::Kind::Sub : Node::Kind::Add, acc->span);
      n->lhs = std::move(acc);
      n->rhs = std::move(t);
      acc = std::move(n);
    }
    return acc;
  }

  NodePtr term() {
    NodePtr acc = factor();
    while (accept(TokKind::Star)) {
      NodePtr f = factor();
      NodePtr n = make_node(Node::Kind::Mul, acc->span);
      n->lhs = std::move(acc);
      n->rhs = std::move(f);
      acc = std::move(n);
    }
    return acc;
  }

  NodePtr factor() {
    NodePtr b = base();
    if (accept(TokKind::Caret)) {
      const Token& e = peek();
      if (e.kind != TokKind::Number)
        throw ParseError("exponent is not a nonnegative integer literal", e.span);
      advance();
      NodePtr n = make_node(Node::Kind::Pow, e.span);
      n->exponent = parse_exponent(e);
      n->lhs = std::move(b);
      return n;
    }
    return b;
  }

  NodePtr base() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::Number:
        return rational_literal(false);
      case TokKind::Minus:
      case TokKind::Plus:
        // Signed numeral, e.g. after '*'. Anything else here is a syntax error.
        if (peek(1).kind == TokKind::Number) return rational_literal(true);
        throw ParseError("expected a number, variable, or '('", t.span);
      case TokKind::Ident:
        return variable_ref();
      case TokKind::LParen: {
        advance();
        NodePtr e = expression();
        if (!accept(TokKind::RParen)) throw ParseError("expected ')'", peek().span);
        return e;
      }
      default:
        throw ParseError("expected a number, variable, or '('", t.span);
    }
  }

  NodePtr rational_literal(bool signed_prefix) {
    bool neg = false;
    SourceSpan span = peek().span;
    if (signed_prefix) neg = advance().kind == TokKind::Minus;
    const Token& num = advance();
    span.end = num.span.end;
    std::string text = num.text;
    if (accept(TokKind::Slash)) {
      const Token& den = peek();
      if (den.kind != TokKind::Number) throw ParseError("expected denominator digits", den.span);
      advance();
      span.end = den.span.end;
      if (Rational::from_string(den.text).is_zero())
        throw ParseError("zero denominator", den.span);
      text += "/" + den.text;
    }
    NodePtr n = make_node(Node::Kind::Constant, span);
    n->value = Rational::from_string(text);
    if (neg) n->value = -n->value;
    return n;
  }

  NodePtr variable_ref() {
    const Token& t = advance();
    const std::string& s = t.text;
    int index = -1;
    bool aliased = false;
    if (s == "x" || s == "y" || s == "z") {
      index = s[0] - 'x';
      aliased = true;
    } else if (s.size() >= 2 && s[0] == 'x' &&
               std::all_of(s.begin() + 1, s.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      if (s[1] == '0' || s.size() > 7)
        throw ParseError("unknown variable name '" + s + "'", t.span);
      index = std::stoi(s.substr(1)) - 1;
    } else {
      throw ParseError("unknown variable name '" + s + "'", t.span);
    }
    if (saw_alias_.has_value() && *saw_alias_ != aliased)
      throw ParseError("cannot mix x/y/z aliases with indexed variable names", t.span);
    saw_alias_ = aliased;
    if (index > max_var_index_) {
      max_var_index_ = index;
      max_var_span_ = t.span;
    }
    NodePtr n = make_node(Node::Kind::Variable, t.span);
    n->var = index;
    return n;
  }

  int parse_exponent(const Token& t) {
    if (t.text.size() > 4) throw ParseError("exponent too large", t.span);
    return std::stoi(t.text);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::optional<bool> saw_alias_;
  int max_var_index_ = -1;
  SourceSpan max_var_span_{};
};

Polynomial eval(const Node& n, int dim) {
  switch (n.kind) {
    case Node::Kind::Constant:
      return Polynomial::constant(dim, n.value);
    case Node::Kind::Variable:
      return Polynomial::variable(dim, n.var);
    case Node::Kind::Add:
      return eval(*n.lhs, dim) + eval(*n.rhs, dim);
    case Node::Kind::Sub:
      return eval(*n.lhs, dim) - eval(*n.rhs, dim);
    case Node::Kind::Mul:
      return eval(*n.lhs, dim) * eval(*n.rhs, dim);
    case Node::Kind::Neg:
      return -eval(*n.lhs, dim);
    case Node::Kind::Pow: {
      const Polynomial b = eval(*n.lhs, dim);
      Polynomial acc = Polynomial::constant(dim, Rational(1));
      for (int i = 0; i < n.exponent; ++i) acc = acc * b;
      return acc;
    }
  }
  throw std::logic_error("eval: unreachable");
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::optional<int> dim) {
  if (text.empty()) throw ParseError("empty input", {0, 0});
  if (dim.has_value() && *dim < 1) throw std::invalid_argument("parse_polynomial: dim must be >= 1");
  Parser parser(text);
  NodePtr root = parser.parse();
  int resolved = parser.max_var_index() + 1;
  if (dim.has_value()) {
    if (resolved > *dim)
      throw ParseError("variable exceeds the requested dimension " + std::to_string(*dim),
                       parser.max_var_span());
    resolved = *dim;
  } else if (resolved == 0) {
    resolved = 1;  // constant expression
  }
  return eval(*root, resolved);
}

std::string variable_name(int dim, int index) {
  if (dim <= 3) return std::string(1, static_cast<char>('x' + index));
  return "x" + std::to_string(index + 1);
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {  // term map iterates in listing order
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Rational a = c.abs();
    std::string vars;
    for (int i = 0; i < p.dim(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += variable_name(p.dim(), i);
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      out << a.str();
    } else if (a == Rational(1)) {
      out << vars;
    } else {
      out << a.str() << "*" << vars;
    }
  }
  return out.str();
}

std::string format_point(const Point& point) {
  std::string s = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) s += ", ";
    s += point[i].str();
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << format_polynomial(p);
}

}  // namespace fischerlab
