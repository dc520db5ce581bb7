#include "bihom/expr.hpp"

#include <cctype>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

ExprPtr make(ScalarExpr e) { return std::make_shared<const ScalarExpr>(std::move(e)); }

ExprPtr literal(Rational q) {
  ScalarExpr e;
  e.kind = ScalarExpr::Kind::Literal;
  e.literal = std::move(q);
  return make(std::move(e));
}

ExprPtr unary(ScalarExpr::Kind k, ExprPtr a) {
  ScalarExpr e;
  e.kind = k;
  e.lhs = std::move(a);
  return make(std::move(e));
}

ExprPtr binary(ScalarExpr::Kind k, ExprPtr a, ExprPtr b) {
  ScalarExpr e;
  e.kind = k;
  e.lhs = std::move(a);
  e.rhs = std::move(b);
  return make(std::move(e));
}

ExprPtr power(ExprPtr base, int exponent) {
  ScalarExpr e;
  e.kind = ScalarExpr::Kind::Pow;
  e.lhs = std::move(base);
  e.exponent = exponent;
  return make(std::move(e));
}

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string>& params)
      : text_(text), params_(params) {}

  ExprPtr run() {
    if (text_.empty()) throw ParseError("empty expression", 0);
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (true) {
      if (accept('+'))
        e = binary(ScalarExpr::Kind::Add, e, term());
      else if (accept('-'))
        e = binary(ScalarExpr::Kind::Sub, e, term());
      else
        return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (true) {
      if (accept('*'))
        e = binary(ScalarExpr::Kind::Mul, e, factor());
      else if (accept('/'))
        e = binary(ScalarExpr::Kind::Div, e, factor());
      else
        return e;
    }
  }

  ExprPtr factor() {
    if (accept('-')) return unary(ScalarExpr::Kind::Neg, factor());
    ExprPtr a = atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      int e = exponent_literal();
      if (e >= 0) return power(std::move(a), e);
      // Negative exponents lower to division, keeping Pow exponents >= 0.
      return binary(ScalarExpr::Kind::Div, literal(Rational(1)), power(std::move(a), -e));
    }
    return a;
  }

  int exponent_literal() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected integer exponent", pos_);
    long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    return static_cast<int>(neg ? -v : v);
  }

  ExprPtr atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw ParseError("unexpected character", pos_);
  }

  // rational := integer ('/' positive-integer)? ; the '/' is part of the
  // literal only when a digit follows immediately.
  ExprPtr rational_literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    mpz_class num(std::string(text_.substr(start, pos_ - start)));
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class den(std::string(text_.substr(dstart, pos_ - dstart)));
      if (den == 0) throw ParseError("denominator of a rational literal must be positive", dstart);
      Rational q(num, den);
      q.canonicalize();
      return literal(std::move(q));
    }
    return literal(Rational(num));
  }

  ExprPtr identifier() {
    std::size_t start = pos_;
    ++pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    for (const auto& p : params_)
      if (p == name) {
        ScalarExpr e;
        e.kind = ScalarExpr::Kind::Param;
        e.param = std::move(name);
        return make(std::move(e));
      }
    throw ParseError("unknown identifier '" + name + "'", start);
  }

  std::string_view text_;
  const std::vector<std::string>& params_;
  std::size_t pos_ = 0;
};

int precedence(const ScalarExpr& e) {
  switch (e.kind) {
    case ScalarExpr::Kind::Add:
    case ScalarExpr::Kind::Sub:
      return 1;
    case ScalarExpr::Kind::Mul:
    case ScalarExpr::Kind::Div:
      return 2;
    case ScalarExpr::Kind::Neg:
      return 3;
    case ScalarExpr::Kind::Pow:
      return 4;
    case ScalarExpr::Kind::Literal:
    case ScalarExpr::Kind::Param:
      return 5;
  }
  return 5;
}

std::string wrapped(const ScalarExpr& e, int min_prec) {
  std::string s = pretty(e);
  if (precedence(e) < min_prec) return "(" + s + ")";
  return s;
}

}  // namespace

ExprPtr parse_scalar_expr(std::string_view text, const std::vector<std::string>& params) {
  return Parser(text, params).run();
}

std::string pretty(const ScalarExpr& e) {
  switch (e.kind) {
    case ScalarExpr::Kind::Literal:
      return rational_to_string(e.literal);
    case ScalarExpr::Kind::Param:
      return e.param;
    case ScalarExpr::Kind::Neg:
      return "-" + wrapped(*e.lhs, 3);
    case ScalarExpr::Kind::Add:
      return wrapped(*e.lhs, 1) + " + " + wrapped(*e.rhs, 2);
    case ScalarExpr::Kind::Sub:
      return wrapped(*e.lhs, 1) + " - " + wrapped(*e.rhs, 2);
    case ScalarExpr::Kind::Mul:
      return wrapped(*e.lhs, 2) + "*" + wrapped(*e.rhs, 3);
    case ScalarExpr::Kind::Div: {
      std::string l = wrapped(*e.lhs, 2);
      std::string r = wrapped(*e.rhs, 3);
      // "3/4" would re-lex as one rational literal; keep the division node.
      if (std::isdigit(static_cast<unsigned char>(l.back())) &&
          std::isdigit(static_cast<unsigned char>(r.front())))
        r = "(" + r + ")";
      return l + "/" + r;
    }
    case ScalarExpr::Kind::Pow: {
      // The grammar only allows atoms as bases of '^'.
      std::string base = wrapped(*e.lhs, 5);
      return base + "^" + std::to_string(e.exponent);
    }
  }
  return "";
}

bool expr_equal(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ScalarExpr::Kind::Literal:
      return a.literal == b.literal;
    case ScalarExpr::Kind::Param:
      return a.param == b.param;
    case ScalarExpr::Kind::Neg:
      return expr_equal(*a.lhs, *b.lhs);
    case ScalarExpr::Kind::Pow:
      return a.exponent == b.exponent && expr_equal(*a.lhs, *b.lhs);
    default:
      return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
  }
}

Scalar to_scalar(const ScalarExpr& e, const std::vector<std::string>& params) {
  switch (e.kind) {
    case ScalarExpr::Kind::Literal:
      return Scalar::constant(params, e.literal);
    case ScalarExpr::Kind::Param: {
      for (std::size_t i = 0; i < params.size(); ++i)
        if (params[i] == e.param) return Scalar::parameter(params, i);
      throw std::logic_error("parameter '" + e.param + "' not in context");
    }
    case ScalarExpr::Kind::Neg:
      return -to_scalar(*e.lhs, params);
    case ScalarExpr::Kind::Add:
      return to_scalar(*e.lhs, params) + to_scalar(*e.rhs, params);
    case ScalarExpr::Kind::Sub:
      return to_scalar(*e.lhs, params) - to_scalar(*e.rhs, params);
    case ScalarExpr::Kind::Mul:
      return to_scalar(*e.lhs, params) * to_scalar(*e.rhs, params);
    case ScalarExpr::Kind::Div:
      return to_scalar(*e.lhs, params) / to_scalar(*e.rhs, params);
    case ScalarExpr::Kind::Pow:
      return to_scalar(*e.lhs, params).pow(e.exponent);
  }
  throw std::logic_error("unreachable");
}

Scalar parse_scalar(std::string_view text, const std::vector<std::string>& params) {
  return to_scalar(*parse_scalar_expr(text, params), params);
}

}  // namespace bihom
