#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bihom/scalar.hpp"

namespace bihom {

/// Abstract syntax tree for scalar expressions over rational literals and
/// parameter names. Grammar (authoritative):
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | atom ('^' integer)?
///   atom   := rational | identifier | '(' expr ')'
/// Negative exponents are lowered to division at parse time, so Pow nodes
/// carry nonnegative exponents only.
struct ScalarExpr {
  enum class Kind { Literal, Param, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind;
  Rational literal;                       // Literal
  std::string param;                      // Param
  std::shared_ptr<const ScalarExpr> lhs;  // unary operand / left operand / base
  std::shared_ptr<const ScalarExpr> rhs;  // right operand
  int exponent = 0;                       // Pow, >= 0
};

using ExprPtr = std::shared_ptr<const ScalarExpr>;

/// Parses text against the grammar; identifiers must appear in params.
/// Throws ParseError with a byte offset on syntax errors and unknown names.
ExprPtr parse_scalar_expr(std::string_view text, const std::vector<std::string>& params);

/// Minimal-parentheses rendering; parse(pretty(e)) reproduces e exactly.
std::string pretty(const ScalarExpr& e);

bool expr_equal(const ScalarExpr& a, const ScalarExpr& b);

/// Evaluates the AST in Q(params). Throws ArithmeticError when a divisor
/// evaluates to the zero rational function.
Scalar to_scalar(const ScalarExpr& e, const std::vector<std::string>& params);

/// Convenience: parse then evaluate.
Scalar parse_scalar(std::string_view text, const std::vector<std::string>& params);

}  // namespace bihom
