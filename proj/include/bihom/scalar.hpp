#pragma once

#include <map>
#include <string>
#include <vector>

#include "bihom/polynomial.hpp"

namespace bihom {

/// Element of the rational-function field Q(p1,...,pm) in canonical form:
/// numerator and denominator coprime (polynomial gcd and content removed) and
/// the denominator monic under graded-lex order. Immutable value type; all
/// operations are pure.
class Scalar {
public:
  Scalar() : Scalar(Polynomial{}, Polynomial::constant({}, Rational(1)), true) {}
  explicit Scalar(const Rational& c)
      : Scalar(Polynomial::constant({}, c), Polynomial::constant({}, Rational(1)), true) {}
  explicit Scalar(long n) : Scalar(Rational(n)) {}

  static Scalar zero(std::vector<std::string> params);
  static Scalar constant(std::vector<std::string> params, const Rational& c);
  static Scalar parameter(std::vector<std::string> params, std::size_t index);
  /// num/den, normalized; throws ArithmeticError on a zero denominator.
  static Scalar fraction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  const std::vector<std::string>& parameters() const { return num_.parameters(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_rational() const { return num_.is_constant() && den_.is_one(); }
  Rational rational_value() const { return num_.constant_value(); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws ArithmeticError on zero divisor
  Scalar inverse() const;                   // throws ArithmeticError on zero
  Scalar pow(int e) const;                  // negative exponents allowed
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Exact specialization. The assignment must cover every parameter that
  /// actually occurs; throws EvaluationError on a vanishing denominator.
  Rational evaluate(const std::map<std::string, Rational>& assignment) const;

  /// Substitutes one parameter and drops it from the parameter list; throws
  /// EvaluationError if the denominator vanishes identically afterwards.
  Scalar substitute(const std::string& name, const Rational& value) const;

  /// Canonical rendering: reduced fraction of expanded polynomials, terms in
  /// descending graded-lex order, denominator monic.
  std::string to_string() const;

  /// to_string, parenthesized where needed so the result can be used as a
  /// factor inside a larger product expression.
  std::string to_factor_string() const;

private:
  Scalar(Polynomial num, Polynomial den, bool already_canonical);
  static void align(Scalar& a, Scalar& b);  // lifts parameterless constants

  Polynomial num_, den_;
};

/// scalar_arith op-codes, mirroring the file-level contract.
enum class ScalarOp { Add, Sub, Mul, Div, Neg, Inv };

/// Dispatches field arithmetic by op-code; unary ops ignore b.
Scalar scalar_arith(ScalarOp op, const Scalar& a, const Scalar* b = nullptr);

}  // namespace bihom
