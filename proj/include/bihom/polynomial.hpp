#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bihom/rational.hpp"

namespace bihom {

/// Exponent vector, one entry per declared parameter. Entries are >= 0.
using Exponents = std::vector<int>;

/// Graded-lexicographic order: total degree first, ties broken by the first
/// differing exponent (earlier parameters are more significant).
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate polynomial over Q in a fixed, ordered parameter list.
/// Invariant: no stored zero coefficient; every exponent vector has length
/// equal to the number of parameters.
class Polynomial {
public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  Polynomial() = default;  // zero over the empty parameter list
  explicit Polynomial(std::vector<std::string> params) : params_(std::move(params)) {}

  static Polynomial constant(std::vector<std::string> params, const Rational& c);
  static Polynomial parameter(std::vector<std::string> params, std::size_t index);
  static Polynomial monomial(std::vector<std::string> params, Exponents e, const Rational& c);

  const std::vector<std::string>& parameters() const { return params_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  Rational constant_value() const;  // requires is_constant()

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(std::size_t var) const;
  bool uses(std::size_t var) const { return degree_in(var) > 0; }

  /// Leading term under grlex; requires a nonzero polynomial.
  const std::pair<const Exponents, Rational>& leading_term() const;
  Rational leading_coefficient() const { return leading_term().second; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned e) const;
  bool operator==(const Polynomial& o) const { return params_ == o.params_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Exact substitution of every parameter; values has one entry per parameter.
  Rational evaluate(const std::vector<Rational>& values) const;

  /// Substitutes one parameter and drops it from the parameter list.
  Polynomial substitute(std::size_t var, const Rational& value) const;

  /// Canonical rendering: terms in descending grlex order, "^" powers,
  /// "*" products, rational coefficients as "n/d".
  std::string to_string() const;

  void add_term(const Exponents& e, const Rational& c);  // accumulates, drops zeros

private:
  std::vector<std::string> params_;
  TermMap terms_;
};

/// gcd over Q[params], returned with integer coprime coefficients and a
/// positive grlex-leading coefficient (the canonical associate).
/// poly_gcd(0,0) = 0; otherwise nonzero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Exact division; throws std::logic_error if b does not divide a.
Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b);

}  // namespace bihom
