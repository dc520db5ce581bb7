#include "bihom/scalar.hpp"

#include <cassert>
#include <stdexcept>

#include "bihom/errors.hpp"

namespace bihom {

Scalar::Scalar(Polynomial num, Polynomial den, bool already_canonical)
    : num_(std::move(num)), den_(std::move(den)) {
  if (already_canonical) return;
  if (den_.is_zero()) throw ArithmeticError("division by zero scalar");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.parameters(), Rational(1));
    return;
  }
  Polynomial g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = poly_div_exact(num_, g);
    den_ = poly_div_exact(den_, g);
  }
  Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Scalar Scalar::zero(std::vector<std::string> params) {
  return constant(std::move(params), Rational(0));
}

Scalar Scalar::constant(std::vector<std::string> params, const Rational& c) {
  Polynomial one = Polynomial::constant(params, Rational(1));
  return Scalar(Polynomial::constant(std::move(params), c), std::move(one), true);
}

Scalar Scalar::parameter(std::vector<std::string> params, std::size_t index) {
  Polynomial one = Polynomial::constant(params, Rational(1));
  return Scalar(Polynomial::parameter(std::move(params), index), std::move(one), true);
}

Scalar Scalar::fraction(Polynomial num, Polynomial den) {
  return Scalar(std::move(num), std::move(den), false);
}

void Scalar::align(Scalar& a, Scalar& b) {
  if (a.parameters() == b.parameters()) return;
  // A parameterless constant embeds into any parameter list.
  if (a.parameters().empty() && a.is_rational()) {
    a = Scalar::constant(b.parameters(), a.rational_value());
    return;
  }
  if (b.parameters().empty() && b.is_rational()) {
    b = Scalar::constant(a.parameters(), b.rational_value());
    return;
  }
  throw std::logic_error("scalar parameter lists differ");
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, true); }

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, false);
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_, false);
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  return Scalar(a.num_ * b.num_, a.den_ * b.den_, false);
}

Scalar Scalar::operator/(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  if (b.is_zero()) throw ArithmeticError("division by zero scalar");
  return Scalar(a.num_ * b.den_, a.den_ * b.num_, false);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero scalar");
  return Scalar(den_, num_, false);
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = Scalar::constant(parameters(), Rational(1));
  Scalar base = *this;
  unsigned u = static_cast<unsigned>(e);
  while (u > 0) {
    if (u & 1u) r = r * base;
    u >>= 1u;
    if (u > 0) base = base * base;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  Scalar a = *this, b = o;
  if (a.parameters() != b.parameters()) {
    if (!(a.parameters().empty() && a.is_rational()) &&
        !(b.parameters().empty() && b.is_rational()))
      return false;
    align(a, b);
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

Rational Scalar::evaluate(const std::map<std::string, Rational>& assignment) const {
  const auto& params = parameters();
  std::vector<Rational> values(params.size(), Rational(0));
  for (std::size_t i = 0; i < params.size(); ++i) {
    auto it = assignment.find(params[i]);
    if (it != assignment.end()) {
      values[i] = it->second;
    } else if (num_.uses(i) || den_.uses(i)) {
      throw EvaluationError("no value assigned to parameter '" + params[i] + "'");
    }
  }
  Rational d = den_.evaluate(values);
  if (d == 0) throw EvaluationError("denominator vanishes at the given assignment");
  return num_.evaluate(values) / d;
}

Scalar Scalar::substitute(const std::string& name, const Rational& value) const {
  const auto& params = parameters();
  std::size_t idx = params.size();
  for (std::size_t i = 0; i < params.size(); ++i)
    if (params[i] == name) {
      idx = i;
      break;
    }
  if (idx == params.size()) throw EvaluationError("unknown parameter '" + name + "'");
  Polynomial n = num_.substitute(idx, value);
  Polynomial d = den_.substitute(idx, value);
  if (d.is_zero()) throw EvaluationError("denominator vanishes at " + name + " = " +
                                         rational_to_string(value));
  return Scalar(std::move(n), std::move(d), false);
}

namespace {

// True when the polynomial prints as a single grammar factor chain that can
// stand unparenthesized to the right of '/': one term, coefficient 1, at most
// one variable.
bool is_plain_power(const Polynomial& p) {
  if (p.terms().size() != 1) return false;
  const auto& [e, c] = *p.terms().begin();
  if (c != 1) return false;
  int vars = 0;
  for (int k : e)
    if (k > 0) ++vars;
  return vars == 1;
}

}  // namespace

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (!is_plain_power(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

std::string Scalar::to_factor_string() const {
  std::string s = to_string();
  if (den_.is_one() && num_.terms().size() > 1) return "(" + s + ")";
  return s;
}

Scalar scalar_arith(ScalarOp op, const Scalar& a, const Scalar* b) {
  switch (op) {
    case ScalarOp::Neg:
      return -a;
    case ScalarOp::Inv:
      return a.inverse();
    default:
      break;
  }
  if (b == nullptr) throw std::logic_error("binary scalar op requires two operands");
  switch (op) {
    case ScalarOp::Add:
      return a + *b;
    case ScalarOp::Sub:
      return a - *b;
    case ScalarOp::Mul:
      return a * *b;
    case ScalarOp::Div:
      return a / *b;
    default:
      throw std::logic_error("unreachable");
  }
}

}  // namespace bihom
