#include "bihom/polynomial.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace bihom {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  assert(a.size() == b.size());
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Polynomial Polynomial::constant(std::vector<std::string> params, const Rational& c) {
  Polynomial p(std::move(params));
  p.add_term(Exponents(p.params_.size(), 0), c);
  return p;
}

Polynomial Polynomial::parameter(std::vector<std::string> params, std::size_t index) {
  Polynomial p(std::move(params));
  if (index >= p.params_.size()) throw std::logic_error("parameter index out of range");
  Exponents e(p.params_.size(), 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> params, Exponents e, const Rational& c) {
  Polynomial p(std::move(params));
  if (e.size() != p.params_.size()) throw std::logic_error("exponent vector length mismatch");
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

bool Polynomial::is_one() const { return is_constant() && constant_value() == 1; }

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  assert(is_constant());
  return terms_.begin()->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponents& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int Polynomial::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

const std::pair<const Exponents, Rational>& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  assert(e.size() == params_.size());
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(params_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  assert(params_ == o.params_);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  assert(params_ == o.params_);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  assert(params_ == o.params_);
  Polynomial r(params_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(params_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = Polynomial::constant(params_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& values) const {
  assert(values.size() == params_.size());
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t *= rational_pow(values[i], static_cast<unsigned long>(e[i]));
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const {
  assert(var < params_.size());
  std::vector<std::string> rest = params_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(var));
  Polynomial r(rest);
  for (const auto& [e, c] : terms_) {
    Exponents e2 = e;
    e2.erase(e2.begin() + static_cast<std::ptrdiff_t>(var));
    Rational k = c;
    if (e[var] > 0) k *= rational_pow(value, static_cast<unsigned long>(e[var]));
    r.add_term(e2, k);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    bool neg = c < 0;
    std::string mon;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mon.empty()) mon += "*";
      mon += params_[i];
      if (e[i] > 1) mon += "^" + std::to_string(e[i]);
    }
    std::string body;
    if (mon.empty())
      body = rational_to_string(a);
    else if (a == 1)
      body = mon;
    else
      body = rational_to_string(a) + "*" + mon;
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

namespace {

// Positive rational c with P/c having integer coprime coefficients.
Rational rational_content(const Polynomial& p) {
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

// Integer coprime coefficients, positive grlex-leading coefficient.
Polynomial canonical_associate(const Polynomial& p) {
  if (p.is_zero()) return p;
  Rational c = rational_content(p);
  if (p.leading_coefficient() < 0) c = -c;
  return p.scaled(Rational(1) / c);
}

// Coefficients of p viewed as a univariate polynomial in params[var];
// index d holds the coefficient of var^d (a polynomial with var-exponent 0).
std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  std::vector<Polynomial> out(static_cast<std::size_t>(p.degree_in(var)) + 1,
                              Polynomial(p.parameters()));
  for (const auto& [e, c] : p.terms()) {
    Exponents e2 = e;
    int d = e2[var];
    e2[var] = 0;
    out[static_cast<std::size_t>(d)].add_term(e2, c);
  }
  return out;
}

Polynomial variable_power(const std::vector<std::string>& params, std::size_t var, int d) {
  Exponents e(params.size(), 0);
  e[var] = d;
  return Polynomial::monomial(params, e, Rational(1));
}

Polynomial leading_coeff_in(const Polynomial& p, std::size_t var) {
  return coefficients_in(p, var).back();
}

// Pseudo-remainder of a by b in params[var]; multiplies through by powers of
// lc(b) so all divisions stay exact.
Polynomial prem(Polynomial a, const Polynomial& b, std::size_t var) {
  Polynomial lb = leading_coeff_in(b, var);
  int db = b.degree_in(var);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    Polynomial la = leading_coeff_in(a, var);
    Polynomial shift = variable_power(a.parameters(), var, a.degree_in(var) - db);
    a = a * lb - b * la * shift;
  }
  return a;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

// gcd of the var-coefficients of p (the content of p w.r.t. var).
Polynomial content_in(const Polynomial& p, std::size_t var) {
  auto coeffs = coefficients_in(p, var);
  Polynomial g(p.parameters());
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? canonical_associate(c) : gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Primitive PRS gcd; a, b nonzero. Result is canonical up to the caller's
// final normalization.
Polynomial gcd_rec(const Polynomial& a, const Polynomial& b) {
  const auto& params = a.parameters();
  std::size_t var = params.size();
  for (std::size_t v = 0; v < params.size(); ++v)
    if (a.uses(v) || b.uses(v)) {
      var = v;
      break;
    }
  if (var == params.size()) return Polynomial::constant(params, Rational(1));

  Polynomial ca = content_in(a, var);
  Polynomial cb = content_in(b, var);
  Polynomial c = gcd_rec(ca, cb);
  Polynomial p = poly_div_exact(a, ca);
  Polynomial q = poly_div_exact(b, cb);
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  Polynomial g(params);
  while (true) {
    if (q.degree_in(var) == 0) {
      // q is primitive in var with degree 0, hence a unit.
      g = Polynomial::constant(params, Rational(1));
      break;
    }
    Polynomial r = prem(p, q, var);
    if (r.is_zero()) {
      g = q;
      break;
    }
    p = q;
    q = poly_div_exact(r, content_in(r, var));
  }
  return canonical_associate(c * g);
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  assert(a.parameters() == b.parameters());
  if (a.is_zero()) return canonical_associate(b);
  if (b.is_zero()) return canonical_associate(a);
  return gcd_rec(canonical_associate(a), canonical_associate(b));
}

Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b) {
  assert(a.parameters() == b.parameters());
  if (b.is_zero()) throw std::logic_error("polynomial division by zero");
  Polynomial r = a;
  Polynomial q(a.parameters());
  while (!r.is_zero()) {
    const auto& [er, cr] = r.leading_term();
    const auto& [eb, cb] = b.leading_term();
    Exponents e(er.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = er[i] - eb[i];
      if (e[i] < 0) throw std::logic_error("inexact polynomial division");
    }
    Polynomial t = Polynomial::monomial(a.parameters(), e, cr / cb);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

}  // namespace bihom
