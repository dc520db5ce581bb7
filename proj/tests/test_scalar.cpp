#include <doctest.h>

#include <random>

#include "bihom/errors.hpp"
#include "bihom/scalar.hpp"

using namespace bihom;

namespace {

const std::vector<std::string> kLG = {"lambda", "gamma"};

Scalar L() { return Scalar::parameter(kLG, 0); }
Scalar G() { return Scalar::parameter(kLG, 1); }

// Uniform random scalar built from small random polynomials; denominators are
// kept nonzero by construction.
Scalar random_scalar(std::mt19937_64& rng, const std::vector<std::string>& params) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> expo(0, 2);
  auto random_poly = [&](bool nonzero) {
    Polynomial p(params);
    for (int t = 0; t < 3; ++t) {
      Exponents e(params.size());
      for (auto& k : e) k = expo(rng);
      p.add_term(e, Rational(coeff(rng)));
    }
    if (nonzero && p.is_zero()) p.add_term(Exponents(params.size(), 0), Rational(1));
    return p;
  };
  return Scalar::fraction(random_poly(false), random_poly(true));
}

}  // namespace

TEST_CASE("rational gcd canonicalization via gmp") {
  Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
}

TEST_CASE("scalar arithmetic examples") {
  CHECK((L() + (-L())).is_zero());
  CHECK((G().pow(-2) * G().pow(2)).is_one());

  // div(lambda^2, gamma^2): cross-check by independent expansion.
  Scalar g2 = G().pow(2);
  Scalar q = scalar_arith(ScalarOp::Div, L().pow(2), &g2);
  CHECK(q.to_string() == "lambda^2/gamma^2");
  CHECK(q * G().pow(2) == L().pow(2));
  CHECK(q.denominator().leading_coefficient() == 1);
}

TEST_CASE("division by zero scalar") {
  CHECK_THROWS_AS(L() / Scalar::zero(kLG), ArithmeticError);
  CHECK_THROWS_AS(Scalar::zero(kLG).inverse(), ArithmeticError);
}

TEST_CASE("evaluate_at") {
  Scalar s = L().pow(2) / G().pow(2);
  CHECK(s.evaluate({{"lambda", Rational(2)}, {"gamma", Rational(1)}}) == Rational(4));

  CHECK_THROWS_AS(G().inverse().evaluate({{"gamma", Rational(0)}}), EvaluationError);

  // -8 gamma^2 at gamma = 3.
  Scalar t = Scalar::constant(kLG, -8) * G().pow(2);
  CHECK(t.evaluate({{"gamma", Rational(3)}}) == Rational(-72));

  // Parameters that do not occur need no assignment; missing occurring ones fail.
  CHECK(t.evaluate({{"gamma", Rational(1)}}) == Rational(-8));
  CHECK_THROWS_AS(t.evaluate({{"lambda", Rational(1)}}), EvaluationError);
}

TEST_CASE("normal form is canonical") {
  // (gamma^2 - 1)/(gamma - 1) == gamma + 1
  Scalar lhs = (G().pow(2) - Scalar::constant(kLG, 1)) / (G() - Scalar::constant(kLG, 1));
  Scalar rhs = G() + Scalar::constant(kLG, 1);
  CHECK(lhs == rhs);
  CHECK(lhs.to_string() == "gamma + 1");

  // Monic denominator: 1/(2 gamma) = (1/2)/gamma.
  Scalar inv = (Scalar::constant(kLG, 2) * G()).inverse();
  CHECK(inv.to_string() == "1/2/gamma");
  CHECK(inv.denominator().to_string() == "gamma");
}

TEST_CASE("field axioms on randomized scalars") {
  std::mt19937_64 rng(0xB1401u);
  const Scalar one = Scalar::constant(kLG, 1);
  for (int it = 0; it < 60; ++it) {
    Scalar a = random_scalar(rng, kLG);
    Scalar b = random_scalar(rng, kLG);
    Scalar c = random_scalar(rng, kLG);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) {
      CHECK((a * a.inverse()).is_one());
      CHECK(a.pow(-2) == (a * a).inverse());
    }
    CHECK(a * one == a);
  }
}

TEST_CASE("evaluation is a field homomorphism") {
  // Independent oracle for the arithmetic kernel: specialize at random
  // rational points and compare against gmp rational arithmetic.
  std::mt19937_64 rng(0xB1402u);
  std::uniform_int_distribution<int> pick(1, 7);
  int done = 0;
  while (done < 40) {
    Scalar a = random_scalar(rng, kLG);
    Scalar b = random_scalar(rng, kLG);
    std::map<std::string, Rational> at = {{"lambda", make_rational(pick(rng), pick(rng))},
                                          {"gamma", make_rational(pick(rng), pick(rng))}};
    Rational va, vb;
    try {
      va = a.evaluate(at);
      vb = b.evaluate(at);
    } catch (const EvaluationError&) {
      continue;  // denominator vanished at the sample point
    }
    CHECK((a + b).evaluate(at) == va + vb);
    CHECK((a - b).evaluate(at) == va - vb);
    CHECK((a * b).evaluate(at) == va * vb);
    if (!b.is_zero() && vb != 0) CHECK((a / b).evaluate(at) == va / vb);
    ++done;
  }
}

TEST_CASE("substitute specializes and drops the parameter") {
  Scalar s = L().pow(2) / G();
  Scalar t = s.substitute("lambda", Rational(3));
  CHECK(t.parameters() == std::vector<std::string>{"gamma"});
  CHECK(t.to_string() == "9/gamma");
  CHECK_THROWS_AS(G().inverse().substitute("gamma", Rational(0)), EvaluationError);
}
