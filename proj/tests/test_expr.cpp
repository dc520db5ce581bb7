#include <doctest.h>

#include <random>

#include "bihom/errors.hpp"
#include "bihom/expr.hpp"

using namespace bihom;

namespace {
const std::vector<std::string> kLG = {"lambda", "gamma"};
}

TEST_CASE("grammar examples") {
  ExprPtr e = parse_scalar_expr("2*gamma^2", kLG);
  CHECK(e->kind == ScalarExpr::Kind::Mul);
  CHECK(e->lhs->kind == ScalarExpr::Kind::Literal);
  CHECK(e->lhs->literal == 2);
  CHECK(e->rhs->kind == ScalarExpr::Kind::Pow);
  CHECK(e->rhs->exponent == 2);

  ExprPtr n = parse_scalar_expr("-(4/3)", kLG);
  CHECK(n->kind == ScalarExpr::Kind::Neg);
  CHECK(n->lhs->kind == ScalarExpr::Kind::Literal);
  CHECK(n->lhs->literal == Rational(4, 3));

  Scalar s = parse_scalar("lambda^2/gamma^2", kLG);
  CHECK(s == Scalar::parameter(kLG, 0).pow(2) / Scalar::parameter(kLG, 1).pow(2));
}

TEST_CASE("precedence and associativity") {
  CHECK(parse_scalar("2+3*4", {}) == Scalar(Rational(14)));
  CHECK(parse_scalar("2*3^2", {}) == Scalar(Rational(18)));
  CHECK(parse_scalar("-3^2", {}) == Scalar(Rational(-9)));  // '^' binds tighter than unary '-'
  CHECK(parse_scalar("12/3/2", {}) == Scalar(Rational(2)));  // left-associative
  CHECK(parse_scalar("10-4-3", {}) == Scalar(Rational(3)));
  CHECK(parse_scalar("lambda^-2", kLG) == Scalar::parameter(kLG, 0).pow(-2));
  CHECK(parse_scalar("(gamma+1)^2", kLG) ==
        (Scalar::parameter(kLG, 1) + Scalar(1)).pow(2));
}

TEST_CASE("errors carry byte offsets") {
  try {
    parse_scalar_expr("2*@", kLG);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  try {
    parse_scalar_expr("lambda + delta", kLG);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 9);  // unknown identifier starts at byte 9
  }
  try {
    parse_scalar_expr("(lambda", kLG);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 7);
  }
  CHECK_THROWS_AS(parse_scalar_expr("", kLG), ParseError);
  CHECK_THROWS_AS(parse_scalar_expr("1/0", kLG), ParseError);  // zero literal denominator
  CHECK_THROWS_AS(parse_scalar_expr("2 3", kLG), ParseError);  // trailing input
}

TEST_CASE("parse then pretty-print then parse is a fixed point") {
  std::vector<std::string> samples = {
      "2*gamma^2",
      "-(4/3)",
      "lambda^2/gamma^2",
      "lambda - gamma - 1",
      "lambda*(gamma + 1)",
      "1/2*lambda/gamma",
      "-lambda^3 + 2/5",
      "lambda^-2*gamma",
      "((lambda))",
      "3/4^2",
  };
  for (const auto& text : samples) {
    ExprPtr once = parse_scalar_expr(text, kLG);
    ExprPtr twice = parse_scalar_expr(pretty(*once), kLG);
    CHECK_MESSAGE(expr_equal(*once, *twice), "sample: ", text, " pretty: ", pretty(*once));
  }
}

TEST_CASE("random expression round trips") {
  std::mt19937_64 rng(0xE7a9u);
  std::uniform_int_distribution<int> shape(0, 6);
  std::uniform_int_distribution<int> small(1, 9);

  // Random parseable ASTs, built the way the parser would shape them.
  std::function<ExprPtr(int)> gen = [&](int depth) -> ExprPtr {
    auto lit = [&] {
      return parse_scalar_expr(std::to_string(small(rng)), kLG);
    };
    if (depth == 0) {
      switch (shape(rng) % 3) {
        case 0:
          return lit();
        case 1:
          return parse_scalar_expr("lambda", kLG);
        default:
          return parse_scalar_expr("gamma", kLG);
      }
    }
    ExprPtr a = gen(depth - 1);
    ExprPtr b = gen(depth - 1);
    ScalarExpr e;
    switch (shape(rng)) {
      case 0:
        e.kind = ScalarExpr::Kind::Add;
        break;
      case 1:
        e.kind = ScalarExpr::Kind::Sub;
        break;
      case 2:
        e.kind = ScalarExpr::Kind::Mul;
        break;
      case 3:
        e.kind = ScalarExpr::Kind::Div;
        break;
      case 4: {
        e.kind = ScalarExpr::Kind::Neg;
        e.lhs = a;
        return std::make_shared<const ScalarExpr>(e);
      }
      default: {
        e.kind = ScalarExpr::Kind::Pow;
        e.lhs = gen(0);
        e.exponent = small(rng) % 4;
        return std::make_shared<const ScalarExpr>(e);
      }
    }
    e.lhs = a;
    e.rhs = b;
    return std::make_shared<const ScalarExpr>(e);
  };

  for (int it = 0; it < 200; ++it) {
    ExprPtr e = gen(3);
    ExprPtr back = parse_scalar_expr(pretty(*e), kLG);
    CHECK_MESSAGE(expr_equal(*e, *back), "pretty: ", pretty(*e));
  }
}
