#include <doctest.h>

#include <random>

#include "bihom/catalog.hpp"
#include "bihom/errors.hpp"
#include "bihom/tensor.hpp"

using namespace bihom;

namespace {
const std::vector<std::string> kLG = {"lambda", "gamma"};
Scalar L() { return Scalar::parameter(kLG, 0); }
Scalar G() { return Scalar::parameter(kLG, 1); }
Scalar C(long n) { return Scalar::constant(kLG, Rational(n)); }
}  // namespace

TEST_CASE("mat_inverse examples") {
  MatrixS d = MatrixS::diagonal({L().pow(2), L().pow(-2), C(1)});
  MatrixS dinv = d.inverse();
  CHECK(dinv == MatrixS::diagonal({L().pow(-2), L().pow(2), C(1)}));
  CHECK(d * dinv == MatrixS::identity(3, kLG));
  CHECK(dinv * d == MatrixS::identity(3, kLG));

  CHECK(MatrixS::identity(4, kLG).inverse() == MatrixS::identity(4, kLG));

  MatrixS u = MatrixS::identity(2, kLG);
  u.at(0, 1) = C(1);
  MatrixS uinv = u.inverse();
  CHECK(uinv.at(0, 1) == C(-1));
  CHECK(u * uinv == MatrixS::identity(2, kLG));

  MatrixS sing(2, 2, C(1));  // all-ones matrix
  CHECK(!sing.try_inverse().has_value());
  CHECK(sing.determinant().is_zero());
  CHECK_THROWS_AS(sing.inverse(), SingularMatrixError);
}

TEST_CASE("determinant is symbolic") {
  MatrixS m = MatrixS::zero(2, 2, kLG);
  m.at(0, 0) = L();
  m.at(0, 1) = C(1);
  m.at(1, 0) = C(1);
  m.at(1, 1) = L();
  CHECK(m.determinant() == L().pow(2) - C(1));
  // Generic nonsingularity: lambda = 1 is a singular specialization, but the
  // determinant is not the zero rational function.
  CHECK(!m.determinant().is_zero());
}

TEST_CASE("maps_commute") {
  MatrixS a = MatrixS::diagonal({L().pow(2), L().pow(-2), C(1)});
  MatrixS b = MatrixS::diagonal({G().pow(2), G().pow(-2), C(1)});
  CHECK(maps_commute(a, b));
  CHECK(maps_commute(MatrixS::identity(3, kLG), b));

  MatrixS f = MatrixS::zero(2, 2, kLG);
  f.at(0, 1) = C(1);
  MatrixS g = MatrixS::diagonal({C(1), C(2)});
  CHECK(!maps_commute(f, g));  // fg has (0,1) entry 2, gf has 1
}

TEST_CASE("bilinear_eval on the sl2 brackets") {
  AlgebraBundle cls = catalog::sl2_classical(kLG);
  const StructureTensor& br = cls.op("bracket");
  VectorS h = basis_vector(3, 2, kLG), x = basis_vector(3, 0, kLG), y = basis_vector(3, 1, kLG);

  CHECK(br.eval(h, x) == vec_scale(C(2), x));  // [H,X] = 2X
  CHECK(vec_is_zero(br.eval(VectorS(3, Scalar::zero(kLG)), x)));

  AlgebraBundle tw = catalog::sl2_bihom();
  // [X,Y] = (lambda^2/gamma^2) H
  VectorS got = tw.op("bracket").eval(x, y);
  CHECK(got[2] == L().pow(2) / G().pow(2));
  CHECK(got[0].is_zero());
  CHECK(got[1].is_zero());

  CHECK_THROWS(br.eval(VectorS(2, Scalar::zero(kLG)), x));
}

TEST_CASE("bilinear in each slot on random inputs") {
  std::mt19937_64 rng(0x11EAu);
  std::uniform_int_distribution<int> pick(-3, 3);
  AlgebraBundle tw = catalog::sl2_bihom();
  const StructureTensor& br = tw.op("bracket");
  auto rv = [&] {
    VectorS v;
    for (int i = 0; i < 3; ++i) v.push_back(C(pick(rng)));
    return v;
  };
  for (int it = 0; it < 25; ++it) {
    VectorS u = rv(), v = rv(), w = rv();
    Scalar c = C(pick(rng));
    CHECK(br.eval(vec_add(u, vec_scale(c, v)), w) ==
          vec_add(br.eval(u, w), vec_scale(c, br.eval(v, w))));
    CHECK(br.eval(w, vec_add(u, vec_scale(c, v))) ==
          vec_add(br.eval(w, u), vec_scale(c, br.eval(w, v))));
  }
}

TEST_CASE("is_morphism") {
  AlgebraBundle cls = catalog::sl2_classical(kLG);
  const StructureTensor& br = cls.op("bracket");

  MatrixS alpha = MatrixS::diagonal({L().pow(2), L().pow(-2), C(1)});
  CHECK(is_morphism(br, alpha));
  CHECK(is_morphism(br, MatrixS::identity(3, kLG)));
  CHECK(is_morphism(StructureTensor(3, kLG), alpha));  // zero tensor: any map

  // X -> X + H, Y -> Y, H -> H is not a morphism: f[H,X] = 2X + 2H but
  // [fH, fX] = [H, X + H] = 2X.
  MatrixS f = MatrixS::identity(3, kLG);
  f.at(2, 0) = C(1);
  CHECK(!is_morphism(br, f));

  CHECK(is_morphism(br, MatrixS::identity(3, kLG)));
}

TEST_CASE("rank") {
  MatrixS t = MatrixS::zero(3, 2, kLG);
  t.at(0, 0) = L();
  t.at(1, 1) = C(1);
  CHECK(t.rank() == 2);
  t.at(1, 1) = Scalar::zero(kLG);
  CHECK(t.rank() == 1);
}
