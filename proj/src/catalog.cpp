#include "bihom/catalog.hpp"

#include "bihom/construct.hpp"
#include "bihom/errors.hpp"

namespace bihom {
namespace catalog {

namespace {

AlgebraBundle classical(const std::string& name, std::vector<std::string> basis,
                        std::vector<std::string> params) {
  AlgebraBundle b;
  b.name = name;
  b.dim = static_cast<int>(basis.size());
  b.basis = std::move(basis);
  b.parameters = std::move(params);
  b.ops.emplace("bracket", StructureTensor(b.dim, b.parameters));
  b.maps.emplace("alpha", MatrixS::identity(b.dim, b.parameters));
  b.maps.emplace("beta", MatrixS::identity(b.dim, b.parameters));
  b.kind = Kind::BihomLie;
  return b;
}

// Antisymmetric fill: [i,j] = v also sets [j,i] = -v.
void set_bracket(AlgebraBundle& b, int i, int j, int k, const Scalar& c) {
  auto& t = b.ops.at("bracket");
  t.set(i, j, k, c);
  t.set(j, i, k, -c);
}

}  // namespace

AlgebraBundle sl2_classical(std::vector<std::string> params) {
  AlgebraBundle b = classical("sl2-classical", {"X", "Y", "H"}, std::move(params));
  const auto& p = b.parameters;
  // [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H.
  set_bracket(b, 2, 0, 0, Scalar::constant(p, 2));
  set_bracket(b, 2, 1, 1, Scalar::constant(p, -2));
  set_bracket(b, 0, 1, 2, Scalar::constant(p, 1));
  return b;
}

AlgebraBundle heisenberg3(std::vector<std::string> params) {
  AlgebraBundle b = classical("heisenberg3", {"e1", "e2", "e3"}, std::move(params));
  set_bracket(b, 0, 1, 2, Scalar::constant(b.parameters, 1));  // [e1,e2] = e3
  return b;
}

AlgebraBundle nonabelian2(std::vector<std::string> params) {
  AlgebraBundle b = classical("nonabelian2", {"e1", "e2"}, std::move(params));
  set_bracket(b, 0, 1, 0, Scalar::constant(b.parameters, 1));  // [e1,e2] = e1
  return b;
}

AlgebraBundle abelian(int dim, std::vector<std::string> params) {
  std::vector<std::string> basis;
  for (int i = 0; i < dim; ++i) basis.push_back("e" + std::to_string(i + 1));
  return classical("abelian" + std::to_string(dim), std::move(basis), std::move(params));
}

AlgebraBundle sl2_bihom() {
  std::vector<std::string> params = {"lambda", "gamma"};
  AlgebraBundle base = sl2_classical(params);
  Scalar l = Scalar::parameter(params, 0);
  Scalar g = Scalar::parameter(params, 1);
  MatrixS alpha = MatrixS::diagonal({l.pow(2), l.pow(-2), Scalar::constant(params, 1)});
  MatrixS beta = MatrixS::diagonal({g.pow(2), g.pow(-2), Scalar::constant(params, 1)});
  AlgebraBundle out = twist_lie(base, alpha, beta);
  out.name = "sl2-bihom";
  out.maps.emplace("R", MatrixS::diagonal({Scalar::zero(params), Scalar::constant(params, 4),
                                           Scalar::constant(params, 2)}));
  return out;
}

AlgebraBundle sl2_post_lie() {
  AlgebraBundle out = rota_baxter_induced(sl2_bihom(), Scalar(-4));
  out.name = "sl2-post-lie";
  return out;
}

AlgebraBundle tridend_2dim() {
  std::vector<std::string> params = {"a"};
  AlgebraBundle b;
  b.name = "tridend-2dim";
  b.dim = 2;
  b.basis = {"e1", "e2"};
  b.parameters = params;
  Scalar a = Scalar::parameter(params, 0);
  Scalar one = Scalar::constant(params, 1);
  Scalar two = Scalar::constant(params, 2);

  StructureTensor prec(2, params), succ(2, params), dot(2, params);
  prec.set(1, 1, 0, a);
  succ.set(1, 1, 0, a);
  dot.set(1, 1, 0, -a);
  b.ops.emplace("prec", std::move(prec));
  b.ops.emplace("succ", std::move(succ));
  b.ops.emplace("dot", std::move(dot));

  MatrixS alpha = MatrixS::identity(2, params);
  alpha.at(0, 1) = one;  // alpha(e2) = e1 + e2
  MatrixS beta = MatrixS::identity(2, params);
  beta.at(0, 1) = two;  // beta(e2) = 2 e1 + e2
  b.maps.emplace("alpha", std::move(alpha));
  b.maps.emplace("beta", std::move(beta));
  b.kind = Kind::BihomTridendriform;
  return b;
}

std::vector<std::string> names() {
  return {"sl2-bihom", "sl2-post-lie", "tridend-2dim", "splitting-rb"};
}

AlgebraBundle by_name(const std::string& name) {
  if (name == "sl2-bihom") return sl2_bihom();
  if (name == "sl2-post-lie") return sl2_post_lie();
  if (name == "tridend-2dim") return tridend_2dim();
  throw PreconditionError("unknown catalog name '" + name + "'");
}

}  // namespace catalog
}  // namespace bihom
