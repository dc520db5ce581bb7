#include "bihom/construct.hpp"

#include <algorithm>
#include <set>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw PreconditionError(msg);
}

void require_clean(const ViolationReport& rep, const std::string& what) {
  if (rep.ok()) return;
  std::string first;
  for (const auto& a : rep.axioms)
    if (!a.passed) {
      first = a.axiom;
      break;
    }
  throw PreconditionError(what + " (first failing axiom: " + first + ")");
}

bool is_identity(const MatrixS& m, const std::vector<std::string>& params) {
  return m.rows() == m.cols() && m == MatrixS::identity(m.rows(), params);
}

MatrixS block_diag(const MatrixS& a, const MatrixS& b, const std::vector<std::string>& params) {
  MatrixS m = MatrixS::zero(a.rows() + b.rows(), a.cols() + b.cols(), params);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

StructureTensor tensor_from(int dim, const std::vector<std::string>& params,
                            const std::function<VectorS(int, int)>& fn) {
  StructureTensor t(dim, params);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      VectorS v = fn(i, j);
      for (int k = 0; k < dim; ++k) t.set(i, j, k, v[static_cast<std::size_t>(k)]);
    }
  return t;
}

std::vector<std::string> module_basis_names(const AlgebraBundle& b, int vdim,
                                            const std::string& stem) {
  std::set<std::string> taken(b.basis.begin(), b.basis.end());
  std::vector<std::string> names;
  for (int i = 0; i < vdim; ++i) {
    std::string n = stem + std::to_string(i + 1);
    while (taken.count(n)) n += "_";
    taken.insert(n);
    names.push_back(n);
  }
  return names;
}

// alpha^-1 beta and alpha beta^-1; throws naming the singular map.
std::pair<MatrixS, MatrixS> regularity_pair(const AlgebraBundle& b) {
  auto ainv = b.alpha().try_inverse();
  require(ainv.has_value(), "alpha is singular");
  auto binv = b.beta().try_inverse();
  require(binv.has_value(), "beta is singular");
  return {*ainv * b.beta(), b.alpha() * *binv};
}

AlgebraBundle skeleton(const AlgebraBundle& src, const std::string& name, Kind kind) {
  AlgebraBundle out;
  out.name = name;
  out.dim = src.dim;
  out.basis = src.basis;
  out.parameters = src.parameters;
  out.maps.emplace("alpha", src.alpha());
  out.maps.emplace("beta", src.beta());
  out.kind = kind;
  return out;
}

}  // namespace

AlgebraBundle twist_lie(const AlgebraBundle& lie, const MatrixS& a, const MatrixS& b) {
  validate_bundle(lie);
  require(is_identity(lie.alpha(), lie.parameters) && is_identity(lie.beta(), lie.parameters),
          "twist requires a classical input (alpha = beta = id)");
  require(maps_commute(a, b), "twist maps do not commute");
  const StructureTensor& br = lie.op("bracket");
  require(is_morphism(br, a), "first twist map is not a bracket morphism");
  require(is_morphism(br, b), "second twist map is not a bracket morphism");
  require_clean(check_bihom_lie(lie), "input is not a Lie algebra");

  AlgebraBundle out = skeleton(lie, lie.name + "-twisted", Kind::BihomLie);
  out.maps.at("alpha") = a;
  out.maps.at("beta") = b;
  out.ops.emplace("bracket", tensor_from(lie.dim, lie.parameters, [&](int i, int j) {
                    return br.eval(a.column(i), b.column(j));
                  }));
  if (lie.has_map("R")) out.maps.emplace("R", lie.map("R"));
  return out;
}

AlgebraBundle twist_post_lie(const AlgebraBundle& post, const MatrixS& a, const MatrixS& b) {
  validate_bundle(post);
  require(is_identity(post.alpha(), post.parameters) && is_identity(post.beta(), post.parameters),
          "twist requires a classical input (alpha = beta = id)");
  require(maps_commute(a, b), "twist maps do not commute");
  const StructureTensor& br = post.op("bracket");
  const StructureTensor& tr = post.op("triangle");
  for (const auto* t : {&br, &tr}) {
    require(is_morphism(*t, a), "first twist map is not a morphism of both operations");
    require(is_morphism(*t, b), "second twist map is not a morphism of both operations");
  }
  require_clean(check_bihom_post_lie(post), "input is not a post-Lie algebra");

  AlgebraBundle out = skeleton(post, post.name + "-twisted", Kind::BihomPostLie);
  out.maps.at("alpha") = a;
  out.maps.at("beta") = b;
  out.ops.emplace("bracket", tensor_from(post.dim, post.parameters, [&](int i, int j) {
                    return br.eval(a.column(i), b.column(j));
                  }));
  out.ops.emplace("triangle", tensor_from(post.dim, post.parameters, [&](int i, int j) {
                    return tr.eval(a.column(i), b.column(j));
                  }));
  return out;
}

AlgebraBundle flip_post_lie(const AlgebraBundle& lie) {
  validate_bundle(lie);
  require_clean(check_bihom_lie(lie), "input is not a BiHom-Lie algebra");
  AlgebraBundle out = skeleton(lie, lie.name + "-flip", Kind::BihomPostLie);
  out.ops.emplace("bracket", lie.op("bracket"));
  out.ops.emplace("triangle", lie.op("bracket").flipped());
  return out;
}

namespace {

StructureTensor sub_adjacent_tensor(const AlgebraBundle& post) {
  auto [ainv_b, a_binv] = regularity_pair(post);
  const StructureTensor& br = post.op("bracket");
  const StructureTensor& tr = post.op("triangle");
  return tensor_from(post.dim, post.parameters, [&](int i, int j) {
    VectorS v = tr.on_basis(i, j);
    v = vec_sub(v, tr.eval(ainv_b.column(j), a_binv.column(i)));
    return vec_add(v, br.on_basis(i, j));
  });
}

}  // namespace

AlgebraBundle sub_adjacent(const AlgebraBundle& post) {
  validate_bundle(post);
  require(post.has_op("bracket") && post.has_op("triangle"),
          "sub-adjacent bracket needs torsion and connection");
  AlgebraBundle out = skeleton(post, post.name + "-subadjacent", Kind::BihomLie);
  out.ops.emplace("bracket", sub_adjacent_tensor(post));
  return out;
}

AlgebraBundle admissible_product(const AlgebraBundle& post) {
  validate_bundle(post);
  require(check_regular(post), "alpha or beta is singular");
  AlgebraBundle out = skeleton(post, post.name + "-admissible", Kind::BihomProduct);
  Scalar half = Scalar::constant(post.parameters, Rational(1, 2));
  out.ops.emplace("dot", post.op("triangle") + post.op("bracket").scaled(half));
  return out;
}

AlgebraBundle commutator_bihom_lie(const AlgebraBundle& prod) {
  validate_bundle(prod);
  auto [ainv_b, a_binv] = regularity_pair(prod);
  const StructureTensor& dot = prod.op("dot");
  AlgebraBundle out = skeleton(prod, prod.name + "-commutator", Kind::BihomLie);
  out.ops.emplace("bracket", tensor_from(prod.dim, prod.parameters, [&](int i, int j) {
                    return vec_sub(dot.on_basis(i, j),
                                   dot.eval(ainv_b.column(j), a_binv.column(i)));
                  }));
  return out;
}

AlgebraBundle black_transform(const AlgebraBundle& post) {
  validate_bundle(post);
  require_clean(check_bihom_post_lie(post), "input is not a BiHom-post-Lie algebra");
  AlgebraBundle out = skeleton(post, post.name + "-black", Kind::BihomPostLie);
  out.ops.emplace("bracket", -post.op("bracket"));
  out.ops.emplace("triangle", post.op("triangle") + post.op("bracket"));
  return out;
}

AlgebraBundle double_bracket(const AlgebraBundle& post) {
  validate_bundle(post);
  auto [ainv_b, a_binv] = regularity_pair(post);
  const StructureTensor& br = post.op("bracket");
  const StructureTensor& tr = post.op("triangle");
  const int n = post.dim;

  AlgebraBundle out;
  out.name = post.name + "-double";
  out.dim = 2 * n;
  out.parameters = post.parameters;
  for (const auto& s : post.basis) out.basis.push_back(s + "_1");
  for (const auto& s : post.basis) out.basis.push_back(s + "_2");
  out.maps.emplace("alpha", block_diag(post.alpha(), post.alpha(), post.parameters));
  out.maps.emplace("beta", block_diag(post.beta(), post.beta(), post.parameters));
  out.kind = Kind::BihomLie;

  StructureTensor sub = sub_adjacent_tensor(post);
  StructureTensor t(out.dim, out.parameters);
  auto put = [&](int p, int q, int offset, const VectorS& v) {
    for (int k = 0; k < n; ++k) t.set(p, q, offset + k, v[static_cast<std::size_t>(k)]);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      put(i, j, 0, sub.on_basis(i, j));                                  // (a,b) -> {a,b}
      put(i, n + j, n, tr.on_basis(i, j));                               // (a,y) -> a |> y
      put(n + i, j, n, vec_neg(tr.eval(ainv_b.column(j), a_binv.column(i))));  // (x,b)
      put(n + i, n + j, n, br.on_basis(i, j));                           // (x,y) -> [x,y]
    }
  out.ops.emplace("bracket", std::move(t));
  return out;
}

AlgebraBundle lr_to_post(const AlgebraBundle& lr) {
  validate_bundle(lr);
  auto [ainv_b, a_binv] = regularity_pair(lr);
  require_clean(check_bihom_lr(lr), "input is not a BiHom-LR algebra");
  const StructureTensor& dot = lr.op("dot");
  AlgebraBundle out = skeleton(lr, lr.name + "-post", Kind::BihomPostLie);
  out.ops.emplace("triangle", -dot);
  out.ops.emplace("bracket", tensor_from(lr.dim, lr.parameters, [&](int i, int j) {
                    return vec_sub(dot.on_basis(i, j),
                                   dot.eval(ainv_b.column(j), a_binv.column(i)));
                  }));
  return out;
}

AlgebraBundle tridend_to_post(const AlgebraBundle& td) {
  validate_bundle(td);
  auto [ainv_b, a_binv] = regularity_pair(td);
  require_clean(check_tridendriform(td), "input is not a BiHom-tri-dendriform algebra");
  const StructureTensor& prec = td.op("prec");
  const StructureTensor& succ = td.op("succ");
  const StructureTensor& dot = td.op("dot");
  AlgebraBundle out = skeleton(td, td.name + "-post", Kind::BihomPostLie);
  out.ops.emplace("bracket", tensor_from(td.dim, td.parameters, [&](int i, int j) {
                    return vec_sub(dot.on_basis(i, j),
                                   dot.eval(ainv_b.column(j), a_binv.column(i)));
                  }));
  out.ops.emplace("triangle", tensor_from(td.dim, td.parameters, [&](int i, int j) {
                    return vec_sub(succ.on_basis(i, j),
                                   prec.eval(ainv_b.column(j), a_binv.column(i)));
                  }));
  return out;
}

AlgebraBundle tridend_to_assoc(const AlgebraBundle& td) {
  validate_bundle(td);
  require_clean(check_tridendriform(td), "input is not a BiHom-tri-dendriform algebra");
  AlgebraBundle out = skeleton(td, td.name + "-assoc", Kind::BihomProduct);
  out.ops.emplace("dot", td.op("prec") + td.op("succ") + td.op("dot"));
  return out;
}

namespace {

AlgebraBundle induced_structure(const RepresentationBundle& r, const std::string& name,
                                const std::string& stem) {
  const AlgebraBundle& b = r.algebra;
  Scalar lambda = r.weight ? *r.weight : Scalar::zero(b.parameters);

  AlgebraBundle out;
  out.name = name;
  out.dim = r.vdim;
  out.basis = module_basis_names(b, r.vdim, stem);
  out.parameters = b.parameters;
  out.maps.emplace("alpha", r.phi);
  out.maps.emplace("beta", r.psi);
  out.kind = Kind::BihomPostLie;

  StructureTensor torsion(r.vdim, b.parameters);
  if (r.vbracket && !lambda.is_zero()) torsion = r.vbracket->scaled(lambda);
  out.ops.emplace("bracket", std::move(torsion));

  const MatrixS& T = *r.T;
  out.ops.emplace("triangle", tensor_from(r.vdim, b.parameters, [&](int i, int j) {
                    return r.rho_at(T.column(i)).column(j);
                  }));
  return out;
}

}  // namespace

AlgebraBundle o_operator_induced(const RepresentationBundle& r) {
  validate_bundle(r);
  require(r.T.has_value(), "no O-operator present");
  require_clean(check_o_operator(r), "T is not an O-operator of the stated weight");
  return induced_structure(r, r.algebra.name + "-o-induced", "v");
}

AlgebraBundle induced_on_image(const RepresentationBundle& r) {
  validate_bundle(r);
  require(r.T.has_value(), "no O-operator present");
  require(r.T->rank() == r.vdim, "T is not injective");
  require_clean(check_o_operator(r), "T is not an O-operator of the stated weight");
  // In the basis {T(v_j)} the transported structure constants coincide with
  // the induced ones on V, and alpha, beta restrict to phi, psi.
  return induced_structure(r, r.algebra.name + "-on-image", "Tv");
}

AlgebraBundle compatible_from_invertible_o(const RepresentationBundle& r) {
  validate_bundle(r);
  require(r.T.has_value(), "no O-operator present");
  const AlgebraBundle& b = r.algebra;
  require(r.vdim == b.dim, "T must be square");
  auto tinv = r.T->try_inverse();
  require(tinv.has_value(), "T is singular");
  require_clean(check_o_operator(r), "T is not an O-operator of the stated weight");
  Scalar lambda = r.weight ? *r.weight : Scalar::zero(b.parameters);

  AlgebraBundle out = skeleton(b, b.name + "-compatible", Kind::BihomPostLie);
  const MatrixS& T = *r.T;
  out.ops.emplace("bracket", tensor_from(b.dim, b.parameters, [&](int i, int j) {
                    if (!r.vbracket || lambda.is_zero())
                      return VectorS(static_cast<std::size_t>(b.dim), Scalar::zero(b.parameters));
                    VectorS w = r.vbracket->eval(tinv->column(i), tinv->column(j));
                    return vec_scale(lambda, T.apply(w));
                  }));
  out.ops.emplace("triangle", tensor_from(b.dim, b.parameters, [&](int i, int j) {
                    return T.apply(r.rho[static_cast<std::size_t>(i)].apply(tinv->column(j)));
                  }));

  // Certified post-condition: the sub-adjacent bracket of the output equals
  // the original bracket, tensor-exactly.
  StructureTensor sub = sub_adjacent_tensor(out);
  require(sub == b.op("bracket"), "compatibility identity failed");
  return out;
}

AlgebraBundle rota_baxter_induced(const AlgebraBundle& lie, const Scalar& weight) {
  validate_bundle(lie);
  require(lie.has_map("R"), "no Rota-Baxter map present");
  require_clean(check_rota_baxter(lie, weight),
                "R is not a Rota-Baxter operator of the stated weight");
  const StructureTensor& br = lie.op("bracket");
  const MatrixS& R = lie.map("R");

  AlgebraBundle out = skeleton(lie, lie.name + "-rb-post", Kind::BihomPostLie);
  out.ops.emplace("bracket", br.scaled(weight));
  out.ops.emplace("triangle", tensor_from(lie.dim, lie.parameters, [&](int i, int j) {
                    return br.eval(R.column(i), basis_vector(lie.dim, j, lie.parameters));
                  }));
  return out;
}

MatrixS splitting_rota_baxter(const AlgebraBundle& lie, const std::vector<int>& part1,
                              const std::vector<int>& part2, const Scalar& weight) {
  validate_bundle(lie);
  std::vector<int> seen(static_cast<std::size_t>(lie.dim), 0);
  for (int i : part1) {
    require(i >= 0 && i < lie.dim, "partition index out of range");
    ++seen[static_cast<std::size_t>(i)];
  }
  for (int i : part2) {
    require(i >= 0 && i < lie.dim, "partition index out of range");
    ++seen[static_cast<std::size_t>(i)];
  }
  require(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }),
          "index sets must partition the basis");

  const StructureTensor& br = lie.op("bracket");
  auto span_closed = [&](const std::vector<int>& part) {
    std::set<int> inside(part.begin(), part.end());
    for (int i : part)
      for (int j : part)
        for (int k = 0; k < lie.dim; ++k)
          if (!br.at(i, j, k).is_zero() && !inside.count(k)) return false;
    // alpha/beta-invariance of the span.
    for (const char* m : {"alpha", "beta"})
      for (int j : part)
        for (int k = 0; k < lie.dim; ++k)
          if (!lie.map(m).at(k, j).is_zero() && !inside.count(k)) return false;
    return true;
  };
  require(span_closed(part1), "first span is not a map-invariant subalgebra");
  require(span_closed(part2), "second span is not a map-invariant subalgebra");

  MatrixS R = MatrixS::zero(lie.dim, lie.dim, lie.parameters);
  for (int i : part2) R.at(i, i) = -weight;
  return R;
}

namespace {

// Shared bracket of the semidirect sum; the {u,v} term is added only when a
// module bracket participates.
StructureTensor semidirect_bracket(const AlgebraBundle& lie, const RepresentationBundle& r,
                                   bool with_vbracket) {
  auto [ainv_b, a_binv] = regularity_pair(lie);
  auto psi_inv = r.psi.try_inverse();
  require(psi_inv.has_value(), "psi is singular");
  require(r.phi.try_inverse().has_value(), "phi is singular");
  MatrixS phi_psiinv = r.phi * *psi_inv;
  const StructureTensor& br = lie.op("bracket");
  const int n = lie.dim, m = r.vdim;

  StructureTensor t(n + m, lie.parameters);
  auto put = [&](int p, int q, int offset, const VectorS& v) {
    for (std::size_t k = 0; k < v.size(); ++k) t.set(p, q, offset + static_cast<int>(k), v[k]);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) put(i, j, 0, br.on_basis(i, j));
  for (int i = 0; i < n; ++i) {
    const MatrixS& rho_i = r.rho[static_cast<std::size_t>(i)];
    for (int j = 0; j < m; ++j) put(i, n + j, n, rho_i.column(j));
  }
  for (int j = 0; j < n; ++j) {
    MatrixS act = r.rho_at(ainv_b.column(j)) * phi_psiinv;
    for (int i = 0; i < m; ++i) put(n + i, j, n, vec_neg(act.column(i)));
  }
  if (with_vbracket)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) put(n + i, n + j, n, r.vbracket->on_basis(i, j));
  return t;
}

AlgebraBundle semidirect_skeleton(const AlgebraBundle& lie, const RepresentationBundle& r,
                                  const std::string& name, Kind kind) {
  AlgebraBundle out;
  out.name = name;
  out.dim = lie.dim + r.vdim;
  out.basis = lie.basis;
  for (const auto& s : module_basis_names(lie, r.vdim, "v")) out.basis.push_back(s);
  out.parameters = lie.parameters;
  out.maps.emplace("alpha", block_diag(lie.alpha(), r.phi, lie.parameters));
  out.maps.emplace("beta", block_diag(lie.beta(), r.psi, lie.parameters));
  out.kind = kind;
  return out;
}

}  // namespace

AlgebraBundle semidirect_lie(const AlgebraBundle& lie, const RepresentationBundle& r) {
  validate_bundle(lie);
  validate_bundle(r);
  require(r.algebra.dim == lie.dim, "representation is over a different algebra dimension");
  AlgebraBundle out = semidirect_skeleton(lie, r, lie.name + "-semidirect", Kind::BihomLie);
  out.ops.emplace("bracket", semidirect_bracket(lie, r, false));
  return out;
}

AlgebraBundle semidirect_module_algebra(const AlgebraBundle& lie, const RepresentationBundle& r) {
  validate_bundle(lie);
  validate_bundle(r);
  require(r.algebra.dim == lie.dim, "representation is over a different algebra dimension");
  require(r.vbracket.has_value(), "module bracket required");
  require(!r.psi.determinant().is_zero() && !r.phi.determinant().is_zero(),
          "phi or psi is singular");
  AlgebraBundle out =
      semidirect_skeleton(lie, r, lie.name + "-semidirect-module", Kind::BihomLie);
  out.ops.emplace("bracket", semidirect_bracket(lie, r, true));
  return out;
}

AlgebraBundle semidirect_post_lie(const AlgebraBundle& post, const RepresentationBundle& r) {
  validate_bundle(post);
  validate_bundle(r);
  require(r.algebra.dim == post.dim, "representation is over a different algebra dimension");
  require(r.mu.has_value() && r.nu.has_value(), "mu and nu required");
  AlgebraBundle out =
      semidirect_skeleton(post, r, post.name + "-semidirect-post", Kind::BihomPostLie);
  out.ops.emplace("bracket", semidirect_bracket(post, r, false));

  const StructureTensor& tr = post.op("triangle");
  const int n = post.dim, m = r.vdim;
  StructureTensor t(n + m, post.parameters);
  auto put = [&](int p, int q, int offset, const VectorS& v) {
    for (std::size_t k = 0; k < v.size(); ++k) t.set(p, q, offset + static_cast<int>(k), v[k]);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) put(i, j, 0, tr.on_basis(i, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) put(i, n + j, n, (*r.mu)[static_cast<std::size_t>(i)].column(j));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) put(n + i, j, n, (*r.nu)[static_cast<std::size_t>(j)].column(i));
  out.ops.emplace("triangle", std::move(t));
  return out;
}

namespace {

void require_twist_intertwining(const RepresentationBundle& r,
                                const std::vector<MatrixS>& family, const char* famname,
                                const MatrixS& a, const MatrixS& b, const MatrixS& f,
                                const MatrixS& g) {
  auto at = [&](const VectorS& x) {
    MatrixS acc = MatrixS::zero(r.vdim, r.vdim, r.algebra.parameters);
    for (std::size_t k = 0; k < family.size(); ++k)
      if (!x[k].is_zero()) acc = acc + family[k].scaled(x[k]);
    return acc;
  };
  for (int i = 0; i < r.algebra.dim; ++i) {
    const MatrixS& fam_i = family[static_cast<std::size_t>(i)];
    require((at(a.column(i)) * f - f * fam_i).is_zero(),
            std::string(famname) + " does not intertwine with the first twist pair");
    require((at(b.column(i)) * g - g * fam_i).is_zero(),
            std::string(famname) + " does not intertwine with the second twist pair");
  }
}

std::vector<MatrixS> twist_family(const RepresentationBundle& r,
                                  const std::vector<MatrixS>& family, const MatrixS& a,
                                  const MatrixS& g) {
  auto at = [&](const VectorS& x) {
    MatrixS acc = MatrixS::zero(r.vdim, r.vdim, r.algebra.parameters);
    for (std::size_t k = 0; k < family.size(); ++k)
      if (!x[k].is_zero()) acc = acc + family[k].scaled(x[k]);
    return acc;
  };
  std::vector<MatrixS> out;
  for (int i = 0; i < r.algebra.dim; ++i) out.push_back(at(a.column(i)) * g);
  return out;
}

}  // namespace

RepresentationBundle twist_lie_representation(const RepresentationBundle& r, const MatrixS& a,
                                              const MatrixS& b, const MatrixS& f,
                                              const MatrixS& g) {
  validate_bundle(r);
  require(maps_commute(f, g), "module twist maps do not commute");
  require_twist_intertwining(r, r.rho, "rho", a, b, f, g);
  AlgebraBundle twisted = twist_lie(r.algebra, a, b);
  RepresentationBundle out(std::move(twisted), r.vdim, twist_family(r, r.rho, a, g), f, g);
  return out;
}

RepresentationBundle twist_post_lie_representation(const RepresentationBundle& r,
                                                   const MatrixS& a, const MatrixS& b,
                                                   const MatrixS& f, const MatrixS& g) {
  validate_bundle(r);
  require(r.mu.has_value() && r.nu.has_value(), "mu and nu required");
  require(maps_commute(f, g), "module twist maps do not commute");
  require_twist_intertwining(r, r.rho, "rho", a, b, f, g);
  require_twist_intertwining(r, *r.mu, "mu", a, b, f, g);
  require_twist_intertwining(r, *r.nu, "nu", a, b, f, g);
  AlgebraBundle twisted = twist_post_lie(r.algebra, a, b);
  RepresentationBundle out(std::move(twisted), r.vdim, twist_family(r, r.rho, a, g), f, g);
  out.mu = twist_family(r, *r.mu, a, g);
  out.nu = twist_family(r, *r.nu, a, g);
  return out;
}

RepresentationBundle pi_representation(const RepresentationBundle& r) {
  validate_bundle(r);
  require(r.mu.has_value() && r.nu.has_value(), "mu and nu required");
  require_clean(check_post_lie_representation(r), "input is not a post-Lie representation");
  auto phi_inv = r.phi.try_inverse();
  require(phi_inv.has_value(), "phi is singular");
  auto [ainv_b, a_binv] = regularity_pair(r.algebra);
  MatrixS phiinv_psi = *phi_inv * r.psi;

  std::vector<MatrixS> pi;
  for (int i = 0; i < r.algebra.dim; ++i)
    pi.push_back(r.rho[static_cast<std::size_t>(i)] + (*r.mu)[static_cast<std::size_t>(i)] -
                 r.nu_at(a_binv.column(i)) * phiinv_psi);
  return RepresentationBundle(sub_adjacent(r.algebra), r.vdim, std::move(pi), r.phi, r.psi);
}

std::vector<RepresentationBundle> canonical_representations(const AlgebraBundle& b) {
  validate_bundle(b);
  require(b.kind == Kind::BihomLie || b.kind == Kind::BihomPostLie,
          "canonical representations exist for bihom-lie and bihom-post-lie bundles");
  std::vector<RepresentationBundle> out;
  if (b.kind == Kind::BihomLie) {
    out.push_back(adjoint_module(b));
    return out;
  }

  AlgebraBundle torsion = b;
  torsion.ops.erase("triangle");
  torsion.kind = Kind::BihomLie;
  out.push_back(adjoint_module(torsion));

  const StructureTensor& tr = b.op("triangle");
  auto family_from = [&](const StructureTensor& t, bool flip) {
    std::vector<MatrixS> fam;
    for (int i = 0; i < b.dim; ++i) {
      MatrixS m = MatrixS::zero(b.dim, b.dim, b.parameters);
      for (int j = 0; j < b.dim; ++j)
        for (int k = 0; k < b.dim; ++k) m.at(k, j) = flip ? t.at(j, i, k) : t.at(i, j, k);
      fam.push_back(std::move(m));
    }
    return fam;
  };

  RepresentationBundle adj_post(b, b.dim, family_from(b.op("bracket"), false), b.alpha(),
                                b.beta());
  adj_post.mu = family_from(tr, false);  // L(x)y = x |> y
  adj_post.nu = family_from(tr, true);   // R(x)y = y |> x
  out.push_back(std::move(adj_post));

  if (check_regular(b)) {
    RepresentationBundle left(sub_adjacent(b), b.dim, family_from(tr, false), b.alpha(),
                              b.beta());
    out.push_back(std::move(left));
  }
  return out;
}

}  // namespace bihom
