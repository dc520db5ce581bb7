#include "bihom/bundle.hpp"

#include <algorithm>
#include <set>

#include "bihom/errors.hpp"

namespace bihom {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::BihomLie:
      return "bihom-lie";
    case Kind::BihomPostLie:
      return "bihom-post-lie";
    case Kind::BihomLr:
      return "bihom-lr";
    case Kind::BihomTridendriform:
      return "bihom-tridendriform";
    case Kind::BihomProduct:
      return "bihom-product";
  }
  return "?";
}

std::optional<Kind> kind_from_name(const std::string& name) {
  for (Kind k : {Kind::BihomLie, Kind::BihomPostLie, Kind::BihomLr, Kind::BihomTridendriform,
                 Kind::BihomProduct})
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

const StructureTensor& AlgebraBundle::op(const std::string& key) const {
  auto it = ops.find(key);
  if (it == ops.end()) throw ShapeError({"bundle '" + name + "' has no operation '" + key + "'"});
  return it->second;
}

const MatrixS& AlgebraBundle::map(const std::string& key) const {
  auto it = maps.find(key);
  if (it == maps.end()) throw ShapeError({"bundle '" + name + "' has no map '" + key + "'"});
  return it->second;
}

namespace {

MatrixS combination(const std::vector<MatrixS>& mats, const VectorS& x, int vdim,
                    const std::vector<std::string>& params) {
  MatrixS acc = MatrixS::zero(vdim, vdim, params);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (x[k].is_zero()) continue;
    acc = acc + mats[k].scaled(x[k]);
  }
  return acc;
}

}  // namespace

MatrixS RepresentationBundle::rho_at(const VectorS& x) const {
  return combination(rho, x, vdim, algebra.parameters);
}

MatrixS RepresentationBundle::mu_at(const VectorS& x) const {
  return combination(mu.value(), x, vdim, algebra.parameters);
}

MatrixS RepresentationBundle::nu_at(const VectorS& x) const {
  return combination(nu.value(), x, vdim, algebra.parameters);
}

namespace {

const std::set<std::string> kOpVocabulary = {"bracket", "triangle", "dot", "prec", "succ"};
const std::set<std::string> kMapVocabulary = {"alpha", "beta", "R"};

std::vector<std::string> required_ops(Kind k) {
  switch (k) {
    case Kind::BihomLie:
      return {"bracket"};
    case Kind::BihomPostLie:
      return {"bracket", "triangle"};
    case Kind::BihomLr:
      return {"dot"};
    case Kind::BihomTridendriform:
      return {"prec", "succ", "dot"};
    case Kind::BihomProduct:
      return {"dot"};
  }
  return {};
}

}  // namespace

void validate_bundle(const AlgebraBundle& b) {
  std::vector<std::string> errs;
  if (b.dim <= 0) errs.push_back("dimension must be positive");
  if (static_cast<int>(b.basis.size()) != b.dim)
    errs.push_back("basis has " + std::to_string(b.basis.size()) + " names, dimension is " +
                   std::to_string(b.dim));
  for (const auto& want : required_ops(b.kind))
    if (!b.has_op(want))
      errs.push_back("missing op '" + want + "' required for kind " + kind_name(b.kind));
  for (const auto& want : {std::string("alpha"), std::string("beta")})
    if (!b.has_map(want)) errs.push_back("missing map '" + want + "'");
  for (const auto& [key, t] : b.ops) {
    if (!kOpVocabulary.count(key)) errs.push_back("operation name '" + key + "' is not in the vocabulary");
    if (t.dim() != b.dim)
      errs.push_back("operation '" + key + "' has dimension " + std::to_string(t.dim()) +
                     ", bundle has " + std::to_string(b.dim));
  }
  for (const auto& [key, m] : b.maps) {
    if (!kMapVocabulary.count(key)) errs.push_back("map name '" + key + "' is not in the vocabulary");
    if (m.rows() != b.dim || m.cols() != b.dim)
      errs.push_back("map '" + key + "' is " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", expected " + std::to_string(b.dim) + "x" +
                     std::to_string(b.dim));
  }
  if (!errs.empty()) throw ShapeError(std::move(errs));
}

void validate_bundle(const RepresentationBundle& r) {
  validate_bundle(r.algebra);
  std::vector<std::string> errs;
  if (r.vdim <= 0) errs.push_back("module dimension must be positive");
  auto check_family = [&](const char* name, const std::vector<MatrixS>& fam) {
    if (static_cast<int>(fam.size()) != r.algebra.dim)
      errs.push_back(std::string(name) + " has " + std::to_string(fam.size()) +
                     " matrices, algebra dimension is " + std::to_string(r.algebra.dim));
    for (const auto& m : fam)
      if (m.rows() != r.vdim || m.cols() != r.vdim)
        errs.push_back(std::string(name) + " entries must be " + std::to_string(r.vdim) + "x" +
                       std::to_string(r.vdim));
  };
  check_family("rho", r.rho);
  if (r.mu) check_family("mu", *r.mu);
  if (r.nu) check_family("nu", *r.nu);
  if (r.phi.rows() != r.vdim || r.phi.cols() != r.vdim) errs.push_back("phi must act on V");
  if (r.psi.rows() != r.vdim || r.psi.cols() != r.vdim) errs.push_back("psi must act on V");
  if (r.phi.rows() == r.vdim && r.psi.rows() == r.vdim && r.phi.cols() == r.vdim &&
      r.psi.cols() == r.vdim && !maps_commute(r.phi, r.psi))
    errs.push_back("phi psi do not commute");
  if (r.vbracket && r.vbracket->dim() != r.vdim)
    errs.push_back("vbracket dimension differs from module dimension");
  if (r.T && (r.T->rows() != r.algebra.dim || r.T->cols() != r.vdim))
    errs.push_back("T must be dim x vdim (columns are T(v_j) in the algebra basis)");
  if (!errs.empty()) throw ShapeError(std::move(errs));
}

bool ViolationReport::ok() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.passed; });
}

const AxiomResult* ViolationReport::find(const std::string& axiom) const {
  for (const auto& a : axioms)
    if (a.axiom == axiom) return &a;
  return nullptr;
}

void ViolationReport::absorb(const ViolationReport& o, const std::string& prefix) {
  for (const auto& a : o.axioms) {
    AxiomResult copy = a;
    if (!prefix.empty()) copy.axiom = prefix + "/" + a.axiom;
    axioms.push_back(std::move(copy));
  }
}

}  // namespace bihom
