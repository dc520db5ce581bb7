#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bihom/tensor.hpp"

namespace bihom {

/// Structure-kind tag. The operation-name vocabulary is closed:
/// ops in {bracket, triangle, dot, prec, succ}, maps in {alpha, beta, R}.
enum class Kind {
  BihomLie,
  BihomPostLie,
  BihomLr,
  BihomTridendriform,
  BihomProduct,
};

std::string kind_name(Kind k);
std::optional<Kind> kind_from_name(const std::string& name);

/// A finite-dimensional algebra given by structure constants over
/// Q(parameters), together with its named structure maps.
struct AlgebraBundle {
  std::string name;
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<std::string> parameters;
  std::map<std::string, StructureTensor> ops;
  std::map<std::string, MatrixS> maps;
  Kind kind = Kind::BihomLie;

  const StructureTensor& op(const std::string& key) const;
  const MatrixS& map(const std::string& key) const;
  bool has_op(const std::string& key) const { return ops.count(key) > 0; }
  bool has_map(const std::string& key) const { return maps.count(key) > 0; }
  const MatrixS& alpha() const { return map("alpha"); }
  const MatrixS& beta() const { return map("beta"); }
};

/// A representation-side bundle: matrix-valued maps rho (and optionally mu,
/// nu) indexed by the algebra basis, commuting maps phi/psi on V, an optional
/// bracket on V, and an optional linear map T: V -> A with a weight.
struct RepresentationBundle {
  AlgebraBundle algebra;
  int vdim = 0;
  std::vector<MatrixS> rho;
  std::optional<std::vector<MatrixS>> mu;
  std::optional<std::vector<MatrixS>> nu;
  MatrixS phi;
  MatrixS psi;
  std::optional<StructureTensor> vbracket;
  std::optional<MatrixS> T;  // dim x vdim, column j = T(v_j)
  std::optional<Scalar> weight;

  RepresentationBundle(AlgebraBundle alg, int vdim_, std::vector<MatrixS> rho_, MatrixS phi_,
                       MatrixS psi_)
      : algebra(std::move(alg)),
        vdim(vdim_),
        rho(std::move(rho_)),
        phi(std::move(phi_)),
        psi(std::move(psi_)) {}

  /// rho extended linearly to an arbitrary algebra element.
  MatrixS rho_at(const VectorS& x) const;
  MatrixS mu_at(const VectorS& x) const;
  MatrixS nu_at(const VectorS& x) const;
};

/// Checks every shape invariant; throws ShapeError listing all violations.
void validate_bundle(const AlgebraBundle& b);
void validate_bundle(const RepresentationBundle& r);

/// One failing tuple: the basis indices it was found at and the residual
/// coordinates in the ambient basis.
struct Witness {
  std::vector<int> indices;
  VectorS residual;
};

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  long total_violations = 0;  // counted past the witness cap as well
  std::vector<Witness> witnesses;
};

/// Itemized axiom results for one structure; failures carry witnesses in
/// lexicographic index order, capped but counted in full.
struct ViolationReport {
  std::string structure;
  std::vector<AxiomResult> axioms;

  bool ok() const;
  const AxiomResult* find(const std::string& axiom) const;
  /// Appends o's entries under "prefix/axiom-id".
  void absorb(const ViolationReport& o, const std::string& prefix);
};

struct CheckOptions {
  int witness_cap = 16;
  bool fail_fast = false;
};

}  // namespace bihom
