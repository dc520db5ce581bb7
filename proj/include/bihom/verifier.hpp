#pragma once

#include "bihom/bundle.hpp"

namespace bihom {

/// Axiom failures are data, never exceptions: each checker returns an
/// itemized ViolationReport with deterministic, lexicographically ordered
/// witnesses (at most options.witness_cap per axiom, all counted).
/// Exceptions are reserved for shape/precondition errors.

/// alpha-beta commutation and multiplicativity of both maps over every
/// operation in the bundle; for product bundles also the BiHom-associativity
/// residual alpha(x)*(y*z) - (x*y)*beta(z).
ViolationReport check_structure_maps(const AlgebraBundle& b, const CheckOptions& opt = {});

/// Structure maps + BiHom-skew-symmetry + the BiHom-Jacobi cyclic identity.
ViolationReport check_bihom_lie(const AlgebraBundle& b, const CheckOptions& opt = {});

/// check_bihom_lie on the torsion plus the two twisted compatibility
/// conditions between torsion and connection.
ViolationReport check_bihom_post_lie(const AlgebraBundle& b, const CheckOptions& opt = {});

ViolationReport check_bihom_lr(const AlgebraBundle& b, const CheckOptions& opt = {});

ViolationReport check_tridendriform(const AlgebraBundle& b, const CheckOptions& opt = {});

ViolationReport check_lie_representation(const RepresentationBundle& r,
                                         const CheckOptions& opt = {});

ViolationReport check_module_k_algebra(const RepresentationBundle& r,
                                       const CheckOptions& opt = {});

/// Intertwining T phi = alpha T, T psi = beta T, plus the weighted
/// O-operator identity on all module basis pairs (weight 0 is the plain
/// instance). Throws PreconditionError when phi or psi is singular.
ViolationReport check_o_operator(const RepresentationBundle& r, const CheckOptions& opt = {});

/// A Rota-Baxter operator of weight w is an O-operator of weight w on the
/// adjoint module K-algebra (rho = ad, module bracket = bracket, phi = alpha,
/// psi = beta). Also checks R alpha = alpha R and R beta = beta R. For
/// non-regular maps only weight 0 is checkable (inverse-free form).
ViolationReport check_rota_baxter(const AlgebraBundle& b, const Scalar& weight,
                                  const CheckOptions& opt = {});

ViolationReport check_post_lie_representation(const RepresentationBundle& r,
                                              const CheckOptions& opt = {});

/// True iff det(alpha) and det(beta) are nonzero rational functions.
bool check_regular(const AlgebraBundle& b);

/// Dispatches to the checker matching the bundle's kind tag.
ViolationReport check_by_kind(const AlgebraBundle& b, const CheckOptions& opt = {});

/// The adjoint module K-algebra (V = A, rho = ad, vbracket = bracket,
/// phi = alpha, psi = beta). Shared by checks, constructions and tests.
RepresentationBundle adjoint_module(const AlgebraBundle& b);

}  // namespace bihom
