#pragma once

#include "bihom/verifier.hpp"

namespace bihom {

/// Every construction re-verifies its stated preconditions (never trusting a
/// bundle's kind tag) and throws PreconditionError when they fail. Inputs are
/// never mutated; outputs are fresh bundles. Whether an *output* satisfies
/// its target axiom system is the caller's question, answered by the
/// verifier; constructions only certify what their contracts promise.

/// Classical Lie algebra + two commuting morphisms a, b:
/// bracket'(x,y) = [a(x), b(y)], structure maps a, b.
AlgebraBundle twist_lie(const AlgebraBundle& lie, const MatrixS& a, const MatrixS& b);

/// Classical post-Lie algebra, both operations twisted:
/// [x,y]' = [a(x),b(y)] and x |>' y = a(x) |> b(y).
AlgebraBundle twist_post_lie(const AlgebraBundle& post, const MatrixS& a, const MatrixS& b);

/// Connection x |> y = [y,x] over the given torsion. The output is *checked*
/// per instance by check_bihom_post_lie; no global claim is made.
AlgebraBundle flip_post_lie(const AlgebraBundle& lie);

/// {x,y} = x|>y - alpha^-1 beta(y) |> alpha beta^-1(x) + [x,y]; regular input.
AlgebraBundle sub_adjacent(const AlgebraBundle& post);

/// x o y = x|>y + (1/2)[x,y]; kind bihom-product.
AlgebraBundle admissible_product(const AlgebraBundle& post);

/// [x,y] = x.y - alpha^-1 beta(y) . alpha beta^-1(x) from a product bundle.
AlgebraBundle commutator_bihom_lie(const AlgebraBundle& prod);

/// Torsion -> -torsion, connection -> connection + torsion. Involution with
/// the same sub-adjacent algebra.
AlgebraBundle black_transform(const AlgebraBundle& post);

/// The double bracket on A x A:
/// [[(a,x),(b,y)]] = ({a,b}, a|>y - alpha^-1 beta(b) |> alpha beta^-1(x) + [x,y]).
AlgebraBundle double_bracket(const AlgebraBundle& post);

/// x |> y = -x.y, [x,y] = x.y - alpha^-1 beta(y) . alpha beta^-1(x).
AlgebraBundle lr_to_post(const AlgebraBundle& lr);

/// [x,y] from the dot commutator, x |> y = x succ y - alpha^-1 beta(y) prec alpha beta^-1(x).
AlgebraBundle tridend_to_post(const AlgebraBundle& td);

/// Total product prec + succ + dot; kind bihom-product (BiHom-associativity
/// is part of its structure-map check).
AlgebraBundle tridend_to_assoc(const AlgebraBundle& td);

/// From an O-operator T of weight lambda: torsion {u,v} = lambda [u,v]_V and
/// connection u |> v = rho(T(u)) v, on V with maps phi, psi.
AlgebraBundle o_operator_induced(const RepresentationBundle& r);

/// The same structure transported onto the subspace T(V) of A in the basis
/// {T(v_j)}; requires injective T (quotients are out of scope).
AlgebraBundle induced_on_image(const RepresentationBundle& r);

/// For invertible T: {x,y} = lambda T([T^-1 x, T^-1 y]_V),
/// x |> y = T(rho(x) T^-1(y)) on A. The compatibility identity
/// x|>y - alpha^-1 beta(y)|>alpha beta^-1(x) + {x,y} = [x,y] is certified
/// tensor-exactly before returning.
AlgebraBundle compatible_from_invertible_o(const RepresentationBundle& r);

/// From a Rota-Baxter operator R of the given weight:
/// {x,y} = weight*[x,y], x |> y = [R(x), y].
AlgebraBundle rota_baxter_induced(const AlgebraBundle& lie, const Scalar& weight);

/// R = -weight * (projection onto span I2 along span I1). Both spans must be
/// bracket-closed and alpha/beta-invariant (verified).
MatrixS splitting_rota_baxter(const AlgebraBundle& lie, const std::vector<int>& part1,
                              const std::vector<int>& part2, const Scalar& weight);

/// [x+u, y+v] = [x,y] + rho(x)v - rho(alpha^-1 beta(y)) phi psi^-1 u on A + V.
/// Representation validity is deliberately NOT a precondition: the semidirect
/// check is the two-way test of it.
AlgebraBundle semidirect_lie(const AlgebraBundle& lie, const RepresentationBundle& r);

/// As semidirect_lie plus the {u,v} term from the module bracket.
AlgebraBundle semidirect_module_algebra(const AlgebraBundle& lie, const RepresentationBundle& r);

/// Bracket as semidirect_lie over the torsion and
/// (x+u) |> (y+v) = x|>y + mu(x)v + nu(y)u.
AlgebraBundle semidirect_post_lie(const AlgebraBundle& post, const RepresentationBundle& r);

/// Twisted module: rho~(x) = rho(a(x)) o g over the twisted algebra, with
/// phi = f, psi = g.
RepresentationBundle twist_lie_representation(const RepresentationBundle& r, const MatrixS& a,
                                              const MatrixS& b, const MatrixS& f,
                                              const MatrixS& g);

/// Same twist applied to rho, mu and nu over the twisted post-Lie algebra.
RepresentationBundle twist_post_lie_representation(const RepresentationBundle& r,
                                                   const MatrixS& a, const MatrixS& b,
                                                   const MatrixS& f, const MatrixS& g);

/// pi(x) = rho(x) + mu(x) - nu(alpha beta^-1(x)) phi^-1 psi, a representation
/// of the sub-adjacent algebra.
RepresentationBundle pi_representation(const RepresentationBundle& r);

/// The canonical representations a bundle carries: the adjoint module for a
/// BiHom-Lie algebra; for a BiHom-post-Lie algebra additionally the adjoint
/// post-representation (ad, L, R) and, when regular, (A, L, alpha, beta) over
/// the sub-adjacent algebra.
std::vector<RepresentationBundle> canonical_representations(const AlgebraBundle& b);

}  // namespace bihom
