#pragma once

#include "bihom/bundle.hpp"

namespace bihom {
namespace catalog {

/// The sl(2) family over Q(lambda, gamma): basis (X, Y, H), twisted bracket
/// [a,b] = [alpha0(a), beta0(b)] with alpha0 = diag(lambda^2, 1/lambda^2, 1),
/// beta0 = diag(gamma^2, 1/gamma^2, 1), plus the Rota-Baxter map
/// R = diag(0, 4, 2). Derived from the classical table, not hard-coded.
AlgebraBundle sl2_bihom();

/// rota_baxter_induced(sl2_bihom(), -4). The catalog stores no independent
/// table; published values become assertions elsewhere.
AlgebraBundle sl2_post_lie();

/// Two-dimensional tri-dendriform algebra over Q(a):
/// e2<e2 = e2>e2 = a e1, e2.e2 = -a e1; alpha(e2) = e1+e2, beta(e2) = 2e1+e2.
AlgebraBundle tridend_2dim();

// Classical seeds (alpha = beta = id), used as twist/splitting inputs. A
// parameter list may be supplied so twisted descendants can be symbolic.

AlgebraBundle sl2_classical(std::vector<std::string> params = {});
AlgebraBundle heisenberg3(std::vector<std::string> params = {});
AlgebraBundle nonabelian2(std::vector<std::string> params = {});
AlgebraBundle abelian(int dim, std::vector<std::string> params = {});

/// Catalog names exposed through the CLI.
std::vector<std::string> names();

/// Looks up sl2-bihom / sl2-post-lie / tridend-2dim; throws PreconditionError
/// for unknown names (splitting-rb is assembled by the CLI itself).
AlgebraBundle by_name(const std::string& name);

}  // namespace catalog
}  // namespace bihom
