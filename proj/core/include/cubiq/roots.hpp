#pragma once

#include <utility>
#include <vector>

#include "cubiq/poly.hpp"
#include "cubiq/quadext.hpp"
#include "cubiq/rational.hpp"

namespace cubiq {

/// Squarefree decomposition p = prod f_i^i over Q (Yun); returned factors are
/// integer-primitive with positive multiplicity, constants dropped.
std::vector<std::pair<Poly<Rat>, int>> squarefree_factors(const Poly<Rat>& p);

/// All rational roots of p with multiplicity, by divisor search on the
/// integer-primitive form.
std::vector<std::pair<Rat, int>> rational_roots(const Poly<Rat>& p);

/// Every root of p with multiplicity, resolved over Q or quadratic
/// extensions of Q: rational roots are extracted first, what remains is
/// split with the quadratic formula (and, for squarefree quartics, the
/// resolvent-cubic factorization into two rational quadratics). A remaining
/// factor of degree >= 3 irreducible over Q throws UnresolvableFactor.
std::vector<std::pair<QuadExt, int>> roots_over_quadratics(const Poly<Rat>& p);

}  // namespace cubiq
