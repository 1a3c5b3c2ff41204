// structure.hpp — dimension filtration Delta^0 >= Delta^1 >= ... >= Delta^n of
// a finitely presented module, pseudo-nullity, purity, and the height-one
// part of the support.
//
// Delta^q(M) is the largest submodule of grade >= q (equivalently, of
// dimension <= n - q).  It is computed as the b-torsion of M for
// b = intersection of ann Ext^i(M, A) over q <= i <= n: one saturation
// (N : b^inf) once the Ext annihilators are known.  The inclusion b-torsion
// <= Delta^q holds because codim supp Ext^i >= i; the reverse holds because a
// localization with Ext^i = 0 for all i >= q has depth > local dimension of
// any grade->=q submodule, which therefore dies there.
#pragma once

#include <cstdint>
#include <vector>

#include "iwa/factor.hpp"
#include "iwa/module.hpp"

namespace iwa {

// grade >= 2, i.e. no support in codimension <= 1.  The zero module counts.
bool is_pseudo_null(const ModulePresentation& M);

// Rows of A^g generating Delta^q(M) (their span contains the relations).
// q = 0 returns the identity rows; q > nvars returns the relations.
PolyMatrix delta_submodule(const ModulePresentation& M, std::uint32_t q);

// delta[q] = generators of Delta^q(M), for q = 0 .. nvars.
struct DimensionFiltration {
  std::vector<PolyMatrix> delta;
};
DimensionFiltration dimension_filtration(const ModulePresentation& M);

// Delta^1(M) and Delta^2(M) as modules in their own right (generators are
// the saturation rows not already in the relation span).
ModulePresentation torsion_submodule(const ModulePresentation& M);
ModulePresentation pseudo_null_submodule(const ModulePresentation& M);

// M nonzero of grade j is pure when Delta^{j+1}(M) = 0, i.e. every nonzero
// submodule has the same grade.  The zero module is pure vacuously.
bool is_pure(const ModulePresentation& M);

// The height-one primes in supp(M) for torsion M: monic irreducible f with
// (f) containing ann(M), sorted.  Throws std::invalid_argument when M has
// positive generic rank (the set would be infinite in spirit);
// std::runtime_error if factorization cannot certify the list.
std::vector<GradedPoly> height_one_support(const ModulePresentation& M);

} // namespace iwa
