#pragma once

#include <vector>

#include "finitop/kinds.hpp"
#include "finitop/space.hpp"

// Serial implementations that transcribe each definition literally: closures
// intersect closed supersets, interiors unite open subsets, cluster-point
// operators quantify over neighbourhoods point by point. Slow (exponential in
// n per query) and kept for cross-checking the tabulated Lattice.

namespace finitop::reference {

Mask closure(const Space& s, Mask a);
Mask interior(const Space& s, Mask a);
Mask delta_closure(const Space& s, Mask a);
Mask delta_interior(const Space& s, Mask a);

bool is_kind_open(const Space& s, Kind k, Mask a);
/// Intersection of all kind-closed supersets of a.
Mask kind_closure(const Space& s, Kind k, Mask a);
/// Union of all kind-open subsets of a.
Mask kind_interior(const Space& s, Kind k, Mask a);

/// Points x such that every base-open U ∋ x has base-cl(U) ∩ a ≠ ∅.
Mask theta_closure(const Space& s, ThetaKind tk, Mask a);
/// Points x with some base-open U ∋ x and base-cl(U) ⊆ a.
Mask theta_interior(const Space& s, ThetaKind tk, Mask a);

/// Ascending members of the kind-open family.
std::vector<Mask> kind_family(const Space& s, Kind k);
/// Ascending A with complement(A) = theta_closure(complement(A)).
std::vector<Mask> theta_open_family(const Space& s, ThetaKind tk);

}  // namespace finitop::reference
