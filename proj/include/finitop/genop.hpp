#pragma once

#include <array>
#include <variant>

#include "finitop/core.hpp"
#include "finitop/kinds.hpp"
#include "finitop/verdict.hpp"

namespace finitop {

SetFamily open_family(const Space& s, Kind k);
Subset kind_closure(const Space& s, Kind k, const Subset& a);
Subset kind_interior(const Space& s, Kind k, const Subset& a);

Subset theta_closure(const Space& s, ThetaKind tk, const Subset& a);
Subset theta_interior(const Space& s, ThetaKind tk, const Subset& a);

/// Members computed through the θ-closure of complements; cross-checked
/// against the θ-interior fixed points before returning.
SetFamily theta_open_family(const Space& s, ThetaKind tk);
SetFamily theta_closed_family(const Space& s, ThetaKind tk);

/// Sets that are simultaneously open and closed in the given sense.
struct EStarTag {};
inline constexpr EStarTag estar_tag{};
SetFamily regular_sets(const Space& s, ThetaKind tk);
SetFamily regular_sets(const Space& s, EStarTag);

SetFamily g_closed_family(const Space& s, GVariant v);
SetFamily g_open_family(const Space& s, GVariant v);

/// Decides g-openness of a through its closed-set characterization
/// (F ⊆ e*-int_θ(A) for every closed, resp. e*-θ-closed, F ⊆ A). The
/// verdict's witness, on failure, is the offending F.
Verdict g_open_check(const Space& s, GVariant v, const Subset& a);
Verdict g_open_check(const Lattice& lat, GVariant v, Mask a);

/// The ten basic properties of the e*-θ-closure, evaluated at the subsets a
/// and b; entry i-1 is clause i. Clause 3 is tested on the chains
/// a∩b ⊆ a ⊆ a∪b, clauses 7 and 8 on the pair {a, b} (after replacing each by
/// its e*-θ-closure, resp. e*-θ-interior, so the hypothesis holds), and
/// clause 10 against a pointwise evaluation of the interior.
std::array<bool, 10> lemma1_clauses(const Lattice& lat, Mask a, Mask b);

/// "lemma1" verdict for one instance; the witness names the failing clauses.
Verdict lemma1_check(const Lattice& lat, Mask a, Mask b);

/// Every clause at every pair of subsets, plus the whole-family folds for
/// clauses 7 and 8.
Verdict lemma1_exhaustive(const Lattice& lat);

}  // namespace finitop
