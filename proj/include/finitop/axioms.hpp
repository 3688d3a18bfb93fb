#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "finitop/lattice.hpp"
#include "finitop/verdict.hpp"

namespace finitop {

/// Which family separates a closed set from a point.
enum class RegularityVariant {
    Classical,   // open sets
    P,           // preopen
    S,           // semiopen
    B,           // b-open
    Beta,        // β-open
    BetaTheta,   // β-θ-open
    E,           // e-open
    EStar,       // e*-open
    EStarTheta,  // e*-θ-open
    PairETheta,  // e*-θ-regular sets separated from points by open sets
};

inline constexpr RegularityVariant all_regularity_variants[] = {
    RegularityVariant::Classical, RegularityVariant::P,         RegularityVariant::S,
    RegularityVariant::B,         RegularityVariant::Beta,      RegularityVariant::BetaTheta,
    RegularityVariant::E,         RegularityVariant::EStar,     RegularityVariant::EStarTheta,
    RegularityVariant::PairETheta,
};

enum class NormalityVariant {
    Classical,   // disjoint closed sets, open separators
    EStarTheta,  // disjoint closed sets, e*-θ-open separators
    PairStar,    // disjoint e*-θ-closed sets, e*-θ-open separators
};

inline constexpr NormalityVariant all_normality_variants[] = {
    NormalityVariant::Classical, NormalityVariant::EStarTheta, NormalityVariant::PairStar};

enum class NormalityTheorem { Thm9, Thm10, Thm00 };

std::string property_id(RegularityVariant v);  // "regular.estar_theta"
std::string property_id(NormalityVariant v);   // "normal.pair_star"

Verdict regularity(const Lattice& lat, RegularityVariant v);
Verdict normality(const Lattice& lat, NormalityVariant v);

/// e*-cl_θ maps e*-θ-open sets to e*-θ-open sets.
Verdict ed_check(const Lattice& lat);
/// Every open set contains the e*-θ-closure of each of its singletons.
Verdict r0_check(const Lattice& lat);

/// e*θ-regular ∧ (e*,θ)-regular ∧ ED ⇒ regular. Vacuous unless all three
/// hypotheses hold.
Verdict composite_thm3(const Lattice& lat);
/// e*θ-normal ∧ e*θ-R0 ⇒ e*θ-regular.
Verdict normal_r0_theorem(const Lattice& lat);

/// Five characterizations of e*θ-regularity.
ClauseVector regularity_clauses_thm1(const Lattice& lat);
/// Two characterizations of (e*,θ)-regularity.
ClauseVector regularity_clauses_thm2(const Lattice& lat);
/// Classical regularity by separation vs. by shrinking neighbourhoods.
ClauseVector regularity_clauses_lemma2(const Lattice& lat);
/// Thm9: 3 clauses, Thm10: 4 clauses, Thm00: 6 clauses.
ClauseVector normality_clauses(const Lattice& lat, NormalityTheorem t);
/// e*θ-T0, e*θ-T1, e*θ-T2, e*-T2, disjoint e*-closures, disjoint e*-regular
/// neighbourhoods, disjoint e*-θ-closures.
ClauseVector separation_axioms(const Lattice& lat);

std::string_view theorem_id(NormalityTheorem t);  // "thm9", "thm10", "thm00"

/// Pairs of regularity variants whose families are nested on this space but
/// whose verdicts are not; empty on a correct implementation.
std::vector<std::string> refinement_violations(const Lattice& lat);

/// An expected implication between space properties.
struct Arrow {
    std::vector<std::string> premises;  // conjunction
    std::string conclusion;
    std::string anchor;
    std::string note;
};

/// The static list of implications the zoo scanner must never refute.
std::vector<Arrow> implication_expectations();

/// Stable ids of every space-level property evaluate_property understands.
const std::vector<std::string>& property_ids();
/// Throws TopologyError(Malformed) for an unknown id.
Verdict evaluate_property(const Lattice& lat, const std::string& id);

/// Re-checks a failing verdict's witness against the defining predicate with
/// a naive evaluator. True iff the failure is reproduced.
bool replay_witness(const Lattice& lat, const Verdict& v);

/// True if some U ⊇ a and V ⊇ b in fam are disjoint.
bool exists_disjoint(const Family& fam, Mask a, Mask b);

}  // namespace finitop
