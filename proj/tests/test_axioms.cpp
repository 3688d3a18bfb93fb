#include "doctest.h"

#include "finitop/axioms.hpp"
#include "finitop/error.hpp"
#include "finitop/reference.hpp"
#include "finitop/zoo.hpp"
#include "fixtures.hpp"

using namespace finitop;

namespace {

bool contains(const std::vector<Mask>& fam, Mask m) { return std::find(fam.begin(), fam.end(), m) != fam.end(); }

// Closed sets and points separated by disjoint members of fam, by brute force.
bool naive_regular(const Space& s, const std::vector<Mask>& fam) {
    for (Mask f : s.closeds()) {
        for (int x = 0; x < s.size(); ++x) {
            if (f >> x & 1U) continue;
            bool found = false;
            for (Mask u : fam) {
                for (Mask v : fam) {
                    if (is_subset(f, u) && (v >> x & 1U) && (u & v) == 0) found = true;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

bool naive_normal(const Space& s, const std::vector<Mask>& sort, const std::vector<Mask>& fam) {
    for (Mask a : sort) {
        for (Mask b : sort) {
            if ((a & b) != 0) continue;
            bool found = false;
            for (Mask u : fam) {
                for (Mask v : fam) {
                    if (is_subset(a, u) && is_subset(b, v) && (u & v) == 0) found = true;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

std::vector<Space> corpus() {
    std::vector<Space> out = enumerate_up_to(3, EnumerationMode::Labeled);
    for (std::uint64_t seed = 0; seed < 30; ++seed) out.push_back(random_space(4 + seed % 2, seed, 0.25));
    return out;
}

}  // namespace

TEST_CASE("first example: e*theta-regular but not beta-theta-regular") {
    const Lattice lat(fixtures::s1());
    CHECK(regularity(lat, RegularityVariant::EStarTheta).holds);
    const Verdict beta = regularity(lat, RegularityVariant::BetaTheta);
    CHECK_FALSE(beta.holds);
    REQUIRE(beta.witness);
    CHECK(replay_witness(lat, beta));
}

TEST_CASE("second example: e*theta-regular, not regular, not (e*,theta)-regular") {
    const Lattice lat(fixtures::s2());
    CHECK(regularity(lat, RegularityVariant::EStarTheta).holds);
    CHECK_FALSE(regularity(lat, RegularityVariant::Classical).holds);
    CHECK_FALSE(regularity(lat, RegularityVariant::PairETheta).holds);
}

TEST_CASE("third example: e*theta-normal but not normal") {
    const Lattice lat(fixtures::s3());
    CHECK(normality(lat, NormalityVariant::EStarTheta).holds);
    const Verdict v = normality(lat, NormalityVariant::Classical);
    CHECK_FALSE(v.holds);
    CHECK(replay_witness(lat, v));
}

TEST_CASE("property ids are stable strings") {
    CHECK(property_id(RegularityVariant::EStarTheta) == "regular.estar_theta");
    CHECK(property_id(NormalityVariant::PairStar) == "normal.pair_star");
    const auto& ids = property_ids();
    CHECK(std::find(ids.begin(), ids.end(), "sep.estar_theta_t2") != ids.end());
    CHECK_THROWS_AS(evaluate_property(Lattice(Space::discrete(2)), "regular.nope"), TopologyError);
}

TEST_CASE("regularity and normality agree with brute-force oracles") {
    for (const Space& s : corpus()) {
        const Lattice lat(s);
        CHECK(regularity(lat, RegularityVariant::Classical).holds == naive_regular(s, s.opens()));
        const auto etheta = reference::theta_open_family(s, ThetaKind::EStarTheta);
        CHECK(regularity(lat, RegularityVariant::EStarTheta).holds == naive_regular(s, etheta));
        const auto beta_theta = reference::theta_open_family(s, ThetaKind::BetaTheta);
        CHECK(regularity(lat, RegularityVariant::BetaTheta).holds == naive_regular(s, beta_theta));
        CHECK(normality(lat, NormalityVariant::Classical).holds == naive_normal(s, s.closeds(), s.opens()));
        CHECK(normality(lat, NormalityVariant::EStarTheta).holds == naive_normal(s, s.closeds(), etheta));
        std::vector<Mask> etheta_closed;
        for (Mask u : etheta) etheta_closed.push_back(~u & s.full());
        CHECK(normality(lat, NormalityVariant::PairStar).holds == naive_normal(s, etheta_closed, etheta));
        CHECK(contains(etheta, 0));
    }
}

TEST_CASE("every failing verdict carries a replayable witness") {
    for (const Space& s : corpus()) {
        const Lattice lat(s);
        for (const std::string& id : property_ids()) {
            const Verdict v = evaluate_property(lat, id);
            if (v.holds) continue;
            REQUIRE(v.witness);
            CHECK_MESSAGE(replay_witness(lat, v), id << " on " << canonical_form(s));
        }
    }
}

TEST_CASE("a witness that does not reproduce the failure is rejected") {
    const Lattice lat(fixtures::s1());
    Verdict v = regularity(lat, RegularityVariant::BetaTheta);
    REQUIRE(v.witness);
    Verdict forged = v;
    forged.property_id = property_id(RegularityVariant::EStarTheta);
    CHECK_FALSE(replay_witness(lat, forged));
}

TEST_CASE("larger families make separation easier") {
    for (const Space& s : corpus()) CHECK(refinement_violations(Lattice(s)).empty());
}

TEST_CASE("characterization clause vectors agree on small spaces") {
    for (const Space& s : corpus()) {
        const Lattice lat(s);
        CHECK(regularity_clauses_thm1(lat).clauses.size() == 5);
        CHECK(regularity_clauses_thm1(lat).all_equal);
        CHECK(regularity_clauses_thm2(lat).clauses.size() == 2);
        CHECK(regularity_clauses_thm2(lat).all_equal);
        CHECK(regularity_clauses_lemma2(lat).all_equal);
        CHECK(normality_clauses(lat, NormalityTheorem::Thm9).clauses.size() == 3);
        CHECK(normality_clauses(lat, NormalityTheorem::Thm10).clauses.size() == 4);
        CHECK(normality_clauses(lat, NormalityTheorem::Thm00).clauses.size() == 6);
        for (NormalityTheorem t : {NormalityTheorem::Thm9, NormalityTheorem::Thm10, NormalityTheorem::Thm00}) {
            CHECK(normality_clauses(lat, t).all_equal);
        }
        CHECK(separation_axioms(lat).clauses.size() == 7);
        CHECK(separation_axioms(lat).all_equal);
    }
}

TEST_CASE("clause disagreement produces a witness") {
    const ClauseVector c = ClauseVector::from("demo", {true, false, true});
    CHECK_FALSE(c.all_equal);
    REQUIRE(c.witness);
    CHECK(c.witness->text("clause2") == "false");
    CHECK(ClauseVector::from("demo", {false, false}).all_equal);
}

TEST_CASE("composite theorems are vacuous when a hypothesis fails") {
    const Lattice s2(fixtures::s2());
    const Verdict v = composite_thm3(s2);
    CHECK(v.holds);
    CHECK(v.vacuous);
    const Lattice d(Space::discrete(3));
    CHECK(ed_check(d).holds);
    CHECK(r0_check(d).holds);
    CHECK(composite_thm3(d).holds);
    CHECK_FALSE(composite_thm3(d).vacuous);
    CHECK(normal_r0_theorem(d).holds);
}

TEST_CASE("implication expectations carry anchors") {
    const auto arrows = implication_expectations();
    CHECK(arrows.size() == 14);
    for (const Arrow& a : arrows) {
        CHECK_FALSE(a.anchor.empty());
        for (const std::string& p : a.premises) {
            CHECK(std::find(property_ids().begin(), property_ids().end(), p) != property_ids().end());
        }
    }
}
