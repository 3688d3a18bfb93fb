#include "doctest.h"

#include "finitop/genop.hpp"
#include "finitop/reference.hpp"
#include "finitop/zoo.hpp"
#include "fixtures.hpp"

using namespace finitop;
using fixtures::set;
using fixtures::sets;

namespace {

bool family_subset(const Family& a, const Family& b) {
    for (Mask m : a.members) {
        if (!b.contains(m)) return false;
    }
    return true;
}

bool union_closed(const Family& f) {
    for (Mask a : f.members) {
        for (Mask b : f.members) {
            if (!f.contains(a | b)) return false;
        }
    }
    Mask all = 0;
    for (Mask a : f.members) all |= a;
    return f.contains(all) && f.contains(0);
}

std::vector<Space> small_corpus() {
    std::vector<Space> out = enumerate_up_to(3, EnumerationMode::Labeled);
    for (std::uint64_t seed = 0; seed < 40; ++seed) out.push_back(random_space(4 + seed % 3, seed, 0.2));
    return out;
}

}  // namespace

TEST_CASE("e*-open family of the second example") {
    const SetFamily f = open_family(fixtures::s2(), Kind::EStar);
    CHECK(f.members == fixtures::all_but(4, sets({{2}, {3}, {2, 3}})));
    CHECK(f.kind == "ESTAR");
}

TEST_CASE("every kind is the full power set on a discrete space") {
    const Space d = Space::discrete(3);
    for (Kind k : all_kinds) CHECK(open_family(d, k).size() == 8);
    for (ThetaKind tk : all_theta_kinds) CHECK(theta_open_family(d, tk).size() == 8);
}

TEST_CASE("beta-open family of the first example matches a brute-force oracle") {
    const Space s = fixtures::s1();
    const auto cl = [&](Mask a) {
        Mask out = s.full();
        for (Mask f : s.closeds()) {
            if (is_subset(a, f)) out &= f;
        }
        return out;
    };
    const auto in = [&](Mask a) {
        Mask out = 0;
        for (Mask u : s.opens()) {
            if (is_subset(u, a)) out |= u;
        }
        return out;
    };
    std::vector<Mask> expected;
    for (Mask a = 0; a < 16; ++a) {
        if (is_subset(a, cl(in(cl(a))))) expected.push_back(a);
    }
    const SetFamily beta = open_family(s, Kind::Beta);
    CHECK(beta.members == expected);
    for (Mask u : s.opens()) CHECK(beta.contains(u));
}

TEST_CASE("kind closure examples") {
    const Space s2 = fixtures::s2();
    for (Kind k : all_kinds) CHECK(kind_closure(s2, k, Subset::full(4)).bits() == 15);
    CHECK(kind_closure(fixtures::sierpinski(), Kind::EStar, Subset::of({0}, 2)).bits() == set({0}));

    // Intersect the complements of e*-open sets that miss {c}.
    Mask expected = 15;
    for (Mask u : open_family(s2, Kind::EStar).members) {
        if (!meets(u, set({2}))) expected &= ~u & 15;
    }
    CHECK(kind_closure(s2, Kind::EStar, Subset::of({2}, 4)).bits() == expected);
    // {a,b,d} is e*-open, so {c} is already e*-closed.
    CHECK(expected == set({2}));
}

TEST_CASE("theta closure and interior examples") {
    for (ThetaKind tk : all_theta_kinds) {
        CHECK(theta_closure(fixtures::s3(), tk, Subset::empty(4)).bits() == 0);
        CHECK(theta_interior(fixtures::s3(), tk, Subset::full(4)).bits() == 15);
    }
    CHECK(theta_closure(fixtures::sierpinski(), ThetaKind::EStarTheta, Subset::of({0}, 2)).bits() == set({0}));
    for (Mask a = 0; a < 16; ++a) {
        CHECK(theta_closure(fixtures::s1(), ThetaKind::EStarTheta, Subset(a, 4)).bits() == a);
    }
    CHECK(theta_interior(fixtures::s3(), ThetaKind::EStarTheta, Subset::of({3}, 4)).bits() == 0);

    const Space ind = Space::indiscrete(3);
    for (ThetaKind tk : all_theta_kinds) {
        for (Mask a = 0; a < 8; ++a) {
            const Mask dual = ~reference::theta_closure(ind, tk, ~a & 7) & 7;
            CHECK(theta_interior(ind, tk, Subset(a, 3)).bits() == dual);
        }
    }
}

TEST_CASE("theta-open families of the worked examples") {
    CHECK(theta_open_family(fixtures::s1(), ThetaKind::BetaTheta).members == sets({{}, {1}, {0, 2, 3}, {0, 1, 2, 3}}));
    CHECK(theta_open_family(fixtures::s1(), ThetaKind::EStarTheta).size() == 16);
    CHECK(theta_open_family(fixtures::s3(), ThetaKind::EStarTheta).members == fixtures::all_but(4, {set({3})}));
    CHECK(theta_open_family(fixtures::s1(), ThetaKind::EStarTheta).kind == "ESTAR_THETA");
}

TEST_CASE("regular sets") {
    CHECK(regular_sets(fixtures::s1(), ThetaKind::EStarTheta).size() == 16);
    const SetFamily ind = regular_sets(Space::indiscrete(3), estar_tag);
    CHECK(ind.contains(0));
    CHECK(ind.contains(7));

    const Space s2 = fixtures::s2();
    const SetFamily open = theta_open_family(s2, ThetaKind::EStarTheta);
    std::vector<Mask> expected;
    for (Mask a : open.members) {
        if (open.contains(~a & 15)) expected.push_back(a);
    }
    CHECK(regular_sets(s2, ThetaKind::EStarTheta).members == expected);
}

TEST_CASE("generalized closed families") {
    for (const Space& s : small_corpus()) {
        const auto lat = Lattice::of(s);
        for (GVariant v : {GVariant::GeStarTheta, GVariant::Pair}) {
            CHECK(family_subset(lat->etheta_closed(), lat->g_closed(v)));
        }
    }
    CHECK(g_closed_family(fixtures::s1(), GVariant::GeStarTheta).size() == 16);

    // Direct quantification over (A, open U ⊇ A) with the reference closure.
    const Space s3 = fixtures::s3();
    std::vector<Mask> expected;
    for (Mask a = 0; a < 16; ++a) {
        const Mask cl = reference::theta_closure(s3, ThetaKind::EStarTheta, a);
        bool ok = true;
        for (Mask u : s3.opens()) {
            if (is_subset(a, u) && !is_subset(cl, u)) ok = false;
        }
        if (ok) expected.push_back(a);
    }
    CHECK(g_closed_family(s3, GVariant::GeStarTheta).members == expected);
}

TEST_CASE("g-open characterization agrees with complement membership") {
    CHECK(g_open_check(fixtures::s3(), GVariant::GeStarTheta, Subset::full(4)).holds);
    const Subset abc = Subset::of({0, 1, 2}, 4);
    CHECK(g_open_check(fixtures::s3(), GVariant::GeStarTheta, abc).holds ==
          g_closed_family(fixtures::s3(), GVariant::GeStarTheta).contains(set({3})));
    for (const Space& s : small_corpus()) {
        const auto lat = Lattice::of(s);
        for (GVariant v : {GVariant::GeStarTheta, GVariant::Pair}) {
            for (Mask a = 0; a <= s.full(); ++a) {
                const Verdict verdict = g_open_check(*lat, v, a);
                CHECK(verdict.holds == lat->g_open(v).contains(a));
                if (!verdict.holds) CHECK(replay_witness(*lat, verdict));
            }
        }
    }
}

TEST_CASE("family inclusions and union closure hold on every space") {
    for (const Space& s : small_corpus()) {
        const auto lat = Lattice::of(s);
        const auto& fam = [&](Kind k) -> const Family& { return lat->family(k); };
        CHECK(family_subset(lat->estar_regular(), lat->etheta_open()));
        CHECK(family_subset(lat->etheta_open(), fam(Kind::EStar)));
        CHECK(family_subset(fam(Kind::Open), fam(Kind::Semi)));
        CHECK(family_subset(fam(Kind::Open), fam(Kind::Pre)));
        CHECK(family_subset(fam(Kind::Semi), fam(Kind::B)));
        CHECK(family_subset(fam(Kind::Pre), fam(Kind::B)));
        CHECK(family_subset(fam(Kind::B), fam(Kind::Beta)));
        CHECK(family_subset(fam(Kind::Beta), fam(Kind::EStar)));
        CHECK(family_subset(fam(Kind::E), fam(Kind::EStar)));
        for (Kind k : {Kind::Semi, Kind::Pre, Kind::B, Kind::Beta, Kind::E, Kind::EStar}) {
            CHECK(union_closed(fam(k)));
        }
        for (ThetaKind tk : all_theta_kinds) CHECK(union_closed(lat->theta_open(tk)));
    }
}

TEST_CASE("tabulated generalized operators agree with the reference") {
    for (std::uint64_t seed = 200; seed < 224; ++seed) {
        const int n = 2 + static_cast<int>(seed % 4);
        const Space s = random_space(n, seed, 0.3);
        const Lattice lat(s);
        for (Kind k : all_kinds) {
            CHECK(lat.family(k).members == reference::kind_family(s, k));
            for (Mask a = 0; a <= s.full(); ++a) {
                CHECK(lat.kind_closure(k, a) == reference::kind_closure(s, k, a));
                CHECK(lat.kind_interior(k, a) == reference::kind_interior(s, k, a));
            }
        }
        for (ThetaKind tk : all_theta_kinds) {
            CHECK(lat.theta_open(tk).members == reference::theta_open_family(s, tk));
            for (Mask a = 0; a <= s.full(); ++a) {
                CHECK(lat.theta_closure(tk, a) == reference::theta_closure(s, tk, a));
                CHECK(lat.theta_interior(tk, a) == reference::theta_interior(s, tk, a));
            }
        }
    }
}

TEST_CASE("Lemma 1 clauses on every space with at most three points") {
    for (const Space& s : enumerate_up_to(3, EnumerationMode::Labeled)) {
        const Verdict v = lemma1_exhaustive(Lattice(s));
        CHECK_MESSAGE(v.holds, canonical_form(s));
    }
}

TEST_CASE("Lemma 1 clauses report the failing clause numbers") {
    const Lattice lat(fixtures::s2());
    const auto c = lemma1_clauses(lat, set({2}), set({0, 3}));
    for (bool b : c) CHECK(b);
    CHECK(lemma1_check(lat, set({2}), set({0, 3})).holds);
}
