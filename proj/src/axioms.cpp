#include "finitop/axioms.hpp"

#include <algorithm>
#include <map>

#include "finitop/error.hpp"
#include "finitop/genop.hpp"

namespace finitop {

namespace {

const Family& separating_family(const Lattice& lat, RegularityVariant v) {
    switch (v) {
        case RegularityVariant::Classical: return lat.open_sets();
        case RegularityVariant::P: return lat.family(Kind::Pre);
        case RegularityVariant::S: return lat.family(Kind::Semi);
        case RegularityVariant::B: return lat.family(Kind::B);
        case RegularityVariant::Beta: return lat.family(Kind::Beta);
        case RegularityVariant::BetaTheta: return lat.theta_open(ThetaKind::BetaTheta);
        case RegularityVariant::E: return lat.family(Kind::E);
        case RegularityVariant::EStar: return lat.family(Kind::EStar);
        case RegularityVariant::EStarTheta: return lat.etheta_open();
        case RegularityVariant::PairETheta: return lat.open_sets();
    }
    return lat.open_sets();
}

// The sets that must be separated from outside points.
const Family& separated_sort(const Lattice& lat, RegularityVariant v) {
    return v == RegularityVariant::PairETheta ? lat.theta_regular(ThetaKind::EStarTheta) : lat.closed_sets();
}

const Family& normality_sort(const Lattice& lat, NormalityVariant v) {
    return v == NormalityVariant::PairStar ? lat.etheta_closed() : lat.closed_sets();
}

const Family& normality_family(const Lattice& lat, NormalityVariant v) {
    return v == NormalityVariant::Classical ? lat.open_sets() : lat.etheta_open();
}

bool exists_disjoint_pairwise(const Family& fam, Mask a, Mask b) {
    for (Mask u : fam.members) {
        if (!is_subset(a, u)) continue;
        for (Mask v : fam.members) {
            if (is_subset(b, v) && !meets(u, v)) return true;
        }
    }
    return false;
}

template <typename Pred>
bool any_member(const Family& fam, Pred&& pred) {
    return std::any_of(fam.members.begin(), fam.members.end(), pred);
}

template <typename Pred>
bool all_members(const Family& fam, Pred&& pred) {
    return std::all_of(fam.members.begin(), fam.members.end(), pred);
}

bool has_point(Mask m, int x) { return (m >> x & 1U) != 0; }

// ∀ U,V in opens with U ∪ V = X: ∃ A ⊆ U, B ⊆ V in cover with A ∪ B = X.
bool cover_clause(const Lattice& lat, const Family& opens, const Family& cover) {
    const Mask total = lat.full();
    for (Mask u : opens.members) {
        for (Mask v : opens.members) {
            if ((u | v) != total) continue;
            const bool found = any_member(cover, [&](Mask a) {
                return is_subset(a, u) && any_member(cover, [&](Mask b) { return is_subset(b, v) && (a | b) == total; });
            });
            if (!found) return false;
        }
    }
    return true;
}

// ∀ F in sort, ∀ G in opens with F ⊆ G: ∃ U in fam, F ⊆ U ⊆ e*-cl_θ(U) ⊆ G.
bool shrink_clause(const Lattice& lat, const Family& sort, const Family& opens, const Family& fam) {
    for (Mask f : sort.members) {
        for (Mask g : opens.members) {
            if (!is_subset(f, g)) continue;
            const bool found = any_member(fam, [&](Mask u) {
                const Mask cl = lat.etheta_closure(u);
                return is_subset(f, u) && is_subset(u, cl) && is_subset(cl, g);
            });
            if (!found) return false;
        }
    }
    return true;
}

// ∀ disjoint F1, F2 in sort: ∃ disjoint U1 ⊇ F1, U2 ⊇ F2 in fam.
bool separate_pairs(const Family& sort, const Family& fam) {
    for (Mask f1 : sort.members) {
        for (Mask f2 : sort.members) {
            if (!meets(f1, f2) && !exists_disjoint(fam, f1, f2)) return false;
        }
    }
    return true;
}

struct PairCheck {
    bool holds = true;
    int x = -1;
    int y = -1;
};

template <typename Pred>
PairCheck all_distinct_pairs(int n, Pred&& pred) {
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x != y && !pred(x, y)) return {false, x, y};
        }
    }
    return {};
}

// The seven separation clauses on a single ordered pair of points.
bool separation_clause(const Lattice& lat, int clause, int x, int y) {
    const Family& eto = lat.etheta_open();
    const Family& eo = lat.family(Kind::EStar);
    const Mask px = point_mask(x), py = point_mask(y);
    switch (clause) {
        case 1:
            return any_member(eto, [&](Mask u) { return has_point(u, x) && !has_point(u, y); }) ||
                   any_member(eto, [&](Mask v) { return has_point(v, y) && !has_point(v, x); });
        case 2:
            return any_member(eto, [&](Mask u) { return has_point(u, x) && !has_point(u, y); }) &&
                   any_member(eto, [&](Mask v) { return has_point(v, y) && !has_point(v, x); });
        case 3: return exists_disjoint(eto, px, py);
        case 4: return exists_disjoint(eo, px, py);
        case 5:
            return any_member(eo, [&](Mask u) {
                return has_point(u, x) && any_member(eo, [&](Mask v) {
                           return has_point(v, y) && !meets(lat.estar_closure(u), lat.estar_closure(v));
                       });
            });
        case 6: return exists_disjoint_pairwise(lat.estar_regular(), px, py);
        case 7:
            return any_member(eto, [&](Mask u) {
                return has_point(u, x) && any_member(eto, [&](Mask v) {
                           return has_point(v, y) && !meets(lat.etheta_closure(u), lat.etheta_closure(v));
                       });
            });
    }
    return false;
}

const char* const separation_ids[] = {
    "sep.estar_theta_t0",      "sep.estar_theta_t1",          "sep.estar_theta_t2",
    "sep.estar_t2",            "sep.estar_closure_disjoint",  "sep.estar_regular_disjoint",
    "sep.estar_theta_closure_disjoint",
};

Verdict separation_verdict(const Lattice& lat, int clause) {
    const std::string id = separation_ids[clause - 1];
    const PairCheck r = all_distinct_pairs(lat.size(), [&](int x, int y) { return separation_clause(lat, clause, x, y); });
    if (r.holds) return holds(id);
    return fails(id, Witness{"unseparated pair", {}}.add_point("x", r.x).add_point("y", r.y));
}

}  // namespace

bool exists_disjoint(const Family& fam, Mask a, Mask b) {
    if (!fam.union_closed) return exists_disjoint_pairwise(fam, a, b);
    // With union closure the largest member inside the complement of V is
    // itself a member, so it is the only candidate for U.
    const Mask total = full_mask(fam.n);
    return any_member(fam, [&](Mask v) { return is_subset(b, v) && !meets(a, v) && is_subset(a, fam.inner[~v & total]); });
}

std::string property_id(RegularityVariant v) {
    switch (v) {
        case RegularityVariant::Classical: return "regular.classical";
        case RegularityVariant::P: return "regular.p";
        case RegularityVariant::S: return "regular.s";
        case RegularityVariant::B: return "regular.b";
        case RegularityVariant::Beta: return "regular.beta";
        case RegularityVariant::BetaTheta: return "regular.beta_theta";
        case RegularityVariant::E: return "regular.e";
        case RegularityVariant::EStar: return "regular.estar";
        case RegularityVariant::EStarTheta: return "regular.estar_theta";
        case RegularityVariant::PairETheta: return "regular.pair_e_theta";
    }
    return "regular.?";
}

std::string property_id(NormalityVariant v) {
    switch (v) {
        case NormalityVariant::Classical: return "normal.classical";
        case NormalityVariant::EStarTheta: return "normal.estar_theta";
        case NormalityVariant::PairStar: return "normal.pair_star";
    }
    return "normal.?";
}

std::string_view theorem_id(NormalityTheorem t) {
    switch (t) {
        case NormalityTheorem::Thm9: return "thm9";
        case NormalityTheorem::Thm10: return "thm10";
        case NormalityTheorem::Thm00: return "thm00";
    }
    return "?";
}

Verdict regularity(const Lattice& lat, RegularityVariant v) {
    const Family& sort = separated_sort(lat, v);
    const Family& fam = separating_family(lat, v);
    for (Mask f : sort.members) {
        for (int x = 0; x < lat.size(); ++x) {
            if (has_point(f, x)) continue;
            if (!exists_disjoint(fam, f, point_mask(x))) {
                return fails(property_id(v), Witness{"set F and point x outside it", {}}.add_set("F", f).add_point("x", x));
            }
        }
    }
    return holds(property_id(v));
}

Verdict normality(const Lattice& lat, NormalityVariant v) {
    const Family& sort = normality_sort(lat, v);
    const Family& fam = normality_family(lat, v);
    for (Mask f1 : sort.members) {
        for (Mask f2 : sort.members) {
            if (meets(f1, f2)) continue;
            if (!exists_disjoint(fam, f1, f2)) {
                return fails(property_id(v), Witness{"disjoint pair F1, F2", {}}.add_set("F1", f1).add_set("F2", f2));
            }
        }
    }
    return holds(property_id(v));
}

Verdict ed_check(const Lattice& lat) {
    for (Mask u : lat.etheta_open().members) {
        if (!lat.etheta_open().contains(lat.etheta_closure(u))) {
            return fails("ed.estar_theta", Witness{"e*-theta-open U with non-open closure", {}}.add_set("U", u));
        }
    }
    return holds("ed.estar_theta");
}

Verdict r0_check(const Lattice& lat) {
    for (Mask u : lat.space().opens()) {
        int bad = -1;
        for_each_point(u, [&](int x) {
            if (bad < 0 && !is_subset(lat.etheta_closure(point_mask(x)), u)) bad = x;
        });
        if (bad >= 0) {
            return fails("r0.estar_theta", Witness{"open U and point x", {}}.add_set("U", u).add_point("x", bad));
        }
    }
    return holds("r0.estar_theta");
}

Verdict composite_thm3(const Lattice& lat) {
    const bool hyp = regularity(lat, RegularityVariant::EStarTheta).holds &&
                     regularity(lat, RegularityVariant::PairETheta).holds && ed_check(lat).holds;
    if (!hyp) return Verdict{"thm3", true, true, std::nullopt};
    Verdict concl = regularity(lat, RegularityVariant::Classical);
    if (concl.holds) return holds("thm3");
    Witness w = *concl.witness;
    w.role = "theorem violation: " + w.role;
    return fails("thm3", std::move(w));
}

Verdict normal_r0_theorem(const Lattice& lat) {
    const bool hyp = normality(lat, NormalityVariant::EStarTheta).holds && r0_check(lat).holds;
    if (!hyp) return Verdict{"thm.normal_r0", true, true, std::nullopt};
    Verdict concl = regularity(lat, RegularityVariant::EStarTheta);
    if (concl.holds) return holds("thm.normal_r0");
    Witness w = *concl.witness;
    w.role = "theorem violation: " + w.role;
    return fails("thm.normal_r0", std::move(w));
}

ClauseVector regularity_clauses_thm1(const Lattice& lat) {
    const Family& eto = lat.etheta_open();
    const auto& opens = lat.open_sets();
    const int n = lat.size();
    const Mask total = lat.full();

    const bool c1 = regularity(lat, RegularityVariant::EStarTheta).holds;

    bool c2 = true;
    for (int x = 0; x < n && c2; ++x) {
        for (Mask u : opens.members) {
            if (!has_point(u, x)) continue;
            if (!any_member(eto, [&](Mask v) { return has_point(v, x) && is_subset(lat.etheta_closure(v), u); })) {
                c2 = false;
                break;
            }
        }
    }

    bool c3 = true;
    for (Mask f : lat.closed_sets().members) {
        Mask meet = total;
        for (Mask v : eto.members) {
            if (is_subset(f, v)) meet &= lat.etheta_closure(v);
        }
        if (meet != f) {
            c3 = false;
            break;
        }
    }

    bool c4 = true;
    for (Mask a = 0; c4; ++a) {
        for (Mask u : opens.members) {
            if (!meets(a, u)) continue;
            if (!any_member(eto, [&](Mask v) { return meets(a, v) && is_subset(lat.etheta_closure(v), u); })) {
                c4 = false;
                break;
            }
        }
        if (a == total) break;
    }

    bool c5 = true;
    for (Mask a = 1; c5 && a <= total; ++a) {
        for (Mask f : lat.closed_sets().members) {
            if (meets(a, f)) continue;
            const bool found = any_member(eto, [&](Mask v) {
                return meets(a, v) && any_member(eto, [&](Mask w) { return is_subset(f, w) && !meets(v, w); });
            });
            if (!found) {
                c5 = false;
                break;
            }
        }
    }
    return ClauseVector::from("thm1", {c1, c2, c3, c4, c5});
}

ClauseVector regularity_clauses_thm2(const Lattice& lat) {
    const bool c1 = regularity(lat, RegularityVariant::PairETheta).holds;
    bool c2 = true;
    for (int x = 0; x < lat.size() && c2; ++x) {
        for (Mask u : lat.theta_regular(ThetaKind::EStarTheta).members) {
            if (!has_point(u, x)) continue;
            if (!any_member(lat.open_sets(), [&](Mask v) { return has_point(v, x) && is_subset(lat.closure(v), u); })) {
                c2 = false;
                break;
            }
        }
    }
    return ClauseVector::from("thm2", {c1, c2});
}

ClauseVector regularity_clauses_lemma2(const Lattice& lat) {
    const bool c1 = regularity(lat, RegularityVariant::Classical).holds;
    bool c2 = true;
    for (int x = 0; x < lat.size() && c2; ++x) {
        for (Mask u : lat.space().opens()) {
            if (!has_point(u, x)) continue;
            if (!any_member(lat.open_sets(), [&](Mask v) { return has_point(v, x) && is_subset(lat.closure(v), u); })) {
                c2 = false;
                break;
            }
        }
    }
    return ClauseVector::from("lemma2", {c1, c2});
}

ClauseVector normality_clauses(const Lattice& lat, NormalityTheorem t) {
    const Family& opens = lat.open_sets();
    const Family& closeds = lat.closed_sets();
    const Family& eto = lat.etheta_open();
    const Family& etc = lat.etheta_closed();
    const std::string id(theorem_id(t));
    switch (t) {
        case NormalityTheorem::Thm9:
            return ClauseVector::from(id, {
                                              normality(lat, NormalityVariant::EStarTheta).holds,
                                              cover_clause(lat, opens, etc),
                                              shrink_clause(lat, closeds, opens, eto),
                                          });
        case NormalityTheorem::Thm10: {
            const Family& gc = lat.g_closed(GVariant::GeStarTheta);
            const Family& go = lat.g_open(GVariant::GeStarTheta);
            return ClauseVector::from(id, {
                                              normality(lat, NormalityVariant::EStarTheta).holds,
                                              cover_clause(lat, opens, gc),
                                              shrink_clause(lat, closeds, opens, go),
                                              separate_pairs(closeds, go),
                                          });
        }
        case NormalityTheorem::Thm00: {
            const Family& pc = lat.g_closed(GVariant::Pair);
            const Family& po = lat.g_open(GVariant::Pair);
            return ClauseVector::from(id, {
                                              normality(lat, NormalityVariant::PairStar).holds,
                                              cover_clause(lat, eto, etc),
                                              shrink_clause(lat, etc, eto, eto),
                                              cover_clause(lat, eto, pc),
                                              shrink_clause(lat, etc, eto, po),
                                              separate_pairs(etc, po),
                                          });
        }
    }
    throw TopologyError(ErrorCode::UnknownTheorem, "unknown normality theorem");
}

ClauseVector separation_axioms(const Lattice& lat) {
    std::vector<bool> clauses;
    for (int c = 1; c <= 7; ++c) clauses.push_back(separation_verdict(lat, c).holds);
    return ClauseVector::from("sep", std::move(clauses));
}

std::vector<std::string> refinement_violations(const Lattice& lat) {
    std::vector<std::string> out;
    for (RegularityVariant v1 : all_regularity_variants) {
        if (v1 == RegularityVariant::PairETheta) continue;
        for (RegularityVariant v2 : all_regularity_variants) {
            if (v2 == RegularityVariant::PairETheta || v1 == v2) continue;
            const Family& f1 = separating_family(lat, v1);
            const Family& f2 = separating_family(lat, v2);
            const bool nested = all_members(f1, [&](Mask a) { return f2.contains(a); });
            if (nested && regularity(lat, v1).holds && !regularity(lat, v2).holds) {
                out.push_back(property_id(v1) + " => " + property_id(v2));
            }
        }
    }
    return out;
}

std::vector<Arrow> implication_expectations() {
    const std::string diagram = "Remark diagram: none of the below implications is reversible";
    return {
        {{"regular.p"}, "regular.e", diagram, ""},
        {{"regular.e"}, "regular.estar", diagram, ""},
        {{"regular.estar_theta"}, "regular.estar", diagram, ""},
        {{"regular.p"}, "regular.b", diagram, "diagonal arrow read as p-regular -> b-regular (preopen is b-open)"},
        {{"regular.s"}, "regular.b", diagram, ""},
        {{"regular.b"}, "regular.beta", diagram, ""},
        {{"regular.beta_theta"}, "regular.beta", diagram, ""},
        {{"regular.beta"}, "regular.estar", diagram, ""},
        {{"regular.beta_theta"}, "regular.estar_theta", diagram, ""},
        {{"normal.classical"}, "normal.estar_theta", "Remark: every normal space is e*theta-normal", ""},
        {{"regular.classical"}, "regular.estar_theta", "Remark: every regular space is e*theta-regular", ""},
        {{"regular.pair_e_theta"},
         "regular.estar_theta",
         "Remark: every (e*,theta)-regular space is e*theta-regular",
         ""},
        {{"regular.estar_theta", "regular.pair_e_theta", "ed.estar_theta"},
         "regular.classical",
         "Theorem: e*theta-regular, (e*,theta)-regular and ED imply regular",
         ""},
        {{"normal.estar_theta", "r0.estar_theta"},
         "regular.estar_theta",
         "Theorem: e*theta-normal and e*theta-R0 imply e*theta-regular",
         ""},
    };
}

const std::vector<std::string>& property_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (RegularityVariant r : all_regularity_variants) v.push_back(property_id(r));
        for (NormalityVariant n : all_normality_variants) v.push_back(property_id(n));
        v.emplace_back("ed.estar_theta");
        v.emplace_back("r0.estar_theta");
        for (const char* s : separation_ids) v.emplace_back(s);
        return v;
    }();
    return ids;
}

Verdict evaluate_property(const Lattice& lat, const std::string& id) {
    for (RegularityVariant r : all_regularity_variants) {
        if (id == property_id(r)) return regularity(lat, r);
    }
    for (NormalityVariant n : all_normality_variants) {
        if (id == property_id(n)) return normality(lat, n);
    }
    if (id == "ed.estar_theta") return ed_check(lat);
    if (id == "r0.estar_theta") return r0_check(lat);
    for (int c = 1; c <= 7; ++c) {
        if (id == separation_ids[c - 1]) return separation_verdict(lat, c);
    }
    throw TopologyError(ErrorCode::Malformed, "unknown property id '" + id + "'");
}

bool replay_witness(const Lattice& lat, const Verdict& v) {
    if (v.holds || !v.witness) return false;
    const Witness& w = *v.witness;
    const std::string& id = v.property_id;
    for (RegularityVariant r : all_regularity_variants) {
        if (id != property_id(r)) continue;
        const auto f = w.set("F");
        const auto x = w.point("x");
        if (!f || !x || has_point(*f, *x) || !separated_sort(lat, r).contains(*f)) return false;
        return !exists_disjoint_pairwise(separating_family(lat, r), *f, point_mask(*x));
    }
    for (NormalityVariant n : all_normality_variants) {
        if (id != property_id(n)) continue;
        const auto f1 = w.set("F1");
        const auto f2 = w.set("F2");
        const Family& sort = normality_sort(lat, n);
        if (!f1 || !f2 || meets(*f1, *f2) || !sort.contains(*f1) || !sort.contains(*f2)) return false;
        return !exists_disjoint_pairwise(normality_family(lat, n), *f1, *f2);
    }
    if (id == "ed.estar_theta") {
        const auto u = w.set("U");
        return u && lat.etheta_open().contains(*u) && !lat.etheta_open().contains(lat.etheta_closure(*u));
    }
    if (id == "r0.estar_theta") {
        const auto u = w.set("U");
        const auto x = w.point("x");
        return u && x && lat.space().is_open(*u) && has_point(*u, *x) &&
               !is_subset(lat.etheta_closure(point_mask(*x)), *u);
    }
    for (int c = 1; c <= 7; ++c) {
        if (id != separation_ids[c - 1]) continue;
        const auto x = w.point("x");
        const auto y = w.point("y");
        return x && y && *x != *y && !separation_clause(lat, c, *x, *y);
    }
    if (id == "gopen.ge_star_theta" || id == "gopen.pair") {
        const auto a = w.set("A");
        const auto f = w.set("F");
        const Family& sort = id == "gopen.pair" ? lat.etheta_closed() : lat.closed_sets();
        return a && f && sort.contains(*f) && is_subset(*f, *a) && !is_subset(*f, lat.etheta_interior(*a));
    }
    if (id == "thm3") {
        const bool hyp = regularity(lat, RegularityVariant::EStarTheta).holds &&
                         regularity(lat, RegularityVariant::PairETheta).holds && ed_check(lat).holds;
        return hyp && replay_witness(lat, Verdict{property_id(RegularityVariant::Classical), false, false, w});
    }
    if (id == "thm.normal_r0") {
        const bool hyp = normality(lat, NormalityVariant::EStarTheta).holds && r0_check(lat).holds;
        return hyp && replay_witness(lat, Verdict{property_id(RegularityVariant::EStarTheta), false, false, w});
    }
    if (id == "lemma1") {
        const auto a = w.set("A");
        const auto b = w.set("B");
        return a && b && !lemma1_check(lat, *a, *b).holds;
    }
    return false;
}

}  // namespace finitop
