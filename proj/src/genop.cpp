#include "finitop/genop.hpp"

#include <stdexcept>
#include <string>

namespace finitop {

SetFamily open_family(const Space& s, Kind k) {
    return make_family(s, std::string(kind_name(k)), Lattice::of(s)->family(k));
}

Subset kind_closure(const Space& s, Kind k, const Subset& a) {
    s.require_fits(a);
    return s.subset(Lattice::of(s)->kind_closure(k, a.bits()));
}

Subset kind_interior(const Space& s, Kind k, const Subset& a) {
    s.require_fits(a);
    return s.subset(Lattice::of(s)->kind_interior(k, a.bits()));
}

Subset theta_closure(const Space& s, ThetaKind tk, const Subset& a) {
    s.require_fits(a);
    return s.subset(Lattice::of(s)->theta_closure(tk, a.bits()));
}

Subset theta_interior(const Space& s, ThetaKind tk, const Subset& a) {
    s.require_fits(a);
    return s.subset(Lattice::of(s)->theta_interior(tk, a.bits()));
}

SetFamily theta_open_family(const Space& s, ThetaKind tk) {
    const auto lat = Lattice::of(s);
    const Family& fam = lat->theta_open(tk);
    for (Mask a = 0;; ++a) {
        if (fam.contains(a) != (lat->theta_interior(tk, a) == a)) {
            throw std::logic_error("theta-open membership of " + s.subset(a).to_string() +
                                   " differs between the closure and interior routes");
        }
        if (a == s.full()) break;
    }
    return make_family(s, std::string(theta_kind_name(tk)), fam);
}

SetFamily theta_closed_family(const Space& s, ThetaKind tk) {
    return make_family(s, std::string(theta_kind_name(tk)) + "_CLOSED", Lattice::of(s)->theta_closed(tk));
}

SetFamily regular_sets(const Space& s, ThetaKind tk) {
    return make_family(s, std::string(theta_kind_name(tk)) + "_REGULAR", Lattice::of(s)->theta_regular(tk));
}

SetFamily regular_sets(const Space& s, EStarTag) {
    return make_family(s, "ESTAR_REGULAR", Lattice::of(s)->estar_regular());
}

SetFamily g_closed_family(const Space& s, GVariant v) {
    return make_family(s, std::string(g_variant_name(v)) + "_CLOSED", Lattice::of(s)->g_closed(v));
}

SetFamily g_open_family(const Space& s, GVariant v) {
    return make_family(s, std::string(g_variant_name(v)) + "_OPEN", Lattice::of(s)->g_open(v));
}

Verdict g_open_check(const Space& s, GVariant v, const Subset& a) {
    s.require_fits(a);
    return g_open_check(*Lattice::of(s), v, a.bits());
}

Verdict g_open_check(const Lattice& lat, GVariant v, Mask a) {
    const std::string id = v == GVariant::GeStarTheta ? "gopen.ge_star_theta" : "gopen.pair";
    const Family& sort = v == GVariant::GeStarTheta ? lat.closed_sets() : lat.etheta_closed();
    const Mask inner = lat.etheta_interior(a);
    for (Mask f : sort.members) {
        if (is_subset(f, a) && !is_subset(f, inner)) {
            return fails(id, Witness{"closed set F inside A", {}}.add_set("A", a).add_set("F", f));
        }
    }
    return holds(id);
}

namespace {

// x is an interior point when some e*-open U ∋ x has e*-cl(U) ⊆ a.
Mask pointwise_etheta_interior(const Lattice& lat, Mask a) {
    const Family& base = lat.family(Kind::EStar);
    Mask out = 0;
    for (int x = 0; x < lat.size(); ++x) {
        for (Mask u : base.members) {
            if ((u >> x & 1U) != 0 && is_subset(lat.estar_closure(u), a)) {
                out |= point_mask(x);
                break;
            }
        }
    }
    return out;
}

}  // namespace

std::array<bool, 10> lemma1_clauses(const Lattice& lat, Mask a, Mask b) {
    const Mask full = lat.full();
    const Family& ec = lat.etheta_closed();
    const Family& eo = lat.etheta_open();
    const auto cl = [&](Mask m) { return lat.etheta_closure(m); };
    std::array<bool, 10> c{};

    c[0] = is_subset(a, lat.estar_closure(a)) && is_subset(lat.estar_closure(a), cl(a));
    c[1] = !lat.family(Kind::EStar).contains(a) || cl(a) == lat.estar_closure(a);
    c[2] = is_subset(cl(a & b), cl(a)) && is_subset(cl(a), cl(a | b));
    c[3] = ec.contains(cl(a)) && cl(cl(a)) == cl(a);
    c[4] = !ec.contains(a) || cl(a) == a;
    c[5] = !ec.contains(a) || eo.contains(~a & full);

    const Mask fa = cl(a), fb = cl(b);
    c[6] = !(ec.contains(fa) && ec.contains(fb)) || ec.contains(fa & fb);
    const Mask ua = lat.etheta_interior(a), ub = lat.etheta_interior(b);
    c[7] = !(eo.contains(ua) && eo.contains(ub)) || eo.contains(ua | ub);

    Mask meet = full;
    for (Mask f : ec.members) {
        if (is_subset(a, f)) meet &= f;
    }
    c[8] = cl(a) == meet;

    const Mask int_a = pointwise_etheta_interior(lat, a);
    const Mask int_ca = pointwise_etheta_interior(lat, ~a & full);
    c[9] = cl(~a & full) == (~int_a & full) && int_ca == (~cl(a) & full);
    return c;
}

Verdict lemma1_check(const Lattice& lat, Mask a, Mask b) {
    const auto c = lemma1_clauses(lat, a, b);
    std::string failing;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i]) failing += (failing.empty() ? "" : ",") + std::to_string(i + 1);
    }
    if (failing.empty()) return holds("lemma1");
    return fails("lemma1", Witness{"failing clauses", {}}.add_set("A", a).add_set("B", b).add_text("clauses", failing));
}

Verdict lemma1_exhaustive(const Lattice& lat) {
    const Mask full = lat.full();
    for (Mask a = 0;; ++a) {
        for (Mask b = 0;; ++b) {
            Verdict v = lemma1_check(lat, a, b);
            if (!v.holds) return v;
            if (b == full) break;
        }
        if (a == full) break;
    }
    Mask meet = full, join = 0;
    for (Mask f : lat.etheta_closed().members) meet &= f;
    for (Mask u : lat.etheta_open().members) join |= u;
    if (!lat.etheta_closed().contains(meet)) {
        return fails("lemma1", Witness{"family fold", {}}.add_set("meet", meet).add_text("clauses", "7"));
    }
    if (!lat.etheta_open().contains(join)) {
        return fails("lemma1", Witness{"family fold", {}}.add_set("join", join).add_text("clauses", "8"));
    }
    return holds("lemma1");
}

}  // namespace finitop
