#include "finitop/reference.hpp"

namespace finitop::reference {

Mask closure(const Space& s, Mask a) {
    Mask out = s.full();
    for (Mask c : s.closeds()) {
        if (is_subset(a, c)) out &= c;
    }
    return out;
}

Mask interior(const Space& s, Mask a) {
    Mask out = 0;
    for (Mask u : s.opens()) {
        if (is_subset(u, a)) out |= u;
    }
    return out;
}

Mask delta_closure(const Space& s, Mask a) {
    Mask out = 0;
    for (int x = 0; x < s.size(); ++x) {
        bool cluster = true;
        for (Mask u : s.opens()) {
            if ((u >> x & 1U) != 0 && !meets(interior(s, closure(s, u)), a)) {
                cluster = false;
                break;
            }
        }
        if (cluster) out |= point_mask(x);
    }
    return out;
}

Mask delta_interior(const Space& s, Mask a) {
    Mask out = 0;
    for (int x = 0; x < s.size(); ++x) {
        for (Mask u : s.opens()) {
            if ((u >> x & 1U) != 0 && is_subset(interior(s, closure(s, u)), a)) {
                out |= point_mask(x);
                break;
            }
        }
    }
    return out;
}

bool is_kind_open(const Space& s, Kind k, Mask a) {
    const Mask total = s.full();
    auto cl = [&](Mask m) { return closure(s, m); };
    auto in = [&](Mask m) { return interior(s, m); };
    switch (k) {
        case Kind::Open: return s.is_open(a);
        case Kind::Semi: return is_subset(a, cl(in(a)));
        case Kind::Pre: return is_subset(a, in(cl(a)));
        case Kind::B: return is_subset(a, cl(in(a)) | in(cl(a)));
        case Kind::Beta: return is_subset(a, cl(in(cl(a))));
        case Kind::E: return is_subset(a, cl(delta_interior(s, a)) | in(delta_closure(s, a)));
        case Kind::EStar: return is_subset(a, cl(in(delta_closure(s, a))));
        case Kind::DeltaOpen: {
            const Mask c = ~a & total;
            return delta_closure(s, c) == c;
        }
        case Kind::RegularOpen: return a == in(cl(a));
    }
    return false;
}

Mask kind_closure(const Space& s, Kind k, Mask a) {
    const Mask total = s.full();
    Mask out = total;
    for (Mask c = a;; c = (c + 1) | a) {
        if (is_kind_open(s, k, ~c & total)) out &= c;
        if (c == total) break;
    }
    return out;
}

Mask kind_interior(const Space& s, Kind k, Mask a) {
    Mask out = 0;
    // Enumerate the subsets of a, largest first, down to the empty set.
    for (Mask u = a;; u = (u - 1) & a) {
        if (is_kind_open(s, k, u)) out |= u;
        if (u == 0) break;
    }
    return out;
}

Mask theta_closure(const Space& s, ThetaKind tk, Mask a) {
    const Kind base = base_kind(tk);
    const Mask total = s.full();
    Mask out = 0;
    for (int x = 0; x < s.size(); ++x) {
        bool cluster = true;
        const Mask others = total & ~point_mask(x);
        // every U ∋ x: U = {x} ∪ (subset of the other points)
        for (Mask rest = others;; rest = (rest - 1) & others) {
            const Mask u = rest | point_mask(x);
            if (is_kind_open(s, base, u) && !meets(kind_closure(s, base, u), a)) {
                cluster = false;
                break;
            }
            if (rest == 0) break;
        }
        if (cluster) out |= point_mask(x);
    }
    return out;
}

Mask theta_interior(const Space& s, ThetaKind tk, Mask a) {
    const Kind base = base_kind(tk);
    const Mask total = s.full();
    Mask out = 0;
    for (int x = 0; x < s.size(); ++x) {
        const Mask others = total & ~point_mask(x);
        for (Mask rest = others;; rest = (rest - 1) & others) {
            const Mask u = rest | point_mask(x);
            if (is_kind_open(s, base, u) && is_subset(kind_closure(s, base, u), a)) {
                out |= point_mask(x);
                break;
            }
            if (rest == 0) break;
        }
    }
    return out;
}

std::vector<Mask> kind_family(const Space& s, Kind k) {
    std::vector<Mask> out;
    for (Mask a = 0;; ++a) {
        if (is_kind_open(s, k, a)) out.push_back(a);
        if (a == s.full()) break;
    }
    return out;
}

std::vector<Mask> theta_open_family(const Space& s, ThetaKind tk) {
    std::vector<Mask> out;
    const Mask total = s.full();
    for (Mask a = 0;; ++a) {
        const Mask c = ~a & total;
        if (theta_closure(s, tk, c) == c) out.push_back(a);
        if (a == total) break;
    }
    return out;
}

}  // namespace finitop::reference
