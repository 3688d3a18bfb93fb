#include "finitop/core.hpp"

#include <algorithm>

namespace finitop {

bool SetFamily::contains(Mask a) const { return std::binary_search(members.begin(), members.end(), a); }

SetFamily make_family(const Space& s, std::string kind, const Family& f) {
    return SetFamily{s.fingerprint_hex(), std::move(kind), s.size(), f.members};
}

Subset closure(const Space& s, const Subset& a) {
    s.require_fits(a);
    return s.subset(Lattice::of(s)->closure(a.bits()));
}

Subset interior(const Space& s, const Subset& a) {
    s.require_fits(a);
    return s.subset(Lattice::of(s)->interior(a.bits()));
}

Subset delta_closure(const Space& s, const Subset& a) {
    s.require_fits(a);
    return s.subset(Lattice::of(s)->delta_closure(a.bits()));
}

Subset delta_interior(const Space& s, const Subset& a) {
    s.require_fits(a);
    return s.subset(Lattice::of(s)->delta_interior(a.bits()));
}

SetFamily regular_open_family(const Space& s) {
    return make_family(s, "REGULAR_OPEN", Lattice::of(s)->family(Kind::RegularOpen));
}

SetFamily regular_closed_family(const Space& s) {
    return make_family(s, "REGULAR_CLOSED", Lattice::of(s)->regular_closed());
}

}  // namespace finitop
