#pragma once

#include <string>
#include <vector>

#include "finitop/lattice.hpp"
#include "finitop/space.hpp"
#include "finitop/subset.hpp"

namespace finitop {

/// A named family of subsets of one space.
struct SetFamily {
    std::string space_fingerprint;
    std::string kind;
    int n = 0;
    std::vector<Mask> members;  // ascending

    bool contains(Mask a) const;
    std::size_t size() const { return members.size(); }
    bool operator==(const SetFamily&) const = default;
};

SetFamily make_family(const Space& s, std::string kind, const Family& f);

// Base operators. Each validates the subset against the space and answers
// from the cached Lattice of the space.
Subset closure(const Space& s, const Subset& a);
Subset interior(const Space& s, const Subset& a);
Subset delta_closure(const Space& s, const Subset& a);
Subset delta_interior(const Space& s, const Subset& a);

/// A = int(cl A).
SetFamily regular_open_family(const Space& s);
/// A = cl(int A).
SetFamily regular_closed_family(const Space& s);

}  // namespace finitop
