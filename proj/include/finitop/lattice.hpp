#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "finitop/kinds.hpp"
#include "finitop/space.hpp"

namespace finitop {

/// A family of subsets of one space, stored both as an ascending member list
/// and as a membership bitmap over all 2^n subsets.
struct Family {
    int n = 0;
    std::vector<Mask> members;
    std::vector<std::uint8_t> member;
    /// inner[A] = union of the members contained in A.
    std::vector<Mask> inner;
    /// inner[A] is itself a member for every A (equivalently: closed under
    /// arbitrary unions, including the empty union).
    bool union_closed = false;

    static Family from_bitmap(int n, std::vector<std::uint8_t> bitmap);

    bool contains(Mask a) const { return member[a] != 0; }
    std::size_t count() const { return members.size(); }
    Mask interior_of(Mask a) const { return inner[a]; }
    /// Intersection of the complements of members that contain a.
    Mask closure_of(Mask a) const {
        const Mask total = full_mask(n);
        return ~inner[~a & total] & total;
    }
    /// The family of complements.
    Family complemented() const;
};

/// Every operator of a space tabulated over its whole subset lattice.
///
/// Construction is eager for the base operators, the generalized-open
/// families and both θ-operators; the generalized-closed families are built
/// on first use. A Lattice is immutable once visible to callers and is safe to
/// share between threads.
class Lattice {
public:
    explicit Lattice(Space space);
    Lattice(const Lattice&) = delete;
    Lattice& operator=(const Lattice&) = delete;

    /// Cached construction keyed by the space fingerprint.
    static std::shared_ptr<const Lattice> of(const Space& space);

    const Space& space() const { return space_; }
    int size() const { return space_.size(); }
    Mask full() const { return space_.full(); }
    std::size_t subset_count() const { return std::size_t{1} << space_.size(); }

    Mask closure(Mask a) const { return ~interior_[~a & full()] & full(); }
    Mask interior(Mask a) const { return interior_[a]; }
    Mask delta_closure(Mask a) const { return ~delta_interior_[~a & full()] & full(); }
    Mask delta_interior(Mask a) const { return delta_interior_[a]; }

    const Family& open_sets() const { return family(Kind::Open); }
    const Family& closed_sets() const { return closed_; }

    const Family& family(Kind k) const { return families_[static_cast<std::size_t>(k)]; }
    Mask kind_interior(Kind k, Mask a) const { return family(k).interior_of(a); }
    Mask kind_closure(Kind k, Mask a) const { return family(k).closure_of(a); }

    const Family& theta_open(ThetaKind tk) const { return theta_open_[static_cast<std::size_t>(tk)]; }
    const Family& theta_closed(ThetaKind tk) const { return theta_closed_[static_cast<std::size_t>(tk)]; }
    Mask theta_interior(ThetaKind tk, Mask a) const { return theta_interior_[static_cast<std::size_t>(tk)][a]; }
    Mask theta_closure(ThetaKind tk, Mask a) const {
        return ~theta_interior_[static_cast<std::size_t>(tk)][~a & full()] & full();
    }

    // Shorthands for the e*-θ operators that dominate the property checks.
    const Family& etheta_open() const { return theta_open(ThetaKind::EStarTheta); }
    const Family& etheta_closed() const { return theta_closed(ThetaKind::EStarTheta); }
    Mask etheta_closure(Mask a) const { return theta_closure(ThetaKind::EStarTheta, a); }
    Mask etheta_interior(Mask a) const { return theta_interior(ThetaKind::EStarTheta, a); }
    Mask estar_closure(Mask a) const { return kind_closure(Kind::EStar, a); }

    /// Sets both open and closed in the given sense.
    const Family& estar_regular() const { return estar_regular_; }
    const Family& theta_regular(ThetaKind tk) const { return theta_regular_[static_cast<std::size_t>(tk)]; }
    const Family& regular_closed() const { return regular_closed_; }

    /// Generalized-closed sets, decided by quantifying over enclosing sets.
    const Family& g_closed(GVariant v) const;
    /// Complements of g_closed(v).
    const Family& g_open(GVariant v) const;

private:
    struct Lazy {
        std::once_flag once;
        Family closed;
        Family open;
    };

    void build_g(GVariant v, Lazy& slot) const;

    Space space_;
    std::vector<Mask> interior_;
    std::vector<Mask> delta_interior_;
    Family closed_;
    std::array<Family, all_kinds.size()> families_;
    std::array<std::vector<Mask>, 2> theta_interior_;
    std::array<Family, 2> theta_open_;
    std::array<Family, 2> theta_closed_;
    std::array<Family, 2> theta_regular_;
    Family estar_regular_;
    Family regular_closed_;
    mutable std::array<Lazy, 2> g_;
};

}  // namespace finitop
