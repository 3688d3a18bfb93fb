#include "finitop/lattice.hpp"

#include <unordered_map>

#include "finitop/kernels.hpp"

namespace finitop {

Family Family::from_bitmap(int n, std::vector<std::uint8_t> bitmap) {
    Family f;
    f.n = n;
    f.member = std::move(bitmap);
    f.members = kernels::collect(f.member);
    f.inner.assign(f.member.size(), 0);
    for (Mask a : f.members) f.inner[a] = a;
    kernels::subset_union_transform(f.inner);
    bool closed = true;
    for (std::size_t a = 0; a < f.inner.size() && closed; ++a) closed = f.member[f.inner[a]] != 0;
    f.union_closed = closed;
    return f;
}

Family Family::complemented() const {
    const Mask total = full_mask(n);
    std::vector<std::uint8_t> bitmap(member.size(), 0);
    for (Mask a : members) bitmap[~a & total] = 1;
    return from_bitmap(n, std::move(bitmap));
}

Lattice::Lattice(Space space) : space_(std::move(space)) {
    const int n = space_.size();
    const Mask total = full();

    std::vector<std::uint8_t> open_bits(subset_count(), 0);
    for (Mask u : space_.opens()) open_bits[u] = 1;
    families_[static_cast<std::size_t>(Kind::Open)] = Family::from_bitmap(n, open_bits);
    interior_ = family(Kind::Open).inner;
    closed_ = family(Kind::Open).complemented();

    // x ∈ int_δ(B) iff some open U ∋ x has int(cl U) ⊆ B: file every open U
    // under int(cl U), then take unions over subsets.
    delta_interior_.assign(subset_count(), 0);
    for (Mask u : space_.opens()) delta_interior_[interior(closure(u))] |= u;
    kernels::subset_union_transform(delta_interior_);

    auto member_of = [&](Kind k, Mask a) -> bool {
        switch (k) {
            case Kind::Open: return open_bits[a] != 0;
            case Kind::Semi: return is_subset(a, closure(interior(a)));
            case Kind::Pre: return is_subset(a, interior(closure(a)));
            case Kind::B: return is_subset(a, closure(interior(a)) | interior(closure(a)));
            case Kind::Beta: return is_subset(a, closure(interior(closure(a))));
            case Kind::E: return is_subset(a, closure(delta_interior(a)) | interior(delta_closure(a)));
            case Kind::EStar: return is_subset(a, closure(interior(delta_closure(a))));
            case Kind::DeltaOpen: return (~a & total) == delta_closure(~a & total);
            case Kind::RegularOpen: return a == interior(closure(a));
        }
        return false;
    };
    for (Kind k : all_kinds) {
        if (k == Kind::Open) continue;
        families_[static_cast<std::size_t>(k)] =
            Family::from_bitmap(n, kernels::tabulate_predicate(n, [&](Mask a) { return member_of(k, a); }));
    }

    // x ∈ θ-int(B) iff some base-open U ∋ x has base-cl(U) ⊆ B.
    for (ThetaKind tk : all_theta_kinds) {
        const auto i = static_cast<std::size_t>(tk);
        const Family& base = family(base_kind(tk));
        std::vector<Mask> table(subset_count(), 0);
        for (Mask u : base.members) table[base.closure_of(u)] |= u;
        kernels::subset_union_transform(table);
        theta_interior_[i] = std::move(table);
        theta_closed_[i] = Family::from_bitmap(
            n, kernels::tabulate_predicate(n, [&](Mask a) { return theta_closure(tk, a) == a; }));
        theta_open_[i] = theta_closed_[i].complemented();
        theta_regular_[i] = Family::from_bitmap(n, kernels::tabulate_predicate(n, [&](Mask a) {
                                                    return theta_open_[i].contains(a) && theta_closed_[i].contains(a);
                                                }));
    }

    const Family& estar = family(Kind::EStar);
    estar_regular_ = Family::from_bitmap(
        n, kernels::tabulate_predicate(n, [&](Mask a) { return estar.contains(a) && estar.contains(~a & total); }));
    regular_closed_ = Family::from_bitmap(
        n, kernels::tabulate_predicate(n, [&](Mask a) { return a == closure(interior(a)); }));
}

void Lattice::build_g(GVariant v, Lazy& slot) const {
    const Family& enclosing = v == GVariant::GeStarTheta ? open_sets() : etheta_open();
    slot.closed = Family::from_bitmap(size(), kernels::tabulate_predicate(size(), [&](Mask a) {
        const Mask cl = etheta_closure(a);
        for (Mask u : enclosing.members) {
            if (is_subset(a, u) && !is_subset(cl, u)) return false;
        }
        return true;
    }));
    slot.open = slot.closed.complemented();
}

const Family& Lattice::g_closed(GVariant v) const {
    Lazy& slot = g_[static_cast<std::size_t>(v)];
    std::call_once(slot.once, [&] { build_g(v, slot); });
    return slot.closed;
}

const Family& Lattice::g_open(GVariant v) const {
    Lazy& slot = g_[static_cast<std::size_t>(v)];
    std::call_once(slot.once, [&] { build_g(v, slot); });
    return slot.open;
}

namespace {

class LatticeCache {
public:
    std::shared_ptr<const Lattice> get(const Space& space) {
        {
            std::lock_guard lock(mutex_);
            auto it = entries_.find(space.fingerprint());
            if (it != entries_.end() && it->second->space() == space) return it->second;
        }
        auto built = std::make_shared<const Lattice>(space);
        std::lock_guard lock(mutex_);
        if (entries_.size() >= capacity) return built;
        // Write-once: a concurrent builder that lost the race adopts the winner.
        auto [it, inserted] = entries_.try_emplace(space.fingerprint(), built);
        if (!inserted && !(it->second->space() == space)) return built;
        return it->second;
    }

private:
    static constexpr std::size_t capacity = 4096;
    std::mutex mutex_;
    std::unordered_map<std::uint64_t, std::shared_ptr<const Lattice>> entries_;
};

}  // namespace

std::shared_ptr<const Lattice> Lattice::of(const Space& space) {
    static LatticeCache cache;
    return cache.get(space);
}

}  // namespace finitop
