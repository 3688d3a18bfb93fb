#include "finitop/space.hpp"

#include <algorithm>
#include <cstdio>

namespace finitop {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v, int bytes) {
    for (int i = 0; i < bytes; ++i) {
        h ^= (v >> (8 * i)) & 0xffU;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Smallest open neighbourhood of every point, given a family containing X.
std::vector<Mask> minimal_neighbourhoods(int n, std::span<const Mask> family) {
    std::vector<Mask> nbhd(n, full_mask(n));
    for (Mask u : family) {
        for_each_point(u, [&](int x) { nbhd[x] &= u; });
    }
    return nbhd;
}

// All A with nbhd[x] ⊆ A for every x ∈ A, ascending.
std::vector<Mask> upsets(int n, const std::vector<Mask>& nbhd) {
    std::vector<Mask> out;
    const Mask total = full_mask(n);
    for (Mask a = 0;; ++a) {
        bool ok = true;
        for_each_point(a, [&](int x) { ok = ok && is_subset(nbhd[x], a); });
        if (ok) out.push_back(a);
        if (a == total) break;
    }
    return out;
}

void require_point_count(int n) {
    if (n < 1) throw TopologyError(ErrorCode::Malformed, "a space needs at least one point");
    if (n > max_points) {
        throw TopologyError(ErrorCode::TooManyPoints,
                            "at most " + std::to_string(max_points) + " points supported, got " + std::to_string(n));
    }
}

}  // namespace

Space::Space(int n, std::vector<Mask> opens) : n_(n), opens_(std::move(opens)) {
    const Mask total = full_mask(n_);
    closeds_.reserve(opens_.size());
    for (Mask u : opens_) closeds_.push_back(~u & total);
    std::sort(closeds_.begin(), closeds_.end());
    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = fnv1a(h, static_cast<std::uint64_t>(n_), 1);
    for (Mask u : opens_) h = fnv1a(h, u, 4);
    fingerprint_ = h;
}

Space Space::validate(int n, std::vector<Mask> opens) {
    require_point_count(n);
    const Mask total = full_mask(n);
    for (Mask u : opens) {
        if ((u & ~total) != 0) {
            throw TopologyError(ErrorCode::PointOutOfRange,
                                "open set 0x" + mask_to_hex(u) + " names a point outside 0.." + std::to_string(n - 1),
                                u);
        }
    }
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    if (opens.empty() || opens.front() != 0) throw TopologyError(ErrorCode::MissingEmpty, "the empty set is not open");
    if (opens.back() != total) throw TopologyError(ErrorCode::MissingFull, "the full point set is not open");

    // A finite family with ∅ and X is a topology iff it equals the up-sets of
    // its own minimal-neighbourhood preorder. Only on failure do we pay for the
    // pairwise scan that names the offending pair.
    if (upsets(n, minimal_neighbourhoods(n, opens)) != opens) {
        std::vector<bool> member(std::size_t{1} << n, false);
        for (Mask u : opens) member[u] = true;
        for (std::size_t i = 0; i < opens.size(); ++i) {
            for (std::size_t j = i + 1; j < opens.size(); ++j) {
                const Mask a = opens[i], b = opens[j];
                if (!member[a | b]) {
                    throw TopologyError(ErrorCode::NotClosedUnderUnion,
                                        "union of " + Subset(a, n).to_string() + " and " + Subset(b, n).to_string() +
                                            " is not open",
                                        a, b);
                }
                if (!member[a & b]) {
                    throw TopologyError(ErrorCode::NotClosedUnderIntersection,
                                        "intersection of " + Subset(a, n).to_string() + " and " +
                                            Subset(b, n).to_string() + " is not open",
                                        a, b);
                }
            }
        }
    }
    return Space(n, std::move(opens));
}

Space Space::validate(int n, const std::vector<Subset>& opens) {
    require_point_count(n);
    std::vector<Mask> masks;
    masks.reserve(opens.size());
    for (const Subset& s : opens) {
        if (s.size() != n) {
            throw TopologyError(ErrorCode::DimensionMismatch, "subset " + s.to_string() + " belongs to a " +
                                                                  std::to_string(s.size()) + "-point space");
        }
        masks.push_back(s.bits());
    }
    return validate(n, std::move(masks));
}

Space Space::discrete(int n) {
    require_point_count(n);
    std::vector<Mask> all(std::size_t{1} << n);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Mask>(i);
    return Space(n, std::move(all));
}

Space Space::indiscrete(int n) {
    require_point_count(n);
    return Space(n, {0, full_mask(n)});
}

Space Space::generated_by(int n, std::span<const Mask> generators) {
    require_point_count(n);
    std::vector<Mask> family(generators.begin(), generators.end());
    for (Mask& g : family) g &= full_mask(n);
    return Space(n, upsets(n, minimal_neighbourhoods(n, family)));
}

std::string Space::fingerprint_hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fingerprint_));
    return buf;
}

bool Space::is_open(Mask a) const { return std::binary_search(opens_.begin(), opens_.end(), a); }

void Space::require_fits(const Subset& a) const {
    if (a.size() != n_) {
        throw TopologyError(ErrorCode::DimensionMismatch, "subset " + a.to_string() + " has " +
                                                              std::to_string(a.size()) + " points, space has " +
                                                              std::to_string(n_));
    }
}

Mask permute_mask(Mask m, std::span<const int> perm) {
    Mask out = 0;
    for_each_point(m, [&](int x) { out |= point_mask(perm[x]); });
    return out;
}

Space Space::permuted(std::span<const int> perm) const {
    std::vector<Mask> opens;
    opens.reserve(opens_.size());
    for (Mask u : opens_) opens.push_back(permute_mask(u, perm));
    std::sort(opens.begin(), opens.end());
    return Space(n_, std::move(opens));
}

}  // namespace finitop
