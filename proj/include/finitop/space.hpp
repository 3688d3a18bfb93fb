#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "finitop/error.hpp"
#include "finitop/subset.hpp"

namespace finitop {

/// A validated finite topological space on points 0..n-1.
///
/// The open family is stored sorted ascending by mask and deduplicated; it
/// always contains the empty set and the full set and is closed under pairwise
/// union and intersection. The fingerprint hashes n and the open family, so two
/// Space values with equal fingerprints carry the same topology.
class Space {
public:
    /// Throws TopologyError naming the violated axiom (and offending pair).
    static Space validate(int n, std::vector<Mask> opens);
    static Space validate(int n, const std::vector<Subset>& opens);

    static Space discrete(int n);
    static Space indiscrete(int n);
    /// Topology generated by the given sets (closure under pairwise union and
    /// intersection, plus the empty and full sets).
    static Space generated_by(int n, std::span<const Mask> generators);

    int size() const { return n_; }
    Mask full() const { return full_mask(n_); }
    std::uint64_t fingerprint() const { return fingerprint_; }
    std::string fingerprint_hex() const;

    const std::vector<Mask>& opens() const { return opens_; }
    /// Complements of the opens, sorted ascending.
    const std::vector<Mask>& closeds() const { return closeds_; }

    bool is_open(Mask a) const;
    bool is_closed(Mask a) const { return is_open(~a & full()); }

    /// Throws DimensionMismatch unless a belongs to an n-point space.
    void require_fits(const Subset& a) const;
    Subset subset(Mask m) const { return Subset(m, n_); }

    /// Relabels points: point x becomes perm[x].
    Space permuted(std::span<const int> perm) const;

    bool operator==(const Space& o) const { return n_ == o.n_ && opens_ == o.opens_; }

private:
    Space(int n, std::vector<Mask> opens);

    int n_ = 0;
    std::vector<Mask> opens_;
    std::vector<Mask> closeds_;
    std::uint64_t fingerprint_ = 0;
};

inline Space validate_space(int n, const std::vector<Subset>& opens) { return Space::validate(n, opens); }

/// Applies a point permutation to a mask.
Mask permute_mask(Mask m, std::span<const int> perm);

}  // namespace finitop
