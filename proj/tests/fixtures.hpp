#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "finitop/space.hpp"

namespace fixtures {

using finitop::Mask;
using finitop::Space;

inline Mask set(std::initializer_list<int> points) {
    Mask m = 0;
    for (int x : points) m |= Mask{1} << x;
    return m;
}

inline std::vector<Mask> sets(std::initializer_list<std::initializer_list<int>> family) {
    std::vector<Mask> out;
    for (auto s : family) out.push_back(set(s));
    return out;
}

// The three four-point spaces of the worked examples, a..d as 0..3.
inline Space s1() { return Space::validate(4, sets({{}, {0}, {1}, {0, 1}, {0, 2, 3}, {0, 1, 2, 3}})); }
inline Space s2() { return Space::validate(4, sets({{}, {0}, {1}, {0, 1}, {0, 1, 2}, {0, 1, 2, 3}})); }
inline Space s3() {
    return Space::validate(4, sets({{}, {0}, {1}, {0, 1}, {0, 2}, {0, 1, 2}, {0, 1, 3}, {0, 1, 2, 3}}));
}
inline Space sierpinski() { return Space::validate(2, sets({{}, {0}, {0, 1}})); }

// Every subset of an n-point set except those listed.
inline std::vector<Mask> all_but(int n, std::vector<Mask> missing) {
    std::vector<Mask> out;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        bool skip = false;
        for (Mask x : missing) skip = skip || x == m;
        if (!skip) out.push_back(m);
    }
    return out;
}

inline bool closed_under_union_and_meet(const std::vector<Mask>& fam, int n) {
    auto has = [&](Mask m) {
        for (Mask f : fam) {
            if (f == m) return true;
        }
        return false;
    };
    if (!has(0) || !has((Mask{1} << n) - 1)) return false;
    for (Mask a : fam) {
        for (Mask b : fam) {
            if (!has(a | b) || !has(a & b)) return false;
        }
    }
    return true;
}

// Generate-and-filter count: every family of proper nonempty subsets,
// together with the empty and full sets, that satisfies the axioms.
inline std::size_t brute_force_topology_count(int n) {
    const Mask full = (Mask{1} << n) - 1;
    const int proper = static_cast<int>(full) - 1;  // masks 1..full-1
    std::size_t count = 0;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << proper); ++pick) {
        std::vector<Mask> fam{0, full};
        for (int i = 0; i < proper; ++i) {
            if (pick >> i & 1U) fam.push_back(static_cast<Mask>(i + 1));
        }
        if (closed_under_union_and_meet(fam, n)) ++count;
    }
    return count;
}

// Labeled topologies counted as preorders (reflexive, transitive relations),
// which correspond one to one with topologies on a finite set.
inline std::size_t preorder_count(int n) {
    std::vector<std::pair<int, int>> off;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) off.emplace_back(i, j);
        }
    }
    std::size_t count = 0;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << off.size()); ++pick) {
        bool rel[8][8] = {};
        for (int i = 0; i < n; ++i) rel[i][i] = true;
        for (std::size_t k = 0; k < off.size(); ++k) {
            if (pick >> k & 1U) rel[off[k].first][off[k].second] = true;
        }
        bool transitive = true;
        for (int i = 0; i < n && transitive; ++i) {
            for (int j = 0; j < n && transitive; ++j) {
                for (int k = 0; k < n && transitive; ++k) {
                    if (rel[i][j] && rel[j][k] && !rel[i][k]) transitive = false;
                }
            }
        }
        if (transitive) ++count;
    }
    return count;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace fixtures
