#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "finitop/subset.hpp"

// Data-parallel loops over the 2^n subset lattice. Every kernel here has a
// definitional counterpart in reference.hpp that the tests compare against.

namespace finitop::kernels {

/// Below this many subsets the loops run serially.
inline constexpr std::size_t parallel_threshold = 4096;

/// In place: f[A] becomes the union of f[S] over all S ⊆ A.
void subset_union_transform(std::span<Mask> f);

/// out[A] = fn(A) for every A ⊆ X, |out| = 2^n.
template <typename Fn>
std::vector<Mask> tabulate(int n, Fn&& fn) {
    const std::int64_t total = std::int64_t{1} << n;
    std::vector<Mask> out(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static) if (static_cast<std::size_t>(total) >= parallel_threshold)
    for (std::int64_t a = 0; a < total; ++a) out[a] = fn(static_cast<Mask>(a));
    return out;
}

/// out[A] = pred(A) for every A ⊆ X.
template <typename Pred>
std::vector<std::uint8_t> tabulate_predicate(int n, Pred&& pred) {
    const std::int64_t total = std::int64_t{1} << n;
    std::vector<std::uint8_t> out(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static) if (static_cast<std::size_t>(total) >= parallel_threshold)
    for (std::int64_t a = 0; a < total; ++a) out[a] = pred(static_cast<Mask>(a)) ? 1 : 0;
    return out;
}

/// Ascending list of the A with member[A] set.
std::vector<Mask> collect(std::span<const std::uint8_t> member);

/// Runs fn(i) for i in [0, count) across threads; fn must only write to
/// slot i of caller-owned storage so aggregation stays order independent.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::int64_t total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < total; ++i) fn(static_cast<std::size_t>(i));
}

int thread_count();

}  // namespace finitop::kernels
