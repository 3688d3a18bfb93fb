#include "finitop/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace finitop::kernels {

void subset_union_transform(std::span<Mask> f) {
    const std::int64_t total = static_cast<std::int64_t>(f.size());
    const bool parallel = f.size() >= parallel_threshold;
    // Classic zeta transform over the subset lattice, one dimension at a time.
    // Within a dimension, each A with the bit set only reads A without it, so
    // the inner loop has no cross-iteration dependence.
    for (std::int64_t bit = 1; bit < total; bit <<= 1) {
#pragma omp parallel for schedule(static) if (parallel)
        for (std::int64_t a = 0; a < total; ++a) {
            if ((a & bit) != 0) f[a] |= f[a ^ bit];
        }
    }
}

std::vector<Mask> collect(std::span<const std::uint8_t> member) {
    std::vector<Mask> out;
    for (std::size_t a = 0; a < member.size(); ++a) {
        if (member[a] != 0) out.push_back(static_cast<Mask>(a));
    }
    return out;
}

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace finitop::kernels
