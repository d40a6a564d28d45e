#ifndef CSKNOT_PARALLEL_HPP
#define CSKNOT_PARALLEL_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace csknot {

/// Data-parallel loop over independent items. threads == 1 is the serial
/// reference path; threads == 0 means "all available". Results must be
/// written to per-index slots so scheduling cannot change the outcome.
template <class F>
void parallel_for(std::size_t count, int threads, F&& fn) {
#ifdef _OPENMP
    if (threads != 1 && count > 1) {
        const int want = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(want)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

} // namespace csknot

#endif
