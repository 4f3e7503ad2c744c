#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qhc {

/// Execution policy for data-parallel kernels. Every parallel site writes
/// disjoint output slots and performs no cross-iteration reductions, so
/// serial and parallel runs produce bit-identical results; the serial path
/// doubles as the reference implementation.
enum class ExecPolicy { serial, parallel };

template <typename Fn>
void parallel_for(ExecPolicy policy, std::size_t count, Fn&& fn) {
#ifdef _OPENMP
    if (policy == ExecPolicy::parallel) {
        #pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
            fn(static_cast<std::size_t>(i));
        }
        return;
    }
#else
    (void)policy;
#endif
    for (std::size_t i = 0; i < count; ++i) {
        fn(i);
    }
}

/// Wall-clock seconds for benchmark timing.
double now_seconds();

/// Number of threads the parallel policy will use (1 without OpenMP).
int max_threads();

}
