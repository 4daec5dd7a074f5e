#include "qlift/parallel.hpp"

#ifdef QLIFT_HAVE_OPENMP
#include <omp.h>
#endif

namespace qlift::par {

namespace {
int g_workers = 0;  // 0 = not set yet, use the OpenMP default
}

int max_workers() {
    if (g_workers > 0) return g_workers;
#ifdef QLIFT_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_max_workers(int n) { g_workers = n < 1 ? 1 : n; }

void for_range(std::int64_t n, const std::function<void(std::int64_t)>& f) {
    int jobs = max_workers();
    if (jobs <= 1 || n < 2) {
        for (std::int64_t i = 0; i < n; ++i) f(i);
        return;
    }
#ifdef QLIFT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::int64_t i = 0; i < n; ++i) f(i);
#else
    for (std::int64_t i = 0; i < n; ++i) f(i);
#endif
}

}  // namespace qlift::par
