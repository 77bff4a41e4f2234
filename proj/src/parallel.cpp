#include "mtfde/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mtfde::parallel {

namespace {
std::atomic<int> g_threads{0};
}

void set_threads(int n) { g_threads.store(n < 0 ? 0 : n); }

int threads() { return g_threads.load(); }

bool parallel_enabled() {
#ifdef _OPENMP
    return g_threads.load() != 1;
#else
    return false;
#endif
}

namespace detail {

void run_indexed(std::size_t n, void* ctx, void (*fn)(void*, std::size_t)) {
#ifdef _OPENMP
    const int t = g_threads.load();
    if (t != 1 && n > 1) {
        if (t > 0) {
#pragma omp parallel for schedule(static) num_threads(t)
            for (long long i = 0; i < static_cast<long long>(n); ++i)
                fn(ctx, static_cast<std::size_t>(i));
        } else {
#pragma omp parallel for schedule(static)
            for (long long i = 0; i < static_cast<long long>(n); ++i)
                fn(ctx, static_cast<std::size_t>(i));
        }
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) fn(ctx, i);
}

}  // namespace detail
}  // namespace mtfde::parallel
