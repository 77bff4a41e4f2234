#pragma once

#include <cstddef>

namespace mtfde::parallel {

// Global worker count. 0 = use the OpenMP default, 1 = serial reference
// path. Loops parallelized through for_each_index write to disjoint output
// slots only, so results are bit-identical for every thread count.
void set_threads(int n);
int threads();
bool parallel_enabled();

namespace detail {
void run_indexed(std::size_t n, void* ctx, void (*fn)(void*, std::size_t));
}

template <class F>
void for_each_index(std::size_t n, F&& f) {
    detail::run_indexed(n, const_cast<void*>(static_cast<const void*>(&f)),
                        [](void* ctx, std::size_t i) { (*static_cast<F*>(ctx))(i); });
}

}  // namespace mtfde::parallel
