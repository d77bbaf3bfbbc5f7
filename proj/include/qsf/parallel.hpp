#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qsf/scalar.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsf::par {

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

/// Evaluates f(i) for i in [0, n) into a vector. The parallel path and the
/// serial reference path fill identical slots, so downstream reductions see
/// bit-identical inputs either way.
template <class T, class F>
std::vector<T> batch(std::size_t n, F&& f, bool parallel = true) {
    std::vector<T> out(n);
    if (parallel && n > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        return out;
#endif
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
}

/// Fixed-tree pairwise summation: the result depends only on the input
/// vector, never on thread count, so parallel runs stay reproducible.
template <class T>
T pairwise_sum(std::span<const T> v) {
    if (v.empty()) return T{};
    if (v.size() <= 8) {
        T acc = v[0];
        for (std::size_t i = 1; i < v.size(); ++i) acc += v[i];
        return acc;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

template <class T>
T pairwise_sum(const std::vector<T>& v) {
    return pairwise_sum(std::span<const T>(v));
}

}  // namespace qsf::par
