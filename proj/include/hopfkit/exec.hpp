#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>

#ifdef HOPFKIT_HAVE_OPENMP
#include <omp.h>
#endif

namespace hopfkit {

// Every kernel that has an OpenMP variant keeps its serial loop; the two
// must produce identical results (tests compare them).
enum class Exec { serial, parallel };

inline int max_threads() {
#ifdef HOPFKIT_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Smallest index in [0, n) for which failed(i) is true, or n if none.
// The parallel variant scans in chunks and still reports the minimum.
template <typename Pred>
std::size_t first_failure(std::size_t n, Exec exec, Pred failed) {
    if (exec == Exec::serial || max_threads() == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            if (failed(i)) return i;
        return n;
    }
    std::size_t best = n;
#ifdef HOPFKIT_HAVE_OPENMP
    std::exception_ptr error;
    std::mutex mu;
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4) reduction(min : best)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto u = static_cast<std::size_t>(i);
        if (u >= best) continue;
        try {
            if (failed(u)) best = std::min(best, u);
        } catch (...) {
            const std::lock_guard<std::mutex> lock(mu);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
#endif
    return best;
}

// Runs body(i) for i in [0, n); body must only write to slot i of its output.
template <typename Body>
void for_each_index(std::size_t n, Exec exec, Body body) {
    if (exec == Exec::serial || max_threads() == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
#ifdef HOPFKIT_HAVE_OPENMP
    std::exception_ptr error;
    std::mutex mu;
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            const std::lock_guard<std::mutex> lock(mu);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
#endif
}

}  // namespace hopfkit
