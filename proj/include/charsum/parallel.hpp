#ifndef CHARSUM_PARALLEL_HPP
#define CHARSUM_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

namespace charsum {

// Execution policy for the summation kernels. Every kernel has a serial
// reference path; the OpenMP path partitions the index range into one
// contiguous block per thread and combines the per-thread partial sums in
// block order. All sums are exact, so both paths produce identical values.
enum class Exec { serial, openmp };

// Global worker count used by Exec::openmp (CLI --threads / CHARSUM_THREADS).
void set_thread_count(int n);
int thread_count();

namespace detail {
int resolve_threads(std::int64_t n);
}

// acc is default-constructed per block; body(i, acc) accumulates one index;
// combine(total, acc) folds a block result into the running total.
template <class Acc, class Body, class Combine>
Acc block_reduce(std::int64_t n, Exec exec, Body&& body, Combine&& combine) {
    if (exec == Exec::serial || detail::resolve_threads(n) <= 1) {
        Acc acc{};
        for (std::int64_t i = 0; i < n; ++i) body(i, acc);
        return acc;
    }
    const int nt = detail::resolve_threads(n);
    std::vector<Acc> parts(static_cast<std::size_t>(nt));
    const std::int64_t chunk = (n + nt - 1) / nt;
#pragma omp parallel for schedule(static, 1) num_threads(nt)
    for (int t = 0; t < nt; ++t) {
        const std::int64_t lo = t * chunk;
        const std::int64_t hi = std::min<std::int64_t>(n, lo + chunk);
        Acc& acc = parts[static_cast<std::size_t>(t)];
        for (std::int64_t i = lo; i < hi; ++i) body(i, acc);
    }
    Acc total{};
    for (Acc& part : parts) combine(total, part);
    return total;
}

} // namespace charsum

#endif
