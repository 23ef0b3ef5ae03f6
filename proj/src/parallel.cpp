#include "charsum/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <omp.h>

namespace charsum {

namespace {
std::atomic<int> g_threads{0}; // 0 = not configured, use OpenMP default
}

void set_thread_count(int n) { g_threads.store(n > 0 ? n : 0); }

int thread_count() {
    int n = g_threads.load();
    if (n > 0) return n;
    if (const char* env = std::getenv("CHARSUM_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return omp_get_max_threads();
}

namespace detail {
int resolve_threads(std::int64_t n) {
    return static_cast<int>(std::min<std::int64_t>(thread_count(), std::max<std::int64_t>(n, 1)));
}
} // namespace detail

} // namespace charsum
