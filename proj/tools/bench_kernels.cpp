// Times the summation kernels serial vs OpenMP and reports the speedup. The
// two paths compute identical exact values; runs a cheap equality check on
// each pair as it goes.

#include <chrono>
#include <cstdio>

#include "charsum/census.hpp"
#include "charsum/verify.hpp"
#include "charsum/zeta.hpp"

using namespace charsum;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

template <class Fn>
void bench(const char* name, Fn&& fn) {
    auto t0 = clock_type::now();
    auto serial = fn(Exec::serial);
    double ts = ms_since(t0);
    t0 = clock_type::now();
    auto parallel = fn(Exec::openmp);
    double tp = ms_since(t0);
    bool same = serial == parallel;
    std::printf("%-34s %10.1f ms %10.1f ms %7.2fx  %s\n", name, ts, tp, ts / tp,
                same ? "equal" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    int threads = argc > 1 ? std::atoi(argv[1]) : 0;
    set_thread_count(threads);
    std::printf("%-34s %13s %13s %8s\n", "kernel", "serial", "openmp", "speedup");

    auto F61 = build_field(61, 1);
    bench("jacobi_plain d=3 q=61", [&](Exec e) {
        return jacobi_plain(*F61, ExponentTuple(*F61, {7, 11, 23}), e);
    });

    auto F31 = build_field(31, 1);
    auto cov31 = validate_cover(F31, 2, {F31->zero(), F31->one(), F31->elem(5)}, {1, 1, 1});
    bench("product formula q=31 r=1", [&](Exec e) {
        auto H = build_subspace_for_degree(cov31, 1);
        return product_formula(H, ExponentTuple(*F31, {15, 15, 15}), e,
                                  FactorRoute::normalized);
    });

    auto F13 = build_field(13, 1);
    auto cov13 = validate_cover(F13, 4, {F13->zero(), F13->one(), F13->elem(2), F13->elem(5)},
                                {1, 1, 1, 2});
    bench("product formula q=13 d=4", [&](Exec e) {
        auto H = build_subspace_for_degree(cov13, 2);
        ExponentTuple a(*F13, {3, 3, 3, 6});
        return product_formula(H, a, e, FactorRoute::normalized);
    });

    auto F9 = build_field(3, 2);
    auto cov9 = validate_cover(F9, 2, {F9->zero(), F9->one(), F9->elem(2)}, {1, 1, 1});
    bench("monic oracle q=9 d=3 (via r=2)", [&](Exec e) {
        return lseries_oracle_paper(cov9, 1, e).coeffs[2];
    });

    auto F7 = build_field(7, 1);
    auto cov7 = validate_cover(F7, 2, {F7->zero(), F7->one(), F7->elem(3)}, {1, 1, 1});
    bench("point count q=7 k=6", [&](Exec e) { return count_points(cov7, 6, e); });

    auto F101 = build_field(101, 1);
    bench("census rows q=101", [&](Exec e) {
        auto t = build_census(F101, e);
        return t.rows[17].c1_paper;
    });

    return 0;
}
