#include "doctest.h"

#include "charsum/census.hpp"
#include "charsum/zeta.hpp"

using namespace charsum;

// Every kernel keeps a serial reference path; the OpenMP path must reproduce
// it bit for bit (exact arithmetic makes the block order irrelevant).
TEST_CASE("serial and openmp paths agree") {
    auto F13 = build_field(13, 1);
    auto cov = validate_cover(F13, 2, {F13->zero(), F13->one(), F13->elem(2)}, {1, 1, 1});

    SUBCASE("jacobi sums") {
        ExponentTuple a(*F13, {3, 7, 5});
        CHECK(jacobi_plain(*F13, a, Exec::serial) == jacobi_plain(*F13, a, Exec::openmp));
        auto H = build_subspace_for_degree(cov, 1);
        ExponentTuple e6(*F13, {6, 6, 6});
        CHECK(jacobi_subspace_brute(H, e6, Exec::serial) ==
              jacobi_subspace_brute(H, e6, Exec::openmp));
        CHECK(product_formula(H, e6, Exec::serial) == product_formula(H, e6, Exec::openmp));
    }
    SUBCASE("oracles and counting") {
        auto s = lseries_oracle_paper(cov, 1, Exec::serial);
        auto p = lseries_oracle_paper(cov, 1, Exec::openmp);
        for (std::size_t r = 0; r < s.coeffs.size(); ++r) CHECK(s.coeffs[r] == p.coeffs[r]);
        CHECK(count_points(cov, 2, Exec::serial) == count_points(cov, 2, Exec::openmp));
    }
    SUBCASE("census rows") {
        auto ts = build_census(F13, Exec::serial);
        auto tp = build_census(F13, Exec::openmp);
        REQUIRE(ts.rows.size() == tp.rows.size());
        for (std::size_t i = 0; i < ts.rows.size(); ++i) {
            CHECK(ts.rows[i].c1_paper == tp.rows[i].c1_paper);
            CHECK(ts.rows[i].count_N1 == tp.rows[i].count_N1);
        }
    }
}

TEST_CASE("results are independent of the worker count") {
    auto F7 = build_field(7, 1);
    auto cov = validate_cover(F7, 2, {F7->zero(), F7->one(), F7->elem(3)}, {1, 1, 1});
    std::string first;
    for (int t : {1, 2, 3, 8}) {
        set_thread_count(t);
        auto j = lseries_oracle_artin(cov, 1).to_json().dump();
        if (first.empty())
            first = j;
        else
            CHECK(first == j);
    }
    set_thread_count(0);
}

TEST_CASE("block_reduce covers the whole range once") {
    for (int t : {1, 3, 5}) {
        set_thread_count(t);
        struct Acc {
            std::int64_t sum = 0;
        };
        auto total = block_reduce<Acc>(
            1000, Exec::openmp, [](std::int64_t i, Acc& a) { a.sum += i; },
            [](Acc& tot, const Acc& part) { tot.sum += part.sum; });
        CHECK(total.sum == 999 * 1000 / 2);
    }
    set_thread_count(0);
}
