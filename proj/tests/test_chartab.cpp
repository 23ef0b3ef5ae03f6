#include "doctest.h"

#include "charsum/chartab.hpp"

using namespace charsum;

TEST_CASE("teichmuller basics") {
    auto F5 = build_field(5, 1);
    CHECK(teichmuller(*F5, F5->one()) == CycNum::integer(4, 1));
    CHECK(teichmuller(*F5, F5->elem(2)) == CycNum::zeta_pow(4, 1));
    CHECK(teichmuller(*F5, F5->elem(4)) == CycNum::integer(4, -1)); // zeta^2
}

TEST_CASE("zero convention holds for every exponent") {
    auto F5 = build_field(5, 1);
    CHECK(char_eval(*F5, 0, F5->elem(3)) == CycNum::integer(4, 1));
    for (std::int64_t a = 0; a <= 3; ++a) CHECK(char_eval(*F5, a, F5->zero()).is_zero());
    CHECK(char_eval(*F5, 2, F5->elem(2)) == CycNum::integer(4, -1));
}

TEST_CASE("multiplicativity and orthogonality, all prime powers up to 49") {
    std::vector<std::pair<std::int64_t, int>> specs;
    for (std::int64_t p = 2; p <= 49; ++p) {
        if (!is_prime(p)) continue;
        for (std::int64_t q = p; q <= 49; q *= p) {
            int h = 0;
            for (std::int64_t t = q; t > 1; t /= p) ++h;
            specs.push_back({p, h});
        }
    }
    for (auto spec : specs) {
        auto F = build_field(spec.first, spec.second);
        const std::int64_t m = F->q() - 1;
        for (std::int64_t a = 0; a < m; ++a) {
            for (std::int64_t x = 1; x < F->q(); ++x)
                for (std::int64_t y = 1; y < F->q(); ++y) {
                    auto lhs = char_eval(*F, a, F->mul(F->elem(x), F->elem(y)));
                    auto rhs = char_eval(*F, a, F->elem(x)) * char_eval(*F, a, F->elem(y));
                    CHECK(lhs == rhs);
                }
            CycNum sum = CycNum::zero(m);
            for (std::int64_t x = 1; x < F->q(); ++x) sum += char_eval(*F, a, F->elem(x));
            if (a == 0)
                CHECK(sum == CycNum::integer(m, m));
            else
                CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("compatibility with reduction") {
    for (auto spec : {std::pair<std::int64_t, int>{5, 1}, {7, 1}, {3, 2}, {13, 1}}) {
        auto F = build_field(spec.first, spec.second);
        for (std::int64_t x = 0; x < F->q(); ++x)
            CHECK(char_eval(*F, 1, F->elem(x)).reduce_to_field(*F) == F->elem(x));
    }
}

TEST_CASE("character exponent is canonical") {
    auto F5 = build_field(5, 1);
    Character chi(*F5, -1);
    CHECK(chi.exponent == 3);
    CHECK(chi(F5->elem(2)) == CycNum::zeta_pow(4, 3));
}
