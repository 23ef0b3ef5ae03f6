#include "doctest.h"

#include <random>

#include "charsum/cyc.hpp"

using namespace charsum;

namespace {
CycNum zeta(std::int64_t m, std::int64_t k = 1) { return CycNum::zeta_pow(m, k); }
CycNum cint(std::int64_t m, std::int64_t v) { return CycNum::integer(m, v); }

CycNum random_cyc(std::mt19937_64& rng, std::int64_t m) {
    CycNum acc = CycNum::zero(m);
    std::uniform_int_distribution<std::int64_t> coef(-9, 9);
    std::uniform_int_distribution<std::int64_t> pos(0, m - 1);
    for (int t = 0; t < 4; ++t) acc += zeta(m, pos(rng)).mul_int(coef(rng));
    return acc;
}
} // namespace

TEST_CASE("cyclotomic polynomials by exact recursion") {
    CHECK(cyclotomic_polynomial(1) == std::vector<BigInt>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<BigInt>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<BigInt>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<BigInt>{1, 0, -1, 0, 1});
    for (std::int64_t m = 1; m <= 36; ++m) {
        // Phi_m(zeta_m) canonicalizes to zero
        const auto& phi = cyclotomic_polynomial(m);
        CycNum acc = CycNum::zero(m);
        for (std::size_t k = 0; k < phi.size(); ++k) acc += zeta(m, static_cast<std::int64_t>(k)).mul_int(phi[k]);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("ring operations") {
    CHECK(zeta(4) * zeta(4) == cint(4, -1));
    CHECK((cint(4, 1) + zeta(4)) + (cint(4, 1) - zeta(4)) == cint(4, 2));
    auto d = (cint(4, 2) + zeta(4).mul_int(2)).scalar_div(2);
    CHECK(d == cint(4, 1) + zeta(4));
    CHECK(d.canonical().denom == 1);
    CHECK_THROWS_AS(zeta(4) + zeta(6), error);
    CHECK_THROWS_AS(zeta(4).scalar_div(0), error);
    CHECK_THROWS_AS((cint(4, 3)).div_exact(2), error);
}

TEST_CASE("conjugation") {
    CHECK(zeta(4).conj() == -zeta(4));
    CHECK(cint(4, 5).conj() == cint(4, 5));
    CHECK((cint(4, 1) - zeta(4).mul_int(2)).conj() == cint(4, 1) + zeta(4).mul_int(2));
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
        auto x = random_cyc(rng, 12);
        CHECK(x.conj().conj() == x);
    }
}

TEST_CASE("galois action") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
        auto x = random_cyc(rng, 10);
        CHECK(x.galois_apply(1) == x);
        CHECK(x.galois_apply(9) == x.conj()); // t = m-1 is conjugation
        CHECK(x.galois_apply(3).galois_apply(7) == x.galois_apply(21 % 10));
    }
    CHECK_THROWS_AS(zeta(10).galois_apply(5), error);
}

TEST_CASE("complex embedding is advisory-consistent") {
    auto i = zeta(4).complex_embed();
    CHECK(std::abs(i.real()) < 1e-12);
    CHECK(std::abs(i.imag() - 1.0) < 1e-12);
    CycNum sum = CycNum::zero(4);
    for (int k = 0; k < 4; ++k) sum += zeta(4, k);
    CHECK(std::abs(sum.complex_embed()) < 1e-12);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 20; ++t) {
        auto x = random_cyc(rng, 12);
        auto lhs = x.conj().complex_embed();
        auto rhs = std::conj(x.complex_embed());
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("rational integer detection") {
    CHECK(cint(4, 7).as_rational_integer() == BigInt(7));
    CHECK((zeta(4) + zeta(4).conj()).as_rational_integer() == BigInt(0));
    CHECK_FALSE(zeta(4).as_rational_integer().has_value());
    CHECK_FALSE(zeta(4).scalar_div(2).mul_int(1).as_rational_integer().has_value());
}

TEST_CASE("reduction to the residue field") {
    auto F5 = build_field(5, 1);
    CHECK(zeta(4).reduce_to_field(*F5) == F5->elem(2)); // zeta -> generator
    CHECK((cint(4, 1) - zeta(4).mul_int(2)).reduce_to_field(*F5) == F5->elem(2)); // 1 - 4 = 2
    // Phi_4(zeta) reduces to 0
    CHECK((zeta(4) * zeta(4) + cint(4, 1)).reduce_to_field(*F5).is_zero());
    CHECK_THROWS_AS(cint(4, 1).scalar_div(5).reduce_to_field(*F5), error);
    CHECK_THROWS_AS(cint(6, 1).reduce_to_field(*F5), error);

    // ring-map property on random pairs
    for (auto spec : {std::pair<std::int64_t, int>{5, 1}, {7, 1}, {3, 2}, {13, 1}}) {
        auto F = build_field(spec.first, spec.second);
        std::mt19937_64 rng(static_cast<std::uint64_t>(F->q()));
        for (int t = 0; t < 200; ++t) {
            auto x = random_cyc(rng, F->q() - 1);
            auto y = random_cyc(rng, F->q() - 1);
            CHECK((x + y).reduce_to_field(*F) == F->add(x.reduce_to_field(*F), y.reduce_to_field(*F)));
            CHECK((x * y).reduce_to_field(*F) == F->mul(x.reduce_to_field(*F), y.reduce_to_field(*F)));
        }
    }
}

TEST_CASE("canonical form is idempotent and equality is an equivalence") {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 40; ++t) {
        auto x = random_cyc(rng, 12);
        auto can = x.canonical();
        CycNum rebuilt(12);
        CycNum acc = CycNum::zero(12);
        for (std::size_t k = 0; k < can.coeffs.size(); ++k)
            acc += CycNum::zeta_pow(12, static_cast<std::int64_t>(k)).mul_int(can.coeffs[k]);
        acc = acc.scalar_div(can.denom);
        CHECK(acc.canonical() == can);
        CHECK(x == acc);
        auto y = random_cyc(rng, 12), z = random_cyc(rng, 12);
        if (x == y && y == z) CHECK(x == z);
        CHECK(x == x);
        if (x == y) CHECK(y == x);
    }
}

TEST_CASE("json round-trip preserves canonical form") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 25; ++t) {
        auto x = random_cyc(rng, 12).scalar_div(3);
        auto j = x.to_json();
        auto back = CycNum::from_json(j);
        CHECK(back == x);
        CHECK(j["m"] == 12);
        CHECK(j.contains("approx"));
    }
    // big coefficients survive via the string fallback
    CycNum big = CycNum::integer(4, BigInt("123456789012345678901234567890"));
    CHECK(CycNum::from_json(big.to_json()) == big);
}
