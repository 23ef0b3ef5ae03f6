#include "doctest.h"

#include "charsum/zeta.hpp"

using namespace charsum;

namespace {
CoverSpec legendre(const std::shared_ptr<const FieldSpec>& F, std::int64_t lambda) {
    return validate_cover(F, 2, {F->zero(), F->one(), F->elem(lambda)}, {1, 1, 1});
}
} // namespace

TEST_CASE("genus") {
    auto F5 = build_field(5, 1);
    CHECK(genus(legendre(F5, 2)) == 1);
    auto c43 = validate_cover(F5, 4, {F5->zero(), F5->one(), F5->elem(2)}, {1, 1, 1});
    CHECK(genus(c43) == 3);
    auto F7 = build_field(7, 1);
    auto c32 = validate_cover(F7, 3, {F7->zero(), F7->one()}, {1, 1});
    CHECK(genus(c32) == 1);

    // n = 4 with an exponent 2 is not totally ramified
    auto F13 = build_field(13, 1);
    auto mixed = validate_cover(F13, 4, {F13->zero(), F13->one(), F13->elem(2), F13->elem(5)},
                                {1, 1, 1, 2});
    CHECK_THROWS_AS(genus(mixed), error);
    CHECK_THROWS_AS(count_points(mixed, 1), error);
}

TEST_CASE("point count anchors") {
    auto F5 = build_field(5, 1);
    CHECK(count_points(legendre(F5, 2), 1) == 8);
    CHECK(count_points(legendre(F5, 2), 2) == 32);
    auto F7 = build_field(7, 1);
    CHECK(count_points(legendre(F7, 3), 1) == 4);
    CHECK(count_points(legendre(F7, 6), 1) == 8); // supersingular lambda
}

TEST_CASE("zeta numerator assembly") {
    auto F5 = build_field(5, 1);
    auto num = zeta_assembly(legendre(F5, 2));
    CHECK(num == std::vector<BigInt>{1, 2, 5});

    auto c43 = validate_cover(F5, 4, {F5->zero(), F5->one(), F5->elem(2)}, {1, 1, 1});
    auto num43 = zeta_assembly(c43);
    CHECK(num43.size() == 7); // degree 2g = 6
    CHECK(num43.front() == 1);

    // leading coefficient is q^g on the hyperelliptic family
    for (auto spec : {std::pair<std::int64_t, int>{5, 1}, {7, 1}, {13, 1}, {3, 2}}) {
        auto F = build_field(spec.first, spec.second);
        for (std::int64_t al = 2; al < std::min<std::int64_t>(F->q(), 6); ++al) {
            auto cv = legendre(F, al);
            auto nm = zeta_assembly(cv);
            CHECK(nm.back() == BigInt(F->q()));
        }
    }
}

TEST_CASE("newton identities tie the numerator to the counts") {
    auto F5 = build_field(5, 1);
    SUBCASE("elliptic anchor") {
        auto rep = verify_counts(legendre(F5, 2), 2);
        CHECK(rep.match);
        CHECK(rep.counted == std::vector<std::int64_t>{8, 32});
        CHECK(rep.predicted == std::vector<std::int64_t>{8, 32});
        CHECK(rep.numerator_counts == rep.numerator_lseries); // K = 2g here
    }
    SUBCASE("q = 7 lambda = 3") {
        auto F7 = build_field(7, 1);
        auto rep = verify_counts(legendre(F7, 3), 2);
        CHECK(rep.match);
        CHECK(rep.counted[0] == 4);
    }
    SUBCASE("genus three quartic") {
        auto c43 = validate_cover(F5, 4, {F5->zero(), F5->one(), F5->elem(2)}, {1, 1, 1});
        auto rep = verify_counts(c43, 2);
        CHECK(rep.match);
        CHECK(rep.numerator_counts.empty()); // K < 2g, no reconstruction
    }
    SUBCASE("a pentabranch hyperelliptic curve") {
        // y^2 = x(x-1)(x-2)(x-3)(x-4): d = 5, n0 = 1, genus 2
        std::vector<FqElem> br;
        for (int i = 0; i < 5; ++i) br.push_back(F5->elem(i));
        auto cov = validate_cover(F5, 2, br, {1, 1, 1, 1, 1});
        CHECK(genus(cov) == 2);
        auto rep = verify_counts(cov, 3); // q^3 = 125 evaluations, trivial
        CHECK(rep.match);
    }
    SUBCASE("cubic cover") {
        auto F7 = build_field(7, 1);
        auto cov = validate_cover(F7, 3, {F7->zero(), F7->one()}, {1, 1});
        auto rep = verify_counts(cov, 2);
        CHECK(rep.match);
    }
}

TEST_CASE("weil magnitudes, advisory float check") {
    // reciprocal roots of the elliptic numerator have |w| = sqrt(q)
    for (auto spec : {std::pair<std::int64_t, int>{5, 1}, {7, 1}, {13, 1}}) {
        auto F = build_field(spec.first, spec.second);
        for (std::int64_t al = 2; al < F->q(); ++al) {
            auto nm = zeta_assembly(legendre(F, al));
            // 1 + c t + q t^2 with roots w, conj(w): |w|^2 = q exactly when
            // the discriminant is <= 0; check via c^2 <= 4q (Hasse) and the
            // float roots directly
            double c = static_cast<double>(nm[1]);
            double qd = static_cast<double>(F->q());
            double disc = c * c - 4 * qd;
            CHECK(disc <= 0.0);
            double re = -c / 2.0;
            double im = std::sqrt(-disc) / 2.0;
            CHECK(std::abs(std::hypot(re, im) - std::sqrt(qd)) < 1e-6);
        }
    }
}

TEST_CASE("report json shape") {
    auto F5 = build_field(5, 1);
    auto rep = verify_counts(legendre(F5, 2), 2);
    auto j = rep.to_json();
    CHECK(j["N"] == nlohmann::json::array({8, 32}));
    CHECK(j["match"] == true);
    CHECK(j["numerator_lseries"] == nlohmann::json::array({1, 2, 5}));
    CHECK(j["numerator_counts"] == nlohmann::json::array({1, 2, 5}));
}
