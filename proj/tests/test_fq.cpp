#include "doctest.h"

#include <set>

#include "charsum/fq.hpp"

using namespace charsum;

TEST_CASE("deterministic construction") {
    auto F5 = build_field(5, 1);
    CHECK(F5->q() == 5);
    CHECK(F5->generator().idx == 2); // ord(2) = 4

    auto F9 = build_field(3, 2, std::vector<std::int64_t>{1, 0, 1}); // x^2+1, no root mod 3
    CHECK(F9->q() == 9);
    auto F9auto = build_field(3, 2);
    CHECK(F9auto->modulus() == std::vector<std::int64_t>{1, 0, 1});
    CHECK(F9auto->coeffs(F9auto->generator()) == std::vector<std::int64_t>{1, 1}); // x+1

    CHECK_THROWS_AS(build_field(4, 1), error);
    CHECK_THROWS_AS(build_field(3, 2, std::vector<std::int64_t>{2, 0, 1}), error); // x^2+2 = (x-1)(x+1)
}

TEST_CASE("arithmetic examples") {
    auto F5 = build_field(5, 1);
    CHECK(F5->mul(F5->elem(2), F5->elem(3)) == F5->one());
    CHECK(F5->inv(F5->elem(2)) == F5->elem(3));
    CHECK_THROWS_AS(F5->inv(F5->zero()), error);

    auto F9 = build_field(3, 2);
    FqElem x = F9->from_coeffs({0, 1});
    CHECK(F9->mul(x, x) == F9->scalar(-1)); // modulus relation x^2 = -1

    auto F7 = build_field(7, 1);
    CHECK_THROWS_AS(F5->add(F5->one(), F7->one()), error);
}

TEST_CASE("dlog basics") {
    auto F5 = build_field(5, 1);
    CHECK(F5->dlog(F5->one()) == 0);
    CHECK(F5->dlog(F5->elem(2)) == 1);
    CHECK(F5->dlog(F5->elem(4)) == 2);
    CHECK_THROWS_AS(F5->dlog(F5->zero()), error);
}

TEST_CASE("generator and dlog round-trip, all prime powers up to 512") {
    int fields = 0;
    for (std::int64_t p = 2; p <= 512; ++p) {
        if (!is_prime(p)) continue;
        for (std::int64_t q = p; q <= 512; q *= p) {
            int h = 0;
            for (std::int64_t t = q; t > 1; t /= p) ++h;
            auto F = build_field(p, h);
            ++fields;
            REQUIRE(F->q() == q);
            // enumeration hits q distinct elements; dlog inverts gen_pow
            for (std::int64_t i = 1; i < F->q(); ++i) {
                FqElem x = F->elem(i);
                CHECK(F->gen_pow(F->dlog(x)) == x);
            }
            // generator order is exactly q-1
            for (std::int64_t ell : prime_factors(F->q() - 1))
                CHECK_FALSE(F->pow(F->generator(), (F->q() - 1) / ell) == F->one());
        }
    }
    CHECK(fields > 100);
}

TEST_CASE("embeddings are ring maps") {
    auto F5 = build_field(5, 1);
    auto [same, id] = extend_and_embed(F5, 1);
    CHECK(same.get() == F5.get());
    CHECK(id(F5->elem(3)) == F5->elem(3));

    auto [F25, eps] = extend_and_embed(F5, 2);
    CHECK(F25->q() == 25);
    CHECK(eps.stride == 6);
    CHECK(eps(F5->elem(2)) == F25->gen_pow(6)); // eps(g) = G^((q^k-1)/(q-1))
    CHECK(F25->mul(eps(F5->elem(2)), eps(F5->elem(3))) == eps(F5->one()));

    // every prime power q <= 49, k <= 2, all pairs
    for (std::int64_t p = 2; p <= 49; ++p) {
        if (!is_prime(p)) continue;
        for (std::int64_t q = p; q <= 49; q *= p) {
            int h = 0;
            for (std::int64_t t = q; t > 1; t /= p) ++h;
            auto base = build_field(p, h);
            for (int k = 1; k <= 2; ++k) {
                auto [ext, emb] = extend_and_embed(base, k);
                CHECK(ext->q() == (k == 1 ? q : q * q));
                for (std::int64_t i = 0; i < base->q(); ++i)
                    for (std::int64_t j = 0; j < base->q(); ++j) {
                        FqElem x = base->elem(i), y = base->elem(j);
                        CHECK(emb(base->add(x, y)) == ext->add(emb(x), emb(y)));
                        CHECK(emb(base->mul(x, y)) == ext->mul(emb(x), emb(y)));
                    }
            }
        }
    }
}

TEST_CASE("enumeration yields exactly q distinct elements") {
    for (auto [p, h] : {std::pair<std::int64_t, int>{7, 1}, {3, 3}, {2, 5}}) {
        auto F = build_field(p, h);
        std::set<std::vector<std::int64_t>> seen;
        for (std::int64_t i = 0; i < F->q(); ++i) {
            auto cs = F->coeffs(F->elem(i));
            CHECK(F->from_coeffs(cs) == F->elem(i));
            seen.insert(cs);
        }
        CHECK(static_cast<std::int64_t>(seen.size()) == F->q());
    }
}

TEST_CASE("field spec json") {
    auto F9 = build_field(3, 2);
    auto j = F9->to_json();
    CHECK(j["p"] == 3);
    CHECK(j["h"] == 2);
    CHECK(j["modulus"] == nlohmann::json::array({1, 0, 1}));
    CHECK(j["generator"] == nlohmann::json::array({1, 1}));
}
