#include "doctest.h"

#include <set>

#include "charsum/census.hpp"
#include "charsum/zeta.hpp"

using namespace charsum;

namespace {
BigInt c1_int(const FieldSpec& F, std::int64_t lam, const std::vector<CycNum>& S) {
    auto v = legendre_c1(F, F.elem(lam), S).as_rational_integer();
    REQUIRE(v.has_value());
    return *v;
}
} // namespace

TEST_CASE("trace formula anchors at q = 5") {
    auto F5 = build_field(5, 1);
    auto S = legendre_squares(*F5);
    // squared Jacobi sums behind the matrix: 1, -3-4i, 1, -3+4i
    CHECK(S[0].as_rational_integer() == BigInt(1));
    CHECK(S[2].as_rational_integer() == BigInt(1));
    CHECK(S[1] == CycNum::integer(4, -3) - CycNum::zeta_pow(4, 1).mul_int(4));
    CHECK(S[3] == S[1].conj());

    CHECK(c1_int(*F5, 1, S) == -1); // formal value at the degenerate lambda
    CHECK(c1_int(*F5, 2, S) == 2);
    CHECK(c1_int(*F5, 3, S) == -2);
    CHECK(c1_int(*F5, 4, S) == 2);
}

TEST_CASE("trace formula equals the oracle and the point counts") {
    for (auto spec : {std::pair<std::int64_t, int>{5, 1}, {7, 1}, {3, 2}, {13, 1}}) {
        auto F = build_field(spec.first, spec.second);
        auto S = legendre_squares(*F);
        for (std::int64_t lam = 2; lam < F->q(); ++lam) {
            auto cov = validate_cover(F, 2, {F->zero(), F->one(), F->elem(lam)}, {1, 1, 1});
            auto L = lseries_oracle_paper(cov, 1);
            CHECK(legendre_c1(*F, F->elem(lam), S) == L.coeffs[1]);
            // Hasse bound for the honest members of the family
            BigInt c = c1_int(*F, lam, S);
            CHECK(c * c <= 4 * F->q());
        }
    }
}

TEST_CASE("deuring polynomial and the mod-p congruence") {
    auto F5 = build_field(5, 1);
    auto d2 = deuring_mod_p(*F5, F5->elem(2));
    CHECK(d2.H_value == F5->elem(3)); // 1 + 4*2 + 4 = 13 = 3
    CHECK(d2.c1_reduced == F5->elem(2));
    CHECK(d2.congruence);
    CHECK_FALSE(d2.supersingular);

    auto F7 = build_field(7, 1);
    auto d6 = deuring_mod_p(*F7, F7->elem(6));
    CHECK(d6.H_value.is_zero());
    CHECK(d6.supersingular);
    CHECK(d6.congruence);

    for (auto spec : {std::pair<std::int64_t, int>{5, 1}, {7, 1}, {11, 1}, {13, 1}, {3, 2}}) {
        auto F = build_field(spec.first, spec.second);
        for (std::int64_t lam = 1; lam < F->q(); ++lam)
            CHECK(deuring_mod_p(*F, F->elem(lam)).congruence);
    }
}

TEST_CASE("census tables") {
    auto F5 = build_field(5, 1);
    auto t5 = build_census(F5);
    CHECK(t5.rows.size() == 4);
    CHECK(t5.rows[0].c1_paper == -1);
    CHECK(t5.rows[0].degenerate);
    CHECK(t5.rows[1].c1_paper == 2);
    CHECK(t5.rows[1].count_N1 == 8);
    CHECK(t5.count_supersingular == 0);
    CHECK(t5.count_exceeding == 2);

    auto F7 = build_field(7, 1);
    auto t7 = build_census(F7);
    CHECK(t7.rows[5].supersingular); // lambda = 6
    CHECK(t7.rows[5].count_N1 == 8);
    // p = 7 has one supersingular j-invariant whose lambda-orbit is {2, 4, 6}
    CHECK(t7.count_supersingular == 3);
    CHECK(t7.rows[1].supersingular);
    CHECK(t7.rows[3].supersingular);
    // q = 3 mod 4: artin and paper conventions differ by the bridge unit
    CHECK(t7.rows[0].bridge == -1);

    // supersingular set equals the Deuring root set
    for (auto spec : {std::pair<std::int64_t, int>{5, 1}, {7, 1}, {11, 1}, {13, 1}}) {
        auto F = build_field(spec.first, spec.second);
        auto table = build_census(F);
        std::set<std::int64_t> from_census, from_deuring;
        for (const auto& row : table.rows)
            if (row.supersingular) from_census.insert(row.lambda_index);
        for (std::int64_t lam = 1; lam < F->q(); ++lam)
            if (deuring_mod_p(*F, F->elem(lam)).supersingular) from_deuring.insert(lam);
        CHECK(from_census == from_deuring);
        // prime field: supersingular iff the integer trace is exactly zero
        for (const auto& row : table.rows)
            CHECK(row.supersingular == (row.c1_paper == 0));
    }

    // artin-side counts agree with honest point counting
    for (std::int64_t lam = 2; lam < 7; ++lam) {
        auto cov = validate_cover(F7, 2, {F7->zero(), F7->one(), F7->elem(lam)}, {1, 1, 1});
        CHECK(t7.rows[static_cast<std::size_t>(lam - 1)].count_N1 == count_points(cov, 1));
    }

    auto csv = t5.to_csv();
    CHECK(csv.find("lambda,c1_artin,c1_paper,count_N1,supersingular,bridge_unit") == 0);
    CHECK(csv.find("2,2,2,8,0,1") != std::string::npos);
}

TEST_CASE("hermitian census matrix") {
    auto F5 = build_field(5, 1);
    auto mat = hermitian_matrix(F5);
    CHECK(mat.dim() == 4);
    // first row is S_0, S_1, S_2, S_3
    CHECK(mat.entry_unprefixed(0, 1) == mat.squares[1]);
    CHECK(mat.entry_unprefixed(1, 0) == mat.squares[3]);
    for (int k = 0; k < 4; ++k)
        for (int s = 0; s < 4; ++s) {
            CHECK(mat.entry_unprefixed(s, k) == mat.entry_unprefixed(k, s).conj());
            // circulant: depends only on (s - k) mod (q-1)
            CHECK(mat.entry_unprefixed(k, s) == mat.squares[static_cast<std::size_t>(((s - k) % 4 + 4) % 4)]);
        }
    // trace of the prefixed matrix = S_0 = (J^{(0,a)})^2
    CHECK(mat.squares[0].as_rational_integer() == BigInt(1)); // = -1 + 2 - 2 + 2
}

TEST_CASE("characteristic polynomial equality") {
    auto F5 = build_field(5, 1);
    auto cp5 = charpoly_check(F5);
    CHECK(cp5.equal);
    CHECK(cp5.dft_diagonal);
    // (x+1)(x-2)^2(x+2) = x^4 - x^3 - 6x^2 + 4x + 8
    CHECK(cp5.from_matrix == std::vector<BigInt>{1, -1, -6, 4, 8});

    auto F13 = build_field(13, 1);
    auto cp13 = charpoly_check(F13);
    CHECK(cp13.equal);
    CHECK(cp13.dft_diagonal);
}

TEST_CASE("rank, signature and leading minors") {
    auto F5 = build_field(5, 1);
    auto rep = rank_and_signature(F5);
    CHECK(rep.eigenvalues == std::vector<BigInt>{-1, 2, -2, 2});
    CHECK(rep.rank == 4);
    CHECK(rep.n_positive == 2);
    CHECK(rep.n_negative == 2);
    CHECK(rep.n_zero == 0);
    REQUIRE(rep.minors.size() == 4);
    CHECK(rep.minors[0] == BigInt(1));
    CHECK(rep.minors[1] == BigInt(-24));
    CHECK(rep.minors[2] == BigInt(-64));
    CHECK(rep.minors[3] == BigInt(2048));
    CHECK(rep.positive_minors == 2);
    CHECK(rep.minors_claim_holds);

    auto F7 = build_field(7, 1);
    auto rep7 = rank_and_signature(F7);
    CHECK(rep7.n_zero == 3); // supersingular lambda-orbit {2, 4, 6}
    CHECK(rep7.rank == 3);

    // q = 13: minors are Hermitian-real but several leave the rational
    // integers, and the positive-minor count (5 by the embedded signs)
    // differs from the 7 positive eigenvalues even though no minor vanishes;
    // the sign-persistence count still matches the signature
    auto F13 = build_field(13, 1);
    auto rep13 = rank_and_signature(F13);
    CHECK(rep13.rank == 12);
    CHECK(rep13.n_positive == 7);
    CHECK_FALSE(rep13.all_minors_certified);
    CHECK_FALSE(rep13.minors_claim_holds);
    CHECK(rep13.positive_minors_advisory == 5);
    CHECK(rep13.jacobi_persistences_advisory == 7);
    CHECK(rep13.minors[1] == BigInt(-168));
    CHECK_FALSE(rep13.minors[2].has_value());
    CHECK_FALSE(rep13.warnings.empty());

    // q = 5 is the nondegenerate case where the literal claim holds
    CHECK(rep.jacobi_persistences_advisory == 2);
    CHECK(rep.positive_minors_advisory == 2);
}

TEST_CASE("quotient variety factor") {
    auto F5 = build_field(5, 1);
    // both lambda = 2, 3 satisfy lam^2 = -1; the sign of the constant term
    // differs between them, which is why the unit is reported
    auto q2 = quotient_factor_check(F5, F5->elem(2));
    CHECK(q2.c1_zero);
    CHECK(q2.c2_matches);
    CHECK(q2.conjugate_pair);
    CHECK(q2.unit == -1);
    CHECK(q2.paper_sign);
    auto q3 = quotient_factor_check(F5, F5->elem(3));
    CHECK(q3.c1_zero);
    CHECK(q3.c2_matches);
    CHECK(q3.conjugate_pair);
    CHECK(q3.unit == 1);
    CHECK_FALSE(q3.paper_sign);

    CHECK_THROWS_AS(quotient_factor_check(F5, F5->elem(4)), error); // 4^2 = 1

    auto F13 = build_field(13, 1);
    int qualifying = 0;
    for (std::int64_t lam = 2; lam < 13; ++lam) {
        if (!(F13->pow(F13->elem(lam), 6) == F13->scalar(-1))) continue;
        ++qualifying;
        auto qc = quotient_factor_check(F13, F13->elem(lam));
        CHECK(qc.c1_zero);
        CHECK(qc.c2_matches);
        CHECK(qc.conjugate_pair);
    }
    CHECK(qualifying == 6); // {2, 5, 6, 7, 8, 11}
}

TEST_CASE("matrix report json") {
    auto F5 = build_field(5, 1);
    auto j = rank_and_signature(F5).to_json();
    CHECK(j["rank"] == 4);
    CHECK(j["signature"]["positive"] == 2);
    CHECK(j["minors"] == nlohmann::json::array({1, -24, -64, 2048}));
    CHECK(j["minors_claim_holds"] == true);
}
