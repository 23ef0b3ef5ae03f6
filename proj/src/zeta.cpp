#include "charsum/zeta.hpp"

#include <numeric>

namespace charsum {

int genus(const CoverSpec& cover) {
    require(cover.totally_ramified(), errc::not_totally_ramified,
            "some branch exponent shares a factor with n");
    return (cover.n - 1) * (cover.d() - 1) / 2;
}

std::int64_t count_points(const CoverSpec& cover, int k, Exec exec) {
    require(cover.totally_ramified(), errc::not_totally_ramified,
            "point counting assumes one point above each branch point");
    auto [E, eps] = extend_and_embed(cover.field, k);
    const std::int64_t Q = E->q();
    const std::int64_t g = std::gcd<std::int64_t>(cover.n, Q - 1);

    std::vector<FqElem> alphas_up;
    for (const auto& al : cover.alphas) alphas_up.push_back(eps(al));

    struct Acc {
        std::int64_t n = 0;
    };
    Acc total = block_reduce<Acc>(
        Q, exec,
        [&](std::int64_t xi, Acc& acc) {
            FqElem x = E->elem(xi);
            FqElem fx = E->one();
            for (int i = 0; i < cover.d(); ++i) {
                FqElem lin = E->sub(x, alphas_up[static_cast<std::size_t>(i)]);
                if (lin.is_zero()) return;
                fx = E->mul(fx, E->pow(lin, cover.ns[static_cast<std::size_t>(i)]));
            }
            if (E->dlog(fx) % g == 0) acc.n += g;
        },
        [](Acc& tot, const Acc& part) { tot.n += part.n; });

    return total.n + cover.d() + 1;
}

std::vector<BigInt> zeta_assembly(const CoverSpec& cover, Exec exec) {
    const FieldSpec& F = cover.F();
    const std::int64_t m = F.q() - 1;
    for (int j = 1; j < cover.n; ++j) cover.require_character(j);

    std::vector<CycNum> prod{CycNum::integer(m, 1)};
    for (int j = 1; j < cover.n; ++j) {
        LPolynomial L = lseries_oracle_artin(cover, j, exec);
        std::vector<CycNum> next(prod.size() + L.coeffs.size() - 1, CycNum::zero(m));
        for (std::size_t i = 0; i < prod.size(); ++i)
            for (std::size_t t = 0; t < L.coeffs.size(); ++t) next[i + t] += prod[i] * L.coeffs[t];
        prod = std::move(next);
    }
    // trim trailing zeros down to the expected degree, then certify integrality
    while (prod.size() > 1 && prod.back().is_zero()) prod.pop_back();
    std::vector<BigInt> out;
    out.reserve(prod.size());
    for (const auto& c : prod) {
        auto v = c.as_rational_integer();
        require(v.has_value(), errc::inexact_division,
                "zeta numerator coefficient is not a rational integer");
        out.push_back(*v);
    }
    require(out.front() == 1, errc::precondition_failed, "zeta numerator constant term != 1");
    require(static_cast<int>(out.size()) - 1 == 2 * genus(cover), errc::precondition_failed,
            "zeta numerator degree != 2g");
    return out;
}

namespace {

// power sums of the reciprocal roots of 1 + b_1 t + ... + b_B t^B: with
// e_k = (-1)^k b_k, Newton gives p_k = e_1 p_{k-1} - e_2 p_{k-2} + ...
// + (-1)^k k e_k ... rearranged below
std::vector<BigInt> power_sums(const std::vector<BigInt>& numer, int K) {
    const int B = static_cast<int>(numer.size()) - 1;
    std::vector<BigInt> e(static_cast<std::size_t>(K + 1), 0);
    for (int k = 0; k <= K && k <= B; ++k)
        e[static_cast<std::size_t>(k)] = (k % 2 == 0) ? numer[static_cast<std::size_t>(k)]
                                                      : -numer[static_cast<std::size_t>(k)];
    std::vector<BigInt> pcur(static_cast<std::size_t>(K + 1), 0);
    for (int k = 1; k <= K; ++k) {
        BigInt pk = 0;
        for (int i = 1; i < k; ++i) {
            BigInt term = e[static_cast<std::size_t>(i)] * pcur[static_cast<std::size_t>(k - i)];
            pk += (i % 2 == 1) ? term : -term;
        }
        BigInt last = BigInt(k) * e[static_cast<std::size_t>(k)];
        pk += (k % 2 == 1) ? last : -last;
        pcur[static_cast<std::size_t>(k)] = pk;
    }
    return pcur;
}

// inverse direction: elementary symmetric data from power sums
std::vector<BigInt> numerator_from_power_sums(const std::vector<BigInt>& p, int deg) {
    std::vector<BigInt> e(static_cast<std::size_t>(deg + 1), 0);
    e[0] = 1;
    for (int k = 1; k <= deg; ++k) {
        BigInt acc = 0;
        for (int i = 1; i <= k; ++i) {
            BigInt term = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)];
            acc += (i % 2 == 1) ? term : -term;
        }
        e[static_cast<std::size_t>(k)] = acc / k; // exact for symmetric data
    }
    std::vector<BigInt> numer(static_cast<std::size_t>(deg + 1));
    for (int k = 0; k <= deg; ++k)
        numer[static_cast<std::size_t>(k)] = (k % 2 == 0) ? e[static_cast<std::size_t>(k)]
                                                          : -e[static_cast<std::size_t>(k)];
    return numer;
}

} // namespace

nlohmann::json PointCountReport::to_json() const {
    nlohmann::json j;
    j["N"] = counted;
    j["predicted"] = predicted;
    nlohmann::json nl = nlohmann::json::array();
    for (const auto& c : numerator_lseries) nl.push_back(bigint_to_json(c));
    j["numerator_lseries"] = nl;
    if (!numerator_counts.empty()) {
        nlohmann::json nc = nlohmann::json::array();
        for (const auto& c : numerator_counts) nc.push_back(bigint_to_json(c));
        j["numerator_counts"] = nc;
    }
    j["match"] = match;
    return j;
}

PointCountReport verify_counts(const CoverSpec& cover, int K, Exec exec) {
    require(K >= 1, errc::bad_argument, "need K >= 1");
    PointCountReport rep;
    rep.numerator_lseries = zeta_assembly(cover, exec);
    const int twog = static_cast<int>(rep.numerator_lseries.size()) - 1;

    auto p = power_sums(rep.numerator_lseries, K);
    BigInt qk = 1;
    for (int k = 1; k <= K; ++k) {
        qk *= cover.F().q();
        BigInt pred = qk + 1 - p[static_cast<std::size_t>(k)];
        rep.predicted.push_back(static_cast<std::int64_t>(pred));
        rep.counted.push_back(count_points(cover, k, exec));
    }
    rep.match = rep.predicted == rep.counted;

    if (K >= twog) {
        std::vector<BigInt> ps(static_cast<std::size_t>(twog + 1), 0);
        BigInt qq = 1;
        for (int k = 1; k <= twog; ++k) {
            qq *= cover.F().q();
            ps[static_cast<std::size_t>(k)] = qq + 1 - rep.counted[static_cast<std::size_t>(k - 1)];
        }
        rep.numerator_counts = numerator_from_power_sums(ps, twog);
    }
    return rep;
}

} // namespace charsum
