#ifndef CHARSUM_ZETA_HPP
#define CHARSUM_ZETA_HPP

#include "charsum/lseries.hpp"

namespace charsum {

// g_Y = (n-1)(d-1)/2 for a totally ramified cover (one smooth-model point
// above each of the d+1 branch points)
int genus(const CoverSpec& cover);

// N_k = (d+1) + sum over x in F_{q^k} with f(x) != 0 of #{y : y^n = f(x)},
// counted by enumeration in the extension field; deliberately free of
// character sums so it can sit on the other side of every identity under test
std::int64_t count_points(const CoverSpec& cover, int k, Exec exec = Exec::openmp);

// numerator of Z(Y, t): prod over j = 1..n-1 of the artin-convention
// L-polynomial; degree 2g, integer coefficients, constant term 1
std::vector<BigInt> zeta_assembly(const CoverSpec& cover, Exec exec = Exec::openmp);

struct PointCountReport {
    std::vector<std::int64_t> counted;              // N_1..N_K by enumeration
    std::vector<std::int64_t> predicted;            // from the numerator, Newton identities
    std::vector<BigInt> numerator_lseries;          // assembled numerator
    std::vector<BigInt> numerator_counts;           // rebuilt from counts when K >= 2g
    bool match = false;

    nlohmann::json to_json() const;
};

PointCountReport verify_counts(const CoverSpec& cover, int K, Exec exec = Exec::openmp);

} // namespace charsum

#endif
