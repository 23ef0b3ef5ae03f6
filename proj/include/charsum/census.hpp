#ifndef CHARSUM_CENSUS_HPP
#define CHARSUM_CENSUS_HPP

#include <optional>
#include <string>

#include "charsum/lseries.hpp"

namespace charsum {

// Everything here concerns the Legendre family y^2 = x(x-1)(x-lambda): the
// trace values from the squared-Jacobi-sum average, the Deuring polynomial
// mod p, the supersingularity census, and the circulant Hermitian matrix
// whose spectrum consists of the per-lambda trace values.

// S_t = (J^{(-t, (q-1)/2)})^2 for t = 0..q-2; the building block of both the
// trace formula and the matrix
std::vector<CycNum> legendre_squares(const FieldSpec& F, Exec exec = Exec::openmp);

// c_1(lambda) = (q-1)^{-1} sum_j chi(lambda)^j S_j (exact; a rational integer)
CycNum legendre_c1(const FieldSpec& F, FqElem lambda, const std::vector<CycNum>& squares);
CycNum legendre_c1(const FieldSpec& F, FqElem lambda, Exec exec = Exec::openmp);

struct DeuringCheck {
    FqElem H_value;       // sum_j lambda^j C((q-1)/2, j)^2 in F_q
    FqElem c1_reduced;    // c_1(lambda) mod the fixed prime above p
    bool congruence;      // c_1 = -H(lambda)
    bool supersingular;   // H(lambda) = 0
};
DeuringCheck deuring_mod_p(const FieldSpec& F, FqElem lambda, Exec exec = Exec::openmp);

struct LegendreRow {
    std::int64_t lambda_index = 0;
    BigInt c1_paper;      // the (**) value
    BigInt c1_artin;      // bridge * c1_paper; N_1 = q + 1 + c1_artin
    std::int64_t count_N1 = 0;
    bool supersingular = false;
    bool degenerate = false; // lambda = 1 (kept: the census is about the formula values)
    int bridge = 1;
};

struct LegendreTraceTable {
    std::shared_ptr<const FieldSpec> field;
    std::vector<LegendreRow> rows; // lambda = 1..q-1 by element index
    int count_supersingular = 0;
    int count_exceeding = 0; // #E > q+1, artin convention

    std::string to_csv() const;
    nlohmann::json to_json() const;
};

LegendreTraceTable build_census(const std::shared_ptr<const FieldSpec>& F,
                                Exec exec = Exec::openmp);

// (q-1) x (q-1) circulant with unprefixed entries S_{(s-k) mod (q-1)}; the
// matrix itself carries the scalar 1/(q-1). Hermitian because conj(S_t) =
// S_{-t} (the middle exponent (q-1)/2 is fixed by negation mod q-1).
struct HermitianCensusMatrix {
    std::shared_ptr<const FieldSpec> field;
    std::vector<CycNum> squares;

    int dim() const { return static_cast<int>(squares.size()); }
    // 0-based, no 1/(q-1) prefactor
    const CycNum& entry_unprefixed(int k, int s) const {
        const int m = dim();
        return squares[static_cast<std::size_t>(((s - k) % m + m) % m)];
    }
};

HermitianCensusMatrix hermitian_matrix(const std::shared_ptr<const FieldSpec>& F,
                                       Exec exec = Exec::openmp);

// exact characteristic polynomial (monic, coefficients of x^{m-1}..x^0 after
// the leading 1) by the Faddeev-LeVerrier recurrence; divisions are exact
std::vector<CycNum> charpoly_exact(const std::vector<std::vector<CycNum>>& A);

struct CharpolyCheck {
    std::vector<BigInt> from_matrix; // certified integer coefficients, degree order m..0
    std::vector<BigInt> from_traces; // prod (x - c1(lambda)) expanded
    bool equal;
    bool dft_diagonal; // every circulant eigenvalue equals the matching c1
};
CharpolyCheck charpoly_check(const std::shared_ptr<const FieldSpec>& F, Exec exec = Exec::openmp);

struct CensusMatrixReport {
    std::vector<BigInt> eigenvalues; // c1 multiset by lambda index
    int rank = 0;
    int n_positive = 0;
    int n_negative = 0;
    int n_zero = 0;
    // leading minors are Hermitian-real but need not be rational integers
    // (for composite q-1 the Galois group moves them); integer certification
    // succeeds exactly on the rational ones
    std::vector<std::optional<BigInt>> minors;
    int positive_minors = 0;          // among the certified integers
    bool all_minors_certified = false;
    bool minors_claim_holds = false;  // exact comparison, certified minors only
    int positive_minors_advisory = 0; // float-embedded signs of all minors
    // sign persistences in (1, M_1, ..., M_{q-1}) by the embedded signs: the
    // classical criterion count, which keeps matching n_positive where the
    // positive-minor count does not (first at q = 13)
    int jacobi_persistences_advisory = 0;
    std::vector<std::string> warnings;

    nlohmann::json to_json() const;
};

// rank = #{c1 != 0}, signature from the exact integer eigenvalues, leading
// minors of the unprefixed matrix with Jacobi-criterion degeneracy warnings
CensusMatrixReport rank_and_signature(const std::shared_ptr<const FieldSpec>& F,
                                      Exec exec = Exec::openmp);

// y^4 = x(x-1)(x-lambda) with lambda^{(q-1)/2} = -1: the chi_f factor is
// 1 + 0 t + unit J^{(a,a,a)} t^2 with a = (q-1)/4 and unit a lambda-dependent
// sign (brute force shows both signs occur across the qualifying family),
// and the j = 3 factor is the conjugate.
struct QuotientFactorCheck {
    bool c1_zero = false;
    bool c2_matches = false;     // c_2 = unit * J^{(a,a,a)} with the computed unit
    int unit = 0;                // the sign, +-1
    bool paper_sign = false;     // unit = -1, the bare -J form
    bool conjugate_pair = false; // j = 3 factor is the conjugate of j = 1
};
QuotientFactorCheck quotient_factor_check(const std::shared_ptr<const FieldSpec>& F, FqElem lambda,
                                          Exec exec = Exec::openmp);

} // namespace charsum

#endif
