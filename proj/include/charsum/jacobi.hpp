#ifndef CHARSUM_JACOBI_HPP
#define CHARSUM_JACOBI_HPP

#include <cstdint>
#include <vector>

#include "charsum/chartab.hpp"
#include "charsum/cyc.hpp"
#include "charsum/fq.hpp"
#include "charsum/parallel.hpp"

namespace charsum {

// (a_1, ..., a_d), entries canonical mod q-1 with the signed originals kept
// for display.
struct ExponentTuple {
    std::vector<std::int64_t> raw;
    std::vector<std::int64_t> canon; // in [0, q-2]

    ExponentTuple(const FieldSpec& F, std::vector<std::int64_t> values);
    std::size_t size() const { return canon.size(); }
};

// gamma_1 z_1 + ... + gamma_d z_d + gamma
struct LinearForm {
    std::vector<FqElem> coeffs;
    FqElem constant;
};

// Affine subspace of F_q^d in solved form: z_1..z_r free and
// z_k = sum_j rows[k-r-1][j] z_j + consts[k-r-1] for k = r+1..d (1-based).
struct AffineSubspace {
    const FieldSpec* field = nullptr;
    int d = 0;
    int r = 0;
    std::vector<std::vector<FqElem>> rows; // (d-r) x r
    std::vector<FqElem> consts;            // d-r

    static AffineSubspace from_solved(const FieldSpec& F, int d, int r,
                                      std::vector<std::vector<FqElem>> rows,
                                      std::vector<FqElem> consts);
    // Gaussian elimination over F_q; free coordinates are chosen at the lowest
    // indices the system allows. Only systems whose free set comes out as
    // {z_1..z_r} are representable; anything else is NotSolvedForm.
    static AffineSubspace from_equations(const FieldSpec& F, const std::vector<LinearForm>& eqs);
};

// J^{(a)} = (-1)^{d-1} sum_{z_1+...+z_d+1=0} prod chi^{a_i}(z_i), d >= 2
CycNum jacobi_plain(const FieldSpec& F, const ExponentTuple& a, Exec exec = Exec::openmp);

// J_omega^{(a)} = sum over the zero set of omega
CycNum jacobi_form(const FieldSpec& F, const LinearForm& omega, const ExponentTuple& a,
                   Exec exec = Exec::openmp);

// J_H^{(a)} by enumeration of the q^r points of H
CycNum jacobi_subspace_brute(const AffineSubspace& H, const ExponentTuple& a,
                             Exec exec = Exec::openmp);

// Coefficient table of the character-basis expansion of
// chi^{a_k}(row.coeffs . z + row.constant) on nonzero z: entry at the odometer
// index of (i_1..i_r) is (q-1)^{-r} J_omega^{(-i_1,...,-i_r,a_k)}.
struct SolvedRow {
    std::vector<FqElem> coeffs;
    FqElem constant;
};
std::vector<CycNum> character_expansion(const FieldSpec& F, const SolvedRow& row, std::int64_t a_k,
                                     Exec exec = Exec::openmp);

// How the J_omega factors inside the product formula are produced: direct
// enumeration of each factor, or rescaling through normalize_form so every
// factor is a unit times a plain Jacobi sum (the route the explicit L-series
// formula takes). Both give the same value; "normalized" requires every row
// coefficient and constant to be nonzero.
enum class FactorRoute { direct, normalized };

// (q-1)^{r(d-r-1)} J_H^{(a)} as the sum over all index tuples of the product
// of one J_{omega_{r+1}} factor and d-r-1 factors J_{omega_k}^{(-i^k, a_k)};
// the division back by (q-1)^{r(d-r-1)} is checked exact.
CycNum product_formula(const AffineSubspace& H, const ExponentTuple& a,
                       Exec exec = Exec::openmp, FactorRoute route = FactorRoute::direct);

// For omega = b_1 z_1 + ... + b_r z_r + b_last z_{r+j} - 1 with all b nonzero:
// J_omega^{(j_1..j_r,a)} = unit * J^{(j_1..j_r,a)} with
// unit = (-1)^r chi(-1)^{sum j + a} prod chi^{-j_l}(b_l) chi^{-a}(b_last).
struct NormalizedForm {
    CycNum unit;
    ExponentTuple plain;
};
NormalizedForm normalize_form(const FieldSpec& F, const std::vector<FqElem>& bs, FqElem b_last,
                              const ExponentTuple& exps);

// J^{(b,c)} = J^{(-b-c,c)}; returns both sides
struct ReflectCheck {
    CycNum lhs;
    CycNum rhs;
    bool equal;
};
ReflectCheck reflect_identity(const FieldSpec& F, std::int64_t b, std::int64_t c);

// Reduction of J^{(-i_1..-i_r,b)} mod the fixed prime above p, next to the
// closed form (-1)^b * b!/(i_1'!...i_r'!(b-sum i')!) mod p (i' = i shifted by
// q-1 into [0,q-2]; zero unless every i' <= b and sum i' <= b). Both the
// sign and the residual factorial are forced by the brute-force reduction,
// which is what pins this convention.
struct JacobiModP {
    FqElem reduced;
    FqElem closed_form;
    bool match;
};
JacobiModP jacobi_mod_p(const FieldSpec& F, const std::vector<std::int64_t>& i_tuple,
                        std::int64_t b);

// closed form alone (used by the mod-p coefficient formula)
FqElem jacobi_closed_form_mod_p(const FieldSpec& F, const std::vector<std::int64_t>& i_tuple,
                                std::int64_t b);

} // namespace charsum

#endif
