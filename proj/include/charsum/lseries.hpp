#ifndef CHARSUM_LSERIES_HPP
#define CHARSUM_LSERIES_HPP

#include <memory>
#include <string>
#include <vector>

#include "charsum/jacobi.hpp"

namespace charsum {

// Cover y^n = f(x), f = prod (x - alpha_i)^{n_i}, branch points distinct and
// infinity ramified (n_0 != 0). Exponents a_i = n_i (q-1)/n.
struct CoverSpec {
    std::shared_ptr<const FieldSpec> field;
    int n = 0;
    std::vector<FqElem> alphas;     // d branch points
    std::vector<int> ns;            // d exponents, 0 < n_i < n
    std::vector<std::int64_t> a;    // derived: n_i (q-1)/n
    int n0 = 0;                     // exponent at infinity, (-sum n_i) mod n

    const FieldSpec& F() const { return *field; }
    int d() const { return static_cast<int>(alphas.size()); }

    // the character chi^j is unramified at some branch point (infinity included)
    bool degenerate(int j) const;
    void require_character(int j) const;
    // gcd(n_i, n) = 1 at every branch point including infinity
    bool totally_ramified() const;
    // requires alpha_1 = 0 and alpha_2 = 1 (the normalization the explicit
    // closed forms assume)
    bool normalized_first_two() const;
};

CoverSpec validate_cover(const std::shared_ptr<const FieldSpec>& F, int n,
                         const std::vector<FqElem>& alphas, const std::vector<int>& ns);

enum class Convention { paper, artin };

struct LPolynomial {
    Convention convention = Convention::paper;
    std::vector<CycNum> coeffs; // c_0..c_{d-1}, c_0 = 1
    std::int64_t q = 0;
    int n = 0;
    int j = 0;

    nlohmann::json to_json() const;
    static LPolynomial from_json(const nlohmann::json& jdoc);
};

// c_r = sum over monic v of degree r of prod_i chi^{j a_i}(v(alpha_i))
LPolynomial lseries_oracle_paper(const CoverSpec& cover, int j, Exec exec = Exec::openmp);

// c_r = sum over monic v of degree r of chi^{j(q-1)/n}(Res(v, f)), with
// Res(v, f) = prod_i ((-1)^r v(alpha_i))^{n_i}; this is the convention whose
// product over j assembles the zeta numerator. The two conventions differ by
// the unit chi(-1)^{r j sum a_i}.
LPolynomial lseries_oracle_artin(const CoverSpec& cover, int j, Exec exec = Exec::openmp);

// The subspace of evaluation vectors (v(alpha_1),...,v(alpha_d)) of monic v of
// degree r, in solved form. Row k (k = r+1..d) is obtained by Lagrange
// interpolation through the first r points:
//   z_k = sum_j L_j(alpha_k) z_j + W(alpha_k),  W = prod_{i<=r}(x - alpha_i),
// so every coefficient and constant is nonzero for distinct branch points.
AffineSubspace build_subspace_for_degree(const CoverSpec& cover, int r);

// c_r via the product formula over the evaluation subspace, each factor
// rewritten through normalize_form; must equal lseries_oracle_paper exactly.
LPolynomial lseries_jacobi(const CoverSpec& cover, int j, Exec exec = Exec::openmp);

// r = 1 coefficient in closed form (d = 3 gives the classical two-Jacobi-sum
// expression; general d >= 3 uses the one-sum-per-branch-point variant).
// Requires alpha_1 = 0, alpha_2 = 1.
CycNum c1_closed_form(const CoverSpec& cover, int j, Exec exec = Exec::openmp);

// The constant coefficient c_2 of a d = 3 cover against the plain Jacobi sum
// J^{(ja_1, ja_2, ja_3)}. Brute enumeration forces a cover-dependent unit
// (the root of unity from rescaling the one remaining evaluation form):
// c_2 = unit * J always, while the bare form c_2 = -J holds exactly on the
// unit = -1 subfamily (the Legendre family always has unit = +1, c_2 = q).
struct ConstantTermCheck {
    CycNum c2;
    CycNum plain_jacobi; // J^{(ja_1, ja_2, ja_3)}
    CycNum unit;         // c_2 = unit * J, unit from normalize_form
    bool unit_prediction; // c_2 == unit * J (exact; failure signals a bug)
    bool paper_sign;      // c_2 == -J, i.e. unit = -1
    bool n2_equals_q;     // meaningful only when n = 2
};
ConstantTermCheck constant_term_check(const CoverSpec& cover, int j, Exec exec = Exec::openmp);

// d = 3 vanishing test: a_3 = a_2, 2(a_1+a_2) = 0 mod q-1, a_1+a_2 != q-1 and
// alpha_3^{(q-1)/2} = -1 force c_1 = 0.
bool c1_vanishing_predicate(const CoverSpec& cover);

// Truncated Euler product over monic irreducibles avoiding the branch locus,
// paper convention; out[k] is the t^k coefficient, k <= degree_bound.
std::vector<CycNum> euler_product_truncated(const CoverSpec& cover, int j, int degree_bound,
                                            Exec exec = Exec::openmp);

// c_r mod p two ways: the multinomial form of the product formula (units
// reduced into F_q, Jacobi sums replaced by their signed multinomials) against
// the reduction of the exact coefficient.
struct CoeffModP {
    FqElem via_formula;
    FqElem via_reduction;
    bool match;
};
CoeffModP coeff_mod_p(const CoverSpec& cover, int j, int r, Exec exec = Exec::openmp);

// monic irreducibles of degree 1..max_degree, trial-division sieve
std::vector<FqPoly> monic_irreducibles(const FieldSpec& F, int max_degree);

// the same cover after the affine substitution x -> (x - alpha_1)/(alpha_2 -
// alpha_1), which moves the first two branch points to 0 and 1 (infinity
// stays put, exponents unchanged); the closed forms above require this
// normalization. The substitution twists y^n = f by a constant, so the
// normalized cover's L-series is the one the closed forms predict, not a
// coefficient-for-coefficient relabel of the original.
CoverSpec normalize_branch_points(const CoverSpec& cover);

// unit relating the two conventions: c_r^paper = bridge(r)^... ; returns
// chi(-1)^{j sum a_i} as +-1
int convention_bridge_sign(const CoverSpec& cover, int j);

} // namespace charsum

#endif
