#include "charsum/lseries.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace charsum {

bool CoverSpec::degenerate(int j) const {
    for (int ni : ns)
        if ((static_cast<std::int64_t>(j) * ni) % n == 0) return true;
    return (static_cast<std::int64_t>(j) * n0) % n == 0;
}

void CoverSpec::require_character(int j) const {
    require(j >= 1 && j <= n - 1, errc::degenerate_character,
            "character power must lie in [1, n-1]");
    require(!degenerate(j), errc::degenerate_character,
            "chi^" + std::to_string(j) + " is unramified at a branch point");
}

bool CoverSpec::totally_ramified() const {
    for (int ni : ns)
        if (std::gcd(ni, n) != 1) return false;
    return std::gcd(n0, n) == 1;
}

bool CoverSpec::normalized_first_two() const {
    return alphas.size() >= 2 && alphas[0] == field->zero() && alphas[1] == field->one();
}

CoverSpec validate_cover(const std::shared_ptr<const FieldSpec>& F, int n,
                         const std::vector<FqElem>& alphas, const std::vector<int>& ns) {
    CoverSpec c;
    c.field = F;
    c.n = n;
    require(n >= 2, errc::bad_argument, "cover degree must be >= 2");
    require((F->q() - 1) % n == 0, errc::n_does_not_divide_q_minus_1,
            std::to_string(n) + " does not divide q-1 = " + std::to_string(F->q() - 1));
    require(alphas.size() >= 2, errc::bad_argument, "need at least two branch points");
    require(alphas.size() == ns.size(), errc::bad_argument,
            "branch point and exponent counts differ");
    for (const auto& al : alphas) F->check(al);
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t k = i + 1; k < alphas.size(); ++k)
            require(!(alphas[i] == alphas[k]), errc::branch_points_not_distinct,
                    "branch points " + std::to_string(i + 1) + " and " + std::to_string(k + 1));
    int sum = 0;
    for (int ni : ns) {
        require(0 < ni && ni < n, errc::exponent_out_of_range,
                "exponent " + std::to_string(ni) + " outside (0, n)");
        sum += ni;
    }
    c.alphas = alphas;
    c.ns = ns;
    c.n0 = ((-sum) % n + n) % n;
    require(c.n0 != 0, errc::unramified_at_infinity, "sum of exponents is divisible by n");
    const std::int64_t step = (F->q() - 1) / n;
    for (int ni : ns) c.a.push_back(ni * step);
    return c;
}

nlohmann::json LPolynomial::to_json() const {
    nlohmann::json out;
    out["convention"] = convention == Convention::paper ? "paper" : "artin";
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : coeffs) cs.push_back(c.to_json());
    out["coeffs"] = cs;
    out["q"] = q;
    out["n"] = n;
    out["j"] = j;
    return out;
}

LPolynomial LPolynomial::from_json(const nlohmann::json& jdoc) {
    LPolynomial out;
    out.convention =
        jdoc.at("convention").get<std::string>() == "artin" ? Convention::artin : Convention::paper;
    for (const auto& c : jdoc.at("coeffs")) out.coeffs.push_back(CycNum::from_json(c));
    out.q = jdoc.at("q").get<std::int64_t>();
    out.n = jdoc.at("n").get<int>();
    out.j = jdoc.at("j").get<int>();
    return out;
}

namespace {

struct UnitSum {
    std::vector<std::int64_t> counts;
    void ensure(std::int64_t m) {
        if (counts.empty()) counts.assign(static_cast<std::size_t>(m), 0);
    }
};

CycNum unit_sum_to_cyc(std::int64_t m, const UnitSum& s) {
    CycNum out = CycNum::zero(m);
    if (s.counts.empty()) return out;
    for (std::int64_t e = 0; e < m; ++e) {
        std::int64_t c = s.counts[static_cast<std::size_t>(e)];
        if (c != 0) out += CycNum::zeta_pow(m, e).mul_int(c);
    }
    return out;
}

void combine_units(UnitSum& tot, const UnitSum& part) {
    if (part.counts.empty()) return;
    if (tot.counts.empty()) {
        tot = part;
        return;
    }
    for (std::size_t k = 0; k < tot.counts.size(); ++k) tot.counts[k] += part.counts[k];
}

std::int64_t ipow64(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// sum over monic polynomials of degree r: body(v) with v the coefficient
// vector (degree index order, leading 1); term contributions via counters
template <class Term>
CycNum monic_sum(const FieldSpec& F, int r, Exec exec, Term&& term) {
    const std::int64_t m = F.q() - 1;
    const std::int64_t total = ipow64(F.q(), r);
    UnitSum s = block_reduce<UnitSum>(
        total, exec,
        [&](std::int64_t idx, UnitSum& acc) {
            acc.ensure(m);
            FqPoly v(static_cast<std::size_t>(r + 1));
            std::int64_t rem = idx;
            for (int i = 0; i < r; ++i) {
                v[static_cast<std::size_t>(i)] = F.elem(rem % F.q());
                rem /= F.q();
            }
            v[static_cast<std::size_t>(r)] = F.one();
            auto e = term(v);
            if (e) ++acc.counts[static_cast<std::size_t>(*e)];
        },
        combine_units);
    return unit_sum_to_cyc(m, s);
}

} // namespace

LPolynomial lseries_oracle_paper(const CoverSpec& cover, int j, Exec exec) {
    cover.require_character(j);
    const FieldSpec& F = cover.F();
    const std::int64_t m = F.q() - 1;
    LPolynomial out;
    out.convention = Convention::paper;
    out.q = F.q();
    out.n = cover.n;
    out.j = j;
    std::vector<std::int64_t> ja;
    for (auto ai : cover.a) ja.push_back(canon_exp(F, j * ai));
    for (int r = 0; r < cover.d(); ++r) {
        out.coeffs.push_back(monic_sum(F, r, exec, [&](const FqPoly& v) -> std::optional<std::int64_t> {
            std::int64_t e = 0;
            for (int i = 0; i < cover.d(); ++i) {
                FqElem val = poly_eval(F, v, cover.alphas[static_cast<std::size_t>(i)]);
                if (val.is_zero()) return std::nullopt;
                e += ja[static_cast<std::size_t>(i)] * F.dlog(val);
            }
            return e % m;
        }));
    }
    return out;
}

LPolynomial lseries_oracle_artin(const CoverSpec& cover, int j, Exec exec) {
    cover.require_character(j);
    const FieldSpec& F = cover.F();
    const std::int64_t m = F.q() - 1;
    const std::int64_t e0 = canon_exp(F, static_cast<std::int64_t>(j) * (m / cover.n));
    LPolynomial out;
    out.convention = Convention::artin;
    out.q = F.q();
    out.n = cover.n;
    out.j = j;
    for (int r = 0; r < cover.d(); ++r) {
        const FqElem sign = F.scalar(r % 2 == 0 ? 1 : -1);
        out.coeffs.push_back(monic_sum(F, r, exec, [&](const FqPoly& v) -> std::optional<std::int64_t> {
            FqElem res = F.one();
            for (int i = 0; i < cover.d(); ++i) {
                FqElem val = F.mul(sign, poly_eval(F, v, cover.alphas[static_cast<std::size_t>(i)]));
                if (val.is_zero()) return std::nullopt;
                res = F.mul(res, F.pow(val, cover.ns[static_cast<std::size_t>(i)]));
            }
            return (e0 * F.dlog(res)) % m;
        }));
    }
    return out;
}

int convention_bridge_sign(const CoverSpec& cover, int j) {
    const FieldSpec& F = cover.F();
    FqElem m1 = F.scalar(-1);
    if (m1 == F.one()) return 1;
    std::int64_t suma = 0;
    for (auto ai : cover.a) suma += ai;
    // chi(-1)^{j sum a_i}; chi(-1) = -1 exactly when q is odd
    return (static_cast<std::int64_t>(j) * suma) % 2 == 0 ? 1 : -1;
}

AffineSubspace build_subspace_for_degree(const CoverSpec& cover, int r) {
    const FieldSpec& F = cover.F();
    const int d = cover.d();
    require(1 <= r && r <= d - 1, errc::bad_argument, "need 1 <= r <= d-1");
    std::vector<std::vector<FqElem>> rows;
    std::vector<FqElem> consts;
    for (int k = r; k < d; ++k) {
        std::vector<FqElem> row(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) {
            FqElem num = F.one(), den = F.one();
            for (int t = 0; t < r; ++t) {
                if (t == i) continue;
                num = F.mul(num, F.sub(cover.alphas[static_cast<std::size_t>(k)],
                                       cover.alphas[static_cast<std::size_t>(t)]));
                den = F.mul(den, F.sub(cover.alphas[static_cast<std::size_t>(i)],
                                       cover.alphas[static_cast<std::size_t>(t)]));
            }
            row[static_cast<std::size_t>(i)] = F.mul(num, F.inv(den));
        }
        FqElem w = F.one();
        for (int i = 0; i < r; ++i)
            w = F.mul(w, F.sub(cover.alphas[static_cast<std::size_t>(k)],
                               cover.alphas[static_cast<std::size_t>(i)]));
        rows.push_back(std::move(row));
        consts.push_back(w);
    }
    return AffineSubspace::from_solved(F, d, r, std::move(rows), std::move(consts));
}

LPolynomial lseries_jacobi(const CoverSpec& cover, int j, Exec exec) {
    cover.require_character(j);
    const FieldSpec& F = cover.F();
    const std::int64_t m = F.q() - 1;
    LPolynomial out;
    out.convention = Convention::paper;
    out.q = F.q();
    out.n = cover.n;
    out.j = j;
    out.coeffs.push_back(CycNum::integer(m, 1));
    std::vector<std::int64_t> ja;
    for (auto ai : cover.a) ja.push_back(canon_exp(F, j * ai));
    for (int r = 1; r < cover.d(); ++r) {
        AffineSubspace H = build_subspace_for_degree(cover, r);
        out.coeffs.push_back(
            product_formula(H, ExponentTuple(F, ja), exec, FactorRoute::normalized));
    }
    return out;
}

CycNum c1_closed_form(const CoverSpec& cover, int j, Exec exec) {
    cover.require_character(j);
    const FieldSpec& F = cover.F();
    const int d = cover.d();
    require(d >= 3, errc::bad_argument, "closed form needs d >= 3");
    require(cover.normalized_first_two(), errc::precondition_failed,
            "closed form assumes alpha_1 = 0 and alpha_2 = 1");
    const std::int64_t m = F.q() - 1;
    std::vector<std::int64_t> a;
    for (auto ai : cover.a) a.push_back(canon_exp(F, j * ai));

    // one plain-sum table per branch point beyond the first two, one for the
    // head; then a (d-2)-fold odometer over the residue indices
    std::vector<std::vector<CycNum>> tabs; // tabs[k][i] = J^{(-i, a_{k+3})}
    std::vector<CycNum> head(static_cast<std::size_t>(m)); // head[c] = J^{(c, a_2)}
    for (int k = 2; k < d; ++k) {
        std::vector<CycNum> t(static_cast<std::size_t>(m));
        for (std::int64_t i = 0; i < m; ++i)
            t[static_cast<std::size_t>(i)] =
                jacobi_plain(F, ExponentTuple(F, {-i, a[static_cast<std::size_t>(k)]}), Exec::serial);
        tabs.push_back(std::move(t));
    }
    for (std::int64_t c = 0; c < m; ++c)
        head[static_cast<std::size_t>(c)] =
            jacobi_plain(F, ExponentTuple(F, {c, a[1]}), Exec::serial);

    const std::int64_t nsum = ipow64(m, d - 2);
    struct Acc {
        std::optional<CycNum> v;
    };
    Acc total = block_reduce<Acc>(
        nsum, exec,
        [&](std::int64_t idx, Acc& acc) {
            std::int64_t rem = idx, isum = 0, rot = 0;
            CycNum prod = CycNum::integer(m, 1);
            for (int k = 2; k < d; ++k) {
                std::int64_t ik = rem % m;
                rem /= m;
                isum += ik;
                // chi^{a_k - i_k}(alpha_k)
                rot += (a[static_cast<std::size_t>(k)] - ik) *
                       F.dlog(cover.alphas[static_cast<std::size_t>(k)]);
                prod *= tabs[static_cast<std::size_t>(k - 2)][static_cast<std::size_t>(ik)];
            }
            prod *= head[static_cast<std::size_t>((a[0] + isum) % m)];
            prod = prod.mul_zeta_pow(rot);
            if (acc.v)
                *acc.v += prod;
            else
                acc.v = prod;
        },
        [](Acc& tot, const Acc& part) {
            if (!part.v) return;
            if (tot.v)
                *tot.v += *part.v;
            else
                tot.v = part.v;
        });

    CycNum sum = total.v ? *total.v : CycNum::zero(m);
    std::int64_t sign_exp = d - 1;
    for (int k = 1; k < d; ++k) sign_exp += a[static_cast<std::size_t>(k)];
    if (sign_exp % 2 == 1) sum = -sum;
    BigInt div = 1;
    for (int i = 0; i < d - 2; ++i) div *= m;
    return sum.div_exact(div);
}

ConstantTermCheck constant_term_check(const CoverSpec& cover, int j, Exec exec) {
    require(cover.d() == 3, errc::bad_argument, "constant term check is for d = 3");
    cover.require_character(j);
    const FieldSpec& F = cover.F();
    const int d = cover.d();
    LPolynomial L = lseries_oracle_paper(cover, j, exec);
    std::vector<std::int64_t> ja;
    for (auto ai : cover.a) ja.push_back(j * ai);
    ExponentTuple exps(F, ja);
    CycNum jac = jacobi_plain(F, exps, exec);

    // the single remaining evaluation form at r = d-1, rescaled to constant -1
    AffineSubspace H = build_subspace_for_degree(cover, d - 1);
    FqElem cinv = F.inv(H.consts[0]);
    std::vector<FqElem> bs;
    for (const auto& c : H.rows[0]) bs.push_back(F.neg(F.mul(cinv, c)));
    CycNum unit = normalize_form(F, bs, cinv, exps).unit;

    ConstantTermCheck out;
    out.c2 = L.coeffs[2];
    out.plain_jacobi = jac;
    out.unit = unit;
    out.unit_prediction = out.c2 == unit * jac;
    out.paper_sign = out.c2 == -jac;
    out.n2_equals_q =
        cover.n == 2 && out.c2 == CycNum::integer(F.q() - 1, F.q());
    return out;
}

bool c1_vanishing_predicate(const CoverSpec& cover) {
    if (cover.d() != 3) return false;
    const FieldSpec& F = cover.F();
    if (F.q() % 2 == 0) return false;
    const std::int64_t m = F.q() - 1;
    const std::int64_t a1 = cover.a[0], a2 = cover.a[1], a3 = cover.a[2];
    if (a3 != a2) return false;
    if ((2 * (a1 + a2)) % m != 0) return false;
    if (a1 + a2 == m) return false;
    FqElem t = F.pow(cover.alphas[2], m / 2);
    return t == F.scalar(-1);
}

CoverSpec normalize_branch_points(const CoverSpec& cover) {
    const FieldSpec& F = cover.F();
    FqElem shift = cover.alphas[0];
    FqElem scale = F.inv(F.sub(cover.alphas[1], cover.alphas[0]));
    std::vector<FqElem> moved;
    moved.reserve(cover.alphas.size());
    for (const auto& al : cover.alphas) moved.push_back(F.mul(F.sub(al, shift), scale));
    return validate_cover(cover.field, cover.n, moved, cover.ns);
}

std::vector<FqPoly> monic_irreducibles(const FieldSpec& F, int max_degree) {
    std::vector<FqPoly> irr;
    for (int deg = 1; deg <= max_degree; ++deg) {
        const std::int64_t total = ipow64(F.q(), deg);
        for (std::int64_t idx = 0; idx < total; ++idx) {
            FqPoly v(static_cast<std::size_t>(deg + 1));
            std::int64_t rem = idx;
            for (int i = 0; i < deg; ++i) {
                v[static_cast<std::size_t>(i)] = F.elem(rem % F.q());
                rem /= F.q();
            }
            v[static_cast<std::size_t>(deg)] = F.one();
            bool composite = false;
            for (const auto& w : irr) {
                if (2 * (static_cast<int>(w.size()) - 1) > deg) break;
                if (poly_divisible(F, v, w)) {
                    composite = true;
                    break;
                }
            }
            if (!composite) irr.push_back(std::move(v));
        }
    }
    return irr;
}

std::vector<CycNum> euler_product_truncated(const CoverSpec& cover, int j, int degree_bound,
                                            Exec exec) {
    cover.require_character(j);
    require(degree_bound >= 0 && degree_bound <= 2 * (cover.d() - 1), errc::bad_argument,
            "truncation bound exceeds 2(d-1)");
    (void)exec; // factor enumeration dominates; kept serial and deterministic
    const FieldSpec& F = cover.F();
    const std::int64_t m = F.q() - 1;
    std::vector<std::int64_t> ja;
    for (auto ai : cover.a) ja.push_back(canon_exp(F, j * ai));

    std::vector<CycNum> coeffs;
    coeffs.reserve(static_cast<std::size_t>(degree_bound + 1));
    coeffs.push_back(CycNum::integer(m, 1));
    for (int k = 1; k <= degree_bound; ++k) coeffs.push_back(CycNum::zero(m));

    for (const auto& pi : monic_irreducibles(F, degree_bound)) {
        const int e = static_cast<int>(pi.size()) - 1;
        std::int64_t chi_exp = 0;
        bool ramified = false;
        for (int i = 0; i < cover.d(); ++i) {
            FqElem val = poly_eval(F, pi, cover.alphas[static_cast<std::size_t>(i)]);
            if (val.is_zero()) {
                ramified = true;
                break;
            }
            chi_exp += ja[static_cast<std::size_t>(i)] * F.dlog(val);
        }
        if (ramified) continue; // chi(F_x) = 0 at branch points: factor is 1
        chi_exp %= m;
        // multiply the series by (1 - chi(pi) t^e)^{-1} = sum_k chi(pi)^k t^{ek}
        std::vector<CycNum> next(coeffs.size(), CycNum::zero(m));
        for (std::size_t base = 0; base < coeffs.size(); ++base) {
            if (coeffs[base].is_zero()) continue;
            std::int64_t power = 0;
            for (std::size_t tdeg = base; tdeg < coeffs.size(); tdeg += static_cast<std::size_t>(e)) {
                next[tdeg] += coeffs[base].mul_zeta_pow(power);
                power += chi_exp;
            }
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

CoeffModP coeff_mod_p(const CoverSpec& cover, int j, int r, Exec exec) {
    cover.require_character(j);
    const FieldSpec& F = cover.F();
    const int d = cover.d();
    require(1 <= r && r <= d - 1, errc::bad_argument, "need 1 <= r <= d-1");
    const std::int64_t m = F.q() - 1;
    std::vector<std::int64_t> ja;
    for (auto ai : cover.a) ja.push_back(canon_exp(F, j * ai));

    AffineSubspace H = build_subspace_for_degree(cover, r);
    const int nk = d - r - 1;

    // reduction mod the fixed prime of the normalized factor for solved row
    // `krow` at exponents `exps` (length r+1): unit reduces to a power of the
    // generator, the plain Jacobi sum to its signed multinomial
    auto factor_modp = [&](int krow, const std::vector<std::int64_t>& exps) {
        FqElem cinv = F.inv(H.consts[static_cast<std::size_t>(krow)]);
        std::vector<FqElem> bs(static_cast<std::size_t>(r));
        for (int l = 0; l < r; ++l)
            bs[static_cast<std::size_t>(l)] =
                F.neg(F.mul(cinv, H.rows[static_cast<std::size_t>(krow)][static_cast<std::size_t>(l)]));
        ExponentTuple et(F, exps);
        auto nf = normalize_form(F, bs, cinv, et);
        FqElem unit = nf.unit.reduce_to_field(F);
        std::vector<std::int64_t> i_tuple(static_cast<std::size_t>(r));
        for (int l = 0; l < r; ++l)
            i_tuple[static_cast<std::size_t>(l)] = (m - et.canon[static_cast<std::size_t>(l)]) % m;
        FqElem plain = jacobi_closed_form_mod_p(F, i_tuple, et.canon[static_cast<std::size_t>(r)]);
        return F.mul(unit, plain);
    };

    const std::int64_t nsum = ipow64(m, r * nk);
    struct Acc {
        FqElem v;
        bool init = false;
    };
    Acc total = block_reduce<Acc>(
        nsum, exec,
        [&](std::int64_t idx, Acc& acc) {
            if (!acc.init) {
                acc.v = F.zero();
                acc.init = true;
            }
            std::int64_t rem = idx;
            std::vector<std::int64_t> usum(static_cast<std::size_t>(r), 0);
            FqElem prod = F.one();
            for (int kk = 0; kk < nk; ++kk) {
                std::vector<std::int64_t> exps(static_cast<std::size_t>(r + 1));
                for (int l = 0; l < r; ++l) {
                    std::int64_t dig = rem % m;
                    rem /= m;
                    usum[static_cast<std::size_t>(l)] = (usum[static_cast<std::size_t>(l)] + dig) % m;
                    exps[static_cast<std::size_t>(l)] = -dig;
                }
                exps[static_cast<std::size_t>(r)] = ja[static_cast<std::size_t>(r + 1 + kk)];
                prod = F.mul(prod, factor_modp(1 + kk, exps));
                if (prod.is_zero()) return;
            }
            std::vector<std::int64_t> hexps(static_cast<std::size_t>(r + 1));
            for (int l = 0; l < r; ++l)
                hexps[static_cast<std::size_t>(l)] =
                    (usum[static_cast<std::size_t>(l)] + ja[static_cast<std::size_t>(l)]) % m;
            hexps[static_cast<std::size_t>(r)] = ja[static_cast<std::size_t>(r)];
            prod = F.mul(prod, factor_modp(0, hexps));
            acc.v = F.add(acc.v, prod);
        },
        [&](Acc& tot, const Acc& part) {
            if (!part.init) return;
            if (!tot.init) {
                tot = part;
                return;
            }
            tot.v = F.add(tot.v, part.v);
        });

    FqElem formula = total.init ? total.v : F.zero();
    // (q-1)^{-r nk} = (-1)^{r nk} mod p
    if ((static_cast<std::int64_t>(r) * nk) % 2 == 1) formula = F.neg(formula);

    LPolynomial L = lseries_oracle_paper(cover, j, exec);
    FqElem reduced = L.coeffs[static_cast<std::size_t>(r)].reduce_to_field(F);
    return CoeffModP{formula, reduced, formula == reduced};
}

} // namespace charsum
