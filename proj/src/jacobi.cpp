#include "charsum/jacobi.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>

namespace charsum {

namespace {

// accumulator for sums of roots of unity: counts[e] copies of zeta^e
struct UnitSum {
    std::vector<std::int64_t> counts;
    void ensure(std::int64_t m) {
        if (counts.empty()) counts.assign(static_cast<std::size_t>(m), 0);
    }
};

void combine_unit_sums(UnitSum& tot, const UnitSum& part) {
    if (part.counts.empty()) return;
    if (tot.counts.empty()) {
        tot = part;
        return;
    }
    for (std::size_t k = 0; k < tot.counts.size(); ++k) tot.counts[k] += part.counts[k];
}

CycNum unit_sum_to_cyc(std::int64_t m, const UnitSum& s, bool negate) {
    CycNum out = CycNum::zero(m);
    if (s.counts.empty()) return out;
    for (std::int64_t e = 0; e < m; ++e) {
        std::int64_t c = s.counts[static_cast<std::size_t>(e)];
        if (c == 0) continue;
        out += CycNum::zeta_pow(m, e).mul_int(negate ? -c : c);
    }
    return out;
}

// odometer decode of a flat index into `digits` base-`base` digits
void decode(std::int64_t idx, std::int64_t base, std::vector<std::int64_t>& digits) {
    for (auto& d : digits) {
        d = idx % base;
        idx /= base;
    }
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// nonzero points of (F_q^x)^r listed as (dlogs, elements); shared by the
// table-building enumerations
struct PointList {
    std::vector<std::int64_t> dlogs; // r per point
    std::vector<FqElem> elems;       // r per point
    std::int64_t npoints = 0;
    int r = 0;
};

PointList nonzero_points(const FieldSpec& F, int r) {
    PointList pl;
    pl.r = r;
    const std::int64_t m = F.q() - 1;
    pl.npoints = ipow(m, r);
    pl.dlogs.resize(static_cast<std::size_t>(pl.npoints * r));
    pl.elems.resize(static_cast<std::size_t>(pl.npoints * r));
    std::vector<std::int64_t> u(static_cast<std::size_t>(r));
    for (std::int64_t i = 0; i < pl.npoints; ++i) {
        decode(i, m, u);
        for (int l = 0; l < r; ++l) {
            pl.dlogs[static_cast<std::size_t>(i * r + l)] = u[static_cast<std::size_t>(l)];
            pl.elems[static_cast<std::size_t>(i * r + l)] = F.gen_pow(u[static_cast<std::size_t>(l)]);
        }
    }
    return pl;
}

} // namespace

ExponentTuple::ExponentTuple(const FieldSpec& F, std::vector<std::int64_t> values)
    : raw(std::move(values)) {
    canon.reserve(raw.size());
    for (std::int64_t v : raw) canon.push_back(canon_exp(F, v));
}

AffineSubspace AffineSubspace::from_solved(const FieldSpec& F, int d, int r,
                                           std::vector<std::vector<FqElem>> rows,
                                           std::vector<FqElem> consts) {
    require(d >= 1 && r >= 0 && r <= d, errc::bad_argument, "bad subspace dimensions");
    require(static_cast<int>(rows.size()) == d - r && static_cast<int>(consts.size()) == d - r,
            errc::bad_argument, "row count must be d-r");
    for (const auto& row : rows)
        require(static_cast<int>(row.size()) == r, errc::bad_argument, "row width must be r");
    return AffineSubspace{&F, d, r, std::move(rows), std::move(consts)};
}

AffineSubspace AffineSubspace::from_equations(const FieldSpec& F,
                                              const std::vector<LinearForm>& eqs) {
    require(!eqs.empty(), errc::bad_argument, "no equations");
    const int d = static_cast<int>(eqs.front().coeffs.size());
    const int ne = static_cast<int>(eqs.size());
    // augmented matrix [coeffs | -const]
    std::vector<std::vector<FqElem>> M(static_cast<std::size_t>(ne));
    for (int i = 0; i < ne; ++i) {
        require(static_cast<int>(eqs[static_cast<std::size_t>(i)].coeffs.size()) == d,
                errc::bad_argument, "mixed equation widths");
        M[static_cast<std::size_t>(i)] = eqs[static_cast<std::size_t>(i)].coeffs;
        M[static_cast<std::size_t>(i)].push_back(F.neg(eqs[static_cast<std::size_t>(i)].constant));
    }
    // eliminate scanning pivot columns right to left, which leaves the free
    // coordinates at the lowest indices
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = d - 1; col >= 0 && row < ne; --col) {
        int sel = -1;
        for (int i = row; i < ne; ++i)
            if (!M[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(M[static_cast<std::size_t>(row)], M[static_cast<std::size_t>(sel)]);
        FqElem pinv = F.inv(M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]);
        for (auto& v : M[static_cast<std::size_t>(row)]) v = F.mul(v, pinv);
        for (int i = 0; i < ne; ++i) {
            if (i == row) continue;
            FqElem c = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (c.is_zero()) continue;
            for (int j = 0; j <= d; ++j)
                M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    F.sub(M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                          F.mul(c, M[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)]));
        }
        pivot_cols.push_back(col);
        ++row;
    }
    for (int i = row; i < ne; ++i)
        require(M[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)].is_zero(),
                errc::bad_argument, "inconsistent equation system");
    const int rank = row;
    const int r = d - rank;
    for (int k = 0; k < rank; ++k)
        require(pivot_cols[static_cast<std::size_t>(k)] == d - 1 - k, errc::not_solved_form,
                "free coordinates are not z_1..z_r after elimination");
    // pivot row k solves coordinate d-1-k; reorder to rows for z_{r+1}..z_d
    std::vector<std::vector<FqElem>> rows(static_cast<std::size_t>(rank));
    std::vector<FqElem> consts(static_cast<std::size_t>(rank), F.zero());
    for (int k = 0; k < rank; ++k) {
        int col = d - 1 - k; // solved coordinate (0-based)
        auto& out = rows[static_cast<std::size_t>(col - r)];
        out.assign(static_cast<std::size_t>(r), F.zero());
        for (int j = 0; j < r; ++j)
            out[static_cast<std::size_t>(j)] =
                F.neg(M[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
        consts[static_cast<std::size_t>(col - r)] = M[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)];
    }
    return from_solved(F, d, r, std::move(rows), std::move(consts));
}

CycNum jacobi_plain(const FieldSpec& F, const ExponentTuple& a, Exec exec) {
    const int d = static_cast<int>(a.size());
    require(d >= 2, errc::bad_argument, "plain Jacobi sum needs d >= 2");
    const std::int64_t m = F.q() - 1;
    const std::int64_t n = ipow(m, d - 1);
    const FqElem minus_one = F.scalar(-1);

    UnitSum total = block_reduce<UnitSum>(
        n, exec,
        [&](std::int64_t idx, UnitSum& acc) {
            acc.ensure(m);
            std::int64_t e = 0;
            FqElem s = F.one();
            std::int64_t rem = idx;
            for (int i = 0; i < d - 1; ++i) {
                std::int64_t u = rem % m;
                rem /= m;
                e += a.canon[static_cast<std::size_t>(i)] * u;
                s = F.add(s, F.gen_pow(u));
            }
            FqElem zd = F.mul(minus_one, s);
            if (zd.is_zero()) return;
            e += a.canon[static_cast<std::size_t>(d - 1)] * F.dlog(zd);
            ++acc.counts[static_cast<std::size_t>(e % m)];
        },
        combine_unit_sums);
    return unit_sum_to_cyc(m, total, d % 2 == 0);
}

CycNum jacobi_form(const FieldSpec& F, const LinearForm& omega, const ExponentTuple& a,
                   Exec exec) {
    const int d = static_cast<int>(a.size());
    require(static_cast<int>(omega.coeffs.size()) == d, errc::bad_argument,
            "form width must match exponent tuple");
    int piv = -1;
    for (int i = 0; i < d; ++i)
        if (!omega.coeffs[static_cast<std::size_t>(i)].is_zero()) {
            piv = i;
            break;
        }
    require(piv >= 0, errc::bad_argument, "form has no nonzero coefficient");
    const std::int64_t m = F.q() - 1;
    const std::int64_t n = ipow(m, d - 1);
    const FqElem neg_pinv = F.neg(F.inv(omega.coeffs[static_cast<std::size_t>(piv)]));
    std::vector<int> free;
    for (int i = 0; i < d; ++i)
        if (i != piv) free.push_back(i);

    UnitSum total = block_reduce<UnitSum>(
        n, exec,
        [&](std::int64_t idx, UnitSum& acc) {
            acc.ensure(m);
            std::int64_t e = 0;
            FqElem s = omega.constant;
            std::int64_t rem = idx;
            for (int fi = 0; fi < d - 1; ++fi) {
                std::int64_t u = rem % m;
                rem /= m;
                int i = free[static_cast<std::size_t>(fi)];
                e += a.canon[static_cast<std::size_t>(i)] * u;
                FqElem z = F.gen_pow(u);
                s = F.add(s, F.mul(omega.coeffs[static_cast<std::size_t>(i)], z));
            }
            FqElem zp = F.mul(neg_pinv, s);
            if (zp.is_zero()) return;
            e += a.canon[static_cast<std::size_t>(piv)] * F.dlog(zp);
            ++acc.counts[static_cast<std::size_t>(e % m)];
        },
        combine_unit_sums);
    return unit_sum_to_cyc(m, total, false);
}

CycNum jacobi_subspace_brute(const AffineSubspace& H, const ExponentTuple& a, Exec exec) {
    const FieldSpec& F = *H.field;
    require(static_cast<int>(a.size()) == H.d, errc::bad_argument,
            "exponent tuple width must be d");
    require(H.d <= 16, errc::bad_argument, "subspace enumeration supports d <= 16");
    const std::int64_t m = F.q() - 1;
    const std::int64_t n = ipow(m, H.r);

    UnitSum total = block_reduce<UnitSum>(
        n, exec,
        [&](std::int64_t idx, UnitSum& acc) {
            acc.ensure(m);
            std::int64_t e = 0;
            std::int64_t rem = idx;
            std::array<FqElem, 16> z{};
            for (int j = 0; j < H.r; ++j) {
                std::int64_t u = rem % m;
                rem /= m;
                e += a.canon[static_cast<std::size_t>(j)] * u;
                z[static_cast<std::size_t>(j)] = F.gen_pow(u);
            }
            for (int k = H.r; k < H.d; ++k) {
                FqElem s = H.consts[static_cast<std::size_t>(k - H.r)];
                const auto& row = H.rows[static_cast<std::size_t>(k - H.r)];
                for (int j = 0; j < H.r; ++j)
                    s = F.add(s, F.mul(row[static_cast<std::size_t>(j)], z[static_cast<std::size_t>(j)]));
                if (s.is_zero()) return;
                e += a.canon[static_cast<std::size_t>(k)] * F.dlog(s);
            }
            ++acc.counts[static_cast<std::size_t>(e % m)];
        },
        combine_unit_sums);
    return unit_sum_to_cyc(m, total, false);
}

namespace {

// J_omega^{(-i_1..-i_r, a_k)} for every index tuple i, where omega is the
// solved-form row z_k = coeffs . z + constant: one shared pass collects the
// admissible points, then each table entry is a counting sum over them.
std::vector<CycNum> row_factor_table(const FieldSpec& F, const SolvedRow& row, std::int64_t a_k,
                                     Exec exec) {
    const int r = static_cast<int>(row.coeffs.size());
    const std::int64_t m = F.q() - 1;
    const std::int64_t ntab = ipow(m, r);
    PointList pl = nonzero_points(F, r);
    // per admissible point: dlogs of free coords and a_k * dlog(omega value)
    std::vector<std::int64_t> pt_dlogs;
    std::vector<std::int64_t> pt_t;
    for (std::int64_t i = 0; i < pl.npoints; ++i) {
        FqElem w = row.constant;
        for (int l = 0; l < r; ++l)
            w = F.add(w, F.mul(row.coeffs[static_cast<std::size_t>(l)],
                               pl.elems[static_cast<std::size_t>(i * r + l)]));
        if (w.is_zero()) continue;
        for (int l = 0; l < r; ++l)
            pt_dlogs.push_back(pl.dlogs[static_cast<std::size_t>(i * r + l)]);
        pt_t.push_back(canon_exp(F, a_k) * F.dlog(w));
    }
    const std::int64_t npts = static_cast<std::int64_t>(pt_t.size());

    std::vector<CycNum> table(static_cast<std::size_t>(ntab));
    const int nt = (exec == Exec::serial) ? 1 : thread_count();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (std::int64_t ti = 0; ti < ntab; ++ti) {
        std::vector<std::int64_t> iv(static_cast<std::size_t>(r));
        decode(ti, m, iv);
        std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
        for (std::int64_t pidx = 0; pidx < npts; ++pidx) {
            std::int64_t e = pt_t[static_cast<std::size_t>(pidx)];
            for (int l = 0; l < r; ++l)
                e -= iv[static_cast<std::size_t>(l)] * pt_dlogs[static_cast<std::size_t>(pidx * r + l)];
            e %= m;
            if (e < 0) e += m;
            ++counts[static_cast<std::size_t>(e)];
        }
        UnitSum us{std::move(counts)};
        table[static_cast<std::size_t>(ti)] = unit_sum_to_cyc(m, us, false);
    }
    return table;
}

// plain Jacobi sums J^{(c_1..c_r, b)} for every c, via one hyperplane pass
std::vector<CycNum> plain_table(const FieldSpec& F, int r, std::int64_t b, Exec exec) {
    const std::int64_t m = F.q() - 1;
    const std::int64_t ntab = ipow(m, r);
    PointList pl = nonzero_points(F, r);
    std::vector<std::int64_t> pt_dlogs;
    std::vector<std::int64_t> pt_t;
    const FqElem minus_one = F.scalar(-1);
    for (std::int64_t i = 0; i < pl.npoints; ++i) {
        FqElem s = F.one();
        for (int l = 0; l < r; ++l) s = F.add(s, pl.elems[static_cast<std::size_t>(i * r + l)]);
        FqElem w = F.mul(minus_one, s);
        if (w.is_zero()) continue;
        for (int l = 0; l < r; ++l)
            pt_dlogs.push_back(pl.dlogs[static_cast<std::size_t>(i * r + l)]);
        pt_t.push_back(canon_exp(F, b) * F.dlog(w));
    }
    const std::int64_t npts = static_cast<std::int64_t>(pt_t.size());
    const bool negate = r % 2 == 1; // (-1)^{(r+1)-1}

    std::vector<CycNum> table(static_cast<std::size_t>(ntab));
    const int nt = (exec == Exec::serial) ? 1 : thread_count();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (std::int64_t ti = 0; ti < ntab; ++ti) {
        std::vector<std::int64_t> cv(static_cast<std::size_t>(r));
        decode(ti, m, cv);
        std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
        for (std::int64_t pidx = 0; pidx < npts; ++pidx) {
            std::int64_t e = pt_t[static_cast<std::size_t>(pidx)];
            for (int l = 0; l < r; ++l)
                e += cv[static_cast<std::size_t>(l)] * pt_dlogs[static_cast<std::size_t>(pidx * r + l)];
            e %= m;
            ++counts[static_cast<std::size_t>(e)];
        }
        UnitSum us{std::move(counts)};
        table[static_cast<std::size_t>(ti)] = unit_sum_to_cyc(m, us, negate);
    }
    return table;
}

struct CycAccum {
    std::optional<CycNum> v;
    void add(const CycNum& x) {
        if (v)
            *v += x;
        else
            v = x;
    }
};

} // namespace

std::vector<CycNum> character_expansion(const FieldSpec& F, const SolvedRow& row, std::int64_t a_k,
                                     Exec exec) {
    const int r = static_cast<int>(row.coeffs.size());
    require(r >= 1, errc::bad_argument, "expansion needs r >= 1");
    auto table = row_factor_table(F, row, a_k, exec);
    BigInt scale = 1;
    for (int i = 0; i < r; ++i) scale *= F.q() - 1;
    for (auto& v : table) v = v.scalar_div(scale);
    return table;
}

NormalizedForm normalize_form(const FieldSpec& F, const std::vector<FqElem>& bs, FqElem b_last,
                              const ExponentTuple& exps) {
    const int r = static_cast<int>(bs.size());
    require(static_cast<int>(exps.size()) == r + 1, errc::bad_argument,
            "exponent tuple must have r+1 entries");
    for (const auto& b : bs)
        require(!b.is_zero(), errc::zero_coefficient, "zero coefficient in normalized form");
    require(!b_last.is_zero(), errc::zero_coefficient, "zero coefficient in normalized form");

    const std::int64_t m = F.q() - 1;
    const std::int64_t dlog_m1 = F.scalar(-1).is_zero() ? 0 : F.dlog(F.scalar(-1));
    std::int64_t esum = 0;
    for (auto e : exps.canon) esum += e;
    std::int64_t t = esum * dlog_m1;
    for (int l = 0; l < r; ++l)
        t -= exps.canon[static_cast<std::size_t>(l)] * F.dlog(bs[static_cast<std::size_t>(l)]);
    t -= exps.canon[static_cast<std::size_t>(r)] * F.dlog(b_last);
    CycNum unit = CycNum::zeta_pow(m, t);
    if (r % 2 == 1) unit = -unit;
    return NormalizedForm{std::move(unit), exps};
}

CycNum product_formula(const AffineSubspace& H, const ExponentTuple& a, Exec exec,
                       FactorRoute route) {
    const FieldSpec& F = *H.field;
    const int d = H.d;
    const int r = H.r;
    require(1 <= r && r <= d - 1, errc::bad_argument, "need 1 <= r <= d-1");
    require(static_cast<int>(a.size()) == d, errc::bad_argument, "exponent tuple width must be d");
    const std::int64_t m = F.q() - 1;
    const int nk = d - r - 1; // factors beyond the head form

    if (route == FactorRoute::normalized)
        for (int k = 0; k < d - r; ++k) {
            require(!H.consts[static_cast<std::size_t>(k)].is_zero(), errc::zero_coefficient,
                    "normalized route needs nonzero row constants");
            for (const auto& c : H.rows[static_cast<std::size_t>(k)])
                require(!c.is_zero(), errc::zero_coefficient,
                        "normalized route needs nonzero row coefficients");
        }

    // solved row k: z_k = coeffs . z + const; normalized presentation divides
    // by the constant to reach  (-coeffs/c) . z + (1/c) z_k - 1 = 0
    auto normalized_entry = [&](int krow, const std::vector<std::int64_t>& exps_head,
                                const std::vector<CycNum>& plain) {
        FqElem cinv = F.inv(H.consts[static_cast<std::size_t>(krow)]);
        std::vector<FqElem> bs(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j)
            bs[static_cast<std::size_t>(j)] =
                F.neg(F.mul(cinv, H.rows[static_cast<std::size_t>(krow)][static_cast<std::size_t>(j)]));
        ExponentTuple et(F, exps_head);
        auto nf = normalize_form(F, bs, cinv, et);
        std::int64_t flat = 0;
        for (int l = r - 1; l >= 0; --l) flat = flat * m + et.canon[static_cast<std::size_t>(l)];
        return nf.unit * plain[static_cast<std::size_t>(flat)];
    };

    // factor tables for rows 1..nk (paper's omega_{r+2}..omega_d)
    std::vector<std::vector<CycNum>> ktab(static_cast<std::size_t>(nk));
    std::map<std::int64_t, std::vector<CycNum>> plain_by_b;
    if (route == FactorRoute::normalized) {
        for (int kk = 0; kk < nk; ++kk) {
            std::int64_t b = a.canon[static_cast<std::size_t>(r + 1 + kk)];
            if (!plain_by_b.count(b)) plain_by_b[b] = plain_table(F, r, b, exec);
        }
        std::int64_t bh = a.canon[static_cast<std::size_t>(r)];
        if (!plain_by_b.count(bh)) plain_by_b[bh] = plain_table(F, r, bh, exec);
        const std::int64_t ntab = ipow(m, r);
        for (int kk = 0; kk < nk; ++kk) {
            auto& tab = ktab[static_cast<std::size_t>(kk)];
            tab.resize(static_cast<std::size_t>(ntab));
            const auto& plain = plain_by_b[a.canon[static_cast<std::size_t>(r + 1 + kk)]];
            std::vector<std::int64_t> iv(static_cast<std::size_t>(r));
            for (std::int64_t ti = 0; ti < ntab; ++ti) {
                decode(ti, m, iv);
                std::vector<std::int64_t> exps(static_cast<std::size_t>(r + 1));
                for (int l = 0; l < r; ++l) exps[static_cast<std::size_t>(l)] = -iv[static_cast<std::size_t>(l)];
                exps[static_cast<std::size_t>(r)] = a.canon[static_cast<std::size_t>(r + 1 + kk)];
                tab[static_cast<std::size_t>(ti)] = normalized_entry(1 + kk, exps, plain);
            }
        }
    } else {
        for (int kk = 0; kk < nk; ++kk) {
            SolvedRow row{H.rows[static_cast<std::size_t>(1 + kk)], H.consts[static_cast<std::size_t>(1 + kk)]};
            ktab[static_cast<std::size_t>(kk)] =
                row_factor_table(F, row, a.canon[static_cast<std::size_t>(r + 1 + kk)], exec);
        }
    }

    // head factor J_{omega_{r+1}} evaluated at (u + a_1, ..., u + a_r, a_{r+1})
    auto head_value = [&](const std::vector<std::int64_t>& usum) {
        std::vector<std::int64_t> exps(static_cast<std::size_t>(r + 1));
        for (int l = 0; l < r; ++l)
            exps[static_cast<std::size_t>(l)] =
                (usum[static_cast<std::size_t>(l)] + a.canon[static_cast<std::size_t>(l)]) % m;
        exps[static_cast<std::size_t>(r)] = a.canon[static_cast<std::size_t>(r)];
        if (route == FactorRoute::normalized)
            return normalized_entry(0, exps, plain_by_b[a.canon[static_cast<std::size_t>(r)]]);
        SolvedRow row{H.rows[0], H.consts[0]};
        // single-entry enumeration
        const std::int64_t mm = m;
        PointList pl = nonzero_points(F, r);
        std::vector<std::int64_t> counts(static_cast<std::size_t>(mm), 0);
        for (std::int64_t i = 0; i < pl.npoints; ++i) {
            FqElem w = row.constant;
            for (int l = 0; l < r; ++l)
                w = F.add(w, F.mul(row.coeffs[static_cast<std::size_t>(l)],
                                   pl.elems[static_cast<std::size_t>(i * r + l)]));
            if (w.is_zero()) continue;
            std::int64_t e = canon_exp(F, exps[static_cast<std::size_t>(r)]) * F.dlog(w);
            for (int l = 0; l < r; ++l)
                e += exps[static_cast<std::size_t>(l)] * pl.dlogs[static_cast<std::size_t>(i * r + l)];
            ++counts[static_cast<std::size_t>(e % mm)];
        }
        UnitSum us{std::move(counts)};
        return unit_sum_to_cyc(mm, us, false);
    };

    if (nk == 0) return head_value(std::vector<std::int64_t>(static_cast<std::size_t>(r), 0));

    // head table over all residue vectors u (all are hit as the i^k sweep)
    const std::int64_t ntab = ipow(m, r);
    std::vector<CycNum> headtab(static_cast<std::size_t>(ntab));
    if (route == FactorRoute::normalized) {
        std::vector<std::int64_t> uv(static_cast<std::size_t>(r));
        for (std::int64_t ti = 0; ti < ntab; ++ti) {
            decode(ti, m, uv);
            headtab[static_cast<std::size_t>(ti)] = head_value(uv);
        }
    } else {
        // direct: table of J_{omega_{r+1}}^{(c_1..c_r, a_{r+1})} then index at c = u + a
        SolvedRow row{H.rows[0], H.consts[0]};
        auto raw = row_factor_table(F, row, a.canon[static_cast<std::size_t>(r)], exec);
        // row_factor_table stores J^{(-i..)}, i.e. entry ti holds c = -i mod m
        std::vector<std::int64_t> uv(static_cast<std::size_t>(r));
        for (std::int64_t ti = 0; ti < ntab; ++ti) {
            decode(ti, m, uv);
            std::int64_t src = 0;
            for (int l = r - 1; l >= 0; --l) {
                std::int64_t c = (uv[static_cast<std::size_t>(l)] + a.canon[static_cast<std::size_t>(l)]) % m;
                std::int64_t i = (m - c) % m;
                src = src * m + i;
            }
            headtab[static_cast<std::size_t>(ti)] = raw[static_cast<std::size_t>(src)];
        }
    }

    const std::int64_t nsum = ipow(m, r * nk);
    CycAccum total = block_reduce<CycAccum>(
        nsum, exec,
        [&](std::int64_t idx, CycAccum& acc) {
            std::int64_t rem = idx;
            std::vector<std::int64_t> usum(static_cast<std::size_t>(r), 0);
            CycNum prod = CycNum::integer(m, 1);
            for (int kk = 0; kk < nk; ++kk) {
                std::int64_t flat = 0, mult = 1;
                for (int l = 0; l < r; ++l) {
                    std::int64_t dig = rem % m;
                    rem /= m;
                    usum[static_cast<std::size_t>(l)] = (usum[static_cast<std::size_t>(l)] + dig) % m;
                    flat += dig * mult;
                    mult *= m;
                }
                prod *= ktab[static_cast<std::size_t>(kk)][static_cast<std::size_t>(flat)];
            }
            std::int64_t hflat = 0, mult = 1;
            for (int l = 0; l < r; ++l) {
                hflat += usum[static_cast<std::size_t>(l)] * mult;
                mult *= m;
            }
            prod *= headtab[static_cast<std::size_t>(hflat)];
            acc.add(prod);
        },
        [](CycAccum& tot, const CycAccum& part) {
            if (!part.v) return;
            if (tot.v)
                *tot.v += *part.v;
            else
                tot.v = part.v;
        });

    CycNum sum = total.v ? *total.v : CycNum::zero(m);
    BigInt div = 1;
    for (int i = 0; i < r * nk; ++i) div *= m;
    return sum.div_exact(div);
}

ReflectCheck reflect_identity(const FieldSpec& F, std::int64_t b, std::int64_t c) {
    ExponentTuple lhs_t(F, {b, c});
    ExponentTuple rhs_t(F, {-b - c, c});
    CycNum lhs = jacobi_plain(F, lhs_t);
    CycNum rhs = jacobi_plain(F, rhs_t);
    bool eq = lhs == rhs;
    return ReflectCheck{std::move(lhs), std::move(rhs), eq};
}

FqElem jacobi_closed_form_mod_p(const FieldSpec& F, const std::vector<std::int64_t>& i_tuple,
                                std::int64_t b) {
    const std::int64_t m = F.q() - 1;
    std::vector<std::int64_t> shifted;
    shifted.reserve(i_tuple.size());
    std::int64_t total = 0;
    for (std::int64_t i : i_tuple) {
        std::int64_t s = i < 0 ? i + m : i;
        if (s < 0 || s > b) return F.zero();
        shifted.push_back(s);
        total += s;
    }
    if (total > b) return F.zero();
    BigInt mn = multinomial(b, shifted);
    std::int64_t v = static_cast<std::int64_t>(mn % F.p());
    if (b % 2 == 1) v = -v;
    return F.scalar(v);
}

JacobiModP jacobi_mod_p(const FieldSpec& F, const std::vector<std::int64_t>& i_tuple,
                        std::int64_t b) {
    const std::int64_t m = F.q() - 1;
    require(b >= 0 && b <= m - 1, errc::bad_argument, "b out of range");
    for (std::int64_t i : i_tuple)
        require(i >= -(m - 1) && i <= m - 1, errc::bad_argument, "|i| out of range");
    std::vector<std::int64_t> exps;
    for (std::int64_t i : i_tuple) exps.push_back(-i);
    exps.push_back(b);
    CycNum j = jacobi_plain(F, ExponentTuple(F, exps));
    FqElem reduced = j.reduce_to_field(F);
    FqElem closed = jacobi_closed_form_mod_p(F, i_tuple, b);
    return JacobiModP{reduced, closed, reduced == closed};
}

} // namespace charsum
