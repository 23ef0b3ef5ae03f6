#include "charsum/census.hpp"

#include <sstream>

namespace charsum {

std::vector<CycNum> legendre_squares(const FieldSpec& F, Exec exec) {
    require(F.q() % 2 == 1, errc::bad_argument, "Legendre family needs odd q");
    const std::int64_t m = F.q() - 1;
    const std::int64_t a = m / 2;
    std::vector<CycNum> S(static_cast<std::size_t>(m));
    const int nt = (exec == Exec::serial) ? 1 : thread_count();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (std::int64_t t = 0; t < m; ++t) {
        CycNum j = jacobi_plain(F, ExponentTuple(F, {-t, a}), Exec::serial);
        S[static_cast<std::size_t>(t)] = j * j;
    }
    return S;
}

CycNum legendre_c1(const FieldSpec& F, FqElem lambda, const std::vector<CycNum>& squares) {
    F.check(lambda);
    require(!lambda.is_zero(), errc::bad_argument, "lambda must be nonzero");
    const std::int64_t m = F.q() - 1;
    const std::int64_t u = F.dlog(lambda);
    CycNum acc = CycNum::zero(m);
    for (std::int64_t j = 0; j < m; ++j)
        acc += squares[static_cast<std::size_t>(j)].mul_zeta_pow(u * j);
    return acc.div_exact(m);
}

CycNum legendre_c1(const FieldSpec& F, FqElem lambda, Exec exec) {
    return legendre_c1(F, lambda, legendre_squares(F, exec));
}

DeuringCheck deuring_mod_p(const FieldSpec& F, FqElem lambda, Exec exec) {
    F.check(lambda);
    require(!lambda.is_zero(), errc::bad_argument, "lambda must be nonzero");
    const std::int64_t a = (F.q() - 1) / 2;
    FqElem H = F.zero();
    FqElem lpow = F.one();
    for (std::int64_t j = 0; j <= a; ++j) {
        BigInt b = binomial(a, j);
        b = (b * b) % F.p();
        H = F.add(H, F.mul(F.scalar(static_cast<std::int64_t>(b)), lpow));
        lpow = F.mul(lpow, lambda);
    }
    FqElem c1 = legendre_c1(F, lambda, exec).reduce_to_field(F);
    // (q-1)^{-1} = -1 mod p turns the congruence into c_1 = -H(lambda)
    bool cong = c1 == F.neg(H);
    return DeuringCheck{H, c1, cong, H.is_zero()};
}

std::string LegendreTraceTable::to_csv() const {
    std::ostringstream os;
    os << "lambda,c1_artin,c1_paper,count_N1,supersingular,bridge_unit\n";
    for (const auto& r : rows)
        os << r.lambda_index << ',' << r.c1_artin.str() << ',' << r.c1_paper.str() << ','
           << r.count_N1 << ',' << (r.supersingular ? 1 : 0) << ',' << r.bridge << '\n';
    return os.str();
}

nlohmann::json LegendreTraceTable::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row;
        row["lambda"] = r.lambda_index;
        row["c1_paper"] = bigint_to_json(r.c1_paper);
        row["c1_artin"] = bigint_to_json(r.c1_artin);
        row["count_N1"] = r.count_N1;
        row["supersingular"] = r.supersingular;
        row["degenerate"] = r.degenerate;
        row["bridge_unit"] = r.bridge;
        rows_json.push_back(row);
    }
    nlohmann::json out;
    out["q"] = field->q();
    out["rows"] = rows_json;
    out["count_supersingular"] = count_supersingular;
    out["count_exceeding"] = count_exceeding;
    return out;
}

LegendreTraceTable build_census(const std::shared_ptr<const FieldSpec>& Fp, Exec exec) {
    const FieldSpec& F = *Fp;
    require(F.q() % 2 == 1 && F.q() >= 5, errc::bad_argument, "census needs odd q >= 5");
    const std::int64_t m = F.q() - 1;
    auto squares = legendre_squares(F, exec);
    // chi(-1)^{1*1*sum a_i} with sum a_i = 3(q-1)/2
    const int bridge = ((3 * (m / 2)) % 2 == 0) ? 1 : -1;

    LegendreTraceTable table;
    table.field = Fp;
    table.rows.resize(static_cast<std::size_t>(F.q() - 1));
    std::vector<CycNum> values(static_cast<std::size_t>(F.q() - 1));
    bool failed = false;
    const int nt = (exec == Exec::serial) ? 1 : thread_count();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (std::int64_t li = 1; li < F.q(); ++li) {
        try {
            values[static_cast<std::size_t>(li - 1)] = legendre_c1(F, F.elem(li), squares);
        } catch (...) {
#pragma omp critical
            failed = true;
        }
    }
    require(!failed, errc::inexact_division, "trace formula did not divide exactly");
    for (std::int64_t li = 1; li < F.q(); ++li) {
        auto v = values[static_cast<std::size_t>(li - 1)].as_rational_integer();
        require(v.has_value(), errc::inexact_division, "c1 value is not a rational integer");
        LegendreRow row;
        row.lambda_index = li;
        row.c1_paper = *v;
        row.c1_artin = bridge > 0 ? *v : -*v;
        row.count_N1 = F.q() + 1 + static_cast<std::int64_t>(row.c1_artin);
        row.supersingular = (*v % F.p()) == 0;
        row.degenerate = F.elem(li) == F.one();
        row.bridge = bridge;
        table.rows[static_cast<std::size_t>(li - 1)] = std::move(row);
    }
    for (const auto& r : table.rows) {
        if (r.supersingular) ++table.count_supersingular;
        if (r.c1_artin > 0) ++table.count_exceeding;
    }
    return table;
}

HermitianCensusMatrix hermitian_matrix(const std::shared_ptr<const FieldSpec>& Fp, Exec exec) {
    const FieldSpec& F = *Fp;
    auto squares = legendre_squares(F, exec);
    const std::int64_t m = F.q() - 1;
    for (std::int64_t t = 0; t < m; ++t)
        require(squares[static_cast<std::size_t>((m - t) % m)] ==
                    squares[static_cast<std::size_t>(t)].conj(),
                errc::precondition_failed, "matrix is not Hermitian");
    return HermitianCensusMatrix{Fp, std::move(squares)};
}

std::vector<CycNum> charpoly_exact(const std::vector<std::vector<CycNum>>& A) {
    const int n = static_cast<int>(A.size());
    require(n >= 1, errc::bad_argument, "empty matrix");
    const std::int64_t m = A[0][0].order();

    auto mat_mul = [&](const std::vector<std::vector<CycNum>>& X,
                       const std::vector<std::vector<CycNum>>& Y) {
        std::vector<std::vector<CycNum>> Z(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            Z[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(n), CycNum::zero(m));
            for (int k = 0; k < n; ++k) {
                const CycNum& x = X[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                if (x.is_zero()) continue;
                for (int j = 0; j < n; ++j)
                    Z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                        x * Y[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            }
        }
        return Z;
    };
    auto trace = [&](const std::vector<std::vector<CycNum>>& X) {
        CycNum t = CycNum::zero(m);
        for (int i = 0; i < n; ++i) t += X[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        return t;
    };

    std::vector<CycNum> coeffs; // c_1..c_n
    auto M = A;
    CycNum c = -trace(M);
    coeffs.push_back(c);
    for (int k = 2; k <= n; ++k) {
        // M <- A (M + c I)
        auto shifted = M;
        for (int i = 0; i < n; ++i)
            shifted[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += c;
        M = mat_mul(A, shifted);
        c = (-trace(M)).div_exact(k);
        coeffs.push_back(c);
    }
    return coeffs;
}

CharpolyCheck charpoly_check(const std::shared_ptr<const FieldSpec>& Fp, Exec exec) {
    const FieldSpec& F = *Fp;
    const std::int64_t m = F.q() - 1;
    auto mat = hermitian_matrix(Fp, exec);

    // trace values and the DFT diagonalization of the circulant
    std::vector<BigInt> traces;
    bool dft_ok = true;
    for (std::int64_t li = 1; li < F.q(); ++li) {
        CycNum c1 = legendre_c1(F, F.elem(li), mat.squares);
        auto v = c1.as_rational_integer();
        require(v.has_value(), errc::inexact_division, "trace value is not a rational integer");
        traces.push_back(*v);
        // per-eigenvalue identity: (q-1)^{-1} sum_t S_t zeta^{ut} = c1(g^u)
        const std::int64_t u = F.dlog(F.elem(li));
        CycNum eig = CycNum::zero(m);
        for (std::int64_t t = 0; t < m; ++t)
            eig += mat.squares[static_cast<std::size_t>(t)].mul_zeta_pow(u * t);
        if (!(eig.div_exact(m) == c1)) dft_ok = false;
    }

    // characteristic polynomial of the prefixed matrix, no circulant shortcut
    std::vector<std::vector<CycNum>> A(static_cast<std::size_t>(m));
    for (int i = 0; i < static_cast<int>(m); ++i) {
        A[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(m));
        for (int j = 0; j < static_cast<int>(m); ++j)
            A[static_cast<std::size_t>(i)].push_back(
                mat.entry_unprefixed(i, j).scalar_div(m));
    }
    auto cp = charpoly_exact(A);

    CharpolyCheck out;
    out.dft_diagonal = dft_ok;
    out.from_matrix.push_back(1);
    for (const auto& c : cp) {
        auto v = c.as_rational_integer();
        require(v.has_value(), errc::inexact_division,
                "characteristic polynomial coefficient is not a rational integer");
        out.from_matrix.push_back(*v);
    }
    // expand prod (x - c1)
    std::vector<BigInt> poly{1};
    for (const auto& t : traces) {
        std::vector<BigInt> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * t;
        }
        // next is ordered by ascending degree; keep descending like from_matrix
        poly = std::move(next);
    }
    // poly currently ascending in degree with leading at back; reverse
    out.from_traces.assign(poly.rbegin(), poly.rend());
    out.equal = out.from_matrix == out.from_traces;
    return out;
}

nlohmann::json CensusMatrixReport::to_json() const {
    nlohmann::json j;
    nlohmann::json ev = nlohmann::json::array();
    for (const auto& e : eigenvalues) ev.push_back(bigint_to_json(e));
    j["eigenvalues"] = ev;
    j["rank"] = rank;
    j["signature"] = {{"positive", n_positive}, {"negative", n_negative}, {"zero", n_zero}};
    nlohmann::json ms = nlohmann::json::array();
    for (const auto& mv : minors)
        ms.push_back(mv ? bigint_to_json(*mv) : nlohmann::json());
    j["minors"] = ms;
    j["positive_minors"] = positive_minors;
    j["all_minors_certified"] = all_minors_certified;
    j["minors_claim_holds"] = minors_claim_holds;
    j["positive_minors_advisory"] = positive_minors_advisory;
    j["jacobi_persistences_advisory"] = jacobi_persistences_advisory;
    j["warnings"] = warnings;
    return j;
}

CensusMatrixReport rank_and_signature(const std::shared_ptr<const FieldSpec>& Fp, Exec exec) {
    const FieldSpec& F = *Fp;
    const int m = static_cast<int>(F.q() - 1);
    auto mat = hermitian_matrix(Fp, exec);

    CensusMatrixReport rep;
    for (std::int64_t li = 1; li < F.q(); ++li) {
        auto v = legendre_c1(F, F.elem(li), mat.squares).as_rational_integer();
        require(v.has_value(), errc::inexact_division, "trace value is not a rational integer");
        rep.eigenvalues.push_back(*v);
    }
    for (const auto& e : rep.eigenvalues) {
        if (e > 0)
            ++rep.n_positive;
        else if (e < 0)
            ++rep.n_negative;
        else
            ++rep.n_zero;
    }
    rep.rank = m - rep.n_zero;

    // leading minors of the unprefixed matrix
    rep.all_minors_certified = true;
    bool prev_positive = true; // the sequence starts at M_0 = 1
    for (int jdim = 1; jdim <= m; ++jdim) {
        std::vector<std::vector<CycNum>> sub(static_cast<std::size_t>(jdim));
        for (int i = 0; i < jdim; ++i)
            for (int k = 0; k < jdim; ++k)
                sub[static_cast<std::size_t>(i)].push_back(mat.entry_unprefixed(i, k));
        auto cp = charpoly_exact(sub);
        CycNum det = cp.back();
        if (jdim % 2 == 1) det = -det; // det = (-1)^j * charpoly constant term
        auto emb = det.complex_embed();
        bool positive = emb.real() > 0.5;
        if (positive) ++rep.positive_minors_advisory;
        if (positive == prev_positive) ++rep.jacobi_persistences_advisory;
        prev_positive = positive;
        auto v = det.as_rational_integer();
        if (!v) {
            rep.minors.push_back(std::nullopt);
            rep.all_minors_certified = false;
            rep.warnings.push_back("minor M_" + std::to_string(jdim) +
                                   " is not a rational integer; exact sign comparison skipped");
            continue;
        }
        if (*v == 0)
            rep.warnings.push_back("minor M_" + std::to_string(jdim) +
                                   " vanishes; leading-minor sign counting is degenerate");
        if (*v > 0) ++rep.positive_minors;
        rep.minors.push_back(*v);
    }
    rep.minors_claim_holds =
        rep.all_minors_certified && rep.positive_minors == rep.n_positive;
    return rep;
}

QuotientFactorCheck quotient_factor_check(const std::shared_ptr<const FieldSpec>& Fp, FqElem lambda,
                                          Exec exec) {
    const FieldSpec& F = *Fp;
    require((F.q() - 1) % 4 == 0, errc::precondition_failed, "needs 4 | q-1");
    F.check(lambda);
    require(!lambda.is_zero() && !(lambda == F.one()), errc::precondition_failed,
            "lambda must avoid 0 and 1");
    require(F.pow(lambda, (F.q() - 1) / 2) == F.scalar(-1), errc::precondition_failed,
            "lambda^{(q-1)/2} != -1");

    CoverSpec cover = validate_cover(Fp, 4, {F.zero(), F.one(), lambda}, {1, 1, 1});
    LPolynomial L1 = lseries_oracle_paper(cover, 1, exec);
    LPolynomial L3 = lseries_oracle_paper(cover, 3, exec);

    auto ct = constant_term_check(cover, 1, exec);
    auto unit_int = ct.unit.as_rational_integer();
    require(unit_int.has_value() && (*unit_int == 1 || *unit_int == -1),
            errc::precondition_failed, "constant-term unit is not a sign here");

    QuotientFactorCheck out;
    out.c1_zero = L1.coeffs[1].is_zero();
    out.c2_matches = ct.unit_prediction;
    out.unit = *unit_int > 0 ? 1 : -1;
    out.paper_sign = ct.paper_sign;
    out.conjugate_pair = true;
    for (std::size_t i = 0; i < L1.coeffs.size(); ++i)
        if (!(L3.coeffs[i] == L1.coeffs[i].conj())) out.conjugate_pair = false;
    return out;
}

} // namespace charsum
