#include "charsum/fq.hpp"

#include <algorithm>

namespace charsum {

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::dlog_of_zero: return "DlogOfZero";
        case errc::order_mismatch: return "OrderMismatch";
        case errc::denominator_not_invertible: return "DenominatorNotInvertible";
        case errc::not_coprime: return "NotCoprime";
        case errc::inexact_division: return "InexactDivision";
        case errc::zero_coefficient: return "ZeroCoefficient";
        case errc::n_does_not_divide_q_minus_1: return "NDoesNotDivideQMinus1";
        case errc::branch_points_not_distinct: return "BranchPointsNotDistinct";
        case errc::exponent_out_of_range: return "ExponentOutOfRange";
        case errc::unramified_at_infinity: return "UnramifiedAtInfinity";
        case errc::degenerate_character: return "DegenerateCharacter";
        case errc::not_totally_ramified: return "NotTotallyRamified";
        case errc::not_solved_form: return "NotSolvedForm";
        case errc::precondition_failed: return "PreconditionFailed";
        case errc::bad_argument: return "BadArgument";
    }
    return "UnknownError";
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

// base-p residue polynomials as int vectors of length h, used only during
// field construction (before the dlog tables exist)
using Residue = std::vector<std::int64_t>;

Residue residue_from_index(std::int64_t i, std::int64_t p, int h) {
    Residue v(static_cast<std::size_t>(h));
    for (int d = 0; d < h; ++d) {
        v[static_cast<std::size_t>(d)] = i % p;
        i /= p;
    }
    return v;
}

std::int64_t residue_to_index(const Residue& v, std::int64_t p) {
    std::int64_t r = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) r = r * p + *it;
    return r;
}

Residue residue_mul(const Residue& a, const Residue& b, const std::vector<std::int64_t>& modulus,
                    std::int64_t p, int h) {
    std::vector<std::int64_t> prod(static_cast<std::size_t>(2 * h - 1), 0);
    for (int i = 0; i < h; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < h; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                (prod[static_cast<std::size_t>(i + j)] +
                 a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]) % p;
    }
    for (int d = 2 * h - 2; d >= h; --d) {
        std::int64_t c = prod[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(d)] = 0;
        for (int k = 0; k < h; ++k) {
            auto& slot = prod[static_cast<std::size_t>(d - h + k)];
            slot = ((slot - c * modulus[static_cast<std::size_t>(k)]) % p + p) % p;
        }
    }
    prod.resize(static_cast<std::size_t>(h));
    return prod;
}

Residue residue_pow(Residue base, std::int64_t e, const std::vector<std::int64_t>& modulus,
                    std::int64_t p, int h) {
    Residue r(static_cast<std::size_t>(h), 0);
    r[0] = 1;
    while (e > 0) {
        if (e & 1) r = residue_mul(r, base, modulus, p, h);
        base = residue_mul(base, base, modulus, p, h);
        e >>= 1;
    }
    return r;
}

// trial division by monic polynomials of degree <= deg(f)/2 over F_p
bool fp_poly_irreducible(const std::vector<std::int64_t>& f, std::int64_t p) {
    const int n = static_cast<int>(f.size()) - 1;
    std::vector<std::int64_t> div;
    for (int deg = 1; deg <= n / 2; ++deg) {
        std::int64_t count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        div.assign(static_cast<std::size_t>(deg + 1), 0);
        div[static_cast<std::size_t>(deg)] = 1;
        for (std::int64_t t = 0; t < count; ++t) {
            std::int64_t tt = t;
            for (int i = 0; i < deg; ++i) {
                div[static_cast<std::size_t>(i)] = tt % p;
                tt /= p;
            }
            std::vector<std::int64_t> rem = f;
            for (int d = n; d >= deg; --d) {
                std::int64_t c = rem[static_cast<std::size_t>(d)] % p;
                if (c == 0) continue;
                rem[static_cast<std::size_t>(d)] = 0;
                for (int k = 0; k < deg; ++k) {
                    auto& slot = rem[static_cast<std::size_t>(d - deg + k)];
                    slot = ((slot - c * div[static_cast<std::size_t>(k)]) % p + p) % p;
                }
            }
            bool zero = true;
            for (int k = 0; k < deg; ++k)
                if (rem[static_cast<std::size_t>(k)] % p != 0) { zero = false; break; }
            if (zero) return false;
        }
    }
    return true;
}

std::vector<std::int64_t> smallest_irreducible(std::int64_t p, int h) {
    std::int64_t count = 1;
    for (int i = 0; i < h; ++i) count *= p;
    std::vector<std::int64_t> f(static_cast<std::size_t>(h + 1), 0);
    f[static_cast<std::size_t>(h)] = 1;
    for (std::int64_t t = 0; t < count; ++t) {
        std::int64_t tt = t;
        for (int i = 0; i < h; ++i) {
            f[static_cast<std::size_t>(i)] = tt % p;
            tt /= p;
        }
        if (fp_poly_irreducible(f, p)) return f;
    }
    fail(errc::reducible_modulus, "no irreducible modulus found (unreachable)");
}

} // namespace

void FieldSpec::build_tables_from(std::uint32_t gen_idx) {
    gen_idx_ = gen_idx;
    exp_.assign(static_cast<std::size_t>(q_ - 1), 0);
    dlog_.assign(static_cast<std::size_t>(q_), -1);
    Residue g = residue_from_index(gen_idx, p_, h_);
    Residue x(static_cast<std::size_t>(h_), 0);
    x[0] = 1;
    for (std::int64_t e = 0; e < q_ - 1; ++e) {
        std::int64_t idx = residue_to_index(x, p_);
        exp_[static_cast<std::size_t>(e)] = static_cast<std::uint32_t>(idx);
        dlog_[static_cast<std::size_t>(idx)] = e;
        x = residue_mul(x, g, modulus_, p_, h_);
    }
}

std::shared_ptr<const FieldSpec>
build_field(std::int64_t p, int h, const std::optional<std::vector<std::int64_t>>& modulus) {
    require(is_prime(p), errc::not_prime, "p = " + std::to_string(p));
    require(h >= 1, errc::bad_argument, "extension degree must be >= 1");

    auto F = std::shared_ptr<FieldSpec>(new FieldSpec());
    F->p_ = p;
    F->h_ = h;
    F->q_ = 1;
    for (int i = 0; i < h; ++i) {
        require(F->q_ <= (std::int64_t{1} << 31) / p, errc::bad_argument, "field too large");
        F->q_ *= p;
    }

    if (modulus) {
        auto m = *modulus;
        require(static_cast<int>(m.size()) == h + 1, errc::bad_argument, "modulus degree != h");
        for (auto& c : m) c = ((c % p) + p) % p;
        require(m.back() == 1, errc::bad_argument, "modulus must be monic");
        require(fp_poly_irreducible(m, p), errc::reducible_modulus, "given modulus factors over F_p");
        F->modulus_ = m;
    } else {
        F->modulus_ = smallest_irreducible(p, h);
    }

    // smallest element (enumeration order) of multiplicative order q-1
    const std::int64_t q1 = F->q_ - 1;
    const auto factors = prime_factors(q1);
    std::uint32_t gen_idx = 0;
    for (std::int64_t i = 1; i < F->q_; ++i) {
        Residue cand = residue_from_index(i, p, h);
        bool ok = true;
        for (std::int64_t ell : factors) {
            Residue t = residue_pow(cand, q1 / ell, F->modulus_, p, h);
            if (residue_to_index(t, p) == 1) { ok = false; break; }
        }
        if (!ok) continue;
        Residue full = residue_pow(cand, q1, F->modulus_, p, h);
        require(residue_to_index(full, p) == 1, errc::reducible_modulus,
                "element order exceeds q-1; modulus is not irreducible");
        gen_idx = static_cast<std::uint32_t>(i);
        break;
    }
    require(gen_idx != 0, errc::bad_argument, "no generator found (unreachable for a field)");
    F->build_tables_from(gen_idx);
    return F;
}

FqElem FieldSpec::from_coeffs(const std::vector<std::int64_t>& coeffs) const {
    require(static_cast<int>(coeffs.size()) <= h_, errc::bad_argument, "too many coefficients");
    Residue v(static_cast<std::size_t>(h_), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) v[i] = ((coeffs[i] % p_) + p_) % p_;
    return {this, static_cast<std::uint32_t>(residue_to_index(v, p_))};
}

std::vector<std::int64_t> FieldSpec::coeffs(FqElem x) const {
    check(x);
    return residue_from_index(x.idx, p_, h_);
}

FqElem FieldSpec::add(FqElem a, FqElem b) const {
    check(a);
    check(b);
    // digitwise mod-p addition of the two indices
    std::int64_t ia = a.idx, ib = b.idx, out = 0, mult = 1;
    for (int d = 0; d < h_; ++d) {
        out += ((ia + ib) % p_) * mult;
        ia /= p_;
        ib /= p_;
        mult *= p_;
    }
    return {this, static_cast<std::uint32_t>(out)};
}

FqElem FieldSpec::neg(FqElem a) const {
    check(a);
    std::int64_t ia = a.idx, out = 0, mult = 1;
    for (int d = 0; d < h_; ++d) {
        out += ((p_ - ia % p_) % p_) * mult;
        ia /= p_;
        mult *= p_;
    }
    return {this, static_cast<std::uint32_t>(out)};
}

FqElem FieldSpec::pow(FqElem a, std::int64_t e) const {
    check(a);
    if (a.is_zero()) {
        require(e >= 0, errc::division_by_zero, "negative power of zero");
        return e == 0 ? one() : zero();
    }
    return gen_pow(dlog_[a.idx] * e);
}

nlohmann::json FieldSpec::to_json() const {
    nlohmann::json j;
    j["p"] = p_;
    j["h"] = h_;
    j["modulus"] = modulus_;
    j["generator"] = coeffs(generator());
    return j;
}

std::pair<std::shared_ptr<const FieldSpec>, Embedding>
extend_and_embed(const std::shared_ptr<const FieldSpec>& base, int k) {
    require(k >= 1, errc::bad_argument, "extension degree must be >= 1");
    const FieldSpec& F = *base;
    if (k == 1) return {base, Embedding{base.get(), base.get(), 1}};

    auto raw = build_field(F.p(), F.h() * k);
    // we re-seat the generator below; work on a mutable copy
    auto E = std::shared_ptr<FieldSpec>(new FieldSpec(*raw));
    const std::int64_t stride = (E->q() - 1) / (F.q() - 1);

    // minimal polynomial of the base generator over F_p: prod (x - g^{p^i})
    std::vector<FqElem> mp{F.one()};
    FqElem conj = F.generator();
    for (int i = 0; i < F.h(); ++i) {
        std::vector<FqElem> next(mp.size() + 1, F.zero());
        for (std::size_t t = 0; t < mp.size(); ++t) {
            next[t + 1] = F.add(next[t + 1], mp[t]);
            next[t] = F.sub(next[t], F.mul(mp[t], conj));
        }
        mp = std::move(next);
        conj = F.pow(conj, F.p());
    }
    std::vector<std::int64_t> mp_fp;
    for (const auto& c : mp) {
        auto cs = F.coeffs(c);
        for (std::size_t i = 1; i < cs.size(); ++i)
            require(cs[i] == 0, errc::bad_argument, "generator minimal polynomial not over F_p");
        mp_fp.push_back(cs[0]);
    }

    // roots of the minimal polynomial lie among the (q-1)-torsion G0^(stride*t)
    auto eval_mp = [&](FqElem x) {
        FqElem acc = E->zero();
        for (auto it = mp_fp.rbegin(); it != mp_fp.rend(); ++it)
            acc = E->add(E->mul(acc, x), E->scalar(*it));
        return acc;
    };
    FqElem beta = E->zero();
    for (std::int64_t t = 0; t < F.q() - 1; ++t) {
        FqElem cand = E->gen_pow(stride * t);
        if (eval_mp(cand).is_zero()) { beta = cand; break; }
    }
    require(!beta.is_zero(), errc::bad_argument, "no root of base minimal polynomial (unreachable)");

    // smallest generator G with G^stride = beta, so eps(g) = G^stride exactly
    const std::int64_t Q1 = E->q() - 1;
    const auto factors = prime_factors(Q1);
    std::uint32_t compat = 0;
    for (std::int64_t i = 1; i < E->q(); ++i) {
        FqElem cand = E->elem(i);
        if (!(E->pow(cand, stride) == beta)) continue;
        bool ok = true;
        for (std::int64_t ell : factors)
            if (E->pow(cand, Q1 / ell) == E->one()) { ok = false; break; }
        if (ok) { compat = static_cast<std::uint32_t>(i); break; }
    }
    require(compat != 0, errc::bad_argument, "no compatible generator (unreachable)");
    E->build_tables_from(compat);

    std::shared_ptr<const FieldSpec> out = E;
    return {out, Embedding{base.get(), out.get(), stride}};
}

FqElem poly_eval(const FieldSpec& F, const FqPoly& v, FqElem x) {
    FqElem acc = F.zero();
    for (auto it = v.rbegin(); it != v.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
    return acc;
}

bool poly_divisible(const FieldSpec& F, const FqPoly& num, const FqPoly& den) {
    const int dd = static_cast<int>(den.size()) - 1;
    FqPoly rem = num;
    for (int d = static_cast<int>(rem.size()) - 1; d >= dd; --d) {
        FqElem c = rem[static_cast<std::size_t>(d)];
        if (c.is_zero()) continue;
        rem[static_cast<std::size_t>(d)] = F.zero();
        for (int k = 0; k < dd; ++k) {
            auto& slot = rem[static_cast<std::size_t>(d - dd + k)];
            slot = F.sub(slot, F.mul(c, den[static_cast<std::size_t>(k)]));
        }
    }
    for (int k = 0; k < dd && k < static_cast<int>(rem.size()); ++k)
        if (!rem[static_cast<std::size_t>(k)].is_zero()) return false;
    return true;
}

} // namespace charsum
