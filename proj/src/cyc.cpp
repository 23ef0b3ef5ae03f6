#include "charsum/cyc.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace charsum {

namespace {

// exact division of a monic-led dividend by a monic divisor over Z
std::vector<BigInt> exact_div(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    const int dd = static_cast<int>(den.size()) - 1;
    const int nn = static_cast<int>(num.size()) - 1;
    std::vector<BigInt> out(static_cast<std::size_t>(nn - dd + 1));
    for (int k = nn - dd; k >= 0; --k) {
        BigInt c = num[static_cast<std::size_t>(k + dd)];
        out[static_cast<std::size_t>(k)] = c;
        if (c != 0)
            for (int j = 0; j <= dd; ++j) num[static_cast<std::size_t>(k + j)] -= c * den[static_cast<std::size_t>(j)];
    }
    for (int j = 0; j < dd; ++j)
        require(num[static_cast<std::size_t>(j)] == 0, errc::inexact_division, "cyclotomic recursion");
    return out;
}

std::map<std::int64_t, std::vector<BigInt>> g_phi_cache;
std::mutex g_phi_mutex;

std::vector<BigInt> compute_phi(std::int64_t m) {
    std::vector<BigInt> num(static_cast<std::size_t>(m + 1));
    num[0] = -1;
    num[static_cast<std::size_t>(m)] = 1;
    for (std::int64_t d = 1; d < m; ++d)
        if (m % d == 0) num = exact_div(std::move(num), cyclotomic_polynomial(d));
    return num;
}

} // namespace

const std::vector<BigInt>& cyclotomic_polynomial(std::int64_t m) {
    require(m >= 1, errc::bad_argument, "cyclotomic order must be >= 1");
    {
        std::lock_guard<std::mutex> lock(g_phi_mutex);
        auto it = g_phi_cache.find(m);
        if (it != g_phi_cache.end()) return it->second;
    }
    auto phi = compute_phi(m);
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return g_phi_cache.emplace(m, std::move(phi)).first->second;
}

CycNum CycNum::operator+(const CycNum& o) const {
    check_order(o);
    CycNum out(m_);
    if (denom_ == o.denom_) {
        out.denom_ = denom_;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
        return out;
    }
    BigInt g = big_gcd(denom_, o.denom_);
    BigInt la = o.denom_ / g, lb = denom_ / g;
    out.denom_ = denom_ * la;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        out.coeffs_[k] = coeffs_[k] * la + o.coeffs_[k] * lb;
    return out;
}

CycNum CycNum::operator-() const {
    CycNum out(m_);
    out.denom_ = denom_;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = -coeffs_[k];
    return out;
}

CycNum CycNum::operator*(const CycNum& o) const {
    check_order(o);
    CycNum out(m_);
    out.denom_ = denom_ * o.denom_;
    const std::size_t m = static_cast<std::size_t>(m_);
    for (std::size_t i = 0; i < m; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (o.coeffs_[j] == 0) continue;
            std::size_t k = i + j;
            if (k >= m) k -= m;
            out.coeffs_[k] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return out;
}

CycNum CycNum::mul_zeta_pow(std::int64_t k) const {
    k %= m_;
    if (k < 0) k += m_;
    CycNum out(m_);
    out.denom_ = denom_;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        std::size_t j = i + static_cast<std::size_t>(k);
        if (j >= coeffs_.size()) j -= coeffs_.size();
        out.coeffs_[j] = coeffs_[i];
    }
    return out;
}

CycNum CycNum::mul_int(const BigInt& v) const {
    CycNum out(m_);
    out.denom_ = denom_;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = coeffs_[k] * v;
    return out;
}

CycNum CycNum::scalar_div(const BigInt& v) const {
    require(v != 0, errc::division_by_zero, "scalar_div by zero");
    CycNum out = *this;
    if (v < 0) {
        out = -out;
        out.denom_ = denom_ * (-v);
    } else {
        out.denom_ = denom_ * v;
    }
    return out;
}

CycNum CycNum::div_exact(const BigInt& v) const {
    CycNum out = scalar_div(v);
    auto can = out.canonical();
    require(can.denom == 1, errc::inexact_division,
            "division by " + v.str() + " leaves denominator " + can.denom.str());
    CycNum norm(m_);
    std::copy(can.coeffs.begin(), can.coeffs.end(), norm.coeffs_.begin());
    return norm;
}

CycNum CycNum::conj() const {
    CycNum out(m_);
    out.denom_ = denom_;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        std::size_t j = (coeffs_.size() - i) % coeffs_.size();
        out.coeffs_[j] += coeffs_[i];
    }
    return out;
}

CycNum CycNum::galois_apply(std::int64_t t) const {
    t %= m_;
    if (t < 0) t += m_;
    require(std::gcd(t, m_) == 1, errc::not_coprime,
            "galois exponent " + std::to_string(t) + " shares a factor with " + std::to_string(m_));
    CycNum out(m_);
    out.denom_ = denom_;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[(i * static_cast<std::size_t>(t)) % coeffs_.size()] += coeffs_[i];
    return out;
}

CycNum::Canonical CycNum::canonical() const {
    const auto& phi = cyclotomic_polynomial(m_);
    const int deg = static_cast<int>(phi.size()) - 1;
    std::vector<BigInt> r = coeffs_;
    for (int k = static_cast<int>(r.size()) - 1; k >= deg; --k) {
        BigInt c = r[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        r[static_cast<std::size_t>(k)] = 0;
        for (int j = 0; j < deg; ++j) r[static_cast<std::size_t>(k - deg + j)] -= c * phi[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(deg));

    Canonical can;
    can.m = m_;
    BigInt g = denom_;
    for (const auto& v : r) g = big_gcd(g, v);
    if (g == 0) {
        can.coeffs.assign(static_cast<std::size_t>(deg), 0);
        can.denom = 1;
        return can;
    }
    can.coeffs.reserve(r.size());
    for (auto& v : r) can.coeffs.push_back(v / g);
    can.denom = denom_ / g;
    return can;
}

bool CycNum::operator==(const CycNum& o) const {
    check_order(o);
    return canonical() == o.canonical();
}

bool CycNum::is_zero() const {
    auto can = canonical();
    for (const auto& v : can.coeffs)
        if (v != 0) return false;
    return true;
}

std::optional<BigInt> CycNum::as_rational_integer() const {
    auto can = canonical();
    if (can.denom != 1) return std::nullopt;
    for (std::size_t k = 1; k < can.coeffs.size(); ++k)
        if (can.coeffs[k] != 0) return std::nullopt;
    return can.coeffs[0];
}

std::complex<double> CycNum::complex_embed() const {
    std::complex<double> acc(0.0, 0.0);
    const double tau = 2.0 * 3.14159265358979323846;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        double c = static_cast<double>(coeffs_[k]);
        double ang = tau * static_cast<double>(k) / static_cast<double>(m_);
        acc += c * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc / static_cast<double>(denom_);
}

FqElem CycNum::reduce_to_field(const FieldSpec& F) const {
    require(m_ == F.q() - 1, errc::order_mismatch,
            "order " + std::to_string(m_) + " is not q-1 = " + std::to_string(F.q() - 1));
    auto can = canonical();
    require(can.denom % F.p() != 0, errc::denominator_not_invertible,
            "denominator " + can.denom.str() + " not invertible mod " + std::to_string(F.p()));
    FqElem acc = F.zero();
    for (std::size_t k = can.coeffs.size(); k-- > 0;) {
        acc = F.mul(acc, F.generator());
        std::int64_t c = static_cast<std::int64_t>(can.coeffs[k] % F.p());
        acc = F.add(acc, F.scalar(c));
    }
    std::int64_t d = static_cast<std::int64_t>(can.denom % F.p());
    return F.mul(acc, F.inv(F.scalar(d)));
}

nlohmann::json CycNum::to_json() const {
    auto can = canonical();
    nlohmann::json j;
    j["m"] = m_;
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : can.coeffs) cs.push_back(bigint_to_json(c));
    j["coeffs"] = cs;
    j["denom"] = bigint_to_json(can.denom);
    auto z = complex_embed();
    j["approx"] = {z.real(), z.imag()};
    return j;
}

CycNum CycNum::from_json(const nlohmann::json& j) {
    CycNum out(j.at("m").get<std::int64_t>());
    const auto& cs = j.at("coeffs");
    require(cs.size() <= out.coeffs_.size(), errc::bad_argument, "too many coefficients");
    for (std::size_t k = 0; k < cs.size(); ++k) out.coeffs_[k] = bigint_from_json(cs[k]);
    if (j.contains("denom")) {
        out.denom_ = bigint_from_json(j.at("denom"));
        require(out.denom_ > 0, errc::bad_argument, "denominator must be positive");
    }
    return out;
}

} // namespace charsum
