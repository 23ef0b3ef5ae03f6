#ifndef CHARSUM_CYC_HPP
#define CHARSUM_CYC_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "charsum/bigint.hpp"
#include "charsum/errors.hpp"
#include "charsum/fq.hpp"

namespace charsum {

// Exact element of Z[zeta_m] (plus an optional integer denominator), stored in
// the group-ring representation: coeffs[k] multiplies zeta^k, length m. This
// keeps multiplication a cyclic convolution and makes multiplying by a root of
// unity an index rotation; reduction mod Phi_m happens only at equality,
// canonicalization and serialization. Immutable value semantics.
class CycNum {
  public:
    CycNum() = default;
    explicit CycNum(std::int64_t m) : m_(m), coeffs_(static_cast<std::size_t>(m)), denom_(1) {
        require(m >= 1, errc::bad_argument, "cyclotomic order must be >= 1");
    }
    static CycNum zero(std::int64_t m) { return CycNum(m); }
    static CycNum integer(std::int64_t m, const BigInt& v) {
        CycNum z(m);
        z.coeffs_[0] = v;
        return z;
    }
    static CycNum zeta_pow(std::int64_t m, std::int64_t k) {
        CycNum z(m);
        k %= m;
        if (k < 0) k += m;
        z.coeffs_[static_cast<std::size_t>(k)] = 1;
        return z;
    }

    std::int64_t order() const { return m_; }
    const BigInt& denom() const { return denom_; }

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const { return *this + (-o); }
    CycNum operator-() const;
    CycNum operator*(const CycNum& o) const;
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    CycNum mul_zeta_pow(std::int64_t k) const; // times zeta^k, O(m)
    CycNum mul_int(const BigInt& v) const;
    // records the divisor in the denominator; always exact by construction
    CycNum scalar_div(const BigInt& v) const;
    // scalar division that must come out integral; throws InexactDivision
    CycNum div_exact(const BigInt& v) const;

    CycNum conj() const;                       // zeta -> zeta^{-1}
    CycNum galois_apply(std::int64_t t) const; // zeta -> zeta^t, gcd(t, m) = 1

    // canonical form: remainder mod Phi_m (degree < phi(m)) with minimal denominator
    struct Canonical {
        std::int64_t m = 1;
        std::vector<BigInt> coeffs; // length phi(m)
        BigInt denom = 1;
        bool operator==(const Canonical&) const = default;
    };
    Canonical canonical() const;

    bool operator==(const CycNum& o) const;
    bool is_zero() const;

    std::optional<BigInt> as_rational_integer() const;
    std::complex<double> complex_embed() const; // advisory only, never for equality

    // ring map Z[zeta_{q-1}] -> F_q with zeta -> generator; requires order m = q-1
    // and the denominator invertible mod p
    FqElem reduce_to_field(const FieldSpec& F) const;

    nlohmann::json to_json() const;
    static CycNum from_json(const nlohmann::json& j);

  private:
    void check_order(const CycNum& o) const {
        require(m_ == o.m_, errc::order_mismatch,
                "orders " + std::to_string(m_) + " vs " + std::to_string(o.m_));
    }

    std::int64_t m_ = 1;
    std::vector<BigInt> coeffs_ = {BigInt(0)};
    BigInt denom_ = 1;
};

// m-th cyclotomic polynomial over Z, computed by exact recursive division of
// x^m - 1 by the Phi_d for proper divisors d; results are cached per m.
const std::vector<BigInt>& cyclotomic_polynomial(std::int64_t m);

} // namespace charsum

#endif
