#ifndef CHARSUM_FQ_HPP
#define CHARSUM_FQ_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "charsum/errors.hpp"
#include "json.hpp"

namespace charsum {

class FieldSpec;

// Element of F_q, stored as the index of its canonical coefficient vector
// (base-p digits, constant coefficient least significant). Value type; the
// owning FieldSpec must outlive it.
struct FqElem {
    const FieldSpec* field = nullptr;
    std::uint32_t idx = 0;

    bool is_zero() const { return idx == 0; }
    friend bool operator==(const FqElem&, const FqElem&) = default;
};

// F_q with q = p^h: modulus and generator chosen deterministically, dense
// exp/dlog tables built eagerly. Immutable after construction and safe to
// share across threads.
class FieldSpec {
  public:
    std::int64_t p() const { return p_; }
    int h() const { return h_; }
    std::int64_t q() const { return q_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }
    FqElem generator() const { return elem(gen_idx_); }

    FqElem zero() const { return {this, 0}; }
    FqElem one() const { return {this, 1}; }
    FqElem elem(std::int64_t index) const {
        require(index >= 0 && index < q_, errc::bad_argument, "element index out of range");
        return {this, static_cast<std::uint32_t>(index)};
    }
    // c * 1 for an integer c
    FqElem scalar(std::int64_t c) const {
        c %= p_;
        if (c < 0) c += p_;
        return {this, static_cast<std::uint32_t>(c)};
    }
    FqElem from_coeffs(const std::vector<std::int64_t>& coeffs) const;
    std::vector<std::int64_t> coeffs(FqElem x) const;

    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const {
        check(a);
        check(b);
        if (a.is_zero() || b.is_zero()) return zero();
        std::int64_t e = dlog_[a.idx] + dlog_[b.idx];
        if (e >= q_ - 1) e -= q_ - 1;
        return {this, exp_[static_cast<std::size_t>(e)]};
    }
    FqElem inv(FqElem a) const {
        check(a);
        require(!a.is_zero(), errc::division_by_zero, "inverse of zero");
        std::int64_t e = (q_ - 1 - dlog_[a.idx]) % (q_ - 1);
        return {this, exp_[static_cast<std::size_t>(e)]};
    }
    // x^e with e any integer (negative allowed for nonzero x); 0^0 = 1
    FqElem pow(FqElem a, std::int64_t e) const;

    // exponent in [0, q-2] with generator^dlog(x) = x
    std::int64_t dlog(FqElem x) const {
        check(x);
        require(!x.is_zero(), errc::dlog_of_zero, "dlog of zero");
        return dlog_[x.idx];
    }
    // generator^e for any integer e
    FqElem gen_pow(std::int64_t e) const {
        std::int64_t m = q_ - 1;
        e %= m;
        if (e < 0) e += m;
        return {this, exp_[static_cast<std::size_t>(e)]};
    }

    void check(FqElem a) const {
        require(a.field == this, errc::field_mismatch, "element from a different field");
    }

    nlohmann::json to_json() const;

  private:
    friend std::shared_ptr<const FieldSpec>
    build_field(std::int64_t p, int h, const std::optional<std::vector<std::int64_t>>& modulus);
    friend struct Embedding;
    friend std::pair<std::shared_ptr<const FieldSpec>, struct Embedding>
    extend_and_embed(const std::shared_ptr<const FieldSpec>& base, int k);

    FieldSpec() = default;
    void build_tables_from(std::uint32_t gen_idx);

    std::int64_t p_ = 0;
    int h_ = 0;
    std::int64_t q_ = 0;
    std::vector<std::int64_t> modulus_; // monic, length h+1
    std::uint32_t gen_idx_ = 0;
    std::vector<std::uint32_t> exp_;  // exp_[e] = index of generator^e, size q-1
    std::vector<std::int64_t> dlog_;  // dlog_[idx], size q; dlog_[0] unused
};

// Deterministic construction: modulus is the lexicographically smallest monic
// irreducible (coefficient tuples (c_0,...,c_{h-1}) scanned in order) unless
// given; the generator is the first element in enumeration order whose
// multiplicative order is q-1.
std::shared_ptr<const FieldSpec>
build_field(std::int64_t p, int h, const std::optional<std::vector<std::int64_t>>& modulus = std::nullopt);

// Ring embedding of a base field into its degree-k extension.
struct Embedding {
    const FieldSpec* from = nullptr;
    const FieldSpec* to = nullptr;
    std::int64_t stride = 1; // (q^k-1)/(q-1); eps(g^t) = G^(stride*t)

    FqElem operator()(FqElem x) const {
        from->check(x);
        if (x.is_zero()) return to->zero();
        return to->gen_pow(stride * from->dlog(x));
    }
};

// Builds F_{q^k} (deterministic modulus over F_p of degree h*k) whose
// generator G is chosen compatibly: eps(g) = G^((q^k-1)/(q-1)) is a root of
// the minimal polynomial of g, making eps a field homomorphism.
std::pair<std::shared_ptr<const FieldSpec>, Embedding>
extend_and_embed(const std::shared_ptr<const FieldSpec>& base, int k);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n);

// dense polynomial helpers over F_q (coefficient vectors, index = degree)
using FqPoly = std::vector<FqElem>;
FqElem poly_eval(const FieldSpec& F, const FqPoly& v, FqElem x);
// true iff num is divisible by the monic polynomial den
bool poly_divisible(const FieldSpec& F, const FqPoly& num, const FqPoly& den);

} // namespace charsum

#endif
