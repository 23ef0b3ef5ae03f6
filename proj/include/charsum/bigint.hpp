#ifndef CHARSUM_BIGINT_HPP
#define CHARSUM_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace charsum {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    BigInt res = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        res *= n - k + i;
        res /= i; // always exact at this point
    }
    return res;
}

// b! / (k_1! ... k_r! (b - sum k_i)!); requires 0 <= k_i and sum k_i <= b
inline BigInt multinomial(std::int64_t b, const std::vector<std::int64_t>& parts) {
    BigInt res = 1;
    std::int64_t rem = b;
    for (std::int64_t k : parts) {
        res *= binomial(rem, k);
        rem -= k;
    }
    return res;
}

// JSON: int64 when it fits, decimal string otherwise
inline nlohmann::json bigint_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return nlohmann::json(static_cast<std::int64_t>(v));
    return nlohmann::json(v.str());
}

inline BigInt bigint_from_json(const nlohmann::json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<std::int64_t>());
}

} // namespace charsum

#endif
