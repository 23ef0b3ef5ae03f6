#ifndef CHARSUM_CHARTAB_HPP
#define CHARSUM_CHARTAB_HPP

#include "charsum/cyc.hpp"
#include "charsum/fq.hpp"

namespace charsum {

// Power of the Teichmuller character, exponent canonical mod q-1.
struct Character {
    const FieldSpec* field = nullptr;
    std::int64_t exponent = 0; // stored in [0, q-2]

    Character(const FieldSpec& F, std::int64_t a)
        : field(&F), exponent(((a % (F.q() - 1)) + (F.q() - 1)) % (F.q() - 1)) {}

    CycNum operator()(FqElem x) const;
};

// chi^a(x): 0 at x = 0 for every a (including a = 0), else zeta^{a dlog x}.
// The zero convention is global so that exponents collapsing to 0 mod q-1
// still kill zero coordinates inside Jacobi sums.
CycNum char_eval(const FieldSpec& F, std::int64_t a, FqElem x);

// chi(x) = char_eval(1, x); satisfies reduce_to_field(teichmuller(x)) = x.
CycNum teichmuller(const FieldSpec& F, FqElem x);

// exponent arithmetic helpers: chi^a(x) = zeta^{char_exponent(...)} for x != 0
inline std::int64_t canon_exp(const FieldSpec& F, std::int64_t a) {
    const std::int64_t m = F.q() - 1;
    a %= m;
    return a < 0 ? a + m : a;
}

} // namespace charsum

#endif
