#include "charsum/chartab.hpp"

namespace charsum {

CycNum char_eval(const FieldSpec& F, std::int64_t a, FqElem x) {
    F.check(x);
    const std::int64_t m = F.q() - 1;
    if (x.is_zero()) return CycNum::zero(m);
    return CycNum::zeta_pow(m, canon_exp(F, a) * F.dlog(x));
}

CycNum teichmuller(const FieldSpec& F, FqElem x) { return char_eval(F, 1, x); }

CycNum Character::operator()(FqElem x) const { return char_eval(*field, exponent, x); }

} // namespace charsum
