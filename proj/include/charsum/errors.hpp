#ifndef CHARSUM_ERRORS_HPP
#define CHARSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace charsum {

enum class errc {
    not_prime,
    reducible_modulus,
    division_by_zero,
    field_mismatch,
    dlog_of_zero,
    order_mismatch,
    denominator_not_invertible,
    not_coprime,
    inexact_division,
    zero_coefficient,
    n_does_not_divide_q_minus_1,
    branch_points_not_distinct,
    exponent_out_of_range,
    unramified_at_infinity,
    degenerate_character,
    not_totally_ramified,
    not_solved_form,
    precondition_failed,
    bad_argument,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

inline void require(bool cond, errc c, const std::string& what) {
    if (!cond) fail(c, what);
}

} // namespace charsum

#endif
