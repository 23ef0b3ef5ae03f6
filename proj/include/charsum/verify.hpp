#ifndef CHARSUM_VERIFY_HPP
#define CHARSUM_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "charsum/census.hpp"
#include "charsum/zeta.hpp"

namespace charsum {

// One-shot verification suites: property sweeps over a field, reporting the
// first counterexample when a check fails. The CLI surfaces these as
// `verify --suite ...`; the suites are also what the determinism check runs
// under different worker counts.

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail; // first counterexample, empty when passing
};

struct SuiteReport {
    std::string suite;
    std::int64_t q = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    nlohmann::json to_json() const;
};

// the standard cover sweep for a field: every valid d = 3 cover with n in
// {2, 4}, plus the valid d = 4 quartic patterns (branch tuples contain 0, 1)
std::vector<CoverSpec> sweep_covers(const std::shared_ptr<const FieldSpec>& F);

SuiteReport verify_jacobi(const std::shared_ptr<const FieldSpec>& F, std::uint64_t seed,
                          Exec exec = Exec::openmp);
SuiteReport verify_lseries(const std::shared_ptr<const FieldSpec>& F, std::uint64_t seed,
                           Exec exec = Exec::openmp);
SuiteReport verify_zeta(const std::shared_ptr<const FieldSpec>& F, std::uint64_t seed,
                        Exec exec = Exec::openmp);
SuiteReport verify_census(const std::shared_ptr<const FieldSpec>& F, std::uint64_t seed,
                          Exec exec = Exec::openmp);

std::vector<SuiteReport> run_suites(const std::string& suite,
                                    const std::vector<std::pair<std::int64_t, int>>& fields,
                                    std::uint64_t seed, Exec exec = Exec::openmp);

nlohmann::json suites_to_json(const std::vector<SuiteReport>& reports);

} // namespace charsum

#endif
