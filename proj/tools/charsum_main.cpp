// charsum: exact Dirichlet L-series of cyclic covers of the projective line
// via Jacobi sums, with brute-force cross-checks and the Legendre
// supersingularity census. Data goes to stdout (JSON, CSV for the census
// table), diagnostics to stderr. Exit codes: 0 success, 1 verification
// failure, 2 usage or validation error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "charsum/verify.hpp"

using namespace charsum;

namespace {

struct CommonOpts {
    std::int64_t p = 5;
    int h = 1;
    int threads = 0;
    std::uint64_t seed = 20240901;
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->set_help_flag("--help", "print this help message and exit");
    cmd->add_option("--p", opts.p, "field characteristic (prime)");
    cmd->add_option("--h", opts.h, "extension degree");
    cmd->add_option("--threads", opts.threads, "worker count (CHARSUM_THREADS as fallback)");
    cmd->add_option("--seed", opts.seed, "seed for randomized property instances");
    cmd->add_option("--output", opts.output, "write the payload to a file instead of stdout");
}

void emit(const CommonOpts& opts, const std::string& payload) {
    if (opts.output.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream out(opts.output);
    if (!out) fail(errc::bad_argument, "cannot open output file " + opts.output);
    out << payload << "\n";
}

CoverSpec cover_from(const std::shared_ptr<const FieldSpec>& F, int n,
                     const std::vector<std::int64_t>& branch, const std::vector<int>& exps) {
    std::vector<FqElem> alphas;
    for (auto b : branch) alphas.push_back(F->elem(b));
    return validate_cover(F, n, alphas, exps);
}

int run(int argc, char** argv) {
    CLI::App app{"exact L-series of cyclic covers y^n = f(x) via Jacobi sums"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);

    CommonOpts opts;

    // field
    auto* cmd_field = app.add_subcommand("field", "build a finite field and print its spec");
    add_common(cmd_field, opts);
    std::vector<std::int64_t> modulus;
    cmd_field->add_option("--modulus", modulus, "monic modulus coefficients c0,..,ch")
        ->delimiter(',');

    // jacobi
    auto* cmd_jacobi = app.add_subcommand("jacobi", "Jacobi sums and their identities");
    add_common(cmd_jacobi, opts);
    std::vector<std::int64_t> exps_j;
    std::string jop = "plain";
    std::vector<std::int64_t> itup;
    std::int64_t refl_b = 0, refl_c = 0;
    cmd_jacobi->add_option("--exps", exps_j, "exponent tuple a_1,..,a_d")->delimiter(',');
    cmd_jacobi->add_option("--op", jop, "plain | reflect | modp");
    cmd_jacobi->add_option("--i", itup, "index tuple for --op modp")->delimiter(',');
    cmd_jacobi->add_option("--b", refl_b, "b exponent (reflect / modp)");
    cmd_jacobi->add_option("--c", refl_c, "c exponent (reflect)");

    // lseries
    auto* cmd_lseries = app.add_subcommand("lseries", "L-series of a cover");
    add_common(cmd_lseries, opts);
    int n_cover = 2, jpow = 1, depth_euler = 4;
    std::vector<std::int64_t> branch;
    std::vector<int> exps_n;
    std::string method = "jacobi";
    cmd_lseries->add_option("--n", n_cover, "cover degree");
    cmd_lseries->add_option("--branch", branch, "branch points by element index")->delimiter(',');
    cmd_lseries->add_option("--exps", exps_n, "branch exponents n_1,..,n_d")->delimiter(',');
    cmd_lseries->add_option("--j", jpow, "character power");
    cmd_lseries->add_option("--method", method, "oracle-paper | oracle-artin | jacobi | euler");
    cmd_lseries->add_option("--depth", depth_euler, "truncation bound for --method euler");

    // zeta
    auto* cmd_zeta = app.add_subcommand("zeta", "point counts against the assembled numerator");
    add_common(cmd_zeta, opts);
    int n_zeta = 2, depth = 2;
    std::vector<std::int64_t> branch_z;
    std::vector<int> exps_z;
    cmd_zeta->add_option("--n", n_zeta, "cover degree");
    cmd_zeta->add_option("--branch", branch_z, "branch points by element index")->delimiter(',');
    cmd_zeta->add_option("--exps", exps_z, "branch exponents")->delimiter(',');
    cmd_zeta->add_option("--depth", depth, "count points over F_{q^k} for k = 1..depth");

    // census
    auto* cmd_census = app.add_subcommand("census", "Legendre family trace table");
    add_common(cmd_census, opts);
    std::string format = "csv";
    bool with_matrix = false;
    cmd_census->add_option("--format", format, "csv | json");
    cmd_census->add_flag("--matrix", with_matrix,
                         "include the Hermitian matrix report (json only)");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the property suites");
    add_common(cmd_verify, opts);
    std::string suite = "all";
    bool field_given = false;
    cmd_verify->add_option("--suite", suite, "jacobi | lseries | zeta | census | all");
    cmd_verify->callback([&] { field_given = cmd_verify->count("--p") > 0; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    set_thread_count(opts.threads);

    if (*cmd_field) {
        auto F = modulus.empty() ? build_field(opts.p, opts.h)
                                 : build_field(opts.p, opts.h, modulus);
        emit(opts, F->to_json().dump());
        return 0;
    }

    if (*cmd_jacobi) {
        auto F = build_field(opts.p, opts.h);
        nlohmann::json out;
        if (jop == "plain") {
            require(exps_j.size() >= 2, errc::bad_argument, "--exps needs at least two entries");
            out["exps"] = exps_j;
            out["value"] = jacobi_plain(*F, ExponentTuple(*F, exps_j)).to_json();
        } else if (jop == "reflect") {
            auto rc = reflect_identity(*F, refl_b, refl_c);
            out["b"] = refl_b;
            out["c"] = refl_c;
            out["lhs"] = rc.lhs.to_json();
            out["rhs"] = rc.rhs.to_json();
            out["equal"] = rc.equal;
        } else if (jop == "modp") {
            auto rc = jacobi_mod_p(*F, itup, refl_b);
            out["i"] = itup;
            out["b"] = refl_b;
            out["reduced"] = F->coeffs(rc.reduced);
            out["closed_form"] = F->coeffs(rc.closed_form);
            out["match"] = rc.match;
        } else {
            fail(errc::bad_argument, "unknown --op " + jop);
        }
        emit(opts, out.dump());
        return 0;
    }

    if (*cmd_lseries) {
        auto F = build_field(opts.p, opts.h);
        auto cover = cover_from(F, n_cover, branch, exps_n);
        nlohmann::json out;
        if (method == "oracle-paper")
            out = lseries_oracle_paper(cover, jpow).to_json();
        else if (method == "oracle-artin")
            out = lseries_oracle_artin(cover, jpow).to_json();
        else if (method == "jacobi")
            out = lseries_jacobi(cover, jpow).to_json();
        else if (method == "euler") {
            auto coeffs = euler_product_truncated(cover, jpow, depth_euler);
            out["convention"] = "paper";
            out["truncated_at"] = depth_euler;
            nlohmann::json cs = nlohmann::json::array();
            for (const auto& c : coeffs) cs.push_back(c.to_json());
            out["coeffs"] = cs;
            out["q"] = F->q();
            out["n"] = n_cover;
            out["j"] = jpow;
        } else {
            fail(errc::bad_argument, "unknown --method " + method);
        }
        emit(opts, out.dump());
        return 0;
    }

    if (*cmd_zeta) {
        auto F = build_field(opts.p, opts.h);
        auto cover = cover_from(F, n_zeta, branch_z, exps_z);
        emit(opts, verify_counts(cover, depth).to_json().dump());
        return 0;
    }

    if (*cmd_census) {
        auto F = build_field(opts.p, opts.h);
        auto table = build_census(F);
        if (format == "csv") {
            emit(opts, table.to_csv());
        } else if (format == "json") {
            auto out = table.to_json();
            if (with_matrix) {
                out["matrix"] = rank_and_signature(F).to_json();
                auto cp = charpoly_check(F);
                nlohmann::json cj = nlohmann::json::array();
                for (const auto& c : cp.from_matrix) cj.push_back(bigint_to_json(c));
                out["matrix"]["charpoly"] = cj;
                out["matrix"]["charpoly_matches"] = cp.equal;
            }
            emit(opts, out.dump());
        } else {
            fail(errc::bad_argument, "unknown --format " + format);
        }
        return 0;
    }

    if (*cmd_verify) {
        require(suite == "jacobi" || suite == "lseries" || suite == "zeta" ||
                    suite == "census" || suite == "all",
                errc::bad_argument, "unknown --suite " + suite);
        std::vector<std::pair<std::int64_t, int>> fields;
        if (field_given)
            fields.push_back({opts.p, opts.h});
        else
            fields = {{5, 1}, {7, 1}, {3, 2}, {13, 1}};
        auto reports = run_suites(suite, fields, opts.seed);
        auto out = suites_to_json(reports);
        emit(opts, out.dump());
        bool pass = out["all_pass"].get<bool>();
        if (!pass) {
            for (const auto& rep : reports)
                for (const auto& c : rep.checks)
                    if (!c.pass)
                        std::cerr << "FAIL [" << rep.suite << " q=" << rep.q << "] " << c.name
                                  << ": " << c.detail << "\n";
        }
        return pass ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const error& e) {
        nlohmann::json err;
        err["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << R"({"error":{"code":"Internal","message":")" << e.what() << "\"}}\n";
        return 2;
    }
}
