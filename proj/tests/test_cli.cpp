#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "charsum/jacobi.hpp"
#include "json.hpp"

namespace {

const char* cli_path() { return std::getenv("CHARSUM_BIN"); }

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    RunResult res;
    std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace

TEST_CASE("command line surface") {
    if (!cli_path()) {
        MESSAGE("CHARSUM_BIN not set; skipping CLI tests");
        return;
    }

    SUBCASE("lseries anchor") {
        auto r = run_cli("lseries --p 5 --h 1 --n 2 --branch 0,1,2 --exps 1,1,1 --j 1 --method jacobi");
        CHECK(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.output);
        CHECK(j["convention"] == "paper");
        CHECK(j["coeffs"][0]["coeffs"][0] == 1);
        CHECK(j["coeffs"][1]["coeffs"][0] == 2);
        CHECK(j["coeffs"][2]["coeffs"][0] == 5);
        // all four methods agree on the polynomial part
        for (const char* m : {"oracle-paper", "oracle-artin", "euler"}) {
            auto o = run_cli(std::string("lseries --p 5 --h 1 --n 2 --branch 0,1,2 --exps 1,1,1 "
                                         "--j 1 --method ") + m);
            CHECK(o.exit_code == 0);
            auto jo = nlohmann::json::parse(o.output);
            for (int r2 = 0; r2 < 3; ++r2)
                CHECK(jo["coeffs"][r2]["coeffs"] == j["coeffs"][r2]["coeffs"]);
        }
    }

    SUBCASE("census csv") {
        auto r = run_cli("census --p 7 --h 1 --format csv");
        CHECK(r.exit_code == 0);
        int rows = 0;
        bool found_ss = false;
        std::istringstream is(r.output);
        std::string line;
        std::getline(is, line);
        CHECK(line == "lambda,c1_artin,c1_paper,count_N1,supersingular,bridge_unit");
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            ++rows;
            if (line.rfind("6,", 0) == 0) found_ss = line.find(",1,-1") != std::string::npos;
        }
        CHECK(rows == 6);
        CHECK(found_ss); // lambda = 6 flagged supersingular
    }

    SUBCASE("zeta report") {
        auto r = run_cli("zeta --p 5 --h 1 --n 2 --branch 0,1,2 --exps 1,1,1 --depth 2");
        CHECK(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.output);
        CHECK(j["N"] == nlohmann::json::array({8, 32}));
        CHECK(j["match"] == true);
    }

    SUBCASE("verify single field") {
        auto r = run_cli("verify --suite jacobi --p 5 --h 1");
        CHECK(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.output);
        CHECK(j["all_pass"] == true);
    }

    SUBCASE("usage errors exit 2") {
        CHECK(run_cli("lseries --p 5 --h 1 --n 3 --branch 0,1,2 --exps 1,1,1 --j 1").exit_code == 2);
        CHECK(run_cli("nonsense").exit_code == 2);
        CHECK(run_cli("field --p 4 --h 1").exit_code == 2);
    }

    SUBCASE("thread counts do not change bytes") {
        auto a = run_cli("census --p 13 --h 1 --format json --threads 1");
        auto b = run_cli("census --p 13 --h 1 --format json --threads 7");
        CHECK(a.exit_code == 0);
        CHECK(b.exit_code == 0);
        CHECK(a.output == b.output);
        auto c = run_cli("verify --suite lseries --p 5 --h 1 --threads 1");
        auto d = run_cli("verify --suite lseries --p 5 --h 1 --threads 5");
        CHECK(c.output == d.output);
    }

    SUBCASE("json output re-parses to the same canonical value") {
        auto r = run_cli("jacobi --p 5 --h 1 --exps 1,2");
        CHECK(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.output);
        CHECK(j["value"]["m"] == 4);
        CHECK(j["value"].contains("approx"));
        auto F5 = charsum::build_field(5, 1);
        auto back = charsum::CycNum::from_json(j["value"]);
        CHECK(back == charsum::jacobi_plain(*F5, charsum::ExponentTuple(*F5, {1, 2})));
    }

    SUBCASE("CHARSUM_THREADS env var stands in for --threads") {
        auto r = run_cli("census --p 13 --h 1 --format json --threads 3");
        std::string cmd = "CHARSUM_THREADS=6 " + std::string(cli_path()) +
                          " census --p 13 --h 1 --format json 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        std::array<char, 4096> buf{};
        std::size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
        pclose(pipe);
        CHECK(out == r.output);
    }
}
