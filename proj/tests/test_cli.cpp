#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string bin() {
    const char* b = std::getenv("WEYLBENCH_BIN");
    REQUIRE(b != nullptr);
    return b;
}

std::string data_dir() {
    const char* d = std::getenv("WEYLBENCH_DATA");
    REQUIRE(d != nullptr);
    return d;
}

struct RunResult {
    int exit_code;
    nlohmann::json report;
};

RunResult run(const std::string& args) {
    const std::string out = "/tmp/weylbench_cli_out.json";
    const int rc = std::system((bin() + " " + args + " > " + out + " 2>/dev/null").c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(rc);
    std::ifstream f(out);
    try {
        f >> r.report;
    } catch (...) {
        r.report = nlohmann::json{};
    }
    return r;
}

} // namespace

TEST_CASE("zeta check passes and reports residuals") {
    const auto r = run("zeta check");
    CHECK(r.exit_code == 0);
    CHECK(r.report["status"] == "pass");
    CHECK(r.report["functional_equation_residual"].get<double>() < 1e-10);
}

TEST_CASE("ms2 verify at (t, C) = (5, 2)") {
    const auto r = run("ms2 verify --t 5 --C 2 --tol 1e-4");
    CHECK(r.exit_code == 0);
    CHECK(r.report["status"] == "pass");
    CHECK(r.report["relative_discrepancy"].get<double>() <= 1e-4);
}

TEST_CASE("unknown flags exit with usage code 2") {
    const auto r = run("ms2 verify --no-such-flag 1");
    CHECK(r.exit_code == 2);
    const auto r2 = run("frobnicate");
    CHECK(r2.exit_code != 0);
}

TEST_CASE("sl3 subcommands emit schema-stable reports") {
    const auto d = run("sl3 diagonal --t1 2 --t2 3 --c 1 --out /tmp/weylbench_terms.csv");
    CHECK(d.exit_code == 0);
    CHECK(d.report["difference"].get<double>() <= 1e-6);
    // the term dump regenerates the 36-row chart
    std::ifstream terms("/tmp/weylbench_terms.csv");
    std::string line;
    int rows = 0;
    std::getline(terms, line);
    CHECK(line == "s1,s2,exponent,denominator,m_factor,value");
    while (std::getline(terms, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 36);

    const auto res = run("sl3 residue --t 5 --c 1");
    CHECK(res.exit_code == 0);
    CHECK(res.report["terms"].size() == 10);

    const auto b = run("sl3 beta --T 400");
    CHECK(b.exit_code == 0);
    CHECK(b.report["ratio"].get<double>() == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("weyl sweep on the bundled dataset") {
    const auto r = run("weyl sweep --dataset " + data_dir() + "/maass_sl2.csv --tmax 62499 " +
                       "--out /tmp/weylbench_sweep.csv");
    CHECK(r.exit_code == 0);
    CHECK(r.report["top_ratio"].get<double>() > 0.8);
    CHECK(r.report["top_ratio"].get<double>() < 1.2);
    std::ifstream sweep("/tmp/weylbench_sweep.csv");
    std::string header;
    std::getline(sweep, header);
    CHECK(header == "T,ratio");
}

TEST_CASE("transform roundtrip subcommand") {
    const auto r = run("transform roundtrip --sigma 0.2 --T 0");
    CHECK(r.exit_code == 0);
    CHECK(r.report["roundtrip_residual"].get<double>() <= 1e-4);
}
