#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qbeta/cli.hpp"
#include "qbeta/json_io.hpp"
#include "qbeta/qbernoulli.hpp"
#include "qbeta/qcombinatorics.hpp"

using namespace qbeta;

namespace {
struct Run {
    int code;
    std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli_run(args, out, err);
    return {code, out.str(), err.str()};
}
} // namespace

TEST_CASE("compute exact values") {
    const Run r = cli({"compute", "--family", "carlitz", "--n", "1", "--arg", "0", "--at", "q=1/2"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("value") == "-2/3");

    const Run r2 = cli({"compute", "--family", "twisted", "--n", "0", "--arg", "0"});
    CHECK(r2.code == 0);
    const Json j2 = Json::parse(r2.out);
    CHECK(ratfunc_from_json(j2.at("value")) == weight(0));

    const Run r3 = cli({"compute", "--family", "carlitz", "--n", "2", "--arg", "0"});
    const Json j3 = Json::parse(r3.out);
    CHECK(ratfunc_from_json(j3.at("value")) ==
          RatFunc::variable(Var::q) / (q_int(2) * q_int(3)));
}

TEST_CASE("compute json round trip through a file") {
    const std::string path = "cli_roundtrip_test.json";
    const Run r = cli({"compute", "--family", "hr", "--n", "3", "--h", "3", "--r", "2", "--arg",
                       "symbolic", "--json", path});
    REQUIRE(r.code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    Json j;
    f >> j;
    BetaFamily fam;
    fam.kind = FamilyKind::hr;
    fam.n = 3;
    fam.h = 3;
    fam.r = 2;
    CHECK(ratfunc_from_json(j.at("value")) == family_beta(fam, RatFunc::variable(Var::X)));
    std::remove(path.c_str());
}

TEST_CASE("barnes family from the command line") {
    const Run r = cli({"compute", "--family", "barnes", "--n", "1", "--w", "1", "--w", "1",
                       "--delta", "1", "--delta", "2", "--arg", "0"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    BetaFamily fam;
    fam.kind = FamilyKind::barnes;
    fam.n = 1;
    fam.barnes = {{1, 1}, {1, 2}};
    CHECK(ratfunc_from_json(j.at("value")) == family_beta(fam, RatFunc(1)));
}

TEST_CASE("tables") {
    const Run r = cli({"table", "--family", "carlitz", "--n-min", "0", "--n-max", "2"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line.substr(0, 7) == "n,value");
    std::getline(lines, line);
    CHECK(line.substr(0, 2) == "0,");
    // Values containing commas are quoted per RFC 4180.
    const Run r2 = cli({"table", "--family", "carlitz", "--n-min", "0", "--n-max", "0", "--at", "q=1/2"});
    CHECK(r2.code == 0);
    CHECK(r2.out.find("value_at_q=1/2") != std::string::npos);
    // Empty range: header only.
    const Run r3 = cli({"table", "--family", "carlitz", "--n-min", "3", "--n-max", "2"});
    CHECK(r3.code == 0);
    CHECK(r3.out.find("\r\n0,") == std::string::npos);
}

TEST_CASE("verify subcommand and exit codes") {
    const Run ok = cli({"verify", "--suite", "I2", "--max-n", "2"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("I2") != std::string::npos);

    const Run usage = cli({"verify", "--suite", "I99"});
    CHECK(usage.code == 2);

    const Run unknown_flag = cli({"verify", "--nope"});
    CHECK(unknown_flag.code == 2);

    const Run bad_family = cli({"compute", "--family", "nope"});
    CHECK(bad_family.code == 2);

    // Exact evaluation of a value that carries the log marker is unsatisfiable.
    const Run bad_at = cli({"compute", "--family", "twisted", "--n", "0", "--arg", "0", "--at", "q=1/2"});
    CHECK(bad_at.code == 2);

    const Run no_sub = cli({});
    CHECK(no_sub.code == 2);

    // Runtime failures (not usage) exit 1: u0 divisible by p.
    const Run runtime = cli({"oracle", "padic", "--family", "carlitz", "--n", "1", "--p", "3",
                             "--q0", "3", "--N-max", "3"});
    CHECK(runtime.code == 1);
}

TEST_CASE("oracle subcommands run") {
    const Run zp = cli({"oracle", "padic", "--zero-mode", "--p", "3", "--N-min", "2", "--N-max", "4"});
    CHECK(zp.code == 0);
    CHECK(zp.out.find("zero-mode") != std::string::npos);

    const Run fam = cli({"oracle", "padic", "--family", "twisted", "--n", "2", "--p", "3",
                         "--N-min", "2", "--N-max", "4"});
    CHECK(fam.code == 0);
    CHECK(fam.out.find("monotone nonincreasing: yes") != std::string::npos);

    const Run cx = cli({"oracle", "complex", "--identity", "I11", "--q", "0.3", "--x", "0.7"});
    CHECK(cx.code == 0);
    CHECK(cx.out.find("residual") != std::string::npos);

    const Run cx_bad = cli({"oracle", "complex", "--identity", "I12"});
    CHECK(cx_bad.code == 2);
}

TEST_CASE("list subcommand") {
    const Run ids = cli({"list", "--identities"});
    CHECK(ids.code == 0);
    CHECK(ids.out.find("I19") != std::string::npos);
    const Run fams = cli({"list", "--families"});
    CHECK(fams.out.find("chi_hr") != std::string::npos);
    const Run err = cli({"list", "--errata"});
    CHECK(err.out.find("n-k+1") != std::string::npos);
}

TEST_CASE("config file mirrors flags and flags win") {
    const std::string path = "cli_config_test.ini";
    {
        std::ofstream f(path);
        f << "[compute]\nfamily=twisted\nn=1\narg=0\n";
    }
    const Run from_config = cli({"--config", path, "compute"});
    REQUIRE(from_config.code == 0);
    CHECK(Json::parse(from_config.out).at("family") == "twisted");

    const Run flag_wins = cli({"--config", path, "compute", "--family", "carlitz"});
    REQUIRE(flag_wins.code == 0);
    CHECK(Json::parse(flag_wins.out).at("family") == "carlitz");
    std::remove(path.c_str());
}
