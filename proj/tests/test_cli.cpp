#include "doctest.h"

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>

#include "subprocess.hpp"

using nlohmann::json;
using subprocess::run;

namespace {

const std::string cli = PADIC_DYN_CLI_PATH;

std::string quiet(const std::string& args) { return cli + " " + args + " 2>/dev/null"; }

} // namespace

TEST_CASE("roots subcommand: cube roots of 1 at p = 7") {
    auto res = run(quiet("roots --prime 7 --a 1/1"));
    CHECK(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j["g"] == 3);
    REQUIRE(j["roots"].size() == 3);
    // Residues mod 49 are {1, 18, 30}.
    mpz_class p2 = 49;
    const long expected[] = {1, 18, 30};
    for (int i = 0; i < 3; ++i) {
        mpz_class unit(j["roots"][i]["unit"].get<std::string>());
        CHECK(unit % 49 == expected[i]);
    }
}

TEST_CASE("roots subcommand: unity order via --k") {
    auto res = run(quiet("roots --prime 31 --k 15"));
    CHECK(res.exit_code == 0);
    CHECK(json::parse(res.out)["g"] == 15);
}

TEST_CASE("periodic --m 2 exits 1 with the no-solutions message") {
    auto res = run(cli + " periodic --prime 31 --a 1/1 --m 2 2>&1");
    CHECK(res.exit_code == 1);
    CHECK(res.out.find("except the fixed points") != std::string::npos);
}

TEST_CASE("classify a valuation-only coefficient outside the sphere") {
    auto res = run(quiet("classify --prime 5 --a v:1 --radius -1"));
    CHECK(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j["region"] == "OUTSIDE");
    CHECK(j["even_limit"] == "infinity");
    CHECK(j["odd_limit"] == "zero");
}

TEST_CASE("exact point classification through --x") {
    auto res = run(quiet("classify --prime 7 --a 1/1 --x 3"));
    CHECK(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j["outer"] == "ON_SPHERE");
    CHECK(j["inner"] == "EQUIDISTANT");
}

TEST_CASE("iterate emits csv radius trajectories") {
    auto res = run(quiet("iterate --prime 5 --a v:1 --radius 0 --steps 3 --format csv"));
    CHECK(res.exit_code == 0);
    CHECK(res.out == "n,num,den\n0,0,1\n1,1,1\n2,-1,1\n3,3,1\n");
}

TEST_CASE("golden stability: identical argv produce identical bytes") {
    const std::string cmd = quiet("verify --seed 42 --samples 5 --steps 20");
    auto a = run(cmd);
    auto b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());

    auto c = run(quiet("periodic --prime 31 --a 1/1 --m 4"));
    auto d = run(quiet("periodic --prime 31 --a 1/1 --m 4"));
    CHECK(c.out == d.out);
}

TEST_CASE("verify exits 0 with all suites passing") {
    auto res = run(quiet("verify --seed 7 --samples 3 --steps 10"));
    CHECK(res.exit_code == 0);
    json reports = json::parse(res.out);
    CHECK(reports.size() == 10);
    for (const auto& rep : reports) {
        CHECK(rep["pass"] == true);
        CHECK(rep["undecided"] == 0);
        CHECK(rep["rng"] == "splitmix64-v1");
    }
}

TEST_CASE("verify --suite filters to one report") {
    auto res = run(quiet("verify --seed 7 --samples 3 --steps 10 --suite basin-p2"));
    CHECK(res.exit_code == 0);
    json reports = json::parse(res.out);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0]["theorem"] == "basin-p2");

    auto bad = run(quiet("verify --suite no-such-suite"));
    CHECK(bad.exit_code == 3);
}

TEST_CASE("usage errors exit 3, domain errors exit 1") {
    CHECK(run(quiet("")).exit_code == 3);                                    // no subcommand
    CHECK(run(quiet("roots --prime 7 --a 1/1 --nonsense 2")).exit_code == 3);
    CHECK(run(quiet("roots --prime 8 --a 1/1")).exit_code == 1);             // 8 is not prime
    CHECK(run(quiet("roots --prime 7 --a 1/1 --precision 5000")).exit_code == 3);
    CHECK(run(quiet("roots --prime 7 --a 1/0")).exit_code == 1);             // zero denominator
    CHECK(run(quiet("norm --prime 7 --a not-a-number")).exit_code == 3);
    CHECK(run(quiet("bound --prime 7 --m 2 --radius 0")).exit_code == 1);    // out of regime
    CHECK(run(quiet("fixed-points --prime 7 --a 1/1 --format csv")).exit_code == 3);
}

TEST_CASE("config file supplies defaults, flags override") {
    const std::string path = "/tmp/padic_dyn_test_config.ini";
    {
        std::ofstream f(path);
        f << "prime=7\na=1/1\n";
    }
    auto res = run(quiet("fixed-points --config " + path));
    CHECK(res.exit_code == 0);
    CHECK(json::parse(res.out)["fixed_points"]["g"] == 3);

    // The command line takes precedence over the file.
    auto overridden = run(quiet("fixed-points --config " + path + " --a 2/1"));
    CHECK(overridden.exit_code == 0);
    CHECK(json::parse(overridden.out)["fixed_points"]["g"] == 0);
    std::remove(path.c_str());
}

TEST_CASE("PADIC_DYN_SEED provides the default seed") {
    setenv("PADIC_DYN_SEED", "12345", 1);
    auto res = run(quiet("verify --samples 2 --steps 5 --suite basin-p2"));
    unsetenv("PADIC_DYN_SEED");
    CHECK(res.exit_code == 0);
    CHECK(json::parse(res.out)[0]["seed"] == 12345);
}
