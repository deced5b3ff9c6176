#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifndef GKT_BIN
#define GKT_BIN "./gkt"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(GKT_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int status = pclose(p);
    return RunResult{WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("kgroups success path") {
    auto r = run("kgroups --n 8 --k 3 --engine both");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("\"rank\": 3") != std::string::npos);
    REQUIRE(r.out.find("\"engines_agree\": true") != std::string::npos);
    REQUIRE(r.out.find("\"hopf_order_exponent\": 3") != std::string::npos);
}

TEST_CASE("unsupported parity is an input error") {
    auto r = run("kgroups --n 9 --k 3");
    REQUIRE(r.exit_code == 3);
    REQUIRE(r.out.empty());  // report only on success; message goes to stderr
}

TEST_CASE("verification failure exits 2") {
    auto r = run("verify --suite barB --n 8 --k 3 --inject-failure");
    REQUIRE(r.exit_code == 2);
    REQUIRE(r.out.find("injected_failure") != std::string::npos);
}

TEST_CASE("determinism: identical configs produce identical bytes") {
    auto a = run("kgroups --n 8 --k 3 --engine schur");
    auto b = run("kgroups --n 8 --k 3 --engine schur");
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out == b.out);

    auto c = run("verify --suite barB --n 8 --k 3");
    auto d = run("verify --suite barB --n 8 --k 3");
    REQUIRE(c.exit_code == 0);
    REQUIRE(c.out == d.out);
}

TEST_CASE("markdown rendering") {
    auto r = run("kgroups --n 8 --k 3 --engine schur --format md");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("| n | k | rank K0 |") != std::string::npos);
    REQUIRE(r.out.find("| 8 | 3 | 3 |") != std::string::npos);
}

TEST_CASE("snf and gb subcommands") {
    auto r = run("snf --matrix [[2,4],[6,8]]");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("\"invariant_factors\": [\n        2,\n        4\n      ]") !=
            std::string::npos);

    auto g = run("gb --vars x --gens \"2*x; 3*x\"");
    REQUIRE(g.exit_code == 0);
    REQUIRE(g.out.find("\"x\"") != std::string::npos);
}

TEST_CASE("hopf-order bounds mode") {
    auto r = run("hopf-order --n 10 --k 3");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("\"bounds\"") != std::string::npos);
}

TEST_CASE("empty case list still yields a valid report") {
    auto r = run("kgroups --k 3 --range 9..9");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("\"skipped\"") != std::string::npos);

    auto e = run("kgroups --k 3 --range 9..8");  // genuinely empty range
    REQUIRE(e.exit_code == 0);
    REQUIRE(e.out.find("\"results\": []") != std::string::npos);
    REQUIRE(e.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("report can be written to a file") {
    std::string path = "/tmp/gkt_cli_out.json";
    std::remove(path.c_str());
    auto r = run("hopf-order --n 10 --k 3 --out " + path);
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.empty());
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    fclose(f);
}
