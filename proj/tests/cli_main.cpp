// Integration tests driving the installed CLI binary end to end.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(LCFN_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe))
        out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("eval lc.series on the sinh example") {
    auto r = run("eval lc.series --example sinh --w 0.5 --s 1");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["target"] == "lc.series");
    CHECK(std::abs(j["value"]["re"].get<double>() + 1.0) < 1e-8);
    CHECK(std::abs(j["value"]["im"].get<double>()) < 1e-10);
}

TEST_CASE("eval eulerian.polynomial") {
    auto r = run("eval eulerian.polynomial --n 3");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"] == nlohmann::json::array({1, 4, 1}));
}

TEST_CASE("eval dirichlet.gauss_sum") {
    auto r = run("eval dirichlet.gauss_sum --q 4 --chi 1 --alpha 1");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["value"]["re"].get<double>()) < 1e-12);
    CHECK(std::abs(j["value"]["im"].get<double>() - 2.0) < 1e-12);
}

TEST_CASE("determinism: identical requests give byte-identical output") {
    auto a = run("eval numerics.hurwitz --s 2 --a 1");
    auto b = run("eval numerics.hurwitz --s 2 --a 1");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto t1 = run("table eulerian --rows 6");
    auto t2 = run("table eulerian --rows 6");
    CHECK(t1.out == t2.out);
}

TEST_CASE("exit codes") {
    CHECK(run("eval nonsense.op --n 1").exit_code == 2);             // resolution error
    CHECK(run("eval eulerian.polynomial").exit_code == 2);           // missing parameter
    CHECK(run("eval eulerian.polynomial --n nope").exit_code == 2);  // type error
    CHECK(run("eval numerics.hurwitz --s 1 --a 1").exit_code == 3);  // domain error (pole)
    CHECK(run("eval eulerian.k --m 2 --z 0").exit_code == 3);        // pole of K
    CHECK(run("verify bogus").exit_code == 2);                       // unknown suite
    CHECK(run("table eulerian --rows 99").exit_code == 2);           // range violation
    // no partial output on the error paths: a single error record only
    auto r = run("eval numerics.hurwitz --s 1 --a 1");
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("error"));
}

TEST_CASE("table bernoulli") {
    auto r = run("table bernoulli --n 10");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n,value\n") == 0);
    CHECK(r.out.find("10,0.075757575757575") != std::string::npos); // 5/66
}

TEST_CASE("table eulerian rows end with row 6") {
    auto r = run("table eulerian --rows 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("6,1,57,302,302,57,1") != std::string::npos);
    CHECK(r.out.find("5,1,26,66,26,1") != std::string::npos);
}

TEST_CASE("table characters q=5") {
    auto r = run("table characters --q 5");
    CHECK(r.exit_code == 0);
    int rows = 0;
    for (char c : r.out)
        if (c == '\n')
            ++rows;
    CHECK(rows == 5); // header + 4 characters
    CHECK(r.out.find("\"\"q\"\":5") != std::string::npos);
}

TEST_CASE("verify subcommand emits per-check reports") {
    auto r = run("verify eulerian --output csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("check_id,suite,criterion") == 0);
    CHECK(r.out.find("eulerian-brute-rows-1-8") != std::string::npos);
    CHECK(r.out.find("false") == std::string::npos);
}

TEST_CASE("user-supplied coefficient stream") {
    // P-stream of the beta seed: 1, 0, 0, ...
    std::string path = "/tmp/lcfn_test_pcoeffs.txt";
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs("1 0\n0 0\n0 0\n", f);
    fclose(f);
    auto r = run("eval lc.series --p-coeffs " + path + " --r-f 0 --s 2");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["value"]["re"].get<double>() - 1.6449340668482264) < 1e-10);
}

TEST_CASE("depth cap override via the environment") {
    auto r = run("eval lc.series --example cos --w 0.97 --s 2");
    // near the disk boundary the default cap of 256 is too shallow
    CHECK(r.exit_code == 3);
    RunResult r2;
    {
        std::string cmd = "LCFN_MAX_DEPTH=4096 " + std::string(LCFN_CLI_PATH) +
                          " eval lc.series --example cos --w 0.97 --s 2 2>/dev/null";
        std::array<char, 4096> buf{};
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        while (fgets(buf.data(), buf.size(), pipe))
            r2.out += buf.data();
        r2.exit_code = WEXITSTATUS(pclose(pipe));
    }
    CHECK(r2.exit_code == 0);
}
