#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

std::string g_binary;

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    RunResult res;
    std::string cmd = g_binary + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) res.output.append(buf, got);
    int status = pclose(pipe);
    REQUIRE(status != -1);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<char*> rest{argv[0]};
    for (int i = 1; i < argc; ++i) {
        if (g_binary.empty() && argv[i][0] != '-')
            g_binary = argv[i];
        else
            rest.push_back(argv[i]);
    }
    if (g_binary.empty()) {
        std::fprintf(stderr, "usage: test_cli <path-to-verify-binary> [doctest options]\n");
        return 1;
    }
    doctest::Context ctx;
    ctx.applyCommandLine(static_cast<int>(rest.size()), rest.data());
    return ctx.run();
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("--suite bogus").exit_code == 2);
    CHECK(run_cli("--family gl --n 9 --m 1").exit_code == 2); // beyond the size cap
    CHECK(run_cli("--family gl --n 2").exit_code == 2);       // --m missing
    CHECK(run_cli("--format yaml").exit_code == 2);           // rejected by the option check
    CHECK(run_cli("--cap uslovie=7").exit_code == 2);
    CHECK(run_cli("dump --family gl").exit_code == 2);        // dump needs --n
    RunResult bad = run_cli("--suite bogus");
    CHECK(bad.output.find("error:") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    RunResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("--suite") != std::string::npos);
    CHECK(r.output.find("dump") != std::string::npos);
}

TEST_CASE("the symplectic family is refused with its own exit code") {
    RunResult r = run_cli("--family sp");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("conjectural") != std::string::npos);
}

TEST_CASE("structure constant dump") {
    RunResult h = run_cli("dump --family heisenberg");
    CHECK(h.exit_code == 0);
    CHECK(h.output == "0 1 2 1\n");

    RunResult ambient = run_cli("dump --family gl --n 1 --m 1");
    CHECK(ambient.exit_code == 0);
    CHECK(ambient.output.find("1 2 0 1") != std::string::npos);  // [E12,E21] = E11 - E22
    CHECK(ambient.output.find("1 2 3 -1") != std::string::npos);

    RunResult contracted = run_cli("dump --family gl --n 1 --m 1 --contract");
    CHECK(contracted.exit_code == 0);
    CHECK(contracted.output.find("1 2 0") == std::string::npos); // contracted away
    CHECK(contracted.output.find("0 1 1 1") != std::string::npos);
}

TEST_CASE("deterministic json output is byte-identical across runs") {
    const std::string args = "--suite uslovie --format json --deterministic --seed 5";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(!a.output.empty());
    CHECK(a.output == b.output);
    // field order is fixed: check_id first, then status
    auto id_pos = a.output.find("\"check_id\"");
    auto status_pos = a.output.find("\"status\"");
    REQUIRE(id_pos != std::string::npos);
    REQUIRE(status_pos != std::string::npos);
    CHECK(id_pos < status_pos);
    CHECK(a.output.find("\"elapsed_ms\": 0") != std::string::npos);
}

TEST_CASE("the weyl-group suite emits exactly four passing reports") {
    RunResult r = run_cli("--suite f4 --format json --deterministic");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 4);
    std::vector<std::string> ids;
    for (const auto& item : doc) {
        ids.push_back(item.at("check_id").get<std::string>());
        CHECK(item.at("status").get<std::string>() == "PASS");
        CHECK(item.at("elapsed_ms").get<int>() == 0);
    }
    CHECK(ids == std::vector<std::string>{"f4/invariance", "f4/tops", "f4/independence",
                                          "f4/bidegrees"});
}

TEST_CASE("a single so pair verifies end to end in text form") {
    RunResult r = run_cli("--suite good-gens --family so --n 4 --m 1 --seed 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[PASS] good-gens/so(4,1)") != std::string::npos);
    CHECK(r.output.find("(0,2)(2,2)") != std::string::npos);
    CHECK(r.output.find("[PASS] negcontrol/power-traces/so(4,1)") != std::string::npos);
    CHECK(r.output.find("[FAIL]") == std::string::npos);
}

TEST_CASE("skipped table rows are reported as skipped, not failed") {
    RunResult r = run_cli("--suite tables --family so --n 2 --m 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[SKIPPED] tables/so(2,1)") != std::string::npos);
}
