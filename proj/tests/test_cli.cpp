// Process-level tests of the CLI binary. The binary path arrives in the
// KAPREKAR_CLI environment variable (set by ctest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "kaprekar/dynamics.hpp"

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

CmdResult run_cli(const std::string& args) {
    const char* bin = std::getenv("KAPREKAR_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "KAPREKAR_CLI must point at the built binary");
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult result;
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("trajectory of 8082 ends at the constant") {
    CmdResult r = run_cli("trajectory 8082");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "8532  (6,2)"));
    CHECK(contains(r.output, "6174  (6,2)  [fixed point]"));
}

TEST_CASE("width is inferred from the input but --width wins") {
    CmdResult inferred = run_cli("trajectory 09");
    CHECK(inferred.exit_code == 0);
    CHECK(contains(inferred.output, "[entered cycle of length 5]"));
    CmdResult padded = run_cli("trajectory 82 --width 4");
    CHECK(padded.exit_code == 0);
    CHECK(contains(padded.output, "0082"));
    CHECK(contains(padded.output, "[fixed point]"));
}

TEST_CASE("errors exit with code 1 and a diagnostic") {
    CmdResult excluded = run_cli("trajectory 1111");
    CHECK(excluded.exit_code == 1);
    CHECK(contains(excluded.output, "excluded"));
    CHECK(run_cli("trajectory 12a4").exit_code == 1);
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("trajectory 123456").exit_code == 1);
    CHECK(run_cli("graph --width 4 --format xml").exit_code == 1);
    CHECK(run_cli("analyze --width 7").exit_code == 1);
}

TEST_CASE("trajectory JSON follows the documented schema") {
    CmdResult r = run_cli("trajectory 8082 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.output);
    CHECK(doc["process"] == "kaprekar");
    CHECK(doc["width"] == 4);
    CHECK(doc["terminal"] == "fixed_point");
    CHECK(doc["cycle_length"] == 1);
    CHECK(doc["steps"].size() == 4);
    CHECK(doc["steps"][0]["number"] == "8082");
    CHECK(doc["steps"][2]["class"] == "(6,2)");
}

TEST_CASE("analyze summarizes classes, balance, and cycles") {
    CmdResult r4 = run_cli("analyze --width 4");
    CHECK(r4.exit_code == 0);
    CHECK(contains(r4.output, "feasible classes: 54"));
    CHECK(contains(r4.output, "(6,2) via K5 -> 6174"));
    CHECK(contains(r4.output, "length 1: (6,2)"));

    CmdResult r100 = run_cli("analyze --width 2 --base 100");
    CHECK(r100.exit_code == 0);
    CHECK(contains(r100.output, "fixed points: none"));
    CHECK(contains(r100.output, "length 50"));

    CmdResult r5 = run_cli("analyze --width 5 --format json");
    CHECK(r5.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r5.output);
    CHECK(doc["fixed_points"].empty());
    CHECK(doc["cycles"].size() == 3);
}

TEST_CASE("analyze covers the transposition process") {
    CmdResult r = run_cli("analyze --process transposition --width 6");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "(5) via K2 -> 499995"));
}

TEST_CASE("verify passes for every supported width") {
    for (const char* args : {"verify --width 2", "verify --width 3", "verify --width 4",
                             "verify --width 5", "verify --width 2 --base 100"}) {
        CmdResult r = run_cli(args);
        INFO(args << "\n" << r.output);
        CHECK(r.exit_code == 0);
        CHECK(contains(r.output, "all checks passed"));
    }
    CmdResult r5 = run_cli("verify --width 5");
    CHECK(contains(r5.output, "K25"));  // the documented correction is itemized

    CmdResult json = run_cli("verify --width 3 --format json");
    CHECK(json.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(json.output);
    CHECK(doc["ok"] == true);
    CHECK(doc["checks"][0]["cases_checked"] == 9);
}

TEST_CASE("verify reports the odd-base pivot hole and exits 2") {
    CmdResult r = run_cli("verify --width 2 --base 9");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "class (5)"));
    CHECK(contains(r.output, "repdigit"));
    CHECK(contains(r.output, "CHECKS FAILED"));
}

TEST_CASE("verify exposes the table on request") {
    CmdResult r = run_cli("verify --width 4 --show-table");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "P5 (3 1 4 2)"));
}

TEST_CASE("graph output is deterministic and parseable") {
    CmdResult a = run_cli("graph --width 4 --format dot");
    CmdResult b = run_cli("graph --width 4 --format dot");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(contains(a.output, "\"(9,3)\" -> \"(8,4)\" [label=\"K2\"];"));

    CmdResult v = run_cli("graph --process transposition --width 5 --format dot");
    CHECK(v.exit_code == 0);
    CHECK(contains(v.output, "\"(5)\" -> \"(5)\" [label=\"K2\"];"));

    CmdResult j = run_cli("graph --width 3 --format json");
    CHECK(j.exit_code == 0);
    kaprekar::dynamics::ClassGraph g = kaprekar::dynamics::parse_graph_json(j.output);
    CHECK(g.nodes.size() == 9);
    CHECK(g.successor[g.index_of(kaprekar::ParamVector(5))] ==
          g.index_of(kaprekar::ParamVector(5)));
}

TEST_CASE("absorbing list and check") {
    CmdResult list = run_cli("absorbing list --width 2");
    CHECK(list.exit_code == 0);
    CHECK(list.output == "09\n18\n27\n36\n45\n54\n63\n72\n81\n");

    CmdResult member = run_cli("absorbing check 6174");
    CHECK(member.exit_code == 0);
    CHECK(contains(member.output, "member of B4"));

    CmdResult outside = run_cli("absorbing check 4446");
    CHECK(outside.exit_code == 0);
    CHECK(contains(outside.output, "not in B4"));
}

TEST_CASE("base-100 numbers use the dot notation end to end") {
    CmdResult r = run_cli("trajectory 53.99 --base 100 --max-steps 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "45.54"));
}
