#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

#include "mdim/mdim.hpp"

#ifndef MDIM_CLI_PATH
#error "MDIM_CLI_PATH must point at the mdim binary"
#endif

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MDIM_CLI_PATH) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli dim reports exact dimensions") {
    const auto json_run = run_cli("dim andrasfai:5 --format json");
    REQUIRE(json_run.exit_code == 0);
    const auto doc = nlohmann::json::parse(json_run.output);
    CHECK(doc.at("graph") == "And(5)");
    CHECK(doc.at("n") == 14);
    CHECK(doc.at("exact") == true);
    CHECK(doc.at("dim") == 5);
    CHECK(doc.at("witness") == nlohmann::json({0, 1, 4, 7, 10}));
    CHECK(doc.contains("timing"));

    const auto text_run = run_cli("dim andrasfai:5");
    CHECK(text_run.exit_code == 0);
    CHECK(contains(text_run.output, "And(5): dim = 5"));
    CHECK(contains(text_run.output, "witness: {0,1,4,7,10}"));

    CHECK(contains(run_cli("dim complete:6").output, "dim = 5"));
    CHECK(contains(run_cli("dim cycle:9").output, "dim = 2"));
}

TEST_CASE("cli dim space-separated spec tokens") {
    const auto run = run_cli("dim andrasfai 5");
    CHECK(run.exit_code == 0);
    CHECK(contains(run.output, "And(5): dim = 5"));
}

TEST_CASE("cli dim budget exhaustion yields an interval and exit 2") {
    const auto run = run_cli("dim andrasfai:6 --budget-subsets 1 --format json");
    CHECK(run.exit_code == 2);
    const auto doc = nlohmann::json::parse(run.output);
    CHECK(doc.at("exact") == false);
    CHECK(doc.at("dim_lo") == 4);
    CHECK(doc.at("dim_hi").get<int>() >= 6);
    CHECK_FALSE(doc.contains("dim"));

    const auto text_run = run_cli("dim andrasfai:6 --budget-subsets 1");
    CHECK(text_run.exit_code == 2);
    CHECK(contains(text_run.output, "dim in ["));
    CHECK(contains(text_run.output, "budget exhausted"));
}

TEST_CASE("cli dim rejects disconnected input") {
    const auto run = run_cli("dim complement:andrasfai:1 2>&1");
    CHECK(run.exit_code == 1);
    CHECK(contains(run.output, "error:"));
}

TEST_CASE("cli check verdicts and exit codes") {
    const auto good = run_cli("check andrasfai:4 --set 1,4,7,10");
    CHECK(good.exit_code == 0);
    CHECK(contains(good.output, "RESOLVING"));
    CHECK_FALSE(contains(good.output, "NOT_RESOLVING"));

    const auto bad = run_cli("check andrasfai:4 --set 1,4");
    CHECK(bad.exit_code == 3);
    CHECK(contains(bad.output, "NOT_RESOLVING"));
    CHECK(contains(bad.output, "witness pair: 0 and 5"));

    const auto single = run_cli("check path:2 --set 0");
    CHECK(single.exit_code == 0);
    CHECK(contains(single.output, "RESOLVING"));

    CHECK(run_cli("check path:2 --set 99 2>/dev/null").exit_code == 1);

    const auto json_bad = run_cli("check andrasfai:4 --set 1,4 --format json");
    CHECK(json_bad.exit_code == 3);
    const auto doc = nlohmann::json::parse(json_bad.output);
    CHECK(doc.at("verdict") == "NOT_RESOLVING");
    CHECK(doc.at("witness_pair") == nlohmann::json({0, 5}));
}

TEST_CASE("cli gen emits graph6 and edge-list json") {
    const auto g6 = run_cli("gen andrasfai:4 2>/dev/null");
    CHECK(g6.exit_code == 0);
    std::string payload = g6.output;
    while (!payload.empty() && (payload.back() == '\n' || payload.back() == '\r'))
        payload.pop_back();
    CHECK(payload == mdim::to_graph6(mdim::andrasfai(4)));
    CHECK(mdim::from_graph6(payload) == mdim::andrasfai(4));

    const auto js = run_cli("gen andrasfai:4 --format json 2>/dev/null");
    CHECK(js.exit_code == 0);
    CHECK(mdim::graph_from_edge_list_json(js.output) == mdim::andrasfai(4));

    const auto stats = run_cli("gen andrasfai:4 2>&1 1>/dev/null");
    CHECK(contains(stats.output, "n = 11"));
    CHECK(contains(stats.output, "regularity = 4"));
    CHECK(contains(stats.output, "diameter = 2"));

    const auto warn = run_cli("gen complement:andrasfai:1 2>&1 1>/dev/null");
    CHECK(warn.exit_code == 0);
    CHECK(contains(warn.output, "disconnected"));
}

TEST_CASE("cli gen writes --out files") {
    const std::string path = "/tmp/mdim_cli_gen.g6";
    std::remove(path.c_str());
    const auto run = run_cli("gen andrasfai:3 --out " + path + " 2>/dev/null");
    CHECK(run.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    CHECK(mdim::from_graph6(line) == mdim::andrasfai(3));

    const auto reread = run_cli("dim file:" + path);
    CHECK(reread.exit_code == 0);
    CHECK(contains(reread.output, "dim = 3"));
}

TEST_CASE("cli verify runs theorem checks") {
    const auto ok = run_cli("verify andk --k 1..3");
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.output, "verified 3 checks: 3 passed, 0 failed"));
    CHECK_FALSE(contains(ok.output, "[FAIL]"));

    const auto js = run_cli("verify andk --k 2..3 --format json");
    CHECK(js.exit_code == 0);
    const auto doc = nlohmann::json::parse(js.output);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    CHECK(doc[0].at("theorem") == "AND_K");
    CHECK(doc[0].at("k") == 2);
    CHECK(doc[0].at("passed") == true);

    const auto fail = run_cli("verify prism --k 1 --n 2");
    CHECK(fail.exit_code == 3);
    CHECK(contains(fail.output, "[FAIL]"));
    CHECK(contains(fail.output, "1 failed"));

    const auto small = run_cli("verify small-cases --n 3..4");
    CHECK(small.exit_code == 0);
    CHECK(contains(small.output, "[PASS]"));
}

TEST_CASE("cli table emits the pinned csv header") {
    const auto run = run_cli("table andrasfai --k 1..4");
    CHECK(run.exit_code == 0);
    REQUIRE(contains(run.output, "family,params,n,dim_lo,dim_hi,exact,witness,ms"));
    int rows = 0;
    std::size_t pos = 0;
    while ((pos = run.output.find("andrasfai,", pos)) != std::string::npos) {
        ++rows;
        ++pos;
    }
    CHECK(rows == 4);
    CHECK(contains(run.output, "andrasfai,k=3,8,3,3,true,"));
    CHECK(contains(run.output, "andrasfai,k=4,11,4,4,true,"));
}

TEST_CASE("cli json output is reproducible apart from timing") {
    const auto a = run_cli("dim andrasfai:5 --format json");
    const auto b = run_cli("dim andrasfai:5 --format json");
    auto da = nlohmann::json::parse(a.output);
    auto db = nlohmann::json::parse(b.output);
    da.erase("timing");
    db.erase("timing");
    CHECK(da.dump() == db.dump());
}

TEST_CASE("cli rejects bad invocations") {
    CHECK(run_cli("dim nosuch:3 2>/dev/null").exit_code == 1);
    CHECK(run_cli("frobnicate 2>/dev/null").exit_code != 0);
    CHECK(run_cli("verify nosuch 2>/dev/null").exit_code == 1);
    CHECK(run_cli("table nosuch 2>/dev/null").exit_code == 1);
    CHECK(run_cli("dim andrasfai:0 2>/dev/null").exit_code == 1);
}
