#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fujimoto/cli.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace fujimoto;

namespace {

struct Run {
    int code = -1;
    std::string out, err;
    json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "fujimoto");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

void strip_timing(json& j) {
    if (j.is_object()) {
        j.erase("elapsed_ms");
        for (auto& [_, v] : j.items()) strip_timing(v);
    } else if (j.is_array()) {
        for (auto& v : j) strip_timing(v);
    }
}

std::string stable(const Run& r) {
    json j = r.doc();
    strip_timing(j);
    return j.dump();
}

} // namespace

TEST_CASE("verify m = 4") {
    const Run r = run({"verify", "--m", "4"});
    REQUIRE(r.code == kExitPass);
    const json j = r.doc();
    CHECK(j["tool"] == "fujimoto");
    CHECK(j["version"] == kToolVersion);
    CHECK(j["command"] == "verify");
    CHECK(j["m"] == 4);
    CHECK(j["t"] == 2);
    CHECK(j["mode"] == "exhaustive");
    CHECK(j["seed"].is_null());
    CHECK(j["pass"] == true);
    const json& gp = j["checks"]["general_position"];
    CHECK(gp["total_subsets"] == 15);
    CHECK(gp["failures"] == json::array());
    CHECK(j["checks"]["block_determinants"]["det_M2"] == "1");
    for (const char* name : {"sign_factorization", "block_determinants", "network_equals_M", "general_position"})
        CHECK(j["checks"][name]["pass"] == true);
}

TEST_CASE("verify text format") {
    const Run r = run({"verify", "--m", "6", "--format", "text"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("general_position: PASS") != std::string::npos);
    CHECK(r.out.find("overall: PASS") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"verify", "--m", "3"},
             {"verify"},
             {"verify", "--m", "20", "--mode", "sampled"},
             {"verify", "--m", "4", "--mode", "sideways"},
             {"frobnicate"},
             {"lgv-check", "--m", "4"}}) {
        const Run r = run(args);
        CHECK_MESSAGE(r.code == kExitUsage, args[0]);
        const json j = json::parse(r.out);
        CHECK(j.contains("error"));
        CHECK(j["kind"] == "usage");
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("budget errors exit with code 2") {
    const Run r = run({"verify", "--m", "12", "--mode", "exhaustive", "--budget", "10"});
    CHECK(r.code == kExitUsage);
    CHECK(r.doc()["kind"] == "budget");
}

TEST_CASE("auto mode falls back to sampling with a seed") {
    const Run r = run({"verify", "--m", "12", "--budget", "100", "--seed", "3", "--samples", "50"});
    CHECK(r.code == kExitPass);
    const json j = r.doc();
    CHECK(j["mode"] == "sampled");
    CHECK(j["seed"] == 3);
    CHECK(j["checks"]["general_position"]["checked_subsets"] == 50);
    CHECK(run({"verify", "--m", "12", "--budget", "100"}).code == kExitUsage);
}

TEST_CASE("reports are deterministic apart from timing") {
    const std::vector<std::vector<std::string>> cases{
        {"verify", "--m", "8"},
        {"verify", "--m", "14", "--mode", "sampled", "--seed", "11", "--samples", "300"},
        {"lgv-check", "--m", "6", "--seed", "5", "--trials", "10"},
        {"extend", "--m", "4"},
    };
    for (const auto& args : cases) {
        const Run a = run(args), b = run(args);
        CHECK(a.code == kExitPass);
        CHECK(stable(a) == stable(b));
    }
    // A different thread count produces the same report.
    CHECK(stable(run({"--threads", "1", "verify", "--m", "10"})) ==
          stable(run({"--threads", "3", "verify", "--m", "10"})));
}

TEST_CASE("network export") {
    const Run dot = run({"network", "--m", "2", "--format", "dot"});
    CHECK(dot.code == kExitPass);
    CHECK(dot.out.rfind("digraph", 0) == 0);
    CHECK(dot.out.find("label=\"1/1\"") != std::string::npos);

    const Run js = run({"network", "--m", "4"});
    CHECK(js.code == kExitPass);
    const json j = js.doc();
    CHECK(j["network"]["sources"].size() == 4);
    CHECK(j["mode"] == "none");
}

TEST_CASE("lemmas") {
    const Run r = run({"lemmas", "--m", "6"});
    CHECK(r.code == kExitPass);
    const json j = r.doc();
    CHECK(j["checks"]["path_sums"]["pass"] == true);
    CHECK(j["checks"]["sublattice_weights"]["mismatches"].empty());
    CHECK(j["checks"]["saalschuetz"]["pass"] == true);
    CHECK(run({"lemmas", "--m", "8", "--budget", "5"}).code == kExitUsage);
}

TEST_CASE("lgv-check") {
    const Run all = run({"lgv-check", "--m", "4", "--all", "--max-size", "2"});
    CHECK(all.code == kExitPass);
    const json c = all.doc()["checks"]["lgv_equivalence"];
    CHECK(c["minors"] == 16 + 36);
    CHECK(c["agreed"] == 16 + 36);

    const Run some = run({"lgv-check", "--m", "6", "--seed", "1", "--trials", "7"});
    CHECK(some.code == kExitPass);
    CHECK(some.doc()["checks"]["lgv_equivalence"]["minors"] == 7);
}

TEST_CASE("extend m = 4") {
    const Run r = run({"extend", "--m", "4"});
    REQUIRE(r.code == kExitPass);
    const json j = r.doc();
    CHECK(j["checks"]["extended_general_position"]["total_subsets"] == 210);
    CHECK(j["checks"]["sum_of_squares_zero"]["pass"] == true);
    CHECK(j["checks"]["reconstruction"]["pass"] == true);
    CHECK(j["weierstrass"]["constants"].size() == 2);
    CHECK(j["weierstrass"]["c"].size() == 10);
    CHECK(run({"extend", "--m", "2"}).code == kExitUsage);
}

TEST_CASE("bench") {
    const Run r = run({"bench", "--m-list", "2,4,6"});
    CHECK(r.code == kExitPass);
    const json j = r.doc();
    REQUIRE(j["runs"].size() == 3);
    CHECK(j["runs"][2]["m"] == 6);
    CHECK(j["runs"][0].contains("elapsed_ms"));
}

TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "fujimoto_cli_test.json";
    const Run r = run({"-o", path.string(), "verify", "--m", "4"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f);
    const json j = json::parse(f);
    CHECK(j["pass"] == true);
    f.close();
    std::filesystem::remove(path);
}

TEST_CASE("version flag") {
    const Run r = run({"--version"});
    CHECK(r.code == 0);
    CHECK(r.out.find(kToolVersion) != std::string::npos);
}
