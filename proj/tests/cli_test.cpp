// End-to-end checks of the latcut binary. The test runner passes the binary
// path through the LATCUT_CLI environment variable.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

using nlohmann::json;

std::string cli_path() {
    const char* p = std::getenv("LATCUT_CLI");
    REQUIRE_MESSAGE(p != nullptr, "LATCUT_CLI must point at the binary");
    return p;
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_file = "cli_test_stdout.tmp";
    std::string cmd = cli_path() + " " + args + " > " + out_file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_file.c_str());
    return {WEXITSTATUS(status), ss.str()};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

const char* kDiamondScene = R"({
  "latcut_schema": 1,
  "S": {"n": 2, "b": ["1/2", "1/2"], "Q": null},
  "K": {"dim": 2, "rows": [
    {"a": ["1", "1"], "b": "1"},
    {"a": ["1", "-1"], "b": "1"},
    {"a": ["-1", "1"], "b": "1"},
    {"a": ["-1", "-1"], "b": "1"}]},
  "window": {"lower": [-10, -10], "upper": [10, 10]}
})";

const char* kGmiPi = R"({
  "latcut_schema": 1,
  "breakpoints": ["0", "2/5"],
  "values": ["0", "1"],
  "b": "2/5"
})";

}  // namespace

TEST_CASE("classify emits the diamond tag") {
    write_file("scene.json", kDiamondScene);
    RunResult r = run("classify --scene scene.json");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["tag"] == "Quadrilateral");
    CHECK(j["latcut_schema"] == 1);
    std::remove("scene.json");
}

TEST_CASE("cover reports fraction 1 for the diamond") {
    write_file("scene.json", kDiamondScene);
    RunResult r = run("cover --scene scene.json");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["fraction"] == "1");
    std::remove("scene.json");
}

TEST_CASE("check-minimal on the GMI function") {
    write_file("pi.json", kGmiPi);
    RunResult r = run("check-minimal --pi pi.json");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["minimal"] == true);
    CHECK(j["subadditive"] == true);
    CHECK(j["symmetric"] == true);

    RunResult c = run("certify-extreme --pi pi.json");
    CHECK(c.code == 0);
    json cj = json::parse(c.out);
    CHECK(cj["extreme"] == true);
    CHECK(cj["slope_count"] == 2);
    std::remove("pi.json");
}

TEST_CASE("cut pipeline over files") {
    write_file("scene1d.json", R"({
      "latcut_schema": 1,
      "S": {"n": 1, "b": ["2/5"], "Q": null},
      "K": {"dim": 1, "rows": [
        {"a": ["1"], "b": "2/5"}, {"a": ["-1"], "b": "3/5"}]},
      "window": {"lower": [-10], "upper": [10]}
    })");
    write_file("tab.json", R"({
      "latcut_schema": 1, "n": 1, "b": ["2/5"],
      "cont": [["1"]], "int": [["1/5"]]
    })");
    RunResult r = run("cut --tableau tab.json --scene scene1d.json");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["s_coeffs"][0] == "5/2");
    CHECK(j["y_coeffs"][0] == "1/2");
    CHECK(j["rhs"] == "1");

    write_file("cut.json", r.out);
    RunResult v = run("validate --cut cut.json --tableau tab.json");
    CHECK(v.code == 0);
    json vj = json::parse(v.out);
    CHECK(vj["verdict"] == "ValidWithinBudget");

    std::remove("scene1d.json");
    std::remove("tab.json");
    std::remove("cut.json");
}

TEST_CASE("lift evaluates trivial lifting from a psi file") {
    write_file("psi.json", R"({
      "latcut_schema": 1,
      "rows": [["5/2"], ["-5/3"]],
      "include_zero_term": false
    })");
    write_file("pts.json", R"({"points": [["1/5"], ["4/5"]]})");
    RunResult r = run("lift --psi psi.json --points pts.json");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["values"][0]["value"] == "1/2");
    CHECK(j["values"][1]["value"] == "1/3");
    std::remove("psi.json");
    std::remove("pts.json");
}

TEST_CASE("render and region produce deterministic SVG") {
    write_file("scene.json", kDiamondScene);
    RunResult a = run("render --scene scene.json");
    RunResult b = run("render --scene scene.json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("<svg", 0) == 0);

    RunResult reg = run("region --scene scene.json --out region.json");
    CHECK(reg.code == 0);
    RunResult rr = run("render --region region.json");
    CHECK(rr.code == 0);
    CHECK(rr.out.find("fill-opacity") != std::string::npos);
    std::remove("scene.json");
    std::remove("region.json");
}

TEST_CASE("make-scene round trips through classify for every type") {
    for (const std::string type :
         {"Split", "Type1Triangle", "Type2Triangle", "Type3Triangle",
          "Quadrilateral"}) {
        RunResult m = run("make-scene --type " + type + " --seed 4 --out ms.json");
        CHECK(m.code == 0);
        RunResult c = run("classify --scene ms.json");
        CHECK(c.code == 0);
        json j = json::parse(c.out);
        CHECK(j["tag"] == type);
    }
    std::remove("ms.json");
}

TEST_CASE("exit codes: usage, verification failure") {
    RunResult bad = run("classify");
    CHECK(bad.code == 1);

    RunResult missing = run("classify --scene does_not_exist.json");
    CHECK(missing.code == 1);

    // A non-maximal scene: the small box is S-free but not maximal.
    write_file("notmax.json", R"({
      "latcut_schema": 1,
      "S": {"n": 2, "b": ["1/2", "1/2"], "Q": null},
      "K": {"dim": 2, "rows": [
        {"a": ["1", "0"], "b": "1/2"}, {"a": ["-1", "0"], "b": "1/2"},
        {"a": ["0", "1"], "b": "1/2"}, {"a": ["0", "-1"], "b": "1/2"}]},
      "window": {"lower": [-10, -10], "upper": [10, 10]}
    })");
    RunResult nm = run("classify --scene notmax.json");
    CHECK(nm.code == 2);
    std::remove("notmax.json");
}

TEST_CASE("exit code 3 when the validation budget is exhausted") {
    write_file("tab3.json", R"({
      "latcut_schema": 1, "n": 1, "b": ["2/5"],
      "cont": [["1"]], "int": [["1/5"]]
    })");
    write_file("cut3.json", R"({
      "latcut_schema": 1, "s_coeffs": ["5/2"], "y_coeffs": ["1/2"], "rhs": "1"
    })");
    RunResult r = run("validate --cut cut3.json --tableau tab3.json --max-lp 2");
    CHECK(r.code == 3);
    json j = json::parse(r.out);
    CHECK(j["verdict"] == "BudgetExhausted");
    std::remove("tab3.json");
    std::remove("cut3.json");
}

TEST_CASE("LATCUT_SEED drives make-scene deterministically") {
    std::string base = cli_path();
    auto run_env = [&](const std::string& seed) {
        std::string out_file = "cli_seed_stdout.tmp";
        std::string cmd = "LATCUT_SEED=" + seed + " " + base +
                          " make-scene --type Type1Triangle > " + out_file;
        std::system(cmd.c_str());
        std::ifstream in(out_file);
        std::stringstream ss;
        ss << in.rdbuf();
        std::remove(out_file.c_str());
        return ss.str();
    };
    std::string a = run_env("11");
    std::string b = run_env("11");
    std::string c = run_env("12");
    CHECK(a == b);
    CHECK(a != c);
    CHECK(json::parse(a)["verified_maximal"] == true);
}
