#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef HEISVC_CLI_PATH
#error "HEISVC_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args, bool keep_stderr = false) {
    std::string cmd = std::string(HEISVC_CLI_PATH) + " " + args +
                      (keep_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

nlohmann::json run_json(const std::string& args, int expected_exit = 0) {
    RunResult r = run(args + " --json");
    REQUIRE(r.exit_code == expected_exit);
    return nlohmann::json::parse(r.output);
}

void strip_elapsed(nlohmann::json& j) {
    if (j.is_object()) {
        j.erase("elapsed_ms");
        for (auto& [k, v] : j.items()) strip_elapsed(v);
    } else if (j.is_array()) {
        for (auto& v : j) strip_elapsed(v);
    }
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream f(p);
    f << body;
    return p;
}

}  // namespace

TEST_CASE("classify reports roots, classes and the normalizer comparison") {
    nlohmann::json j = run_json("classify 4 6 8");
    auto& data = j["checks"][0]["data"];
    CHECK(data["root"] == nlohmann::json({{"a", 2}, {"b", 3}, {"c", 1}}));
    CHECK(data["exponent"] == 2);
    CHECK(data["class"]["a"] == 2);
    CHECK(data["class"]["b"] == 3);
    CHECK(data["class"]["c_residue"] == 0);
    CHECK(data["zh_comparison"]["equal"] == true);

    nlohmann::json central = run_json("classify 0 0 6");
    auto& cdata = central["checks"][0]["data"];
    CHECK(cdata["class"] == "Z");
    CHECK(cdata["root"] == nlohmann::json({{"a", 0}, {"b", 0}, {"c", 1}}));
    CHECK(cdata["exponent"] == 6);
    CHECK(cdata["normalizer"].is_null());

    nlohmann::json proper = run_json("classify 2 0 1");
    auto& pdata = proper["checks"][0]["data"];
    CHECK(pdata["class"]["c_residue"] == 1);
    CHECK(pdata["zh_comparison"]["equal"] == false);
    CHECK(pdata["zh_comparison"]["index"] == 2);
    CHECK(proper["findings"].size() == 1);
}

TEST_CASE("classify rejects the identity with a usage error") {
    CHECK(run("classify 0 0 0").exit_code == 2);
}

TEST_CASE("fixed-set reports the case table") {
    CHECK(run_json("fixed-set \"0 0 5\"")["checks"][0]["data"]["result"]["case"] ==
          "B");
    nlohmann::json d = run_json("fixed-set \"1 0 0 ; 0 1 0\"");
    CHECK(d["checks"][0]["data"]["result"]["case"] == "D");
    nlohmann::json a = run_json("fixed-set \"0 1 0\" --bound 4");
    auto& result = a["checks"][0]["data"]["result"];
    CHECK(result["case"] == "A");
    CHECK(result["census"]["computed_normalizer"] == 1);
    CHECK(result["class"]["b"] == 1);
    nlohmann::json c = run_json("fixed-set \"0 0 0\"");
    CHECK(c["checks"][0]["data"]["result"]["case"] == "C");
}

TEST_CASE("fixed-set usage errors") {
    CHECK(run("fixed-set \"1 0\"").exit_code == 2);
    CHECK(run("fixed-set \"1 0 zebra\"").exit_code == 2);
    CHECK(run("fixed-set").exit_code == 2);
}

TEST_CASE("homology targets") {
    nlohmann::json s3 = run_json("homology s3");
    auto betti = [](const nlohmann::json& j) {
        std::vector<int> out;
        for (const auto& g : j["checks"][0]["data"]["groups"]) {
            out.push_back(g["betti"].get<int>());
        }
        return out;
    };
    CHECK(betti(s3) == std::vector<int>{1, 0, 0, 1});
    nlohmann::json joined = run_json("homology join-s3");
    CHECK(betti(joined) == std::vector<int>{1, 0, 0, 1});
    nlohmann::json torus = run_json("homology torus");
    CHECK(betti(torus) == std::vector<int>{1, 2, 1});
}

TEST_CASE("homology reads complex and simplicial files") {
    auto circle = temp_file("heisvc_circle.json",
                            "{\"boundaries\":[[[0]]],\"ranks\":[1,1]}");
    nlohmann::json j = run_json("homology " + circle.string());
    CHECK(j["checks"][0]["data"]["groups"][0]["betti"] == 1);
    CHECK(j["checks"][0]["data"]["groups"][1]["betti"] == 1);

    auto tri = temp_file("heisvc_tri.json",
                         "{\"maximal\":[[0,1],[0,2],[1,2]],\"vertices\":3}");
    nlohmann::json k = run_json("homology " + tri.string());
    CHECK(k["checks"][0]["data"]["groups"][1]["betti"] == 1);
}

TEST_CASE("homology i/o errors exit with code 3") {
    CHECK(run("homology /no/such/file.json").exit_code == 3);
    auto bad = temp_file("heisvc_bad.json", "{\"ranks\":[1,1]}");
    CHECK(run("homology " + bad.string()).exit_code == 3);
    auto not_complex = temp_file("heisvc_bad2.json",
                                 "{\"boundaries\":[[[1]],[[1]]],\"ranks\":[1,1,1]}");
    CHECK(run("homology " + not_complex.string()).exit_code == 3);
}

TEST_CASE("verify-all passes and validates its bound") {
    RunResult ok = run("verify-all --bound 2");
    CHECK(ok.exit_code == 0);
    CHECK(run("verify-all --bound 0").exit_code == 2);
    CHECK(run("verify-all --bound 7").exit_code == 2);
}

TEST_CASE("verify-all reports findings without failing") {
    nlohmann::json j = run_json("verify-all --bound 3");
    CHECK(!j["findings"].empty());
    for (const auto& c : j["checks"]) CHECK(c["status"] == "pass");
    // checks arrive sorted by name
    std::string prev;
    for (const auto& c : j["checks"]) {
        CHECK(prev < c["name"].get<std::string>());
        prev = c["name"];
    }
}

TEST_CASE("reports are byte-identical modulo elapsed fields") {
    nlohmann::json a = run_json("verify-all --bound 2");
    nlohmann::json b = run_json("verify-all --bound 2");
    strip_elapsed(a);
    strip_elapsed(b);
    CHECK(a.dump() == b.dump());
}

TEST_CASE("the environment variable overrides the default bound") {
    RunResult r = run("verify-all", true);
    CHECK(r.output.find("--bound 3") != std::string::npos);
    std::string cmd = std::string("HEISVC_BOUND=2 ") + HEISVC_CLI_PATH +
                      " verify-all 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    pclose(pipe);
    CHECK(out.find("--bound 2") != std::string::npos);
}

TEST_CASE("bf-verify emits the raw brute-force report") {
    RunResult r = run("bf-verify --bound 1");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["bound"] == 1);
    CHECK(j["checks"].size() == 5);
}

TEST_CASE("argument parsing edge cases") {
    CHECK(run("classify 1 2 x").exit_code == 2);
    CHECK(run("classify 1 2").exit_code == 2);
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
    RunResult v = run("--version");
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("heisvc") != std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
    auto p = std::filesystem::temp_directory_path() / "heisvc_report.json";
    std::filesystem::remove(p);
    RunResult r = run("classify 4 6 8 --json --out " + p.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    std::ifstream f(p);
    REQUIRE(f.good());
    nlohmann::json j = nlohmann::json::parse(f);
    CHECK(j["checks"][0]["data"]["exponent"] == 2);
}
