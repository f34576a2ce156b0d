#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace cospec::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("cospec_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string strip_comments(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) {
        if (!line.starts_with('#')) out += line + '\n';
    }
    return out;
}

} // namespace

TEST_CASE("help and usage errors") {
    CHECK(run_cli({"--help"}).code == kExitOk);
    CHECK(run_cli({}).code == kExitConfig);
    CHECK(run_cli({"frobnicate"}).code == kExitConfig);
    CHECK(run_cli({"moments", "--kmax", "11"}).code == kExitConfig);
    CHECK(run_cli({"moments", "--kmax", "x"}).code == kExitConfig);
    CHECK(run_cli({"moments", "--prime-bound", "1"}).code == kExitConfig);
    CHECK(run_cli({"moments", "--format", "xml"}).code == kExitConfig);
    CHECK(run_cli({"simulate", "--mask", "hidden"}).code == kExitConfig);
    CHECK(run_cli({"simulate", "--n", "1"}).code == kExitConfig);
    CHECK(run_cli({"coprime-prob"}).code == kExitConfig);
}

TEST_CASE("moments output carries provenance and the exact table") {
    const auto r = run_cli({"moments", "--kmax", "2", "--prime-bound", "100000"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("# config: ") != std::string::npos);
    CHECK(r.out.find("# input_sha256: ") != std::string::npos);
    CHECK(r.out.find("\"prime_bound\":100000") != std::string::npos);
    const auto body = strip_comments(r.out);
    CHECK(body.starts_with("ensemble,k,moment,tail_bound,ivw_le_vw\n"));
    CHECK(body.find("W,2,2,0,1\n") != std::string::npos);
    CHECK(body.find("VW,1,0.6079") != std::string::npos);

    const auto j = run_cli({"moments", "--kmax", "2", "--format", "json"});
    REQUIRE(j.code == kExitOk);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["tables"].size() == 3);
    CHECK(doc["input_sha256"].get<std::string>().size() == 64);
}

TEST_CASE("prime bound from the environment") {
    ::setenv(kPrimeBoundEnv, "5000", 1);
    const auto r = run_cli({"moments", "--kmax", "1"});
    ::unsetenv(kPrimeBoundEnv);
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("\"prime_bound\":5000") != std::string::npos);
    ::setenv(kPrimeBoundEnv, "many", 1);
    CHECK(run_cli({"moments", "--kmax", "1"}).code == kExitConfig);
    ::unsetenv(kPrimeBoundEnv);
}

TEST_CASE("coprime-prob") {
    const auto dir = scratch("graph");
    {
        std::ofstream(dir / "p3.json") << R"({"vertices": 3, "edges": [[0, 1], [1, 2]]})";
        std::ofstream(dir / "c4.json") << R"({"vertices": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]})";
        std::ofstream(dir / "bad.json") << R"({"vertices": 4, "edges": [[0, 1], )";
    }
    const auto p3 = run_cli({"coprime-prob", "--graph", (dir / "p3.json").string(), "--format", "json"});
    REQUIRE(p3.code == kExitOk);
    const auto doc = nlohmann::json::parse(p3.out);
    CHECK(doc["value"].get<double>() == doctest::Approx(0.42824956372689604).epsilon(1e-12));
    CHECK(doc["polynomial"] == nlohmann::json::parse("[1, 0, -2, 1]"));
    CHECK(run_cli({"coprime-prob", "--complete", "3"}).out.find("K_3,0.2867474867") != std::string::npos);
    CHECK(run_cli({"coprime-prob", "--graph", (dir / "c4.json").string()}).code == kExitConfig);
    CHECK(run_cli({"coprime-prob", "--graph", (dir / "bad.json").string()}).code == kExitConfig);
    CHECK(run_cli({"coprime-prob", "--graph", (dir / "missing.json").string()}).code == kExitConfig);
    CHECK(run_cli({"coprime-prob", "--complete", "3", "--graph", (dir / "p3.json").string()}).code == kExitConfig);
}

TEST_CASE("census") {
    const auto r = run_cli({"census", "--kmax", "3"});
    REQUIRE(r.code == kExitOk);
    const auto body = strip_comments(r.out);
    CHECK(body.find("3,((())()),4,3,aabccb\n") != std::string::npos);
    CHECK(body.find("3,(()()()),4,2,aabbcc\n") != std::string::npos);
}

TEST_CASE("verify exit codes") {
    CHECK(run_cli({"verify", "--prime-bound", "100000"}).code == kExitOk);
    const auto bad = run_cli({"verify", "--prime-bound", "100000", "--inject-corrupt-cache"});
    CHECK(bad.code == kExitVerifyFailed);
    CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("simulate writes reproducible outputs") {
    const auto a = scratch("sim_a");
    const auto b = scratch("sim_b");
    const std::vector<std::string> common{"simulate", "--n", "60", "--mask", "visible", "--replicas", "3",
                                          "--seed", "9", "--kde", "--dump-eigenvalues"};
    auto argsA = common;
    argsA.insert(argsA.end(), {"--threads", "1", "--output", a.string()});
    auto argsB = common;
    argsB.insert(argsB.end(), {"--threads", "3", "--output", b.string()});
    REQUIRE(run_cli(argsA).code == kExitOk);
    REQUIRE(run_cli(argsB).code == kExitOk);
    for (const char* file : {"replicas.csv", "histogram.csv", "fluctuations.csv", "kde.csv", "eigenvalues.csv"}) {
        INFO(file);
        REQUIRE(fs::exists(a / file));
        CHECK(slurp(a / file) == slurp(b / file));
    }
    const auto manifest = nlohmann::json::parse(slurp(a / "manifest.json"));
    CHECK(manifest["config"]["seed"] == 9);
    CHECK(manifest["config"].contains("threads") == false);
    CHECK(manifest["summary"]["pooled_moments"].size() == 8);
    const auto replicas = strip_comments(slurp(a / "replicas.csv"));
    CHECK(replicas.starts_with("replica,lambda_max,m1,m2,m3,m4,m5,m6,m7,m8\n"));

    const auto c = scratch("sim_c");
    auto argsC = common;
    argsC[8] = "10";
    argsC.insert(argsC.end(), {"--output", c.string()});
    REQUIRE(run_cli(argsC).code == kExitOk);
    CHECK(slurp(a / "replicas.csv") != slurp(c / "replicas.csv"));
}

TEST_CASE("sha256") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
