#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "xtop/cli.hpp"
#include "xtop/json_io.hpp"

using namespace xtop;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify a forest") {
    const auto r = run({"classify", "--forest", "T2+T3", "--json"});
    REQUIRE(r.code == kExitOk);
    const auto j = Json::parse(r.out);
    CHECK(j["report"]["t_threequarter"] == true);
    CHECK(j["report"]["t1"] == false);
    CHECK(j["shape"] == "T2+T3");
}

TEST_CASE("classify with checks") {
    const auto r = run({"classify", "--forest", "V2+C2", "--checks"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("checks:") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("spec of S3") {
    const auto r = run({"spec", "--s3", "--json"});
    REQUIRE(r.code == kExitOk);
    const auto j = Json::parse(r.out);
    CHECK(j["spectrum"]["spec"] == Json::parse(R"([["0"], ["0", "a"]])"));
    CHECK(j["report"]["kdim"] == 1);
}

TEST_CASE("spec subspaces") {
    auto r = run({"spec", "--bni", "12", "3", "--subspace", "drop-zero"});
    CHECK(r.code == kExitOk);
    r = run({"spec", "--zn", "30", "--subspace", "sideways"});
    CHECK(r.code == kExitParse);
}

TEST_CASE("bni verb") {
    auto r = run({"bni", "20", "7"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("match") != std::string::npos);
    r = run({"bni", "4", "9"});
    CHECK(r.code == kExitParse);
}

TEST_CASE("verify verb") {
    auto r = run({"verify", "forest", "--max-size", "5"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("PASS") != std::string::npos);
    r = run({"verify", "nonsense"});
    CHECK(r.code == kExitParse);
}

TEST_CASE("export") {
    auto r = run({"export", "--forest", "T2", "--format", "dot", "--closed-sets"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("digraph") != std::string::npos);
    r = run({"export", "--s3", "--format", "json"});
    CHECK(r.code == kExitOk);
    CHECK(Json::parse(r.out).contains("closed_sets"));
    r = run({"export", "--forest", "T2", "--format", "svg"});
    CHECK(r.code == kExitParse);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == kExitParse);
    CHECK(run({"classify"}).code == kExitParse);
    CHECK(run({"classify", "--forest", "T2", "--poset", "x.json"}).code == kExitParse);
    CHECK(run({"classify", "--forest", "Q2"}).code == kExitParse);
    CHECK(run({"frobnicate"}).code == kExitParse);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("file inputs and their failure codes") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "xtop_cli_test";
    fs::create_directories(dir);
    auto write = [&](const char* name, const char* text) {
        std::ofstream(dir / name) << text;
        return (dir / name).string();
    };
    const auto m3 = write("m3.json", R"({"lattice": {"labels": ["0", "a", "b", "c", "1"],
        "leq": [["0","a"],["0","b"],["0","c"],["a","1"],["b","1"],["c","1"]]}, "X": ["a", "b", "c"]})");
    CHECK(run({"classify", "--space", m3}).code == kExitNotXTop);

    const auto bad_ring = write("bad.json", R"({"labels": ["0", "1"], "add": [["0","1"],["1","0"]],
        "mul": [["0","0"],["0","0"]], "zero": "0", "one": "1"})");
    CHECK(run({"spec", "--semiring", bad_ring}).code == kExitAxiom);

    const auto poset = write("vee.json", R"({"labels": ["b", "x", "y"], "leq": [["b","x"],["b","y"]]})");
    const auto r = run({"classify", "--poset", poset});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("T1/2 yes") != std::string::npos);

    CHECK(run({"classify", "--poset", write("junk.json", "{not json")}).code == kExitParse);
    fs::remove_all(dir);
}
