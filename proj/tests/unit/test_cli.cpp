#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "vcq/generators.hpp"

using namespace vcq;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "vcq");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "vcq_cli_test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

}  // namespace

TEST_CASE("gen, build and query C5") {
    const std::string graph = scratch("c5.graph");
    REQUIRE(run({"gen", "cycle", "5", "-o", graph}).code == 0);

    const Result built = run({"build", "--mode", "kconn", "-k", "2", graph});
    CHECK(built.code == 0);
    CHECK(built.out.find("cuts 5 ") != std::string::npos);
    CHECK(built.out.find("forests 0 ") != std::string::npos);

    CHECK(run({"query", graph + ".oracle", "0", "2"}).out == "0 2 CUT 2 E(0,1) E(0,4)\n");
    CHECK(run({"query", graph + ".oracle"}, "0 2\n# comment\n\n3 1\n").out ==
          "0 2 CUT 2 E(0,1) E(0,4)\n3 1 CUT 2 E(2,3) E(3,4)\n");
    CHECK(run({"query", graph + ".oracle", "0"}).code == 1);
    CHECK(run({"query", graph + ".oracle", "0", "9"}).code == 1);

    const Result refused = run({"build", "--mode", "kconn", "-k", "4", graph});
    CHECK(refused.code == 3);
    CHECK(refused.err.find("not 4-connected") != std::string::npos);
}

TEST_CASE("K5 answers CON") {
    const std::string graph = scratch("k5.graph");
    REQUIRE(run({"gen", "complete", "5", "-o", graph}).code == 0);
    REQUIRE(run({"build", "-k", "3", graph, "-o", graph + ".o"}).code == 0);
    CHECK(run({"query", graph + ".o", "0", "1", "4", "2"}).out == "0 1 CON\n4 2 CON\n");
}

TEST_CASE("general mode on a random graph") {
    const std::string graph = scratch("rand40.graph");
    REQUIRE(run({"gen", "gnp", "40", "0.15", "17", "-o", graph}).code == 0);
    const Result built = run({"build", "--mode", "general", "-k", "3", graph});
    CHECK(built.code == 0);
    CHECK(built.out.find("bound (2k+1)n = 280") != std::string::npos);
    const Result verified = run({"verify", graph, "--oracle", graph + ".oracle"});
    CHECK(verified.code == 0);
    CHECK(verified.out.find("FAIL") == std::string::npos);
}

TEST_CASE("gen emits B6") {
    const Result r = run({"gen", "bridged-cliques", "6", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("12 33\n", 0) == 0);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"gen", "moebius", "3"}).code == 1);

    const std::string bad = scratch("bad.graph");
    std::ofstream(bad) << "3 2\n0 1\n1 1\n";
    const Result parse = run({"build", "-k", "1", bad});
    CHECK(parse.code == 2);
    CHECK(parse.err.find("line 3") != std::string::npos);

    const std::string junk = scratch("junk.oracle");
    std::ofstream(junk) << "not an oracle";
    CHECK(run({"stats", junk}).code == 2);
    CHECK(run({"stats", scratch("missing.oracle")}).code == 2);
}

TEST_CASE("verify reports a mismatching oracle") {
    const std::string c5 = scratch("c5v.graph");
    const std::string c6 = scratch("c6v.graph");
    REQUIRE(run({"gen", "cycle", "5", "-o", c5}).code == 0);
    REQUIRE(run({"gen", "wheel", "4", "-o", c6}).code == 0);
    REQUIRE(run({"build", "-k", "2", c5}).code == 0);
    // an oracle for C5 checked against a different 5-node graph
    const Result r = run({"verify", c6, "--oracle", c5 + ".oracle"});
    CHECK(r.code == 4);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("sparsify and bench") {
    const std::string graph = scratch("dense.graph");
    REQUIRE(run({"gen", "complete", "8", "-o", graph}).code == 0);
    const Result s = run({"sparsify", graph, "-k", "1"});
    CHECK(s.code == 0);
    CHECK(parse_graph(s.out).m() <= 14);

    REQUIRE(run({"build", "-k", "3", graph}).code == 0);
    const Result b = run({"bench", "--oracle", graph + ".oracle", "--queries", "1000"});
    CHECK(b.code == 0);
    CHECK(b.out.find("mean_ns_per_query") != std::string::npos);
}
