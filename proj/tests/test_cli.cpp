// Integration tests driving the gk binary (path supplied as argv[1]).

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "gk/graph_io.hpp"
#include "gk/families.hpp"

namespace {

std::string gk_bin;

struct RunResult {
    int code = -1;
    std::string out;
};

// Run the binary with the given arguments, capturing stdout+stderr.
RunResult run(const std::string& args, const std::string& env_prefix = "") {
    RunResult r;
    std::string cmd = env_prefix + gk_bin + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    REQUIRE(WIFEXITED(status));
    r.code = WEXITSTATUS(status);
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

const std::string golden_catalog =
    std::string(GK_SOURCE_DIR) + "/tests/data/catalog.golden.json";

} // namespace

int main(int argc, char* argv[]) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <gk-binary> [catch2 args]\n");
        return 2;
    }
    gk_bin = argv[1];
    return Catch::Session().run(1, argv);
}

TEST_CASE("graph: DOT output for J4 has 10 nodes and 8 edges") {
    auto r = run("graph sporadic:J4 --format dot");
    REQUIRE(r.code == 0);
    REQUIRE(contains(r.out, "graph G {"));
    size_t nodes = 0, edges = 0, pos = 0;
    while ((pos = r.out.find('\n', pos)) != std::string::npos) {
        ++pos;
        if (r.out.compare(pos, 3, "  \"") != 0) continue;
        if (r.out.find(" -- ", pos) < r.out.find('\n', pos))
            ++edges;
        else
            ++nodes;
    }
    REQUIRE(nodes == 10);
    REQUIRE(edges == 8);
}

TEST_CASE("graph: PSL2(61) is a triangle plus two isolated vertices") {
    auto r = run("graph psl2:61");
    REQUIRE(r.code == 0);
    REQUIRE(contains(r.out, "edges (3): {2,3} {2,5} {3,5}"));
    REQUIRE(contains(r.out, "components (3): {2,3,5} {31} {61}"));
}

TEST_CASE("graph: JSON output round-trips through graph_from_json") {
    auto r = run("graph sz:m=3 --format json");
    REQUIRE(r.code == 0);
    gk::PrimeGraph g = gk::graph_from_json(gk::json::parse(r.out));
    gk::PrimeGraph expect = gk::prime_graph(gk::GroupId::two_b2(3));
    REQUIRE(g.vertices() == expect.vertices());
    REQUIRE(g.edges() == expect.edges());
}

TEST_CASE("graph: e8:3 reports the unknown adjacency with a vertex bound") {
    auto r = run("graph e8:3");
    REQUIRE(r.code == 1);
    REQUIRE(contains(r.out, "full graph unknown for e8:3"));
    size_t pos = r.out.find("|pi(S)| >= ");
    REQUIRE(pos != std::string::npos);
    int bound = std::stoi(r.out.substr(pos + 11));
    REQUIRE(bound >= 16);
}

TEST_CASE("iso: M22 and Sz(128) are isomorphic, exit 0 with a bijection") {
    auto r = run("iso sporadic:M22 sz:m=3");
    REQUIRE(r.code == 0);
    REQUIRE(contains(r.out, "isomorphic"));
    REQUIRE(contains(r.out, " -> "));
}

TEST_CASE("iso: HS and J3 are isomorphic") {
    auto r = run("iso sporadic:HS sporadic:J3");
    REQUIRE(r.code == 0);
    REQUIRE(contains(r.out, "isomorphic"));
}

TEST_CASE("iso: J4 vs M exits 1 naming the first differing invariant") {
    auto r = run("iso sporadic:J4 sporadic:M");
    REQUIRE(r.code == 1);
    REQUIRE(contains(r.out, "not isomorphic"));
    REQUIRE(contains(r.out, "vertex counts 10 vs 15"));
}

TEST_CASE("invariants: Th values in text and json") {
    auto r = run("invariants sporadic:Th");
    REQUIRE(r.code == 0);
    REQUIRE(contains(r.out, "vertices: 7"));
    REQUIRE(contains(r.out, "components: 3"));
    REQUIRE(contains(r.out, "independence number: 5"));

    auto j = run("invariants sporadic:Th --format json");
    REQUIRE(j.code == 0);
    auto parsed = gk::json::parse(j.out);
    REQUIRE(parsed.at("vertex_count") == 7);
    REQUIRE(parsed.at("component_count") == 3);
    REQUIRE(parsed.at("independence_number") == 5);
}

TEST_CASE("lemma: all five ids pass on their default ranges") {
    for (const char* id : {"suz_primes", "ree_primes", "gerono", "zsigmondy", "lte"}) {
        auto r = run(std::string("lemma ") + id);
        INFO(id << ": " << r.out);
        REQUIRE(r.code == 0);
        REQUIRE(contains(r.out, "pass"));
    }
}

TEST_CASE("lemma: suz_primes reports the solution set {1, 2}") {
    auto r = run("lemma suz_primes --max-m 12");
    REQUIRE(r.code == 0);
    REQUIRE(contains(r.out, "{1, 2}"));
}

TEST_CASE("lemma: unknown id is a usage error") {
    auto r = run("lemma not_a_lemma");
    REQUIRE(r.code == 2);
}

TEST_CASE("recognise: Th is recognisable with a full trace") {
    auto r = run("recognise Th");
    REQUIRE(r.code == 0);
    REQUIRE(contains(r.out, "verdict: recognisable"));
    REQUIRE(contains(r.out, "candidates: 19"));
    REQUIRE(contains(r.out, "eliminated"));
    REQUIRE(!contains(r.out, "SURVIVES"));
}

TEST_CASE("recognise: Ru is unrecognisable with a verified labelled witness") {
    auto r = run("recognise Ru");
    REQUIRE(r.code == 0);
    REQUIRE(contains(r.out, "verdict: unrecognisable"));
    REQUIRE(contains(r.out, "labelled equality"));
}

TEST_CASE("recognise: JSON output parses and carries the verdict") {
    auto r = run("recognise Fi23 --format json");
    REQUIRE(r.code == 0);
    auto parsed = gk::json::parse(r.out);
    REQUIRE(parsed.at("target") == "Fi23");
    REQUIRE(parsed.at("recognisable") == true);
    REQUIRE(parsed.at("reports").size() == 23);
}

TEST_CASE("witness: Ru replay confirms labelled equality") {
    auto r = run("witness Ru");
    REQUIRE(r.code == 0);
    REQUIRE(contains(r.out, "base: sporadic:Ru"));
    REQUIRE(contains(r.out, "labelled equality"));
}

TEST_CASE("witness: groups without a construction exit 1") {
    for (const char* name : {"M12", "B"}) {
        auto r = run(std::string("witness ") + name);
        REQUIRE(r.code == 1);
        REQUIRE(contains(r.out, "no witness construction"));
    }
}

TEST_CASE("validate: builtin catalog is clean") {
    auto r = run("validate");
    REQUIRE(r.code == 0);
    REQUIRE(contains(r.out, "catalog OK"));
}

TEST_CASE("usage errors exit 2") {
    REQUIRE(run("").code == 2);
    REQUIRE(run("graph bogus:1").code == 2);
    REQUIRE(run("recognise NoSuchGroup").code == 2);
    REQUIRE(run("graph sporadic:J4 --format png").code == 2);
}

TEST_CASE("catalog override: --catalog and GK_CATALOG load an external file") {
    auto r = run("--catalog " + golden_catalog + " validate");
    REQUIRE(r.code == 0);
    REQUIRE(contains(r.out, "catalog OK"));

    auto e = run("recognise M", "GK_CATALOG=" + golden_catalog + " ");
    REQUIRE(e.code == 0);
    REQUIRE(contains(e.out, "verdict: recognisable"));
}

TEST_CASE("catalog override: data errors exit 3") {
    REQUIRE(run("--catalog /does/not/exist.json validate").code == 3);
    std::string bad = "test_cli_bad_catalog.json";
    std::ofstream(bad) << "{\"entries\": \"nope\"}\n";
    REQUIRE(run("--catalog " + bad + " validate").code == 3);
    std::remove(bad.c_str());
}

TEST_CASE("json and dot outputs are byte-stable across runs") {
    for (const char* args : {"graph sporadic:M --format dot",
                             "recognise Fi23 --format json",
                             "graph sporadic:B --format json"}) {
        auto a = run(args);
        auto b = run(args);
        REQUIRE(a.code == 0);
        REQUIRE(a.out == b.out);
    }
}
