#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "tait/triangulation.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = tait::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("count k4 with all methods") {
    const auto r = run({"count", "--family", "k4", "--method", "all"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["tait0"] == 2);
    CHECK(j["agreement"] == true);
    CHECK(j["graph"]["n"] == 4);
    CHECK(j["results"]["brute"]["tait"] == 6);
    CHECK(j["results"]["heawood"]["tait0"] == 2);
    const auto& alpha = j["results"]["alpha"];
    CHECK(alpha["terms"] == 16);
    CHECK(alpha["rank_histogram"]["2"] == 6);
    CHECK(alpha["rank_histogram"]["3"] == 10);
    for (const auto& cls : alpha["term_classes"]) {
        if (cls["rank"] == 2) {
            CHECK(cls["weight"] == "+1/3");
            CHECK(cls["count"] == 6);
            CHECK(cls["contributes"] == true);
        } else {
            CHECK(cls["weight"] == "0");
            CHECK(cls["contributes"] == false);
        }
    }
}

TEST_CASE("count octahedron: threaded alpha equals brute force") {
    const auto a = json::parse(run({"count", "--family", "octahedron", "--threads", "4"}).out);
    const auto b = json::parse(run({"count", "--family", "octahedron", "--method", "brute"}).out);
    CHECK(a["tait0"] == 8);
    CHECK(a["threads"] == 4);
    CHECK(a["tait0"] == b["tait0"]);
}

TEST_CASE("count with sign symmetry and CSV output") {
    const auto r = run({"count", "--family", "bipyramid", "--size", "5", "--sign-symmetry", "--csv"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "graph,method,n,edges,faces,tait0,seconds,threads");
    CHECK(ls[1].rfind("bipyramid(5),alpha,7,15,10,10,", 0) == 0);
}

TEST_CASE("count reads a rotation-system file") {
    const auto path = write_temp("tait_cli_k4.txt", "4\n0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n");
    const auto r = run({"count", "--graph", path.string(), "--method", "all"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["graph"]["source"] == "file");
    CHECK(json::parse(r.out)["tait0"] == 2);
}

TEST_CASE("exit codes") {
    SUBCASE("invalid input") {
        const auto quad = write_temp("tait_cli_quad.txt", "4\n0: 1 3\n1: 2 0\n2: 3 1\n3: 0 2\n");
        const auto r = run({"count", "--graph", quad.string()});
        CHECK(r.code == 2);
        CHECK(r.err.find("non-triangular face") != std::string::npos);
        CHECK(run({"count", "--graph", "/nonexistent/graph.txt"}).code == 2);
        const auto garbage = write_temp("tait_cli_garbage.txt", "three\n");
        CHECK(run({"count", "--graph", garbage.string()}).code == 2);
        CHECK(run({"count", "--family", "bipyramid", "--size", "2"}).code == 2);
    }
    SUBCASE("budget") {
        const auto r = run({"count", "--family", "icosahedron", "--max-faces", "12"});
        CHECK(r.code == 3);
        CHECK(r.err.find("budget exceeded") != std::string::npos);
        CHECK(run({"count", "--family", "apollonian", "--depth", "2", "--method", "brute"}).code == 3);
    }
    SUBCASE("usage") {
        CHECK(run({}).code == 1);
        CHECK(run({"count"}).code == 1);
        CHECK(run({"count", "--family", "cube"}).code == 1);
        CHECK(run({"count", "--family", "k4", "--method", "magic"}).code == 1);
        CHECK(run({"count", "--family", "k4", "--graph", "x.txt"}).code == 1);
        CHECK(run({"frobnicate"}).code == 1);
        CHECK(run({"count", "--family", "k4", "--threads", "0"}).code == 1);
    }
    SUBCASE("help") { CHECK(run({"--help"}).code == 0); }
}

TEST_CASE("verify subcommand") {
    SUBCASE("single lemma, text") {
        const auto r = run({"verify", "--lemma", "odd-rank", "--family", "k4"});
        CHECK(r.code == 0);
        CHECK(r.out.rfind("PASS ", 0) == 0);
        CHECK(r.out.find("[k4]") != std::string::npos);
    }
    SUBCASE("gauss sweeps, JSON") {
        const auto r = run({"verify", "--lemma", "gauss", "--samples", "100", "--json"});
        REQUIRE(r.code == 0);
        const auto j = json::parse(r.out);
        CHECK(j["passed"] == true);
        REQUIRE(j["checks"].size() == 2);
        CHECK(j["checks"][0]["checked"] == 1 + 3 + 27 + 729);
        CHECK(j["checks"][1]["checked"] == 100);
    }
    SUBCASE("exhaustive only") {
        const auto j = json::parse(run({"verify", "--lemma", "gauss", "--exhaustive", "--order", "2", "--json"}).out);
        CHECK(j["checks"].size() == 1);
    }
    SUBCASE("graph lemmas default to the small corpus") {
        const auto r = run({"verify", "--lemma", "theorem"});
        CHECK(r.code == 0);
        CHECK(lines(r.out).size() == 4);
    }
    SUBCASE("unknown lemma") { CHECK(run({"verify", "--lemma", "nope"}).code == 1); }
}

TEST_CASE("gen round-trips through count") {
    const auto r = run({"gen", "--family", "k4"});
    REQUIRE(r.code == 0);
    const auto g = tait::parse_rotation_system(r.out);
    CHECK(g.vertex_count() == 4);
    CHECK(tait::serialize_rotation_system(g) == r.out);
    const auto path = write_temp("tait_cli_gen.txt", r.out);
    CHECK(json::parse(run({"count", "--graph", path.string()}).out)["tait0"] == 2);

    CHECK(tait::parse_rotation_system(run({"gen", "--family", "apollonian", "--depth", "2"}).out).vertex_count() == 20);
    const auto b6 = tait::parse_rotation_system(run({"gen", "--family", "bipyramid", "--size", "6"}).out);
    CHECK(b6.vertex_count() == 8);
    CHECK(b6.face_count() == 12);
    CHECK(run({"gen"}).code == 1);
}

TEST_CASE("bench sweeps a family and marks over-budget rows skipped") {
    const auto r = run({"bench", "--family", "apollonian", "--from", "0", "--to", "2", "--threads", "1", "--threads", "2"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    CHECK(ls[0] == "graph,method,n,faces,terms,seconds,threads,tait0,status,rank_histogram");
    // Per depth: two alpha rows, one brute, one heawood.
    REQUIRE(ls.size() == 1 + 3 * 4);
    int skipped = 0;
    for (std::size_t i = 1; i < ls.size(); ++i)
        if (ls[i].find(",skipped,") != std::string::npos) {
            ++skipped;
            CHECK(ls[i].rfind("apollonian(2),", 0) == 0);
        }
    // apollonian(2) has 36 faces and 20 vertices: every method is over budget.
    CHECK(skipped == 4);
    CHECK(ls[1].rfind("apollonian(0),alpha,4,4,16,", 0) == 0);
}
