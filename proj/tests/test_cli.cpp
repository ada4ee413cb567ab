#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gammoidlab/cli.hpp"
#include "json.hpp"

using namespace gammoidlab;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
    json doc() const { return json::parse(out); }
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string tmp_file(const std::string& name, const std::string& content) {
    std::string path = "/tmp/gammoid-lab-test-" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

const char* kPath3 = R"({"vertices":["a","b","t"],"edges":[["a","b"],["b","t"]],"exits":["t"]})";

}  // namespace

TEST_CASE("usage errors exit with 1, help with 0") {
    CHECK(cli({}).code == 1);
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"nonsense"}).code == 1);
    CHECK(cli({"link", "/nonexistent.json", "--set", "a"}).code == 1);
    std::string bad = tmp_file("bad.json", "{ not json");
    Run r = cli({"axioms", bad});
    CHECK(r.code == 1);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("link emits a linkage or a separator") {
    std::string f = tmp_file("path3.json", kPath3);
    Run ok = cli({"link", f, "--set", "a"});
    CHECK(ok.code == 0);
    CHECK(ok.doc()["paths"] == json::parse(R"([["a","b","t"]])"));

    Run dep = cli({"link", f, "--set", "a,b"});
    CHECK(dep.code == 2);
    CHECK(dep.doc().contains("separator"));
    CHECK(cli({"link", f, "--set", "a,zzz"}).code == 1);
}

TEST_CASE("axioms pass on a small instance") {
    std::string f = tmp_file("path3.json", kPath3);
    Run r = cli({"axioms", f});
    CHECK(r.code == 0);
    CHECK(r.doc()["pass"] == true);
    CHECK(r.doc()["i3"]["pass"] == true);
}

TEST_CASE("generated truncations are valid inputs") {
    Run ro = cli({"gen", "RO", "--depth", "5", "--width", "1"});
    CHECK(ro.code == 0);
    json j = ro.doc();
    CHECK(j["vertices"] == json::parse(R"(["x1","x2","x3","x4","x5"])"));
    CHECK(j["frontier"] == json::parse(R"(["x5"])"));
    CHECK(j["exits"].empty());

    Run tnd = cli({"gen", "TND", "--depth", "4"});
    CHECK(tnd.code == 0);
    CHECK(tnd.doc()["left"].size() == 8);
    CHECK(tnd.doc()["frontier_left"] == json::parse(R"(["v7","v8"])"));
}

TEST_CASE("dualize round-trips byte-exactly on a frontier-free instance") {
    Run ca = cli({"gen", "CA", "--depth", "9"});
    REQUIRE(ca.code == 0);
    std::string d = tmp_file("ca9.json", ca.out);
    Run b = cli({"dualize", d});
    REQUIRE(b.code == 0);
    CHECK(b.doc().contains("m0"));
    std::string bf = tmp_file("ca9b.json", b.out);
    Run back = cli({"dualize", bf, "--to-dimaze"});
    REQUIRE(back.code == 0);
    CHECK(back.out == ca.out);
}

TEST_CASE("pym reports the stabilization round") {
    Run ca = cli({"gen", "CA", "--depth", "8"});
    std::string d = tmp_file("ca8.json", ca.out);
    std::string p = tmp_file("p.json", R"({"paths":[["x1"],["x2","x3"],["x4","x5"]]})");
    std::string q = tmp_file("q.json", R"({"paths":[["x2","x1"],["x4","x3"]]})");
    Run r = cli({"pym", d, "--linkage", p, "--linkage", q});
    CHECK(r.code == 0);
    CHECK(r.doc()["stable_iteration"] == 3);
    CHECK(r.doc()["paths"].size() == 3);
}

TEST_CASE("shift swaps the exits to the linked base") {
    Run ca = cli({"gen", "CA", "--depth", "8"});
    std::string d = tmp_file("ca8s.json", ca.out);
    std::string q = tmp_file("qs.json", R"({"paths":[["x2","x1"],["x4","x3"]]})");
    Run r = cli({"shift", d, "--linkage", q});
    CHECK(r.code == 0);
    CHECK(r.doc()["exits"] == json::parse(R"(["x2","x4","x5","x7"])"));
}

TEST_CASE("minor emits a presentation with its ground set") {
    std::string f = tmp_file("path3.json", kPath3);
    Run r = cli({"minor", f, "--contract", "a", "--delete", ""});
    CHECK(r.code == 0);
    json j = r.doc();
    CHECK(j["ground"] == json::parse(R"(["b","t"])"));
    CHECK(j["vertices"] == json::parse(R"(["b","t"])"));
}

TEST_CASE("mpt distinguishes matchable and frontier-blocked sets") {
    Run tnd = cli({"gen", "TND", "--depth", "4"});
    std::string f = tmp_file("tnd.json", tnd.out);
    // the base matching reaches the frontier, so everything is dependent here
    Run bad = cli({"mpt", f, "--set", "v1"});
    CHECK(bad.code == 2);
    CHECK(bad.doc()["independent"] == false);

    Run ca = cli({"gen", "CA", "--depth", "9"});
    std::string cf = tmp_file("ca9m.json", ca.out);
    Run dual = cli({"dualize", cf});
    std::string bf = tmp_file("ca9m-b.json", dual.out);
    Run good = cli({"mpt", bf, "--set", "x2"});
    CHECK(good.code == 0);
    CHECK(good.doc().contains("matching"));
}

TEST_CASE("presentation commands accept bare graphs and bimazes") {
    std::string g = tmp_file("u23.json",
                             R"({"left":["a","b","c"],"right":["v","w"],
                                 "edges":[["a","w"],["b","v"],["b","w"],["c","v"],["c","w"]]})");
    Run maxed = cli({"present-max", g});
    CHECK(maxed.code == 0);
    CHECK(maxed.doc()["edges"].size() == 6);
    Run mined = cli({"present-min", g});
    CHECK(mined.code == 0);
    CHECK(mined.doc()["edges"].size() <= 5);
}

TEST_CASE("detect validates certificates before printing them") {
    Run fan = cli({"gen", "FAN", "--depth", "2", "--width", "6"});
    std::string f = tmp_file("fan.json", fan.out);
    Run r = cli({"detect", f, "fan", "--k", "6"});
    CHECK(r.code == 0);
    CHECK(r.doc()["found"] == true);
    CHECK(r.doc()["certificate"]["centre"] == "v");
    Run miss = cli({"detect", f, "fan", "--k", "7"});
    CHECK(miss.code == 0);
    CHECK(miss.doc()["found"] == false);
    CHECK(cli({"detect", f, "sideways-comb", "--k", "2"}).code == 1);
}

TEST_CASE("toplink exit codes follow the three-valued answer") {
    Run ro = cli({"gen", "RO", "--depth", "5"});
    std::string f = tmp_file("ro5.json", ro.out);
    Run inc = cli({"toplink", f, "--set", "x1", "--k", "2"});
    CHECK(inc.code == 0);
    CHECK(inc.doc()["status"] == "inconclusive");
    CHECK(inc.doc()["blockers"] == json::parse(R"(["x5"])"));
    Run no = cli({"toplink", f, "--set", "x1,x2", "--k", "2"});
    CHECK(no.code == 2);
    CHECK(no.doc()["status"] == "no");
    CHECK(no.doc().contains("separator"));
}

TEST_CASE("eliminate-fans rewrites the truncation document") {
    Run fan = cli({"gen", "FAN", "--depth", "2", "--width", "3"});
    std::string f = tmp_file("fan3.json", fan.out);
    Run r = cli({"eliminate-fans", f, "--k", "2"});
    CHECK(r.code == 0);
    json j = r.doc();
    CHECK(j["edges"].empty());
    CHECK(j["exits"].size() == 4);
    CHECK_FALSE(j.contains("frontier"));
}

TEST_CASE("compare sweeps translated masks") {
    std::string f = tmp_file("path3.json", kPath3);
    // same matroid, vertices listed in another order
    std::string g = tmp_file("path3-reordered.json",
                             R"({"vertices":["t","a","b"],"edges":[["a","b"],["b","t"]],"exits":["t"]})");
    Run eq = cli({"compare", f, g});
    CHECK(eq.code == 0);
    CHECK(eq.doc()["equal"] == true);

    std::string h = tmp_file("path3-cut.json",
                             R"({"vertices":["a","b","t"],"edges":[["b","t"]],"exits":["t"]})");
    Run ne = cli({"compare", f, h});
    CHECK(ne.code == 2);
    CHECK(ne.doc()["equal"] == false);
    CHECK(ne.doc().contains("witness"));

    std::string k = tmp_file("other-ground.json",
                             R"({"vertices":["x","y"],"edges":[["x","y"]],"exits":["y"]})");
    CHECK(cli({"compare", f, k}).code == 2);
}

TEST_CASE("demos run their checks") {
    for (const char* id : {"ca-cotransversal", "tnd", "tree"}) {
        Run r = cli({"demo", id});
        CHECK(r.code == 0);
        CHECK(r.doc()["pass"] == true);
    }
    CHECK(cli({"demo", "bogus"}).code == 1);
}

TEST_CASE("stdin stands in for a file") {
    std::istringstream fake(kPath3);
    auto* old = std::cin.rdbuf(fake.rdbuf());
    Run r = cli({"link", "-", "--set", "a"});
    std::cin.rdbuf(old);
    CHECK(r.code == 0);
    CHECK(r.doc()["paths"].size() == 1);
}
