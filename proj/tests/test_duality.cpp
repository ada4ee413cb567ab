#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "brute.hpp"
#include "gammoidlab/duality.hpp"

using namespace gammoidlab;

namespace {

std::set<int> random_base(const Dimaze& d, std::mt19937& rng) {
    std::vector<int> order(d.size());
    for (int v = 0; v < d.size(); ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    std::set<int> b;
    for (int v : order) {
        b.insert(v);
        std::vector<int> probe(b.begin(), b.end());
        if (!std::holds_alternative<PathSystem>(link(d, probe))) b.erase(v);
    }
    return b;
}

bool same_dimaze(const Dimaze& a, const Dimaze& b) {
    return a.vertices().names() == b.vertices().names() && a.edges() == b.edges() &&
           a.exits() == b.exits();
}

}  // namespace

TEST_CASE("star names dodge clashes and record renames") {
    Dimaze plain({"a", "b", "t"}, {{"a", "b"}, {"b", "t"}}, {"t"});
    StarNaming n = star_naming(plain);
    CHECK(n.star_of == std::vector<std::string>{"a*", "b*", ""});
    CHECK(n.renames.empty());

    Dimaze tricky({"v", "v*", "t"}, {{"v", "t"}, {"v*", "t"}}, {"t"});
    StarNaming m = star_naming(tricky);
    CHECK(m.star_of[0] == "v**");
    CHECK(m.star_of[1] == "v***");
    CHECK(m.renames ==
          std::vector<std::pair<std::string, std::string>>{{"v*", "v**"}, {"v**", "v***"}});
}

TEST_CASE("conversion to a bimaze, frozen") {
    Dimaze d({"s", "x", "t"}, {{"s", "x"}, {"x", "t"}}, {"t"});
    ConvertedBimaze cb = to_bimaze(d);
    const BipartiteGraph& g = cb.b.g;
    CHECK(g.left().names() == std::vector<std::string>{"s", "x", "t"});
    CHECK(g.right().names() == std::vector<std::string>{"s*", "x*"});
    // m0 pairs plus one reversed copy of each dimaze edge
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 1}, {2, 1}});
    CHECK(cb.b.m0_partner == std::vector<int>{0, 1});
    CHECK_FALSE(cb.b.has_frontier());
}

TEST_CASE("converting back is the identity on all small dimazes") {
    int count = 0;
    brute::for_each_dimaze(3, [&](const Dimaze& d) {
        ++count;
        CHECK(same_dimaze(to_dimaze(to_bimaze(d).b), d));
    });
    CHECK(count > 100);
}

TEST_CASE("the dual of the linkability matroid is the converted transversal matroid") {
    brute::for_each_dimaze(3, [&](const Dimaze& d) {
        CHECK(same_matroid(dual(ml_oracle(d)), mt_oracle(to_bimaze(d).b.g)));
    });
    std::mt19937 rng(97);
    for (int i = 0; i < 60; ++i) {
        Dimaze d = brute::random_dimaze(rng, 6);
        CHECK(same_matroid(dual(ml_oracle(d)), mt_oracle(to_bimaze(d).b.g)));
    }
}

TEST_CASE("linkage and matching translations are mutually inverse") {
    std::mt19937 rng(101);
    for (int i = 0; i < 60; ++i) {
        Dimaze d = brute::random_dimaze(rng, 6);
        std::set<int> base = random_base(d, rng);
        PathSystem p = std::get<PathSystem>(link(d, std::vector<int>(base.begin(), base.end())));

        Matching m = linkage_to_matching(d, p);
        Bimaze b = to_bimaze(d).b;
        CHECK(is_m0_matching(b, m));
        CHECK(m.covered_right().size() == static_cast<std::size_t>(b.g.right().size()));
        std::set<int> uncovered_want;
        for (int v : p.ini()) uncovered_want.insert(v);
        for (int v = 0; v < d.size(); ++v)
            if (!m.covered_left().count(v)) CHECK(uncovered_want.count(v));

        PathSystem back = matching_to_linkage(d, m);
        std::set<std::vector<int>> got(back.paths.begin(), back.paths.end());
        std::set<std::vector<int>> want(p.paths.begin(), p.paths.end());
        CHECK(got == want);

        Matching again = linkage_to_matching(d, back);
        CHECK(again.edges == m.edges);
    }
}

TEST_CASE("translations reject inputs that are not onto") {
    Dimaze d({"a", "t1", "t2"}, {{"a", "t1"}}, {"t1", "t2"});
    PathSystem p;
    p.paths = {{0, 1}};  // misses exit t2
    CHECK_THROWS_AS(linkage_to_matching(d, p), InputError);

    Matching empty;  // leaves a* uncovered
    CHECK_THROWS_AS(matching_to_linkage(d, empty), InputError);
}

TEST_CASE("maximality criteria hold on every small instance") {
    brute::for_each_dimaze(3, [&](const Dimaze& d) {
        CHECK(check_dagger(d));
        CHECK(check_ddagger(to_bimaze(d).b));
    });
    std::mt19937 rng(103);
    for (int i = 0; i < 40; ++i) {
        Dimaze d = brute::random_dimaze(rng, 6);
        CHECK(check_dagger(d));
        CHECK(check_ddagger(to_bimaze(d).b));
    }
}
