#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "brute.hpp"
#include "gammoidlab/bimaze.hpp"

using namespace gammoidlab;

namespace {

IndependenceOracle brute_mt(const BipartiteGraph& g) {
    BipartiteGraph copy = g;
    return IndependenceOracle(g.left(), [copy](Mask s) {
        std::vector<int> subset;
        for (int v = 0; v < copy.left().size(); ++v)
            if (s & bit(v)) subset.push_back(v);
        return brute::matchable(copy, subset);
    });
}

// random bimaze: a bipartite graph that happens to have a perfect matching
// onto its right class, used as m0
Bimaze random_bimaze(std::mt19937& rng, int nl, int nr) {
    while (true) {
        BipartiteGraph g = brute::random_bipartite(rng, nl, nr);
        std::vector<int> all;
        for (int v = 0; v < nl; ++v) all.push_back(v);
        Matching m = max_matching(g, all);
        if (m.edges.size() != static_cast<std::size_t>(nr)) continue;
        std::vector<std::pair<std::string, std::string>> m0;
        for (auto [v, w] : m.edges) m0.push_back({g.left().name(v), g.right().name(w)});
        return Bimaze(g, m0);
    }
}

std::multiset<std::set<std::string>> right_neighbourhoods(const BipartiteGraph& g) {
    std::multiset<std::set<std::string>> out;
    for (int w = 0; w < g.right().size(); ++w) {
        std::set<std::string> n;
        for (int v : g.adj_right(w)) n.insert(g.left().name(v));
        out.insert(n);
    }
    return out;
}

}  // namespace

TEST_CASE("graph construction and edge surgery") {
    CHECK_THROWS_AS(BipartiteGraph({"a"}, {"a"}, {}), InputError);
    CHECK_THROWS_AS(BipartiteGraph({"a"}, {"w"}, {{"a", "w"}, {"a", "w"}}), InputError);

    BipartiteGraph g({"a", "b"}, {"v", "w"}, {{"a", "v"}, {"b", "w"}});
    CHECK(g.has_edge(0, 0));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.with_edge(0, 1).has_edge(0, 1));
    CHECK_FALSE(g.without_edge(0, 0).has_edge(0, 0));
    BipartiteGraph h = g.without_right({0});
    CHECK(h.right().size() == 1);
    CHECK(h.right().name(0) == "w");
    CHECK(h.has_edge(1, 0));
}

TEST_CASE("bimaze construction validates m0") {
    BipartiteGraph g({"a", "b"}, {"v", "w"}, {{"a", "v"}, {"a", "w"}, {"b", "w"}});
    CHECK_NOTHROW(Bimaze(g, {{"a", "v"}, {"b", "w"}}));
    CHECK_THROWS_AS(Bimaze(g, {{"b", "v"}, {"a", "w"}}), InputError);  // b -- v missing
    CHECK_THROWS_AS(Bimaze(g, {{"a", "v"}, {"a", "w"}}), InputError);  // a twice
    CHECK_THROWS_AS(Bimaze(g, {{"a", "v"}}), InputError);              // w uncovered
    Bimaze b(g, {{"a", "v"}, {"b", "w"}});
    CHECK(b.m0().edges == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
    CHECK_FALSE(b.has_frontier());
}

TEST_CASE("maximum matching agrees with brute force on all 3x3 graphs") {
    std::vector<std::string> left = {"a", "b", "c"}, right = {"v", "w", "z"};
    for (int em = 0; em < (1 << 9); ++em) {
        std::vector<std::pair<std::string, std::string>> edges;
        for (int v = 0; v < 3; ++v)
            for (int w = 0; w < 3; ++w)
                if (em & (1 << (3 * v + w))) edges.push_back({left[v], right[w]});
        BipartiteGraph g(left, right, edges);
        for (Mask s = 0; s < 8; ++s) {
            std::vector<int> subset;
            for (int v = 0; v < 3; ++v)
                if (s & bit(v)) subset.push_back(v);
            Matching m = max_matching(g, subset);
            std::set<int> l = m.covered_left(), r = m.covered_right();
            CHECK(l.size() == m.edges.size());
            CHECK(r.size() == m.edges.size());
            for (auto [v, w] : m.edges) CHECK(g.has_edge(v, w));
            CHECK((m.edges.size() == subset.size()) == brute::matchable(g, subset));
        }
    }
}

TEST_CASE("transversal oracle matches brute force on random graphs") {
    std::mt19937 rng(61);
    for (int i = 0; i < 40; ++i) {
        BipartiteGraph g = brute::random_bipartite(rng, 5, 4);
        CHECK(same_matroid(mt_oracle(g), brute_mt(g)));
    }
}

TEST_CASE("path-transversal equals transversal without a frontier") {
    std::mt19937 rng(67);
    for (int i = 0; i < 40; ++i) {
        Bimaze b = random_bimaze(rng, 6, 3 + static_cast<int>(i % 3));
        CHECK(same_matroid(mpt_oracle(b), mt_oracle(b.g)));
    }
}

TEST_CASE("frontier components are rejected conservatively") {
    BipartiteGraph g({"a", "b"}, {"w"}, {{"a", "w"}, {"b", "w"}});
    Bimaze b(g, {{"a", "w"}});
    b.frontier_left[0] = 1;  // a's neighbourhood was cut

    // matching b -- w drags the frontier vertex a into its component
    Matching m;
    m.edges = {{1, 0}};
    std::string why;
    CHECK_FALSE(is_m0_matching(b, m, &why));
    CHECK(why.find("frontier") != std::string::npos);
    CHECK_FALSE(find_m0_matching(b, {1}));
    CHECK(mt_oracle(b.g).independent(Mask{0b10}));  // plain matchability disagrees

    // even the empty matching leaves the m0 component a -- w dirty
    CHECK_FALSE(is_m0_matching(b, Matching{}));

    // without the frontier everything is fine again
    b.frontier_left[0] = 0;
    CHECK(is_m0_matching(b, m));
    Matching found;
    CHECK(find_m0_matching(b, {1}, &found));
    CHECK(found.edges == m.edges);
}

TEST_CASE("is_m0_matching rejects malformed matchings") {
    BipartiteGraph g({"a", "b"}, {"v", "w"}, {{"a", "v"}, {"b", "w"}});
    Bimaze b(g, {{"a", "v"}, {"b", "w"}});
    Matching not_edge;
    not_edge.edges = {{0, 1}};
    CHECK_FALSE(is_m0_matching(b, not_edge));
    Matching overlap;
    overlap.edges = {{0, 0}, {0, 1}};
    CHECK_FALSE(is_m0_matching(b, overlap));
}

TEST_CASE("extend_onto flips components to cover the right class") {
    BipartiteGraph g({"a", "b"}, {"v", "w"}, {{"a", "v"}, {"b", "w"}, {"a", "w"}});
    Bimaze b(g, {{"a", "v"}, {"b", "w"}});
    Matching m;
    m.edges = {{0, 1}};  // a -- w, leaving v uncovered
    Matching ext = extend_onto(b, m);
    std::set<std::pair<int, int>> got(ext.edges.begin(), ext.edges.end());
    CHECK(got == std::set<std::pair<int, int>>{{0, 0}, {1, 1}});  // flipped back to m0

    Matching bad;
    bad.edges = {{0, 1}, {1, 1}};
    CHECK_THROWS_AS(extend_onto(b, bad), InputError);
}

TEST_CASE("extend_onto keeps the matched left set on random bimazes") {
    std::mt19937 rng(71);
    for (int i = 0; i < 60; ++i) {
        Bimaze b = random_bimaze(rng, 6, 4);
        Mask s = static_cast<Mask>(rng()) & b.g.left().full();
        std::vector<int> subset;
        for (int v = 0; v < b.g.left().size(); ++v)
            if (s & bit(v)) subset.push_back(v);
        Matching m;
        if (!find_m0_matching(b, subset, &m)) continue;
        Matching ext = extend_onto(b, m);
        CHECK(ext.covered_right().size() == static_cast<std::size_t>(b.g.right().size()));
        std::set<int> before = m.covered_left(), after = ext.covered_left();
        for (int v : before) CHECK(after.count(v));
    }
}

TEST_CASE("covering the right class reports coloops") {
    BipartiteGraph g({"a"}, {"v", "w"}, {{"a", "v"}, {"a", "w"}});
    RhsReduction red = reduce_cover_rhs(g);
    CHECK(red.g.right().size() == 1);
    CHECK(red.coloops == std::vector<std::string>{"a"});
    CHECK(same_matroid(mt_oracle(g), mt_oracle(red.g)));
}

TEST_CASE("right-class reduction preserves the matroid on random graphs") {
    std::mt19937 rng(73);
    for (int i = 0; i < 50; ++i) {
        BipartiteGraph g = brute::random_bipartite(rng, 4, 6);
        RhsReduction red = reduce_cover_rhs(g);
        auto m = mt_oracle(g);
        CHECK(same_matroid(m, mt_oracle(red.g)));
        Mask cl = coloops(m);
        for (const auto& n : red.coloops) CHECK((cl & bit(m.ground().index(n))) != 0);
    }
}

TEST_CASE("maximal presentation completes the two-element uniform matroid") {
    std::vector<std::string> left = {"a", "b", "c"}, right = {"v", "w"};
    BipartiteGraph sparse(left, right,
                          {{"a", "w"}, {"b", "v"}, {"b", "w"}, {"c", "v"}, {"c", "w"}});
    BipartiteGraph full = maximal_presentation(sparse);
    CHECK(full.edges().size() == 6);
    CHECK(same_matroid(mt_oracle(sparse), mt_oracle(full)));
}

TEST_CASE("maximal presentation is idempotent and matroid-preserving") {
    std::mt19937 rng(79);
    for (int i = 0; i < 30; ++i) {
        BipartiteGraph g = brute::random_bipartite(rng, 5, 3);
        BipartiteGraph maxed = maximal_presentation(g);
        CHECK(same_matroid(mt_oracle(g), mt_oracle(maxed)));
        for (auto e : g.edges()) CHECK(maxed.has_edge(e.first, e.second));
        CHECK(maximal_presentation(maxed).edges() == maxed.edges());
    }
}

TEST_CASE("minimal presentation cannot lose another edge") {
    std::mt19937 rng(83);
    for (int i = 0; i < 20; ++i) {
        BipartiteGraph g = brute::random_bipartite(rng, 4, 3);
        BipartiteGraph mined = minimal_presentation(g);
        auto m = mt_oracle(g);
        CHECK(same_matroid(m, mt_oracle(mined)));
        for (auto [v, w] : mined.edges())
            CHECK_FALSE(same_matroid(m, mt_oracle(mined.without_edge(v, w))));
    }
}

TEST_CASE("presentations of the same coloop-free matroid share a maximal one") {
    std::mt19937 rng(89);
    int done = 0;
    while (done < 25) {
        BipartiteGraph g = brute::random_bipartite(rng, 5, 3);
        auto m = mt_oracle(g);
        if (coloops(m) != 0) continue;
        BipartiteGraph alt = minimal_presentation(g);
        if (alt.edges() == g.edges()) continue;
        auto a = maximal_presentation(reduce_cover_rhs(g).g);
        auto b = maximal_presentation(reduce_cover_rhs(alt).g);
        CHECK(right_neighbourhoods(a) == right_neighbourhoods(b));
        ++done;
    }
}
