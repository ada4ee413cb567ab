#include "gammoidlab/bimaze.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gammoidlab {

BipartiteGraph::BipartiteGraph(std::vector<std::string> left_names,
                               std::vector<std::string> right_names,
                               std::vector<std::pair<std::string, std::string>> edge_names)
    : left_(std::move(left_names)), right_(std::move(right_names)) {
    for (const auto& n : right_.names())
        if (left_.contains(n)) throw InputError("identifier '" + n + "' appears on both sides");
    adj_left_.resize(left_.size());
    adj_right_.resize(right_.size());
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edge_names) {
        int v = left_.index(a), w = right_.index(b);
        if (!seen.insert({v, w}).second) throw InputError("duplicate edge " + a + " -- " + b);
        adj_left_[v].push_back(w);
        adj_right_[w].push_back(v);
    }
    for (auto& l : adj_left_) std::sort(l.begin(), l.end());
    for (auto& l : adj_right_) std::sort(l.begin(), l.end());
}

bool BipartiteGraph::has_edge(int v, int w) const {
    const auto& l = adj_left_.at(v);
    return std::binary_search(l.begin(), l.end(), w);
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
    std::vector<std::pair<int, int>> r;
    for (int v = 0; v < left_.size(); ++v)
        for (int w : adj_left_[v]) r.push_back({v, w});
    return r;
}

namespace {

BipartiteGraph rebuild(const BipartiteGraph& g, std::vector<std::pair<int, int>> edges) {
    std::vector<std::pair<std::string, std::string>> names;
    for (auto [v, w] : edges) names.push_back({g.left().name(v), g.right().name(w)});
    return BipartiteGraph(g.left().names(), g.right().names(), names);
}

}  // namespace

BipartiteGraph BipartiteGraph::with_edge(int v, int w) const {
    auto e = edges();
    e.push_back({v, w});
    return rebuild(*this, e);
}

BipartiteGraph BipartiteGraph::without_edge(int v, int w) const {
    auto e = edges();
    e.erase(std::remove(e.begin(), e.end(), std::make_pair(v, w)), e.end());
    return rebuild(*this, e);
}

BipartiteGraph BipartiteGraph::without_right(const std::vector<int>& ws) const {
    std::set<int> drop(ws.begin(), ws.end());
    std::vector<std::string> right_names;
    for (int w = 0; w < right_.size(); ++w)
        if (!drop.count(w)) right_names.push_back(right_.name(w));
    std::vector<std::pair<std::string, std::string>> e;
    for (auto [v, w] : edges())
        if (!drop.count(w)) e.push_back({left_.name(v), right_.name(w)});
    return BipartiteGraph(left_.names(), right_names, e);
}

std::set<int> Matching::covered_left() const {
    std::set<int> r;
    for (auto [v, w] : edges) r.insert(v);
    return r;
}

std::set<int> Matching::covered_right() const {
    std::set<int> r;
    for (auto [v, w] : edges) r.insert(w);
    return r;
}

Bimaze::Bimaze(BipartiteGraph graph, std::vector<std::pair<std::string, std::string>> m0_edges)
    : g(std::move(graph)) {
    m0_partner.assign(g.right().size(), -1);
    std::set<int> used_left;
    for (const auto& [a, b] : m0_edges) {
        int v = g.left().index(a), w = g.right().index(b);
        if (!g.has_edge(v, w)) throw InputError("m0 edge " + a + " -- " + b + " not in graph");
        if (m0_partner[w] >= 0) throw InputError("m0 covers '" + b + "' twice");
        if (!used_left.insert(v).second) throw InputError("m0 uses '" + a + "' twice");
        m0_partner[w] = v;
    }
    for (int w = 0; w < g.right().size(); ++w)
        if (m0_partner[w] < 0) throw InputError("m0 is not onto the right class: '" + g.right().name(w) + "' uncovered");
    frontier_left.assign(g.left().size(), 0);
    frontier_right.assign(g.right().size(), 0);
}

Matching Bimaze::m0() const {
    Matching m;
    for (int w = 0; w < g.right().size(); ++w) m.edges.push_back({m0_partner[w], w});
    return m;
}

bool Bimaze::has_frontier() const {
    return std::count(frontier_left.begin(), frontier_left.end(), 1) ||
           std::count(frontier_right.begin(), frontier_right.end(), 1);
}

Matching max_matching(const BipartiteGraph& g, const std::vector<int>& left_subset) {
    std::vector<int> match_right(g.right().size(), -1);
    std::vector<char> visited;
    std::function<bool(int)> try_kuhn = [&](int v) -> bool {
        for (int w : g.adj_left(v)) {
            if (visited[w]) continue;
            visited[w] = 1;
            if (match_right[w] < 0 || try_kuhn(match_right[w])) {
                match_right[w] = v;
                return true;
            }
        }
        return false;
    };
    std::vector<int> order(left_subset);
    std::sort(order.begin(), order.end());
    for (int v : order) {
        visited.assign(g.right().size(), 0);
        try_kuhn(v);
    }
    Matching m;
    for (int w = 0; w < g.right().size(); ++w)
        if (match_right[w] >= 0) m.edges.push_back({match_right[w], w});
    return m;
}

IndependenceOracle mt_oracle(const BipartiteGraph& g) {
    BipartiteGraph copy = g;
    return IndependenceOracle(g.left(), [copy](Mask s) {
        std::vector<int> subset;
        for (int v = 0; v < copy.left().size(); ++v)
            if (s & bit(v)) subset.push_back(v);
        return max_matching(copy, subset).edges.size() == subset.size();
    });
}

namespace {

// Components of the union graph m ∪ m0; each is a set of (side, vertex) pairs.
struct UnionComponents {
    std::vector<std::vector<std::pair<bool, int>>> components;  // true = right side
};

UnionComponents union_components(const Bimaze& b, const Matching& m) {
    int nl = b.g.left().size(), nr = b.g.right().size();
    // adjacency of the union graph, at most two edges per vertex
    std::vector<std::vector<int>> left_to_right(nl), right_to_left(nr);
    auto add = [&](int v, int w) {
        left_to_right[v].push_back(w);
        right_to_left[w].push_back(v);
    };
    std::set<std::pair<int, int>> m_set(m.edges.begin(), m.edges.end());
    for (auto [v, w] : m.edges) add(v, w);
    for (int w = 0; w < nr; ++w)
        if (!m_set.count({b.m0_partner[w], w})) add(b.m0_partner[w], w);
    std::vector<char> seen_l(nl, 0), seen_r(nr, 0);
    UnionComponents out;
    for (int v0 = 0; v0 < nl; ++v0) {
        if (seen_l[v0] || left_to_right[v0].empty()) continue;
        std::vector<std::pair<bool, int>> comp;
        std::vector<std::pair<bool, int>> stack = {{false, v0}};
        seen_l[v0] = 1;
        while (!stack.empty()) {
            auto [right, x] = stack.back();
            stack.pop_back();
            comp.push_back({right, x});
            if (right) {
                for (int u : right_to_left[x])
                    if (!seen_l[u]) {
                        seen_l[u] = 1;
                        stack.push_back({false, u});
                    }
            } else {
                for (int u : left_to_right[x])
                    if (!seen_r[u]) {
                        seen_r[u] = 1;
                        stack.push_back({true, u});
                    }
            }
        }
        out.components.push_back(comp);
    }
    return out;
}

}  // namespace

bool is_m0_matching(const Bimaze& b, const Matching& m, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::set<int> l, r;
    for (auto [v, w] : m.edges) {
        if (!b.g.has_edge(v, w)) return fail("matching edge not in graph");
        if (!l.insert(v).second || !r.insert(w).second) return fail("edges are not disjoint");
    }
    for (const auto& comp : union_components(b, m).components)
        for (auto [right, x] : comp) {
            bool cut = right ? b.frontier_right[x] : b.frontier_left[x];
            if (cut)
                return fail("component touches the truncation frontier at '" +
                            (right ? b.g.right().name(x) : b.g.left().name(x)) + "'");
        }
    return true;
}

bool find_m0_matching(const Bimaze& b, const std::vector<int>& left_subset, Matching* out) {
    std::vector<int> order(left_subset);
    std::sort(order.begin(), order.end());
    if (!b.has_frontier()) {
        Matching m = max_matching(b.g, order);
        if (m.edges.size() != order.size()) return false;
        if (out) *out = m;
        return true;
    }
    std::set<int> used_right;
    Matching m;
    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (i == order.size()) return is_m0_matching(b, m, nullptr);
        for (int w : b.g.adj_left(order[i])) {
            if (used_right.count(w)) continue;
            used_right.insert(w);
            m.edges.push_back({order[i], w});
            if (assign(i + 1)) return true;
            m.edges.pop_back();
            used_right.erase(w);
        }
        return false;
    };
    if (!assign(0)) return false;
    if (out) *out = m;
    return true;
}

IndependenceOracle mpt_oracle(const Bimaze& b) {
    Bimaze copy = b;
    return IndependenceOracle(b.g.left(), [copy](Mask s) {
        std::vector<int> subset;
        for (int v = 0; v < copy.g.left().size(); ++v)
            if (s & bit(v)) subset.push_back(v);
        return find_m0_matching(copy, subset);
    });
}

Matching extend_onto(const Bimaze& b, const Matching& m) {
    std::string why;
    if (!is_m0_matching(b, m, &why)) throw InputError("not an m0-matching: " + why);
    std::set<int> covered = m.covered_right();
    std::set<std::pair<int, int>> result(m.edges.begin(), m.edges.end());
    for (const auto& comp : union_components(b, m).components) {
        bool meets_uncovered = false;
        for (auto [right, x] : comp)
            if (right && !covered.count(x)) meets_uncovered = true;
        if (!meets_uncovered) continue;
        // flip the component: drop its m-edges, take its m0-edges
        std::set<int> comp_left, comp_right;
        for (auto [right, x] : comp) (right ? comp_right : comp_left).insert(x);
        for (auto [v, w] : m.edges)
            if (comp_left.count(v)) result.erase({v, w});
        for (int w : comp_right) result.insert({b.m0_partner[w], w});
    }
    Matching ext;
    ext.edges.assign(result.begin(), result.end());
    if (ext.covered_right().size() != static_cast<std::size_t>(b.g.right().size()))
        throw InternalError("extend_onto failed to cover the right class");
    std::string check;
    if (!is_m0_matching(b, ext, &check)) throw InternalError("extend_onto broke matching: " + check);
    return ext;
}

RhsReduction reduce_cover_rhs(const BipartiteGraph& g) {
    std::vector<int> all_left;
    for (int v = 0; v < g.left().size(); ++v) all_left.push_back(v);
    Matching m = max_matching(g, all_left);
    std::set<int> covered = m.covered_right();
    std::vector<int> missed;
    for (int w = 0; w < g.right().size(); ++w)
        if (!covered.count(w)) missed.push_back(w);
    std::set<int> coloop_set;
    for (int w : missed)
        for (int v : g.adj_right(w)) coloop_set.insert(v);
    RhsReduction red;
    red.g = g.without_right(missed);
    for (int v : coloop_set) red.coloops.push_back(g.left().name(v));
    return red;
}

BipartiteGraph maximal_presentation(const BipartiteGraph& g) {
    BipartiteGraph cur = g;
    bool changed = true;
    while (changed) {
        changed = false;
        IndependenceOracle mt = mt_oracle(cur);
        for (int v = 0; v < cur.left().size() && !changed; ++v) {
            for (int w = 0; w < cur.right().size() && !changed; ++w) {
                if (cur.has_edge(v, w)) continue;
                // v a coloop of M_T(G) with N(w) deleted, i.e. the rank of the
                // ground away from N(w) drops when v is removed too
                Mask keep = bit(v);
                for (int u = 0; u < cur.left().size(); ++u)
                    if (u != v && !cur.has_edge(u, w)) keep |= bit(u);
                bool coloop =
                    popcount(mt.greedy_base(keep)) > popcount(mt.greedy_base(keep & ~bit(v)));
                if (coloop) {
                    cur = cur.with_edge(v, w);
                    changed = true;
                }
            }
        }
    }
    return cur;
}

BipartiteGraph minimal_presentation(const BipartiteGraph& g) {
    BipartiteGraph cur = g;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<std::string, std::string>> named;
        for (auto [v, w] : cur.edges()) named.push_back({cur.left().name(v), cur.right().name(w)});
        std::sort(named.begin(), named.end());
        for (const auto& [a, b] : named) {
            BipartiteGraph cand = cur.without_edge(cur.left().index(a), cur.right().index(b));
            if (same_matroid(mt_oracle(cur), mt_oracle(cand))) {
                cur = cand;
                changed = true;
                break;
            }
        }
    }
    return cur;
}

}  // namespace gammoidlab
