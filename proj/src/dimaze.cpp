#include "gammoidlab/dimaze.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace gammoidlab {

Dimaze::Dimaze(std::vector<std::string> vertex_names,
               std::vector<std::pair<std::string, std::string>> edge_names,
               std::vector<std::string> exit_names)
    : vertices_(std::move(vertex_names)) {
    int n = vertices_.size();
    out_.resize(n);
    in_.resize(n);
    exit_.assign(n, 0);
    std::set<Edge> seen;
    for (const auto& [a, b] : edge_names) {
        int u = vertices_.index(a), v = vertices_.index(b);
        if (u == v) throw InputError("loop at vertex '" + a + "'");
        if (!seen.insert({u, v}).second) throw InputError("parallel edge " + a + " -> " + b);
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (auto& l : out_) std::sort(l.begin(), l.end());
    for (auto& l : in_) std::sort(l.begin(), l.end());
    for (const auto& e : exit_names) {
        int v = vertices_.index(e);
        if (!out_[v].empty()) throw InputError("exit '" + e + "' is not a sink");
        exit_[v] = 1;
    }
}

bool Dimaze::has_edge(int u, int v) const {
    const auto& l = out_.at(u);
    return std::binary_search(l.begin(), l.end(), v);
}

std::vector<int> Dimaze::exits() const {
    std::vector<int> r;
    for (int v = 0; v < size(); ++v)
        if (exit_[v]) r.push_back(v);
    return r;
}

std::vector<Edge> Dimaze::edges() const {
    std::vector<Edge> r;
    for (int u = 0; u < size(); ++u)
        for (int v : out_[u]) r.push_back({u, v});
    return r;
}

std::vector<int> PathSystem::ini() const {
    std::vector<int> r;
    for (const auto& p : paths) r.push_back(p.front());
    return r;
}

std::vector<int> PathSystem::ter() const {
    std::vector<int> r;
    for (const auto& p : paths) r.push_back(p.back());
    return r;
}

std::set<int> PathSystem::vertex_set() const {
    std::set<int> r;
    for (const auto& p : paths) r.insert(p.begin(), p.end());
    return r;
}

std::set<Edge> PathSystem::edge_set() const {
    std::set<Edge> r;
    for (const auto& p : paths)
        for (std::size_t i = 0; i + 1 < p.size(); ++i) r.insert({p[i], p[i + 1]});
    return r;
}

int PathSystem::path_of(int v) const {
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (std::find(paths[i].begin(), paths[i].end(), v) != paths[i].end())
            return static_cast<int>(i);
    return -1;
}

void validate_path_system(const Dimaze& d, const PathSystem& p, bool linkage) {
    std::set<int> used;
    for (const auto& path : p.paths) {
        if (path.empty()) throw InputError("empty path in path system");
        for (int v : path) {
            if (v < 0 || v >= d.size()) throw InputError("path vertex out of range");
            if (!used.insert(v).second)
                throw InputError("paths share vertex '" + d.vertices().name(v) + "'");
        }
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!d.has_edge(path[i], path[i + 1]))
                throw InputError("missing edge " + d.vertices().name(path[i]) + " -> " +
                                 d.vertices().name(path[i + 1]));
        if (linkage && !d.is_exit(path.back()))
            throw InputError("linkage path ends at non-exit '" + d.vertices().name(path.back()) + "'");
    }
}

bool is_alt_walk(const Dimaze& d, const PathSystem& q, const AltWalk& w, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (w.verts.empty()) return fail("empty walk");
    if (w.edges.size() + 1 != w.verts.size()) return fail("edge/vertex count mismatch");
    auto qe = q.edge_set();
    auto qv = q.vertex_set();
    std::set<Edge> seen;
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
        auto [a, b] = w.edges[i];
        if (!d.has_edge(a, b)) return fail("walk uses a non-edge");
        if (!seen.insert({a, b}).second) return fail("walk repeats an edge");
        bool backward;
        if (a == w.verts[i] && b == w.verts[i + 1])
            backward = false;
        else if (a == w.verts[i + 1] && b == w.verts[i])
            backward = true;
        else
            return fail("edge does not connect consecutive walk vertices");
        if (backward != (qe.count({a, b}) > 0)) return fail("(W1) violated at position " + std::to_string(i));
    }
    std::map<int, int> count;
    for (int v : w.verts) ++count[v];
    for (auto [v, c] : count)
        if (c > 1 && !qv.count(v)) return fail("(W2) violated at '" + d.vertices().name(v) + "'");
    // the final vertex is exempt from (W3): a walk may stop on Q
    for (std::size_t i = 0; i + 1 < w.verts.size(); ++i) {
        if (!qv.count(w.verts[i]) || w.edges.empty()) continue;
        std::size_t lo = i == 0 ? 0 : i - 1;
        std::size_t hi = std::min(i, w.edges.size() - 1);
        bool ok = false;
        for (std::size_t j = lo; j <= hi; ++j)
            if (qe.count(w.edges[j])) ok = true;
        if (!ok) return fail("(W3) violated at position " + std::to_string(i));
    }
    return true;
}

bool is_pq_walk(const Dimaze& d, const PathSystem& p, const PathSystem& q, const AltWalk& w,
                std::string* why) {
    if (!is_alt_walk(d, q, w, why)) return false;
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    auto pe = p.edge_set();
    auto qe = q.edge_set();
    auto pv = p.vertex_set();
    for (const auto& e : w.edges) {
        bool in_p = pe.count(e) > 0, in_q = qe.count(e) > 0;
        if (in_p == in_q) return fail("walk edge outside E(P) symmetric difference E(Q)");
    }
    // (W4): interior P-vertices meet a P-edge
    for (std::size_t i = 0; i + 1 < w.verts.size(); ++i) {
        if (i == 0 || !pv.count(w.verts[i])) continue;
        if (!pe.count(w.edges[i - 1]) && !pe.count(w.edges[i])) return fail("(W4) violated");
    }
    return true;
}

bool is_separator(const Dimaze& d, const std::vector<int>& x, const std::vector<int>& sep) {
    std::vector<char> blocked(d.size(), 0), seen(d.size(), 0);
    for (int v : sep) blocked[v] = 1;
    std::deque<int> queue;
    for (int v : x)
        if (!blocked[v] && !seen[v]) {
            seen[v] = 1;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (d.is_exit(v)) return false;
        for (int u : d.out(v))
            if (!blocked[u] && !seen[u]) {
                seen[u] = 1;
                queue.push_back(u);
            }
    }
    return true;
}

namespace {

struct WalkState {
    int vertex;
    bool need_q;  // next edge must be a backward Q-edge
};

}  // namespace

std::variant<AltWalk, Separator> find_alt_walk(const Dimaze& d, const PathSystem& q,
                                               const std::vector<int>& x) {
    validate_path_system(d, q, /*linkage=*/true);
    std::set<int> q_ini = to_set(q.ini());
    std::set<int> q_ter = to_set(q.ter());
    for (int v : q_ini)
        if (std::find(x.begin(), x.end(), v) == x.end())
            throw InputError("Ini(Q) not contained in X");
    auto qv = q.vertex_set();
    // q_succ[v]/q_pred[v]: neighbours of v along its Q-path, -1 at the ends
    std::vector<int> q_succ(d.size(), -1), q_pred(d.size(), -1);
    for (const auto& path : q.paths)
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            q_succ[path[i]] = path[i + 1];
            q_pred[path[i + 1]] = path[i];
        }

    int states = d.size() * 2;
    std::vector<char> seen(states, 0);
    // parent state and connecting edge, for walk reconstruction
    std::vector<int> par(states, -1);
    std::vector<Edge> par_edge(states);
    auto id = [](int v, bool need_q) { return v * 2 + (need_q ? 1 : 0); };

    std::vector<int> starts(x.begin(), x.end());
    std::sort(starts.begin(), starts.end());
    std::deque<int> queue;
    int accept = -1;
    for (int v : starts) {
        if (q_ini.count(v)) continue;
        if (d.is_exit(v) && !q_ter.count(v)) {
            AltWalk w;
            w.verts = {v};
            return w;
        }
        int s = id(v, qv.count(v) > 0);
        if (!seen[s]) {
            seen[s] = 1;
            queue.push_back(s);
        }
    }

    while (!queue.empty() && accept < 0) {
        int s = queue.front();
        queue.pop_front();
        int v = s / 2;
        bool need_q = s % 2;
        std::vector<std::pair<int, Edge>> next;
        if (q_pred[v] >= 0) next.push_back({id(q_pred[v], false), {q_pred[v], v}});
        if (!need_q) {
            for (int u : d.out(v)) {
                if (q_succ[v] == u) continue;  // forward Q-edge, forbidden by (W1)
                next.push_back({id(u, qv.count(u) > 0), {v, u}});
            }
        }
        std::sort(next.begin(), next.end());
        for (auto [t, e] : next) {
            if (seen[t]) continue;
            seen[t] = 1;
            par[t] = s;
            par_edge[t] = e;
            int u = t / 2;
            if (d.is_exit(u) && !q_ter.count(u)) {
                accept = t;
                break;
            }
            queue.push_back(t);
        }
    }

    if (accept >= 0) {
        AltWalk w;
        for (int s = accept; s >= 0; s = par[s]) {
            w.verts.push_back(s / 2);
            if (par[s] >= 0) w.edges.push_back(par_edge[s]);
        }
        std::reverse(w.verts.begin(), w.verts.end());
        std::reverse(w.edges.begin(), w.edges.end());
        std::string why;
        if (!is_alt_walk(d, q, w, &why)) throw InternalError("generated walk invalid: " + why);
        return w;
    }

    Separator sep;
    auto reached = [&](int v) { return seen[id(v, false)] || seen[id(v, true)]; };
    for (const auto& path : q.paths) {
        // Ini(Q) lies in X and counts as reached, so the fallback is the
        // path's first vertex
        int pick = path.front();
        for (auto it = path.rbegin(); it != path.rend(); ++it)
            if (reached(*it)) {
                pick = *it;
                break;
            }
        sep.vertices.push_back(pick);
    }
    return sep;
}

PathSystem augment(const Dimaze& d, const PathSystem& q, const AltWalk& w) {
    std::string why;
    if (!is_alt_walk(d, q, w, &why)) throw InputError("not a Q-alternating walk: " + why);
    std::set<int> q_ini = to_set(q.ini());
    std::set<int> q_ter = to_set(q.ter());
    if (q_ini.count(w.start())) throw InputError("walk starts inside Ini(Q)");
    if (!d.is_exit(w.end()) || q_ter.count(w.end()))
        throw InputError("walk does not end in an unused exit");

    std::set<Edge> sym = q.edge_set();
    for (const auto& e : w.edges) {
        auto it = sym.find(e);
        if (it != sym.end())
            sym.erase(it);
        else
            sym.insert(e);
    }
    std::map<int, int> succ;
    for (const auto& [a, b] : sym) {
        if (succ.count(a)) throw InternalError("symmetric difference has branching vertex");
        succ[a] = b;
    }
    std::vector<int> ini(q_ini.begin(), q_ini.end());
    ini.push_back(w.start());
    std::sort(ini.begin(), ini.end());
    PathSystem result;
    std::size_t used = 0;
    for (int v : ini) {
        std::vector<int> path = {v};
        for (int cur = v; succ.count(cur);) {
            cur = succ[cur];
            path.push_back(cur);
            ++used;
            if (path.size() > sym.size() + 1) throw InternalError("cycle in symmetric difference");
        }
        result.paths.push_back(path);
    }
    if (used != sym.size()) throw InternalError("symmetric difference left unused edges");
    validate_path_system(d, result, /*linkage=*/true);
    return result;
}

std::variant<PathSystem, Separator> link(const Dimaze& d, const std::vector<int>& i) {
    std::set<int> want(i.begin(), i.end());
    PathSystem q;
    while (q.paths.size() < want.size()) {
        auto res = find_alt_walk(d, q, std::vector<int>(want.begin(), want.end()));
        if (auto* sep = std::get_if<Separator>(&res)) {
            if (!is_separator(d, std::vector<int>(want.begin(), want.end()), sep->vertices))
                throw InternalError("separator extraction failed verification");
            return *sep;
        }
        q = augment(d, q, std::get<AltWalk>(res));
    }
    return q;
}

IndependenceOracle ml_oracle(const Dimaze& d) { return ml_oracle(d, d.vertices().names()); }

IndependenceOracle ml_oracle(const Dimaze& d, const std::vector<std::string>& ground_names) {
    GroundSet ground(ground_names);
    std::vector<int> to_vertex;
    for (const auto& n : ground_names) to_vertex.push_back(d.vertices().index(n));
    Dimaze copy = d;
    return IndependenceOracle(ground, [copy, to_vertex](Mask s) {
        std::vector<int> set;
        for (std::size_t i = 0; i < to_vertex.size(); ++i)
            if (s & bit(static_cast<int>(i))) set.push_back(to_vertex[i]);
        return std::holds_alternative<PathSystem>(link(copy, set));
    });
}

bool is_base_by_onto(const Dimaze& d, const std::vector<int>& i) {
    if (static_cast<int>(i.size()) != static_cast<int>(d.exits().size())) return false;
    return std::holds_alternative<PathSystem>(link(d, i));
}

}  // namespace gammoidlab
