#include "gammoidlab/shift.hpp"

#include <algorithm>
#include <map>

namespace gammoidlab {

ShiftedDimaze shift(const Dimaze& d, const PathSystem& q) {
    validate_path_system(d, q, /*linkage=*/true);
    ShiftedDimaze s;
    s.d0 = d;
    s.q = q;
    s.fwd.assign(d.size(), -1);
    s.bwd.assign(d.size(), -1);
    auto qv = q.vertex_set();
    for (int v = 0; v < d.size(); ++v)
        if (!qv.count(v)) s.fwd[v] = s.bwd[v] = v;
    for (const auto& path : q.paths)
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            s.fwd[path[i]] = path[i + 1];
            s.bwd[path[i + 1]] = path[i];
        }
    auto qe = q.edge_set();
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [v, u] : d.edges()) {
        int a = qe.count({v, u}) ? u : s.fwd[v];
        int b = qe.count({v, u}) ? v : u;
        edges.push_back({d.vertices().name(a), d.vertices().name(b)});
    }
    std::set<int> ter = to_set(q.ter());
    std::vector<std::string> exits;
    for (int v : q.ini()) exits.push_back(d.vertices().name(v));
    for (int v = 0; v < d.size(); ++v)
        if (d.is_exit(v) && !ter.count(v)) exits.push_back(d.vertices().name(v));
    s.d1 = Dimaze(d.vertices().names(), edges, exits);
    return s;
}

std::vector<int> walk_to_path(const ShiftedDimaze& s, const AltWalk& w) {
    std::string why;
    if (!is_alt_walk(s.d0, s.q, w, &why)) throw InputError("not a Q-alternating walk: " + why);
    if (!s.d1.is_exit(w.end())) throw InputError("walk does not end in the shifted exits");
    auto qe = s.q.edge_set();
    auto qv = s.q.vertex_set();
    std::vector<int> path;
    for (std::size_t i = 0; i + 1 < w.verts.size(); ++i) {
        if (qv.count(w.verts[i]) && !qe.count(w.edges[i])) continue;
        path.push_back(w.verts[i]);
    }
    path.push_back(w.verts.back());
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!s.d1.has_edge(path[i], path[i + 1]))
            throw InternalError("forward walk image is not a path of the shifted dimaze");
    std::set<int> distinct(path.begin(), path.end());
    if (distinct.size() != path.size()) throw InternalError("forward walk image repeats a vertex");
    return path;
}

AltWalk path_to_walk(const ShiftedDimaze& s, const std::vector<int>& p) {
    if (p.empty()) throw InputError("empty path");
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!s.d1.has_edge(p[i], p[i + 1])) throw InputError("not a path of the shifted dimaze");
    if (!s.d1.is_exit(p.back())) throw InputError("path does not end in the shifted exits");
    auto qv = s.q.vertex_set();
    AltWalk w;
    w.verts.push_back(p[0]);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        int v = p[i], u = p[i + 1];
        if (!qv.count(v)) {
            w.edges.push_back({v, u});
        } else if (s.d0.has_edge(u, v) && s.q.edge_set().count({u, v})) {
            w.edges.push_back({u, v});
        } else {
            int back = s.bwd[v];
            if (back < 0) throw InternalError("no preimage for shifted edge");
            w.edges.push_back({back, v});
            w.verts.push_back(back);
            w.edges.push_back({back, u});
        }
        w.verts.push_back(u);
    }
    std::string why;
    if (!is_alt_walk(s.d0, s.q, w, &why)) throw InternalError("backward path image invalid: " + why);
    return w;
}

PathSystem symdiff_paths(const Dimaze& d, const PathSystem& q, const std::vector<AltWalk>& ws) {
    validate_path_system(d, q, /*linkage=*/true);
    std::set<Edge> sym = q.edge_set();
    std::set<Edge> walk_edges;
    for (const auto& w : ws) {
        std::string why;
        if (!is_alt_walk(d, q, w, &why)) throw InputError("not a Q-alternating walk: " + why);
        for (const auto& e : w.edges)
            if (!walk_edges.insert(e).second) throw InputError("walks are not edge-disjoint");
    }
    for (const auto& e : walk_edges) {
        auto it = sym.find(e);
        if (it != sym.end())
            sym.erase(it);
        else
            sym.insert(e);
    }
    std::set<int> walk_ter;
    for (const auto& w : ws) walk_ter.insert(w.end());
    std::set<int> x;
    for (const auto& w : ws) x.insert(w.start());
    for (int v : q.ini())
        if (!walk_ter.count(v)) x.insert(v);
    std::map<int, int> succ;
    for (auto [a, b] : sym) {
        if (succ.count(a)) throw InputError("symmetric difference has a branching vertex");
        succ[a] = b;
    }
    PathSystem out;
    for (int v : x) {
        std::vector<int> path = {v};
        for (int cur = v; succ.count(cur);) {
            cur = succ[cur];
            path.push_back(cur);
            if (path.size() > sym.size() + 1) throw InternalError("cycle in symmetric difference");
        }
        out.paths.push_back(path);
    }
    validate_path_system(d, out, /*linkage=*/false);
    return out;
}

std::vector<AltWalk> max_pq_walks(const Dimaze& d, const PathSystem& p, const PathSystem& q) {
    validate_path_system(d, p, /*linkage=*/false);
    validate_path_system(d, q, /*linkage=*/false);
    auto pe = p.edge_set();
    auto qe = q.edge_set();
    auto pv = p.vertex_set();
    auto qv = q.vertex_set();
    std::set<int> q_ini = to_set(q.ini());
    std::set<int> q_ter = to_set(q.ter());
    std::vector<int> p_succ(d.size(), -1), q_pred(d.size(), -1);
    for (const auto& path : p.paths)
        for (std::size_t i = 0; i + 1 < path.size(); ++i) p_succ[path[i]] = path[i + 1];
    for (const auto& path : q.paths)
        for (std::size_t i = 0; i + 1 < path.size(); ++i) q_pred[path[i + 1]] = path[i];

    std::set<Edge> used;
    std::vector<AltWalk> out;
    for (int start : p.ini()) {
        AltWalk w;
        w.verts.push_back(start);
        bool arrived_backward = false;
        while (true) {
            int v = w.verts.back();
            bool at_start = w.edges.empty();
            // Each move is forced: after a backward Q-edge (or at a non-Q
            // start) follow P forward; after a P-edge (or at a Q-vertex
            // start) step backward along Q; stop in (Ter(P)\Ter(Q)) ∪ Ini(Q).
            bool want_q;
            if (at_start)
                want_q = qv.count(v) > 0;
            else if (arrived_backward)
                want_q = !pv.count(v);
            else
                want_q = qv.count(v) > 0;
            if (want_q) {
                if (q_ini.count(v)) break;
                int back = q_pred[v];
                if (back < 0) throw InternalError("maximal walk stuck off Q");
                Edge e = {back, v};
                if (pe.count(e)) throw InternalError("maximal walk hit a shared edge");
                if (!used.insert(e).second) throw InternalError("maximal walks reuse an edge");
                w.edges.push_back(e);
                w.verts.push_back(back);
                arrived_backward = true;
            } else {
                int next = p_succ[v];
                if (next < 0) break;  // Ter(P), and not in Ter(Q) by the arrival rules
                Edge e = {v, next};
                if (qe.count(e)) throw InternalError("maximal walk hit a shared edge");
                if (!used.insert(e).second) throw InternalError("maximal walks reuse an edge");
                w.edges.push_back(e);
                w.verts.push_back(next);
                arrived_backward = false;
            }
        }
        int end = w.end();
        bool ok_end = q_ini.count(end) || (p_succ[end] < 0 && pv.count(end) && !q_ter.count(end));
        if (!ok_end) throw InternalError("maximal walk ended outside (Ter(P)\\Ter(Q)) ∪ Ini(Q)");
        std::string why;
        if (!is_pq_walk(d, p, q, w, &why)) throw InternalError("maximal walk invalid: " + why);
        out.push_back(w);
    }
    return out;
}

namespace {

bool linkable_set(const Dimaze& d, const std::set<int>& s) {
    return std::holds_alternative<PathSystem>(link(d, std::vector<int>(s.begin(), s.end())));
}

}  // namespace

MinorPresentation minor_presentation(const Dimaze& d, const std::vector<int>& s_in,
                                     const std::vector<int>& r_in) {
    std::set<int> s(s_in.begin(), s_in.end()), r(r_in.begin(), r_in.end());
    for (int v : s)
        if (r.count(v)) throw InputError("contract and delete sets intersect");
    if (!linkable_set(d, s)) throw InputError("contracted set is dependent");
    // coindependence of R: the rank away from R must stay |B0|
    std::set<int> base_off_r;
    for (int v = 0; v < d.size(); ++v) {
        if (r.count(v)) continue;
        base_off_r.insert(v);
        if (!linkable_set(d, base_off_r)) base_off_r.erase(v);
    }
    if (base_off_r.size() != d.exits().size()) throw InputError("deleted set is codependent");

    // extend S to a base B1 with S ⊆ B1 ⊆ S ∪ B0
    std::set<int> b1 = s;
    for (int b : d.exits()) {
        if (b1.count(b)) continue;
        b1.insert(b);
        if (!linkable_set(d, b1)) b1.erase(b);
    }
    if (b1.size() != d.exits().size()) throw InternalError("base extension failed");

    auto linked = link(d, std::vector<int>(b1.begin(), b1.end()));
    PathSystem full = std::get<PathSystem>(linked);
    PathSystem q;
    for (const auto& path : full.paths)
        if (!d.is_exit(path.front())) q.paths.push_back(path);

    ShiftedDimaze sh = shift(d, q);
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> exits;
    for (int v = 0; v < d.size(); ++v)
        if (!s.count(v)) names.push_back(d.vertices().name(v));
    for (auto [a, b] : sh.d1.edges())
        if (!s.count(a) && !s.count(b))
            edges.push_back({d.vertices().name(a), d.vertices().name(b)});
    for (int v : sh.d1.exits())
        if (!s.count(v)) exits.push_back(d.vertices().name(v));
    MinorPresentation mp;
    mp.d = Dimaze(names, edges, exits);
    for (int v = 0; v < d.size(); ++v)
        if (!s.count(v) && !r.count(v)) mp.ground.push_back(d.vertices().name(v));
    return mp;
}

}  // namespace gammoidlab
