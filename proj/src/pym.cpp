#include "gammoidlab/pym.hpp"

#include <algorithm>
#include <map>

namespace gammoidlab {

namespace {

// position of v on path, -1 if absent
int pos_on(const std::vector<int>& path, int v) {
    auto it = std::find(path.begin(), path.end(), v);
    return it == path.end() ? -1 : static_cast<int>(it - path.begin());
}

}  // namespace

PymTrace pym_linkage(const Dimaze& d, const PathSystem& p, const PathSystem& q) {
    validate_path_system(d, p, /*linkage=*/true);
    validate_path_system(d, q, /*linkage=*/true);
    std::set<int> p_ini = to_set(p.ini());
    for (int x : q.ini())
        if (!p_ini.count(x)) throw InputError("Ini(Q) must be contained in Ini(P)");

    PymTrace tr;
    tr.d = d;
    tr.p = p;
    tr.q = q;
    tr.sources = p.ini();
    tr.targets = q.ter();
    std::set<int> t_set(tr.targets.begin(), tr.targets.end());
    int nx = static_cast<int>(p.paths.size());
    int ny = static_cast<int>(q.paths.size());

    // current linkage Q^i, starting from Q^0 = Q
    PathSystem cur = q;
    std::vector<int> f(nx);
    for (int x = 0; x < nx; ++x) f[x] = p.paths[x].front();
    tr.f.push_back(f);
    tr.t.push_back(std::vector<int>());  // t^0 unused placeholder

    int rounds = 0;
    while (true) {
        if (++rounds > d.size() + 5) throw InternalError("Pym iteration failed to stabilize");
        auto cur_v = cur.vertex_set();
        std::vector<int> nf(nx);
        for (int x = 0; x < nx; ++x) {
            const auto& px = p.paths[x];
            int j = pos_on(px, f[x]);
            while (j + 1 < static_cast<int>(px.size()) && !cur_v.count(px[j])) ++j;
            nf[x] = px[j];
        }
        std::set<int> f_set(nf.begin(), nf.end());
        std::vector<int> nt(ny);
        for (int y = 0; y < ny; ++y) {
            const auto& qy = q.paths[y];
            nt[y] = qy.front();
            for (auto it = qy.rbegin(); it != qy.rend(); ++it)
                if (f_set.count(*it)) {
                    nt[y] = *it;
                    break;
                }
        }
        PathSystem next;
        for (int x = 0; x < nx; ++x) {
            const auto& px = p.paths[x];
            int fi = pos_on(px, nf[x]);
            bool placed = false;
            for (int y = 0; y < ny && !placed; ++y) {
                if (nt[y] != nf[x]) continue;
                const auto& qy = q.paths[y];
                std::vector<int> path(px.begin(), px.begin() + fi + 1);
                int qi = pos_on(qy, nf[x]);
                path.insert(path.end(), qy.begin() + qi + 1, qy.end());
                next.paths.push_back(path);
                placed = true;
            }
            if (!placed && d.is_exit(nf[x]) && !t_set.count(nf[x]))
                next.paths.push_back(px);
        }
        // f alone can look stable while the linkage still changes (notably on
        // the very first round, which compares against the input Q)
        bool stable = (nf == f) && (next.paths == cur.paths);
        f = nf;
        tr.f.push_back(nf);
        tr.t.push_back(nt);
        cur = next;
        if (stable) {
            tr.stable_iter = rounds - 1;
            break;
        }
    }

    validate_path_system(d, cur, /*linkage=*/true);
    std::set<int> ini = to_set(cur.ini());
    if (ini != std::set<int>(tr.sources.begin(), tr.sources.end()))
        throw InternalError("Pym limit linkage does not start at Ini(P)");
    tr.q_inf = cur;
    tr.y_inf = cur.ter();
    return tr;
}

AltWalk back_walk(const PymTrace& trace, int v) {
    const auto& f = trace.f;
    int nx = static_cast<int>(trace.p.paths.size());
    int found_x = -1, found_j = -1;
    for (std::size_t i = 0; i + 1 < f.size() && found_x < 0; ++i)
        for (int x = 0; x < nx; ++x)
            if (f[i + 1][x] == v && f[i][x] != v) {
                found_x = x;
                found_j = static_cast<int>(i);
                break;
            }
    if (found_x < 0)
        throw InputError("vertex is not a freshly advanced f-value of the trace");

    int j = found_j;
    std::vector<int> chain(j + 2, -1);  // chain[i] = x_i
    chain[j + 1] = found_x;
    for (int i = j; i >= 1; --i) {
        int anchor = f[i][chain[i + 1]];
        int qi = trace.q.path_of(anchor);
        if (qi < 0) throw InternalError("back-walk anchor lies off Q");
        const auto& qy = trace.q.paths[qi];
        int pos = pos_on(qy, anchor);
        int next_x = -1;
        for (int k = pos + 1; k < static_cast<int>(qy.size()) && next_x < 0; ++k)
            for (int x = 0; x < nx; ++x)
                if (f[i][x] == qy[k]) {
                    next_x = x;
                    break;
                }
        if (next_x < 0) throw InternalError("back-walk found no earlier f on Q");
        chain[i] = next_x;
    }

    AltWalk w;
    w.verts.push_back(trace.p.paths[chain[1]].front());
    auto push_forward = [&](const std::vector<int>& path, int from, int to) {
        int a = pos_on(path, from), b = pos_on(path, to);
        for (int k = a; k < b; ++k) {
            w.edges.push_back({path[k], path[k + 1]});
            w.verts.push_back(path[k + 1]);
        }
    };
    auto push_backward = [&](const std::vector<int>& path, int from, int to) {
        int a = pos_on(path, from), b = pos_on(path, to);
        for (int k = a; k > b; --k) {
            w.edges.push_back({path[k - 1], path[k]});
            w.verts.push_back(path[k - 1]);
        }
    };
    for (int i = 1; i <= j + 1; ++i) {
        int x = chain[i];
        push_forward(trace.p.paths[x], f[i - 1][x], f[i][x]);
        if (i <= j) {
            int anchor = f[i][chain[i + 1]];
            int qi = trace.q.path_of(f[i][x]);
            push_backward(trace.q.paths[qi], f[i][x], anchor);
        }
    }
    if (w.end() != v) throw InternalError("back-walk does not end at the requested vertex");
    return w;
}

}  // namespace gammoidlab
