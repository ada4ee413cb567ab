#include "gammoidlab/lazy.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gammoidlab/duality.hpp"

namespace gammoidlab {

namespace {

std::string xid(int j) { return "x" + std::to_string(j); }
std::string yid(int j) { return "y" + std::to_string(j); }

std::vector<std::string> apply_width(std::vector<std::string> list, int width, bool& cut) {
    if (static_cast<int>(list.size()) > width) {
        list.resize(width);
        cut = true;
    }
    return list;
}

int xy_index(const std::string& v) { return std::stoi(v.substr(1)); }

struct RayGen : DimazeGenerator {
    // kind: RA (alternating), RI (incoming), RO (outgoing)
    // spikes: CA = RA with odd exits, CI = RI + (x_i, y_i), CO = RO + (x_i, y_i)
    std::string id;
    RayGen(std::string n) : id(std::move(n)) {}
    std::string name() const override { return id; }
    bool spiky() const { return id == "CI" || id == "CO"; }
    std::vector<std::string> level(int depth, int) const override {
        std::vector<std::string> l = {xid(depth)};
        if (spiky() && depth >= 2) l.push_back(yid(depth));
        return l;
    }
    std::vector<std::string> out_neighbours(const std::string& v, int width,
                                            bool& cut) const override {
        cut = false;
        if (v[0] == 'y') return {};
        int j = xy_index(v);
        std::vector<std::string> out;
        if (id == "RA" || id == "CA") {
            if (j % 2 == 0) out = {xid(j - 1), xid(j + 1)};
        } else if (id == "RI" || id == "CI") {
            if (j > 1) out = {xid(j - 1)};
        } else {
            out = {xid(j + 1)};
        }
        if (spiky() && j >= 2 && v[0] == 'x') out.push_back(yid(j));
        return apply_width(out, width, cut);
    }
    bool is_exit(const std::string& v) const override {
        if (v[0] == 'y') return spiky();
        int j = xy_index(v);
        if (id == "CA") return j % 2 == 1;
        if (id == "RI" || id == "CI") return j == 1;
        return false;
    }
};

struct FanGen : DimazeGenerator {
    std::string name() const override { return "FAN"; }
    std::vector<std::string> level(int depth, int width) const override {
        if (depth == 1) return {"v"};
        if (depth != 2) return {};
        std::vector<std::string> l;
        for (int i = 1; i <= width; ++i) l.push_back("v" + std::to_string(i));
        return l;
    }
    std::vector<std::string> out_neighbours(const std::string& v, int width,
                                            bool& cut) const override {
        if (v != "v") {
            cut = false;
            return {};
        }
        cut = true;  // infinitely many leaves
        std::vector<std::string> out;
        for (int i = 1; i <= width; ++i) out.push_back("v" + std::to_string(i));
        return out;
    }
    bool is_exit(const std::string& v) const override { return v != "v"; }
};

struct TreeGen : DimazeGenerator {
    std::string name() const override { return "TREE"; }
    static int tree_depth(const std::string& v) {
        return 1 + static_cast<int>(std::count(v.begin(), v.end(), '.'));
    }
    std::vector<std::string> level(int depth, int width) const override {
        std::vector<std::string> cur = {"r"};
        for (int d = 2; d <= depth; ++d) {
            std::vector<std::string> next;
            for (const auto& v : cur)
                for (int i = 1; i <= width; ++i) next.push_back(v + "." + std::to_string(i));
            cur = next;
        }
        return cur;
    }
    std::vector<std::string> out_neighbours(const std::string& v, int width,
                                            bool& cut) const override {
        if (tree_depth(v) % 2 == 1) {
            cut = false;
            return {};
        }
        cut = true;  // infinitely many children
        std::vector<std::string> out = {v.substr(0, v.rfind('.'))};
        for (int i = 1; i <= width; ++i) out.push_back(v + "." + std::to_string(i));
        return out;
    }
    bool is_exit(const std::string& v) const override { return tree_depth(v) % 2 == 1; }
};

}  // namespace

std::unique_ptr<DimazeGenerator> make_generator(const std::string& name) {
    if (name == "RA" || name == "RI" || name == "RO" || name == "CA" || name == "CI" ||
        name == "CO")
        return std::make_unique<RayGen>(name);
    if (name == "FAN") return std::make_unique<FanGen>();
    if (name == "TREE") return std::make_unique<TreeGen>();
    throw InputError("unknown generator '" + name + "'");
}

bool Truncation::has_frontier() const {
    return std::count(frontier.begin(), frontier.end(), 1) > 0;
}

std::vector<int> Truncation::frontier_vertices() const {
    std::vector<int> r;
    for (int v = 0; v < d.size(); ++v)
        if (frontier[v]) r.push_back(v);
    return r;
}

Truncation truncate(const DimazeGenerator& g, int depth, int width) {
    if (depth < 1 || width < 1) throw InputError("depth and width must be at least 1");
    std::vector<std::string> names;
    std::set<std::string> present;
    for (int d = 1; d <= depth; ++d)
        for (const auto& v : g.level(d, width))
            if (present.insert(v).second) names.push_back(v);
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> exits;
    Truncation t;
    t.depth = depth;
    t.width = width;
    t.generator = g.name();
    t.frontier.assign(names.size(), 0);
    for (std::size_t i = 0; i < names.size(); ++i) {
        bool cut = false;
        for (const auto& u : g.out_neighbours(names[i], width, cut)) {
            if (present.count(u))
                edges.push_back({names[i], u});
            else
                cut = true;
        }
        t.frontier[i] = cut;
        if (g.is_exit(names[i])) exits.push_back(names[i]);
    }
    t.d = Dimaze(names, edges, exits);
    return t;
}

Truncation as_truncation(const Dimaze& d) {
    Truncation t;
    t.d = d;
    t.frontier.assign(d.size(), 0);
    return t;
}

int tnd_left_degree(int j) {
    int deg = (j == 1 || j == 2) ? 2 : 0;  // the two special right vertices
    for (int i = std::max(2, (j + 1) / 2); 2 * i - 3 <= j; ++i)
        if (j <= 2 * i) ++deg;
    return deg;
}

Bimaze tnd_truncation(int n) {
    if (n < 3) throw InputError("need at least three right vertices");
    std::vector<std::string> left, right;
    for (int j = 1; j <= 2 * n; ++j) left.push_back("v" + std::to_string(j));
    for (int i = 1; i <= n; ++i) right.push_back("A" + std::to_string(i));
    std::set<std::pair<std::string, std::string>> edges;
    edges.insert({"v1", "A1"});
    edges.insert({"v2", "A1"});
    edges.insert({"v1", "A3"});
    edges.insert({"v2", "A3"});
    for (int i = 2; i <= n; ++i)
        for (int j = 2 * i - 3; j <= 2 * i; ++j)
            if (j >= 1) edges.insert({"v" + std::to_string(j), "A" + std::to_string(i)});
    BipartiteGraph g(left, right,
                     std::vector<std::pair<std::string, std::string>>(edges.begin(), edges.end()));
    std::vector<std::pair<std::string, std::string>> m0 = {{"v1", "A1"}};
    for (int i = 2; i <= n; ++i) m0.push_back({"v" + std::to_string(2 * i), "A" + std::to_string(i)});
    Bimaze b(g, m0);
    // the next quadruple would attach to the last two left vertices
    b.frontier_left[g.left().index("v" + std::to_string(2 * n - 1))] = 1;
    b.frontier_left[g.left().index("v" + std::to_string(2 * n))] = 1;
    return b;
}

Bimaze converted_truncation(const Truncation& t) {
    ConvertedBimaze cb = to_bimaze(t.d);
    for (int v = 0; v < t.d.size(); ++v) {
        if (!t.frontier[v]) continue;
        cb.b.frontier_left[v] = 1;
        const std::string& star = cb.naming.star_of[v];
        if (!star.empty()) cb.b.frontier_right[cb.b.g.right().index(star)] = 1;
    }
    return cb.b;
}

namespace {

Dimaze sub_dimaze(const Dimaze& d, const std::set<int>& drop) {
    std::vector<std::string> names, exits;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int v = 0; v < d.size(); ++v) {
        if (drop.count(v)) continue;
        names.push_back(d.vertices().name(v));
        if (d.is_exit(v)) exits.push_back(d.vertices().name(v));
    }
    for (auto [a, b] : d.edges())
        if (!drop.count(a) && !drop.count(b))
            edges.push_back({d.vertices().name(a), d.vertices().name(b)});
    return Dimaze(names, edges, exits);
}

bool linkable_in(const Dimaze& d, const std::vector<int>& set) {
    return std::holds_alternative<PathSystem>(link(d, set));
}

// Up to `need` internally disjoint nontrivial paths from c to exits, all
// avoiding `banned`.
std::vector<std::vector<int>> fan_branches(const Dimaze& d, int c, int need,
                                           const std::set<int>& banned) {
    std::set<int> drop(banned);
    drop.insert(c);
    Dimaze aux = sub_dimaze(d, drop);
    std::vector<int> chosen;
    for (int u : d.out(c)) {
        if (drop.count(u)) continue;
        chosen.push_back(aux.vertices().index(d.vertices().name(u)));
        if (!linkable_in(aux, chosen))
            chosen.pop_back();
        else if (static_cast<int>(chosen.size()) == need)
            break;
    }
    std::vector<std::vector<int>> out;
    if (static_cast<int>(chosen.size()) < need) return out;
    auto paths = std::get<PathSystem>(link(aux, chosen));
    for (const auto& p : paths.paths) {
        std::vector<int> branch = {c};
        for (int v : p) branch.push_back(d.vertices().index(aux.vertices().name(v)));
        out.push_back(branch);
    }
    return out;
}

// Up to `need` disjoint spikes from distinct spine vertices to exits, leaving
// the spine immediately and avoiding `banned`.
std::vector<std::vector<int>> spine_spikes(const Dimaze& d, const std::vector<int>& spine, int need,
                                           const std::set<int>& banned) {
    std::set<int> drop(banned);
    for (int v : spine) drop.insert(v);
    std::vector<std::string> names, exits;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int v = 0; v < d.size(); ++v) {
        if (drop.count(v)) continue;
        names.push_back(d.vertices().name(v));
        if (d.is_exit(v)) exits.push_back(d.vertices().name(v));
    }
    std::string prefix = "#s";
    auto clashes = [&]() {
        for (const auto& n : names)
            if (n.rfind(prefix, 0) == 0) return true;
        return false;
    };
    while (clashes()) prefix = "#" + prefix;
    std::vector<std::string> sigma;
    for (std::size_t i = 0; i < spine.size(); ++i) {
        sigma.push_back(prefix + std::to_string(i));
        names.push_back(sigma.back());
        for (int u : d.out(spine[i]))
            if (!drop.count(u)) edges.push_back({sigma.back(), d.vertices().name(u)});
    }
    for (auto [a, b] : d.edges())
        if (!drop.count(a) && !drop.count(b))
            edges.push_back({d.vertices().name(a), d.vertices().name(b)});
    Dimaze aux(names, edges, exits);
    std::vector<int> chosen;
    for (const auto& s : sigma) {
        chosen.push_back(aux.vertices().index(s));
        if (!linkable_in(aux, chosen))
            chosen.pop_back();
        else if (static_cast<int>(chosen.size()) == need)
            break;
    }
    std::vector<std::vector<int>> out;
    if (static_cast<int>(chosen.size()) < need) return out;
    auto paths = std::get<PathSystem>(link(aux, chosen));
    for (const auto& p : paths.paths) {
        const std::string& first = aux.vertices().name(p.front());
        int attach = spine[std::stoul(first.substr(prefix.size()))];
        std::vector<int> spike = {attach};
        for (std::size_t i = 1; i < p.size(); ++i)
            spike.push_back(d.vertices().index(aux.vertices().name(p[i])));
        out.push_back(spike);
    }
    return out;
}

}  // namespace

std::optional<PatternCertificate> detect_fan(const Truncation& t, int k) {
    if (k < 1) throw InputError("k must be at least 1");
    for (int c = 0; c < t.d.size(); ++c) {
        if (t.d.out(c).empty()) continue;
        auto branches = fan_branches(t.d, c, k, {});
        if (!branches.empty()) {
            PatternCertificate cert;
            cert.kind = PatternCertificate::Kind::Fan;
            cert.centre = c;
            cert.spikes = branches;
            return cert;
        }
    }
    return std::nullopt;
}

namespace {

std::optional<PatternCertificate> detect_directed_comb(const Truncation& t, bool incoming, int k) {
    const Dimaze& d = t.d;
    std::vector<int> spine;
    std::vector<char> on(d.size(), 0);
    std::optional<PatternCertificate> found;
    std::function<bool(int)> dfs = [&](int v) -> bool {
        spine.push_back(v);
        on[v] = 1;
        bool end_ok = !incoming || d.is_exit(v);
        if (end_ok && static_cast<int>(spine.size()) >= k) {
            auto spikes = spine_spikes(d, spine, k, {});
            if (!spikes.empty()) {
                PatternCertificate cert;
                cert.kind = incoming ? PatternCertificate::Kind::IncomingComb
                                     : PatternCertificate::Kind::OutgoingComb;
                cert.spine = spine;
                cert.spikes = spikes;
                found = cert;
                return true;
            }
        }
        for (int u : d.out(v))
            if (!on[u] && dfs(u)) return true;
        spine.pop_back();
        on[v] = 0;
        return false;
    };
    for (int v = 0; v < d.size(); ++v)
        if (dfs(v)) return found;
    return std::nullopt;
}

std::optional<PatternCertificate> detect_alternating_comb(const Truncation& t, int k) {
    const Dimaze& d = t.d;
    int n = d.size();
    std::vector<char> used(n, 0);
    PatternCertificate cert;
    cert.kind = PatternCertificate::Kind::AlternatingComb;

    // all simple paths from `from` with fresh interior; endpoint either the
    // fixed used target, or any fresh vertex when target < 0
    std::function<bool(std::vector<int>&, int, const std::function<bool(const std::vector<int>&)>&)>
        enum_paths = [&](std::vector<int>& path, int target,
                         const std::function<bool(const std::vector<int>&)>& cont) -> bool {
        int v = path.back();
        if (target < 0 && path.size() > 1 && cont(path)) return true;
        for (int u : d.out(v)) {
            if (target >= 0 && u == target) {
                path.push_back(u);
                if (cont(path)) return true;
                path.pop_back();
                continue;
            }
            if (used[u] || std::find(path.begin(), path.end(), u) != path.end()) continue;
            path.push_back(u);
            if (enum_paths(path, target, cont)) return true;
            path.pop_back();
        }
        return false;
    };

    auto mark = [&](const std::vector<int>& vs, int from, int to, char flag) {
        for (int i = from; i <= to; ++i) used[vs[i]] = flag;
    };

    std::function<bool(int)> after_tooth;  // tooth i fully placed (merge + tail)

    // choose source u_i with A_i: u_i -> m_i, then B_i: u_i -> fresh m_{i+1},
    // then the tail of m_{i+1}
    auto place_source = [&](int i) -> bool {
        for (int u = 0; u < n; ++u) {
            if (used[u]) continue;
            used[u] = 1;
            std::vector<int> a = {u};
            bool ok = enum_paths(a, cert.merges[i - 1], [&](const std::vector<int>& ap) {
                mark(ap, 1, static_cast<int>(ap.size()) - 2, 1);
                cert.sources.push_back(u);
                cert.a_paths.push_back(ap);
                std::vector<int> b = {u};
                bool inner = enum_paths(b, -1, [&](const std::vector<int>& bp) {
                    int m_next = bp.back();
                    mark(bp, 1, static_cast<int>(bp.size()) - 1, 1);
                    cert.merges.push_back(m_next);
                    cert.b_paths.push_back(bp);
                    std::vector<int> tail = {m_next};
                    bool deeper;
                    if (d.is_exit(m_next)) {
                        cert.tails.push_back(tail);
                        deeper = after_tooth(i + 1);
                        if (!deeper) cert.tails.pop_back();
                    } else {
                        deeper = enum_paths(tail, -1, [&](const std::vector<int>& tp) {
                            if (!d.is_exit(tp.back())) return false;
                            mark(tp, 1, static_cast<int>(tp.size()) - 1, 1);
                            cert.tails.push_back(tp);
                            if (after_tooth(i + 1)) return true;
                            cert.tails.pop_back();
                            mark(tp, 1, static_cast<int>(tp.size()) - 1, 0);
                            return false;
                        });
                    }
                    if (deeper) return true;
                    cert.merges.pop_back();
                    cert.b_paths.pop_back();
                    mark(bp, 1, static_cast<int>(bp.size()) - 1, 0);
                    return false;
                });
                if (inner) return true;
                cert.sources.pop_back();
                cert.a_paths.pop_back();
                mark(ap, 1, static_cast<int>(ap.size()) - 2, 0);
                return false;
            });
            if (ok) return true;
            used[u] = 0;
        }
        return false;
    };

    after_tooth = [&](int i) -> bool {
        if (i == k) return true;
        return place_source(i);
    };

    for (int m1 = 0; m1 < n; ++m1) {
        used.assign(n, 0);
        used[m1] = 1;
        cert.merges = {m1};
        cert.sources.clear();
        cert.a_paths.clear();
        cert.b_paths.clear();
        cert.tails.clear();
        bool ok;
        if (d.is_exit(m1)) {
            cert.tails.push_back({m1});
            ok = after_tooth(1);
        } else {
            std::vector<int> tail = {m1};
            std::function<bool(std::vector<int>&, int,
                               const std::function<bool(const std::vector<int>&)>&)>& ep = enum_paths;
            ok = ep(tail, -1, [&](const std::vector<int>& tp) {
                if (!d.is_exit(tp.back())) return false;
                for (std::size_t j = 1; j < tp.size(); ++j) used[tp[j]] = 1;
                cert.tails.push_back(tp);
                if (after_tooth(1)) return true;
                cert.tails.pop_back();
                for (std::size_t j = 1; j < tp.size(); ++j) used[tp[j]] = 0;
                return false;
            });
        }
        if (ok) return cert;
    }
    return std::nullopt;
}

}  // namespace

std::optional<PatternCertificate> detect_comb(const Truncation& t, CombKind kind, int k) {
    if (k < 1) throw InputError("k must be at least 1");
    switch (kind) {
        case CombKind::Outgoing:
            return detect_directed_comb(t, false, k);
        case CombKind::Incoming:
            return detect_directed_comb(t, true, k);
        case CombKind::Alternating:
            return detect_alternating_comb(t, k);
    }
    throw InputError("unknown comb kind");
}

namespace {

bool simple_directed_path(const Dimaze& d, const std::vector<int>& p) {
    if (p.empty()) return false;
    std::set<int> seen(p.begin(), p.end());
    if (seen.size() != p.size()) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!d.has_edge(p[i], p[i + 1])) return false;
    return true;
}

}  // namespace

bool verify_certificate(const Truncation& t, const PatternCertificate& c, int k, std::string* why) {
    const Dimaze& d = t.d;
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    using Kind = PatternCertificate::Kind;
    if (c.kind == Kind::Fan) {
        if (static_cast<int>(c.spikes.size()) < k) return fail("fewer than k branches");
        std::set<int> seen;
        for (const auto& s : c.spikes) {
            if (s.size() < 2 || s.front() != c.centre) return fail("branch does not leave the centre");
            if (!simple_directed_path(d, s)) return fail("branch is not a path");
            if (!d.is_exit(s.back())) return fail("branch does not end in an exit");
            for (std::size_t i = 1; i < s.size(); ++i)
                if (!seen.insert(s[i]).second) return fail("branches overlap");
        }
        return true;
    }
    if (c.kind == Kind::OutgoingComb || c.kind == Kind::IncomingComb) {
        if (!simple_directed_path(d, c.spine)) return fail("spine is not a path");
        if (c.kind == Kind::IncomingComb && !d.is_exit(c.spine.back()))
            return fail("incoming spine does not end in an exit");
        if (static_cast<int>(c.spikes.size()) < k) return fail("fewer than k spikes");
        std::set<int> spine_set(c.spine.begin(), c.spine.end());
        std::set<int> attach, seen;
        for (const auto& s : c.spikes) {
            if (s.size() < 2 || !spine_set.count(s.front())) return fail("spike does not start on the spine");
            if (!attach.insert(s.front()).second) return fail("spikes share a spine vertex");
            if (!simple_directed_path(d, s)) return fail("spike is not a path");
            if (!d.is_exit(s.back())) return fail("spike does not end in an exit");
            for (std::size_t i = 1; i < s.size(); ++i) {
                if (spine_set.count(s[i])) return fail("spike re-enters the spine");
                if (!seen.insert(s[i]).second) return fail("spikes overlap");
            }
        }
        return true;
    }
    // alternating comb
    int m = static_cast<int>(c.merges.size());
    if (m < k) return fail("fewer than k teeth");
    if (static_cast<int>(c.sources.size()) != m - 1 ||
        static_cast<int>(c.a_paths.size()) != m - 1 ||
        static_cast<int>(c.b_paths.size()) != m - 1 || static_cast<int>(c.tails.size()) != m)
        return fail("piece counts do not match");
    std::map<int, int> mult;
    auto count_path = [&](const std::vector<int>& p) {
        for (int v : p) ++mult[v];
    };
    for (int i = 0; i < m - 1; ++i) {
        const auto& a = c.a_paths[i];
        const auto& b = c.b_paths[i];
        if (a.size() < 2 || a.front() != c.sources[i] || a.back() != c.merges[i])
            return fail("tooth path A mismatched");
        if (b.size() < 2 || b.front() != c.sources[i] || b.back() != c.merges[i + 1])
            return fail("tooth path B mismatched");
        if (!simple_directed_path(d, a) || !simple_directed_path(d, b))
            return fail("tooth path is not a path");
        count_path(a);
        count_path(b);
    }
    for (int i = 0; i < m; ++i) {
        const auto& tl = c.tails[i];
        if (tl.empty() || tl.front() != c.merges[i]) return fail("tail mismatched");
        if (!simple_directed_path(d, tl)) return fail("tail is not a path");
        if (!d.is_exit(tl.back())) return fail("tail does not end in an exit");
        count_path(tl);
    }
    for (auto [v, cnt] : mult) {
        int expect = 1;
        for (int i = 0; i < m; ++i)
            if (c.merges[i] == v) expect = 1 + (i > 0 ? 1 : 0) + (i < m - 1 ? 1 : 0);
        for (int i = 0; i < m - 1; ++i)
            if (c.sources[i] == v) expect = 2;
        if (cnt != expect) return fail("tooth pieces overlap");
    }
    return true;
}

TopLinkResult topologically_linkable(const Truncation& t, const std::vector<int>& i, int k) {
    if (k < 1) throw InputError("k must be at least 1");
    TopLinkResult res;
    auto direct = link(t.d, i);
    if (auto* ps = std::get_if<PathSystem>(&direct)) {
        res.status = TopLinkResult::Status::Yes;
        res.paths = *ps;
        return res;
    }

    // widen the targets: frontier vertices become reachable endpoints via
    // companion sinks; classification of the endpoints happens afterwards
    auto frontier = t.frontier_vertices();
    if (frontier.empty()) {
        res.status = TopLinkResult::Status::No;
        res.separator = std::get<Separator>(direct);
        return res;
    }
    std::string suffix = "@";
    auto clash = [&]() {
        for (int v : frontier)
            if (t.d.vertices().contains(t.d.vertices().name(v) + suffix)) return true;
        return false;
    };
    while (clash()) suffix += "@";
    std::vector<std::string> names = t.d.vertices().names();
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [a, b] : t.d.edges())
        edges.push_back({t.d.vertices().name(a), t.d.vertices().name(b)});
    std::vector<std::string> exits;
    for (int v : t.d.exits()) exits.push_back(t.d.vertices().name(v));
    std::map<int, int> companion_of;  // companion id (in d2) -> frontier vertex id
    for (int v : frontier) {
        std::string comp = t.d.vertices().name(v) + suffix;
        companion_of[static_cast<int>(names.size())] = v;
        names.push_back(comp);
        edges.push_back({t.d.vertices().name(v), comp});
        exits.push_back(comp);
    }
    Dimaze d2(names, edges, exits);

    auto widened = link(d2, i);
    if (auto* sep = std::get_if<Separator>(&widened)) {
        res.status = TopLinkResult::Status::No;
        Separator mapped;
        for (int v : sep->vertices)
            mapped.vertices.push_back(companion_of.count(v) ? companion_of[v] : v);
        res.separator = mapped;
        return res;
    }

    PathSystem chosen = std::get<PathSystem>(widened);
    PathSystem real;            // paths mapped back into the truncation
    std::vector<int> frontier_ends(chosen.paths.size(), -1);
    for (std::size_t p = 0; p < chosen.paths.size(); ++p) {
        std::vector<int> path = chosen.paths[p];
        if (companion_of.count(path.back())) {
            frontier_ends[p] = companion_of[path.back()];
            path.pop_back();
        }
        real.paths.push_back(path);
    }
    res.status = TopLinkResult::Status::Yes;
    res.paths = real;
    // only the topological paths themselves must be disjoint; a comb's spikes
    // or a fan's branches may meet the other paths
    for (std::size_t p = 0; p < real.paths.size(); ++p) {
        int end = frontier_ends[p];
        if (end < 0) continue;  // honest path to an exit
        bool certified = false;
        if (t.frontier[end]) {
            auto branches = fan_branches(t.d, end, k, {});
            if (!branches.empty()) {
                PatternCertificate cert;
                cert.kind = PatternCertificate::Kind::Fan;
                cert.centre = end;
                cert.spikes = branches;
                res.certificates.push_back(cert);
                certified = true;
            }
        }
        if (!certified) {
            auto spikes = spine_spikes(t.d, real.paths[p], k, {});
            if (!spikes.empty()) {
                PatternCertificate cert;
                cert.kind = PatternCertificate::Kind::OutgoingComb;
                cert.spine = real.paths[p];
                cert.spikes = spikes;
                res.certificates.push_back(cert);
                certified = true;
            }
        }
        if (!certified) {
            res.status = TopLinkResult::Status::Inconclusive;
            res.blockers.push_back(end);
        }
    }
    return res;
}

Truncation eliminate_fan_centres(const Truncation& t, int k) {
    if (k < 2) throw InputError("k must be at least 2");
    std::set<int> f;
    for (int c = 0; c < t.d.size(); ++c) {
        if (t.d.out(c).empty()) continue;
        if (!fan_branches(t.d, c, k, {}).empty()) f.insert(c);
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [a, b] : t.d.edges())
        if (!f.count(a)) edges.push_back({t.d.vertices().name(a), t.d.vertices().name(b)});
    std::vector<std::string> exits;
    for (int v = 0; v < t.d.size(); ++v)
        if (t.d.is_exit(v) || f.count(v)) exits.push_back(t.d.vertices().name(v));
    Truncation out;
    out.d = Dimaze(t.d.vertices().names(), edges, exits);
    out.frontier = t.frontier;
    for (int v : f) out.frontier[v] = 0;
    out.depth = t.depth;
    out.width = t.width;
    out.generator = t.generator;
    return out;
}

}  // namespace gammoidlab
