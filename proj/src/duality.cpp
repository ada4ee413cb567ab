#include "gammoidlab/duality.hpp"

#include <algorithm>
#include <set>

namespace gammoidlab {

StarNaming star_naming(const Dimaze& d) {
    StarNaming n;
    n.star_of.assign(d.size(), "");
    std::set<std::string> taken(d.vertices().names().begin(), d.vertices().names().end());
    for (int v = 0; v < d.size(); ++v) {
        if (d.is_exit(v)) continue;
        std::string plain = d.vertices().name(v) + "*";
        std::string star = plain;
        while (taken.count(star)) star += "*";
        if (star != plain) n.renames.push_back({plain, star});
        taken.insert(star);
        n.star_of[v] = star;
    }
    return n;
}

ConvertedBimaze to_bimaze(const Dimaze& d) {
    StarNaming naming = star_naming(d);
    std::vector<std::string> right;
    std::vector<std::pair<std::string, std::string>> edges, m0;
    for (int v = 0; v < d.size(); ++v) {
        if (naming.star_of[v].empty()) continue;
        right.push_back(naming.star_of[v]);
        m0.push_back({d.vertices().name(v), naming.star_of[v]});
    }
    edges = m0;
    for (auto [u, v] : d.edges()) edges.push_back({d.vertices().name(v), naming.star_of[u]});
    BipartiteGraph g(d.vertices().names(), right, edges);
    return ConvertedBimaze{Bimaze(g, m0), naming};
}

Dimaze to_dimaze(const Bimaze& b) {
    const auto& left = b.g.left();
    std::set<std::pair<std::string, std::string>> edges;
    std::vector<std::string> exits;
    std::vector<char> covered(left.size(), 0);
    for (int w = 0; w < b.g.right().size(); ++w) covered[b.m0_partner[w]] = 1;
    for (int v = 0; v < left.size(); ++v)
        if (!covered[v]) exits.push_back(left.name(v));
    for (auto [v, w] : b.g.edges()) {
        if (b.m0_partner[w] == v) continue;
        edges.insert({left.name(b.m0_partner[w]), left.name(v)});
    }
    return Dimaze(left.names(),
                  std::vector<std::pair<std::string, std::string>>(edges.begin(), edges.end()),
                  exits);
}

Matching linkage_to_matching(const Dimaze& d, const PathSystem& p) {
    validate_path_system(d, p, /*linkage=*/true);
    std::vector<int> exits = d.exits();
    std::vector<int> ter = p.ter();
    std::sort(ter.begin(), ter.end());
    if (ter != exits) throw InputError("linkage must end onto the exits exactly");
    ConvertedBimaze cb = to_bimaze(d);
    const Bimaze& b = cb.b;
    Matching m;
    auto right_of = [&](int v) { return b.g.right().index(cb.naming.star_of[v]); };
    auto on = p.vertex_set();
    for (const auto& path : p.paths)
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            m.edges.push_back({path[i + 1], right_of(path[i])});
    for (int v = 0; v < d.size(); ++v)
        if (!on.count(v) && !d.is_exit(v)) m.edges.push_back({v, right_of(v)});
    std::sort(m.edges.begin(), m.edges.end());
    std::string why;
    if (!is_m0_matching(b, m, &why))
        throw InternalError("linkage translation is not an m0-matching: " + why);
    if (m.covered_right().size() != static_cast<std::size_t>(b.g.right().size()))
        throw InternalError("linkage translation misses a right vertex");
    return m;
}

PathSystem matching_to_linkage(const Dimaze& d, const Matching& m) {
    ConvertedBimaze cb = to_bimaze(d);
    const Bimaze& b = cb.b;
    std::string why;
    if (!is_m0_matching(b, m, &why)) throw InputError("not an m0-matching: " + why);
    if (m.covered_right().size() != static_cast<std::size_t>(b.g.right().size()))
        throw InputError("matching does not cover the right class");
    // m-partner per right vertex
    std::vector<int> partner(b.g.right().size(), -1);
    for (auto [v, w] : m.edges) partner[w] = v;
    auto covered = m.covered_left();
    PathSystem p;
    for (int v = 0; v < d.size(); ++v) {
        if (covered.count(v)) continue;
        std::vector<int> path = {v};
        int cur = v, steps = 0;
        while (!d.is_exit(cur)) {
            if (++steps > d.size() + 1) throw InternalError("matching walk does not terminate");
            cur = partner[b.g.right().index(cb.naming.star_of[cur])];
            path.push_back(cur);
        }
        p.paths.push_back(path);
    }
    validate_path_system(d, p, /*linkage=*/true);
    std::set<int> ter = to_set(p.ter());
    std::vector<int> exits = d.exits();
    if (ter != std::set<int>(exits.begin(), exits.end()))
        throw InternalError("matching walks do not reach every exit");
    return p;
}

bool check_dagger(const Dimaze& d) {
    auto ml = ml_oracle(d);
    Mask full = ml.ground().full();
    if (d.size() > enumeration_cap()) throw SizeCapError("instance too large to sweep");
    for (Mask s = 0;; ++s) {
        if (ml.independent(s)) {
            bool maximal = true;
            for (int e = 0; e < d.size() && maximal; ++e)
                if (!(s & bit(e)) && ml.independent(s | bit(e))) maximal = false;
            std::vector<int> set;
            for (int e = 0; e < d.size(); ++e)
                if (s & bit(e)) set.push_back(e);
            if (maximal != is_base_by_onto(d, set)) return false;
        }
        if (s == full) break;
    }
    return true;
}

bool check_ddagger(const Bimaze& b) {
    auto mpt = mpt_oracle(b);
    Mask full = mpt.ground().full();
    int n = b.g.left().size();
    if (n > enumeration_cap()) throw SizeCapError("instance too large to sweep");
    for (Mask s = 0;; ++s) {
        if (mpt.independent(s)) {
            bool maximal = true;
            for (int e = 0; e < n && maximal; ++e)
                if (!(s & bit(e)) && mpt.independent(s | bit(e))) maximal = false;
            std::vector<int> set;
            for (int e = 0; e < n; ++e)
                if (s & bit(e)) set.push_back(e);
            bool onto = popcount(s) == b.g.right().size() && find_m0_matching(b, set);
            if (maximal != onto) return false;
        }
        if (s == full) break;
    }
    return true;
}

}  // namespace gammoidlab
