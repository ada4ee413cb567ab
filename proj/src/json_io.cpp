#include "gammoidlab/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace gammoidlab {

namespace {

const Json& field(const Json& j, const std::string& key) {
    if (!j.is_object()) throw InputError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError("missing field '" + key + "'");
    return *it;
}

std::vector<std::string> name_list(const Json& j, const std::string& key) {
    const Json& v = field(j, key);
    if (!v.is_array()) throw InputError("field '" + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string()) throw InputError("field '" + key + "' must hold strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(const Json& j, const std::string& key) {
    const Json& v = field(j, key);
    if (!v.is_array()) throw InputError("field '" + key + "' must be an array");
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : v) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw InputError("field '" + key + "' must hold [name, name] pairs");
        out.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
    }
    return out;
}

Json names_json(const Dimaze& d, const std::vector<int>& ids) {
    Json a = Json::array();
    for (int v : ids) a.push_back(d.vertices().name(v));
    return a;
}

}  // namespace

Json dimaze_doc(const Dimaze& d) {
    Json j;
    j["vertices"] = d.vertices().names();
    Json edges = Json::array();
    for (auto [a, b] : d.edges())
        edges.push_back(Json::array({d.vertices().name(a), d.vertices().name(b)}));
    j["edges"] = edges;
    j["exits"] = names_json(d, d.exits());
    return j;
}

Dimaze parse_dimaze(const Json& j) {
    return Dimaze(name_list(j, "vertices"), pair_list(j, "edges"), name_list(j, "exits"));
}

Json truncation_doc(const Truncation& t) {
    Json j = dimaze_doc(t.d);
    if (t.has_frontier()) j["frontier"] = names_json(t.d, t.frontier_vertices());
    return j;
}

Truncation parse_truncation(const Json& j) {
    Truncation t = as_truncation(parse_dimaze(j));
    if (j.is_object() && j.contains("frontier"))
        for (const auto& name : name_list(j, "frontier")) {
            int v = t.d.vertices().index(name);
            if (t.d.is_exit(v)) throw InputError("frontier vertex '" + name + "' is an exit");
            t.frontier[v] = 1;
        }
    return t;
}

Json bimaze_doc(const Bimaze& b) {
    Json j;
    j["left"] = b.g.left().names();
    j["right"] = b.g.right().names();
    Json edges = Json::array();
    for (auto [v, w] : b.g.edges())
        edges.push_back(Json::array({b.g.left().name(v), b.g.right().name(w)}));
    j["edges"] = edges;
    Json m0 = Json::array();
    for (int w = 0; w < b.g.right().size(); ++w)
        m0.push_back(Json::array({b.g.left().name(b.m0_partner[w]), b.g.right().name(w)}));
    j["m0"] = m0;
    Json fl = Json::array(), fr = Json::array();
    for (int v = 0; v < b.g.left().size(); ++v)
        if (b.frontier_left[v]) fl.push_back(b.g.left().name(v));
    for (int w = 0; w < b.g.right().size(); ++w)
        if (b.frontier_right[w]) fr.push_back(b.g.right().name(w));
    if (!fl.empty()) j["frontier_left"] = fl;
    if (!fr.empty()) j["frontier_right"] = fr;
    return j;
}

Bimaze parse_bimaze(const Json& j) {
    BipartiteGraph g(name_list(j, "left"), name_list(j, "right"), pair_list(j, "edges"));
    Bimaze b(g, pair_list(j, "m0"));
    if (j.contains("frontier_left"))
        for (const auto& n : name_list(j, "frontier_left")) b.frontier_left[g.left().index(n)] = 1;
    if (j.contains("frontier_right"))
        for (const auto& n : name_list(j, "frontier_right"))
            b.frontier_right[g.right().index(n)] = 1;
    return b;
}

Json linkage_doc(const Dimaze& d, const PathSystem& p) {
    Json paths = Json::array();
    for (const auto& path : p.paths) paths.push_back(names_json(d, path));
    Json j;
    j["paths"] = paths;
    return j;
}

PathSystem parse_linkage(const Dimaze& d, const Json& j) {
    const Json& v = field(j, "paths");
    if (!v.is_array()) throw InputError("field 'paths' must be an array");
    PathSystem p;
    for (const auto& e : v) {
        if (!e.is_array()) throw InputError("each path must be an array of vertex names");
        std::vector<int> path;
        for (const auto& n : e) {
            if (!n.is_string()) throw InputError("each path must be an array of vertex names");
            path.push_back(d.vertices().index(n.get<std::string>()));
        }
        p.paths.push_back(path);
    }
    return p;
}

Json matching_doc(const BipartiteGraph& g, const Matching& m) {
    Json edges = Json::array();
    auto sorted = m.edges;
    std::sort(sorted.begin(), sorted.end());
    for (auto [v, w] : sorted) edges.push_back(Json::array({g.left().name(v), g.right().name(w)}));
    Json j;
    j["matching"] = edges;
    return j;
}

Matching parse_matching(const BipartiteGraph& g, const Json& j) {
    Matching m;
    for (auto [a, b] : pair_list(j, "matching"))
        m.edges.push_back({g.left().index(a), g.right().index(b)});
    return m;
}

Json separator_doc(const Dimaze& d, const Separator& s) {
    Json j;
    j["separator"] = names_json(d, s.vertices);
    return j;
}

Json certificate_doc(const Dimaze& d, const PatternCertificate& c) {
    Json j;
    auto paths_json = [&](const std::vector<std::vector<int>>& ps) {
        Json a = Json::array();
        for (const auto& p : ps) a.push_back(names_json(d, p));
        return a;
    };
    switch (c.kind) {
        case PatternCertificate::Kind::Fan:
            j["kind"] = "fan";
            j["centre"] = d.vertices().name(c.centre);
            j["branches"] = paths_json(c.spikes);
            break;
        case PatternCertificate::Kind::OutgoingComb:
        case PatternCertificate::Kind::IncomingComb:
            j["kind"] = c.kind == PatternCertificate::Kind::OutgoingComb ? "outgoing-comb"
                                                                         : "incoming-comb";
            j["spine"] = names_json(d, c.spine);
            j["spikes"] = paths_json(c.spikes);
            break;
        case PatternCertificate::Kind::AlternatingComb:
            j["kind"] = "alternating-comb";
            j["merges"] = names_json(d, c.merges);
            j["sources"] = names_json(d, c.sources);
            j["a_paths"] = paths_json(c.a_paths);
            j["b_paths"] = paths_json(c.b_paths);
            j["tails"] = paths_json(c.tails);
            break;
    }
    return j;
}

std::string dump_doc(const Json& j) { return j.dump(2) + "\n"; }

Json parse_doc(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(origin + ": " + e.what());
    }
}

Json load_doc(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    return parse_doc(buf.str(), path == "-" ? "stdin" : path);
}

}  // namespace gammoidlab
