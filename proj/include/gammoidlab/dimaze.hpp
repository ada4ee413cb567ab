#pragma once

#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "gammoidlab/matroid.hpp"

namespace gammoidlab {

// Digraph with a distinguished set of exit sinks. No loops, no parallel edges.
class Dimaze {
  public:
    Dimaze() = default;
    Dimaze(std::vector<std::string> vertex_names,
           std::vector<std::pair<std::string, std::string>> edge_names,
           std::vector<std::string> exit_names);

    const GroundSet& vertices() const { return vertices_; }
    int size() const { return vertices_.size(); }
    const std::vector<int>& out(int v) const { return out_.at(v); }
    const std::vector<int>& in(int v) const { return in_.at(v); }
    bool has_edge(int u, int v) const;
    bool is_exit(int v) const { return exit_.at(v); }
    std::vector<int> exits() const;
    std::vector<std::pair<int, int>> edges() const;  // sorted

  private:
    GroundSet vertices_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<char> exit_;
};

using Edge = std::pair<int, int>;

inline std::set<int> to_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

// Pairwise vertex-disjoint directed paths, stored as vertex sequences.
struct PathSystem {
    std::vector<std::vector<int>> paths;

    std::vector<int> ini() const;
    std::vector<int> ter() const;
    std::set<int> vertex_set() const;
    std::set<Edge> edge_set() const;
    int path_of(int v) const;  // index of the path containing v, -1 if none
};

// Throws InputError unless paths exist in d, are pairwise disjoint, and
// (for linkages) end in exits.
void validate_path_system(const Dimaze& d, const PathSystem& p, bool linkage);

// Walk w0 e0 w1 e1 ... wn; edges stored with their direction in the digraph,
// so edges[i] == (verts[i+1], verts[i]) exactly when edges[i] is traversed
// backwards (which happens iff it belongs to the reference system Q).
struct AltWalk {
    std::vector<int> verts;
    std::vector<Edge> edges;

    int start() const { return verts.front(); }
    int end() const { return verts.back(); }
    bool trivial() const { return edges.empty(); }
};

// Positional check of (W1)-(W3) against Q; sets `why` on failure if non-null.
bool is_alt_walk(const Dimaze& d, const PathSystem& q, const AltWalk& w, std::string* why = nullptr);

// Additional P-Q-walk conditions: edges within E(P) Δ E(Q) and (W4).
bool is_pq_walk(const Dimaze& d, const PathSystem& p, const PathSystem& q, const AltWalk& w,
                std::string* why = nullptr);

struct Separator {
    std::vector<int> vertices;  // vertices[i] lies on q.paths[i]
};

// True iff every directed path from a vertex of X to an exit meets `sep`.
bool is_separator(const Dimaze& d, const std::vector<int>& x, const std::vector<int>& sep);

// Either a Q-alternating walk from X \ Ini(Q) to B0 \ Ter(Q), or a separator
// on Q proving that none exists.
std::variant<AltWalk, Separator> find_alt_walk(const Dimaze& d, const PathSystem& q,
                                               const std::vector<int>& x);

// Lemma-style augmentation: symmetric difference of E(Q) and E(W).
PathSystem augment(const Dimaze& d, const PathSystem& q, const AltWalk& w);

// Repeated augmentation from the empty linkage, taking vertices of I in
// ground order.
std::variant<PathSystem, Separator> link(const Dimaze& d, const std::vector<int>& i);

IndependenceOracle ml_oracle(const Dimaze& d);
IndependenceOracle ml_oracle(const Dimaze& d, const std::vector<std::string>& ground);

// True iff some linkage from I covers B0 exactly.
bool is_base_by_onto(const Dimaze& d, const std::vector<int>& i);

}  // namespace gammoidlab
