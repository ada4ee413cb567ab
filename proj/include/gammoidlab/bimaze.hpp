#pragma once

#include <set>
#include <utility>
#include <vector>

#include "gammoidlab/matroid.hpp"

namespace gammoidlab {

class BipartiteGraph {
  public:
    BipartiteGraph() = default;
    BipartiteGraph(std::vector<std::string> left_names, std::vector<std::string> right_names,
                   std::vector<std::pair<std::string, std::string>> edge_names);

    const GroundSet& left() const { return left_; }
    const GroundSet& right() const { return right_; }
    const std::vector<int>& adj_left(int v) const { return adj_left_.at(v); }
    const std::vector<int>& adj_right(int w) const { return adj_right_.at(w); }
    bool has_edge(int v, int w) const;
    std::vector<std::pair<int, int>> edges() const;  // sorted (left,right)

    BipartiteGraph with_edge(int v, int w) const;
    BipartiteGraph without_edge(int v, int w) const;
    BipartiteGraph without_right(const std::vector<int>& ws) const;

  private:
    GroundSet left_, right_;
    std::vector<std::vector<int>> adj_left_, adj_right_;
};

// (left,right) index pairs, pairwise disjoint.
struct Matching {
    std::vector<std::pair<int, int>> edges;

    std::set<int> covered_left() const;
    std::set<int> covered_right() const;
};

// Bipartite graph with an identity matching m0 onto the right class. Frontier
// flags mark vertices whose neighbourhood was cut by a truncation; they are
// empty for honestly finite instances.
struct Bimaze {
    BipartiteGraph g;
    std::vector<int> m0_partner;  // per right vertex: its left partner
    std::vector<char> frontier_left, frontier_right;

    Bimaze() = default;
    Bimaze(BipartiteGraph graph, std::vector<std::pair<std::string, std::string>> m0_edges);

    Matching m0() const;
    bool has_frontier() const;
};

// Deterministic augmenting-path maximum matching of a left subset.
Matching max_matching(const BipartiteGraph& g, const std::vector<int>& left_subset);

IndependenceOracle mt_oracle(const BipartiteGraph& g);

// Validates that m is a matching whose union with m0 has only finite
// components clear of the frontier; on success optionally reports the
// components (as sets of left/right vertices).
bool is_m0_matching(const Bimaze& b, const Matching& m, std::string* why = nullptr);

IndependenceOracle mpt_oracle(const Bimaze& b);

// Finds an m0-matching whose covered left set is exactly `left_subset`,
// if one exists.
bool find_m0_matching(const Bimaze& b, const std::vector<int>& left_subset, Matching* out = nullptr);

// Symmetric difference with the components of m ∪ m0 that meet an m-uncovered
// right vertex; result covers the whole right class.
Matching extend_onto(const Bimaze& b, const Matching& m);

struct RhsReduction {
    BipartiteGraph g;
    std::vector<std::string> coloops;  // N(W - m0) in the input graph
};

// Deletes the right vertices missed by a maximum matching; the transversal
// matroid is unchanged and the reported vertices are coloops.
RhsReduction reduce_cover_rhs(const BipartiteGraph& g);

// Adds every non-edge vw with v a coloop of M_T(G) restricted away from N(w),
// iterated to a fixed point. Matroid-preserving; unique maximal presentation.
BipartiteGraph maximal_presentation(const BipartiteGraph& g);

// Greedy deletion, in lexicographic edge order, of edges whose removal keeps
// the transversal matroid intact.
BipartiteGraph minimal_presentation(const BipartiteGraph& g);

}  // namespace gammoidlab
