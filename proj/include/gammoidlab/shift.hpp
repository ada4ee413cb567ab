#pragma once

#include "gammoidlab/dimaze.hpp"

namespace gammoidlab {

// The Q-shifted dimaze: non-Q edges (v,u) rewired to (fwd(v),u), Q-edges
// reversed, exits (B0 \ Ter(Q)) ∪ Ini(Q).
struct ShiftedDimaze {
    Dimaze d0;      // source
    PathSystem q;   // the linkage shifted along
    Dimaze d1;
    std::vector<int> fwd;  // Q-successor on V(Q), identity elsewhere, -1 on Ter(Q)
    std::vector<int> bwd;  // inverse of fwd, -1 on Ini(Q)
};

ShiftedDimaze shift(const Dimaze& d, const PathSystem& q);

// Image of a Q-alternating walk of D ending in B1 under the forward map:
// drops every edge and every Q-vertex whose following edge is not a Q-edge,
// leaving a path of D1 with the same terminal vertex.
std::vector<int> walk_to_path(const ShiftedDimaze& s, const AltWalk& w);

// Inverse translation: a path of D1 ending in B1 becomes a Q-alternating walk
// of D via the three-case insertion rule.
AltWalk path_to_walk(const ShiftedDimaze& s, const std::vector<int>& p);

// Components of E(Q) Δ E(Ws) meeting Ini(Ws) ∪ (Ini(Q) \ Ter(Ws)), extracted
// as disjoint paths.
PathSystem symdiff_paths(const Dimaze& d, const PathSystem& q, const std::vector<AltWalk>& ws);

// The maximal P-Q-alternating walk from each initial vertex of P. These are
// forced move-by-move, pairwise edge-disjoint, and end in (Ter(P)\Ter(Q)) ∪ Ini(Q).
std::vector<AltWalk> max_pq_walks(const Dimaze& d, const PathSystem& p, const PathSystem& q);

struct MinorPresentation {
    Dimaze d;                         // (D1 - S, B1 \ S), with deleted elements kept as graph vertices
    std::vector<std::string> ground;  // V \ (S ∪ R)
};

// Gammoid presentation of M_L(D)/S\R: extend S to a base B1 ⊆ S ∪ B0, link it,
// shift along the nontrivial paths, remove S, and restrict the ground past R.
MinorPresentation minor_presentation(const Dimaze& d, const std::vector<int>& s,
                                     const std::vector<int>& r);

}  // namespace gammoidlab
