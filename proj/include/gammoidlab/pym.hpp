#pragma once

#include "gammoidlab/dimaze.hpp"

namespace gammoidlab {

// Fixed-point trace of Pym's construction for two linkages P (of S ∪ I) and
// Q (from S onto T). f[i][x] walks forward along P_x, t[i][y] walks backward
// along Q_y, and the limit linkage q_inf links S ∪ I onto a superset of T.
struct PymTrace {
    Dimaze d;
    PathSystem p, q;
    std::vector<int> sources;               // Ini(P), index x
    std::vector<int> targets;               // Ter(Q), index y
    std::vector<std::vector<int>> f;        // f[i][x], a vertex on P_x
    std::vector<std::vector<int>> t;        // t[i][y], a vertex on Q_y
    PathSystem q_inf;
    std::vector<int> y_inf;                 // Ter(q_inf)
    int stable_iter = 0;                    // least i with f[i] == f[i+1]
};

PymTrace pym_linkage(const Dimaze& d, const PathSystem& p, const PathSystem& q);

// The walk W(v) for v = f[j+1][x] with f[j][x] != f[j+1][x]: alternating
// P-forward and Q-backward segments from a vertex of I down to v.
AltWalk back_walk(const PymTrace& trace, int v);

}  // namespace gammoidlab
