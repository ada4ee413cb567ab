#pragma once

#include "gammoidlab/bimaze.hpp"
#include "gammoidlab/dimaze.hpp"

namespace gammoidlab {

// Deterministic star names for V \ B0: append "*", adding more stars until
// the name is fresh. Applied renames (anything beyond the single star) are
// recorded.
struct StarNaming {
    std::vector<std::string> star_of;                        // per vertex, empty for exits
    std::vector<std::pair<std::string, std::string>> renames;  // (plain star name, chosen name)
};

StarNaming star_naming(const Dimaze& d);

struct ConvertedBimaze {
    Bimaze b;
    StarNaming naming;
};

// Right class (V \ B0)*, edges m0 = {vv*} plus {vu* : (u,v) an edge}.
ConvertedBimaze to_bimaze(const Dimaze& d);

// Vertices V, edges {(v,w) : wv* in E(G) \ m0}, exits the m0-uncovered left
// vertices.
Dimaze to_dimaze(const Bimaze& b);

// m := {vu* : (u,v) on P} ∪ {ww* : w off P}; an m0-matching from V \ Ini(P)
// onto the right class of the converted bimaze.
Matching linkage_to_matching(const Dimaze& d, const PathSystem& p);

// Converse: m0-m-alternating walks from the m-uncovered left vertices trace
// out a linkage onto B0.
PathSystem matching_to_linkage(const Dimaze& d, const Matching& m);

// (†): a set is maximal in M_L iff it is linkable onto B0.
bool check_dagger(const Dimaze& d);

// (‡): a set is maximal in M_PT iff it has an m0-matching onto the right class.
bool check_ddagger(const Bimaze& b);

}  // namespace gammoidlab
