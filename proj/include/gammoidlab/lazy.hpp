#pragma once

#include <memory>
#include <optional>

#include "gammoidlab/bimaze.hpp"
#include "gammoidlab/dimaze.hpp"

namespace gammoidlab {

// A finitely described, possibly infinite dimaze. Vertices are structured
// string identifiers organised in 1-based levels; out-neighbour enumeration is
// deterministic and may be cut by the width parameter.
class DimazeGenerator {
  public:
    virtual ~DimazeGenerator() = default;
    virtual std::string name() const = 0;
    virtual std::vector<std::string> level(int depth, int width) const = 0;
    // Sets `cut` when the returned list misses out-neighbours (width limit or
    // an infinite neighbourhood).
    virtual std::vector<std::string> out_neighbours(const std::string& v, int width,
                                                    bool& cut) const = 0;
    virtual bool is_exit(const std::string& v) const = 0;
};

// Built-ins: RA RI RO CA CI CO FAN TREE (TND is bipartite, see below).
std::unique_ptr<DimazeGenerator> make_generator(const std::string& name);

struct Truncation {
    Dimaze d;
    std::vector<char> frontier;  // per vertex: out-neighbourhood was cut
    int depth = 0, width = 0;
    std::string generator;

    bool has_frontier() const;
    std::vector<int> frontier_vertices() const;
};

// Finite cut of the generator: all vertices of levels 1..depth, keeping every
// enumerated out-edge whose head made it into the cut. Frontier vertices keep
// their surviving edges and are never promoted to exits.
Truncation truncate(const DimazeGenerator& g, int depth, int width);

// Wraps an ordinary finite dimaze as a frontier-free truncation.
Truncation as_truncation(const Dimaze& d);

// The bipartite graph of the two-quadruples-per-right-vertex example, cut to
// right vertices A_1..A_n, with frontier marks on the last two left vertices.
Bimaze tnd_truncation(int n);
int tnd_left_degree(int j);  // exact degree of v_j in the infinite graph

// Converted bimaze of a truncation; a cut dimaze vertex marks both its left
// copy and its star as frontier.
Bimaze converted_truncation(const Truncation& t);

enum class CombKind { Outgoing, Incoming, Alternating };

struct PatternCertificate {
    enum class Kind { OutgoingComb, IncomingComb, AlternatingComb, Fan };
    Kind kind;
    int centre = -1;                        // fan
    std::vector<int> spine;                 // outgoing/incoming comb
    std::vector<std::vector<int>> spikes;   // fan branches (from centre) or comb spikes (from spine)
    // alternating comb pieces: k merges, k-1 sources, A_i: u_i -> m_i,
    // B_i: u_i -> m_{i+1}, tails m_i -> exit
    std::vector<int> merges, sources;
    std::vector<std::vector<int>> a_paths, b_paths, tails;
};

bool verify_certificate(const Truncation& t, const PatternCertificate& c, int k,
                        std::string* why = nullptr);

std::optional<PatternCertificate> detect_fan(const Truncation& t, int k);
std::optional<PatternCertificate> detect_comb(const Truncation& t, CombKind kind, int k);

struct TopLinkResult {
    enum class Status { Yes, No, Inconclusive };
    Status status;
    PathSystem paths;                         // topological paths inside the truncation
    std::vector<PatternCertificate> certificates;
    std::optional<Separator> separator;       // for No
    std::vector<int> blockers;                // frontier vertices behind Inconclusive
};

// Conservative three-valued linkability: plain linkage first; otherwise paths
// may end at fan-certified frontier centres or be certified comb-spine
// prefixes; bare frontier contact is inconclusive, unreachability is a no.
TopLinkResult topologically_linkable(const Truncation& t, const std::vector<int>& i, int k);

// Deletes the out-edges of every centre of a >=k-fan and promotes those
// centres to exits.
Truncation eliminate_fan_centres(const Truncation& t, int k);

}  // namespace gammoidlab
