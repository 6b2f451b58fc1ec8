#pragma once

#include <string>
#include <vector>

#include "twowalk/decomposition.hpp"
#include "twowalk/first_class.hpp"
#include "twowalk/multigraph.hpp"

namespace twowalk {

// Edge of the auxiliary multigraph. Vertex encoding: ids 0..k-1 are the
// clique vertices w_1..w_k, id k+t is the copy of the D member d_ids[t].
struct GammaEdge {
    int u, v;         // u < v
    EdgeClass color;  // Blue or Red
    VertexId g_d = -1, g_q = -1;  // blue provenance: the first-class edge of G
};

struct GammaGraph {
    int clique_count = 0;
    std::vector<VertexId> d_ids;  // gamma id clique_count + t  <->  G vertex d_ids[t]
    std::vector<GammaEdge> edges;

    int vertex_count() const { return clique_count + static_cast<int>(d_ids.size()); }
    bool is_w(int gv) const { return gv < clique_count; }

    std::vector<int> degrees() const;
    std::vector<int> red_degrees() const;
};

// One blue edge w_t -- d' per first-class edge (d, q in Q_t); parallel
// occurrences are kept.
GammaGraph add_blue_edges(const CliqueTower& t, const FirstClassEdges& e);

// Eulerizes: pairs odd vertices inside a single component, or joins several
// components through representative vertices by a red cycle and pairs the
// leftover odd vertices within their components.
GammaGraph add_red_edges(GammaGraph gamma);

struct GammaVerdict {
    bool ok = true;
    std::string violation;
};

// Connectivity, even degrees, blue/red placement, red incidence <= 2.
GammaVerdict validate_gamma(const GammaGraph& gamma);

}  // namespace twowalk
