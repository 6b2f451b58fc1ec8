#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "twowalk/graph.hpp"

namespace twowalk {

// Blue/red belong to the auxiliary graph, first/second/third to H.
enum class EdgeClass { First, Second, Third, Blue, Red };

std::string_view edge_class_name(EdgeClass c);

struct EdgeOccurrence {
    VertexId u, v;
    EdgeClass cls;
};

// Multigraph as an explicit occurrence list: parallel edges are separate
// entries and count toward degrees with multiplicity. Loops are rejected.
// The occurrence list (not a multiplicity matrix) is what the Euler-tour
// extraction consumes.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int n) : deg_(n, 0) {}

    int vertex_count() const { return static_cast<int>(deg_.size()); }
    int occurrence_count() const { return static_cast<int>(edges_.size()); }

    void add_edge(VertexId u, VertexId v, EdgeClass cls);

    int degree(VertexId v) const { return deg_[v]; }
    int multiplicity(VertexId u, VertexId v) const;

    const std::vector<EdgeOccurrence>& edges() const { return edges_; }

private:
    uint64_t key(VertexId u, VertexId v) const;

    std::vector<EdgeOccurrence> edges_;
    std::vector<int> deg_;
    std::unordered_map<uint64_t, int> mult_;
};

// H is a multigraph over V(G) restricted to classes first/second/third.
using HGraph = MultiGraph;

// Closed spanning walk candidate. seq.front() == seq.back() whenever the
// walk traverses at least one edge; a single-vertex walk is just {v}.
struct Walk {
    std::vector<VertexId> seq;

    // Occurrence counts under the closed-walk convention: the repeated
    // first/last vertex counts once.
    std::map<VertexId, int> visit_counts() const;
};

}  // namespace twowalk
