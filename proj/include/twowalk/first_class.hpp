#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "twowalk/decomposition.hpp"
#include "twowalk/graph.hpp"
#include "twowalk/rational.hpp"

namespace twowalk {

// The Hall-selected D-Q edges: every D vertex on exactly two of them (with
// distinct Q endpoints), every saturated Q vertex on exactly one.
struct FirstClassEdges {
    std::vector<std::pair<VertexId, VertexId>> edges;  // (d, q), sorted

    std::vector<VertexId> saturated_q() const;
};

// D0 with |N(D0)| < 2|D0|, read off the failed alternating search.
struct HallViolator {
    std::vector<VertexId> d0;
};

// Demand-2 matching between D and the clique vertices: each D vertex is
// split into two unit copies and matched by deterministic augmenting paths
// (increasing d, then increasing q).
std::variant<FirstClassEdges, HallViolator> select_first_class_edges(const Graph& g,
                                                                     const CliqueTower& t);

struct ToughnessCertificate {
    std::vector<VertexId> cut;
    int component_count = 0;
    Rational ratio;  // |cut| / component_count, reduced
};

// S := N(d0). nullopt when removing S leaves a single component (possible
// only at n <= 2), in which case no toughness conclusion follows.
std::optional<ToughnessCertificate> certificate_from_violator(const Graph& g,
                                                              std::span<const VertexId> d0);

}  // namespace twowalk
