#pragma once

#include <string>
#include <vector>

#include "twowalk/graph.hpp"

namespace twowalk {

// Peeled clique sequence Q_1..Q_k with the independent residue levels
// D_1..D_k. Invariants: the Q_i and D_i partition V, |Q_i| >= 2 and sizes
// are non-increasing, D = union of D_i is independent, every pair of
// cliques is joined by an edge, and D-vertices have all neighbors in the
// cliques.
struct CliqueTower {
    int n = 0;
    std::vector<std::vector<VertexId>> cliques;  // each sorted
    std::vector<std::vector<VertexId>> levels;   // each sorted, may be empty
    std::vector<int> candidates_tried;           // clique candidates examined per level

    int level_count() const { return static_cast<int>(cliques.size()); }

    // D, sorted.
    std::vector<VertexId> first_class_vertices() const;

    // vertex -> 0-based clique index, -1 for D members.
    std::vector<int> clique_of() const;
};

// Iteratively peels a weakly-dominating maximum clique, splits the
// remainder into its single non-trivial component and the isolated rest.
// Requires a 2K2-free input with at least one edge; throws
// NotTwoK2FreeError if a remainder has two edge-bearing components.
CliqueTower clique_tower(const Graph& g);

struct TowerVerdict {
    bool ok = true;
    std::string violation;
};

// Re-checks every tower invariant against g from scratch; reports the first
// violation found.
TowerVerdict validate_tower(const Graph& g, const CliqueTower& t);

// One line per level: "Q<i>: <ids>" then "D<i>: <ids>", ids sorted.
std::string serialize_tower(const CliqueTower& t);

}  // namespace twowalk
