#pragma once

#include <optional>
#include <span>
#include <vector>

#include "twowalk/graph.hpp"
#include "twowalk/multigraph.hpp"
#include "twowalk/rational.hpp"

namespace twowalk {

// Four vertices inducing exactly the two disjoint edges ab and cd.
struct TwoK2Witness {
    VertexId a, b, c, d;
};

// Witness-producing induced-2K2 search. Scans, per edge ab, the set of
// vertices adjacent to neither endpoint for an edge; vertices whose whole
// non-neighborhood is edgeless are pruned up front, which keeps dense
// inputs near-linear.
std::optional<TwoK2Witness> find_induced_2k2(const Graph& g);

inline bool is_2k2_free(const Graph& g) { return !find_induced_2k2(g).has_value(); }

// True iff at most one component of g - a contains an edge.
bool lemma1_check(const Graph& g, std::span<const VertexId> a);

// All maximal cliques (Bron-Kerbosch with pivoting), members sorted.
std::vector<std::vector<VertexId>> maximal_cliques(const Graph& g);

// All cliques of maximum size, each sorted, listed lexicographically.
std::vector<std::vector<VertexId>> maximum_cliques(const Graph& g);

int clique_number(const Graph& g);

// Dom(a) = a together with all neighbors of a.
Bitset dominated_set(const Graph& g, std::span<const VertexId> a);

bool is_dominating(const Graph& g, std::span<const VertexId> a);

// Every edge of g has an endpoint inside Dom(a).
bool is_weakly_dominating(const Graph& g, std::span<const VertexId> a);

struct WeaklyDominatingClique {
    std::vector<VertexId> clique;
    int candidates_tried = 0;  // maximum cliques examined before one passed
};

// Scans the maximum cliques lexicographically and returns the first that
// weakly dominates. Throws NoWeaklyDominatingCliqueError when none does,
// which signals a non-2K2-free input.
WeaklyDominatingClique find_weakly_dominating_maximum_clique(const Graph& g);

inline constexpr int kToughnessDefaultLimit = 18;

// Exact toughness by exhaustive minimization of |S| / components(g - S),
// subsets enumerated in increasing size. INFINITE for complete graphs,
// exact 0 for disconnected ones. Throws TooLargeError above limit_n.
ToughnessValue toughness_exact(const Graph& g, int limit_n = kToughnessDefaultLimit);

inline constexpr int kHamiltonianDefaultLimit = 24;

// Backtracking Hamiltonian cycle search with connectivity and degree
// pruning. nullopt when no cycle exists. Throws TooLargeError above limit_n.
std::optional<Walk> hamiltonian_cycle_exact(const Graph& g,
                                            int limit_n = kHamiltonianDefaultLimit);

}  // namespace twowalk
