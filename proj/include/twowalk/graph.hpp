#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twowalk/bitset.hpp"

namespace twowalk {

using VertexId = int;

// Simple undirected graph over dense ids [0, n). Adjacency lists are sorted,
// self-loops and parallel edges are rejected. Immutable in practice once
// built; all queries are const.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}
    static Graph from_edges(int n, std::span<const std::pair<VertexId, VertexId>> edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }

    bool has_edge(VertexId u, VertexId v) const;
    void add_edge(VertexId u, VertexId v);  // keeps lists sorted, ignores duplicates

    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

    // All edges with u < v, sorted lexicographically.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    Bitset neighbor_bits(VertexId v) const;
    std::vector<Bitset> adjacency_bits() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<VertexId>> adj_;
    int m_ = 0;
};

struct InducedGraph {
    Graph graph;
    std::vector<VertexId> to_original;  // new id -> id in the parent graph
};

// Edge-list document: optional "p <n> <m>" header, one "e <u> <v>" per edge,
// '#' lines are comments. Throws ParseError with the offending line number.
Graph parse_graph(std::string_view text);

// Bit-exact inverse of parse_graph: header, then edges sorted lexicographically.
std::string serialize_graph(const Graph& g);

// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> components(const Graph& g);

InducedGraph induced(const Graph& g, std::span<const VertexId> s);

bool is_clique(const Graph& g, std::span<const VertexId> s);

bool is_connected(const Graph& g);

}  // namespace twowalk
