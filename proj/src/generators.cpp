#include "twowalk/generators.hpp"

#include <algorithm>

#include "twowalk/analysis.hpp"
#include "twowalk/errors.hpp"

namespace twowalk {

Graph gen_split(int clique_size, int indep_size, double attach_prob, uint64_t seed) {
    if (clique_size < 1) throw std::invalid_argument("clique_size must be >= 1");
    if (indep_size < 0) throw std::invalid_argument("indep_size must be >= 0");
    int n = clique_size + indep_size;
    SplitMix64 rng(seed);

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < clique_size; ++i)
        for (int j = i + 1; j < clique_size; ++j) edges.emplace_back(i, j);
    for (int d = clique_size; d < n; ++d)
        for (int q = 0; q < clique_size; ++q)
            if (rng.next_unit() < attach_prob) edges.emplace_back(q, d);
    return Graph::from_edges(n, edges);
}

Graph gen_chordal(int n, double edge_prob, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    SplitMix64 rng(seed);

    // attach_clique[v]: the clique v was glued onto, so attach_clique[v] + v
    // is a clique; picking a subset of an earlier one keeps a perfect
    // elimination ordering in reverse insertion order.
    std::vector<std::vector<VertexId>> attach_clique(n);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng.below(v));
        std::vector<VertexId> base = attach_clique[u];
        base.push_back(u);
        std::sort(base.begin(), base.end());
        for (VertexId w : base)
            if (rng.next_unit() < edge_prob) {
                attach_clique[v].push_back(w);
                edges.emplace_back(w, v);
            }
    }
    return Graph::from_edges(n, edges);
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph gen_co_chordal(int n, double edge_prob, uint64_t seed) {
    return complement(gen_chordal(n, edge_prob, seed));
}

Graph gen_filtered_2tough(int n, uint64_t seed, int max_attempts) {
    if (n > kToughnessDefaultLimit)
        throw TooLargeError("gen_filtered_2tough needs the toughness oracle (n <= " +
                            std::to_string(kToughnessDefaultLimit) + ")");
    SplitMix64 stream(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        uint64_t sub = stream.next();
        Graph g;
        if (attempt % 2 == 0) {
            int indep = std::max(1, n / 4);
            int clique = std::max(2, n - indep);
            g = gen_split(clique, n - clique, 0.8, sub);
        } else {
            g = gen_co_chordal(n, 0.35, sub);
        }
        if (!is_2k2_free(g)) continue;
        if (toughness_exact(g).at_least(Rational(2, 1))) return g;
    }
    throw ExhaustedError("no 2-tough 2K2-free candidate in " + std::to_string(max_attempts) +
                         " attempts (n = " + std::to_string(n) + ")");
}

Graph fixed_graph(const std::string& name) {
    if (name == "G1") {
        // K4 on {0..3}; 4 ~ {0,1}; 5 ~ {2,3}
        std::vector<std::pair<VertexId, VertexId>> edges{
            {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 5}, {3, 5}};
        return Graph::from_edges(6, edges);
    }
    if (name == "G2") {
        // K4 on {0..3}; edge 45; 4 ~ {0,1}; 5 ~ {0,2}; 6 ~ {1,2}
        std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2},
                                                         {1, 3}, {2, 3}, {4, 5}, {0, 4},
                                                         {1, 4}, {0, 5}, {2, 5}, {1, 6},
                                                         {2, 6}};
        return Graph::from_edges(7, edges);
    }
    throw std::invalid_argument("unknown fixed graph: " + name);
}

}  // namespace twowalk
