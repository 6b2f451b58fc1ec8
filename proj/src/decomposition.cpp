#include "twowalk/decomposition.hpp"

#include <algorithm>

#include "twowalk/analysis.hpp"
#include "twowalk/errors.hpp"

namespace twowalk {

std::vector<VertexId> CliqueTower::first_class_vertices() const {
    std::vector<VertexId> d;
    for (const auto& level : levels) d.insert(d.end(), level.begin(), level.end());
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<int> CliqueTower::clique_of() const {
    std::vector<int> owner(n, -1);
    for (size_t i = 0; i < cliques.size(); ++i)
        for (VertexId v : cliques[i]) owner[v] = static_cast<int>(i);
    return owner;
}

CliqueTower clique_tower(const Graph& g) {
    CliqueTower tower;
    tower.n = g.vertex_count();

    // Current graph as an induced subgraph carrying original ids.
    std::vector<VertexId> all(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
    InducedGraph cur{g, std::move(all)};

    for (;;) {
        auto found = find_weakly_dominating_maximum_clique(cur.graph);

        std::vector<VertexId> clique_orig;
        for (VertexId v : found.clique) clique_orig.push_back(cur.to_original[v]);
        std::sort(clique_orig.begin(), clique_orig.end());
        tower.cliques.push_back(std::move(clique_orig));
        tower.candidates_tried.push_back(found.candidates_tried);

        std::vector<char> in_clique(cur.graph.vertex_count(), 0);
        for (VertexId v : found.clique) in_clique[v] = 1;
        std::vector<VertexId> rest;
        for (VertexId v = 0; v < cur.graph.vertex_count(); ++v)
            if (!in_clique[v]) rest.push_back(v);

        InducedGraph rem = induced(cur.graph, rest);
        for (auto& id : rem.to_original) id = cur.to_original[id];

        auto comps = components(rem.graph);
        // a connected component is edge-bearing exactly when it has >= 2 vertices
        std::vector<const std::vector<VertexId>*> nontrivial;
        std::vector<VertexId> level_orig;
        for (const auto& comp : comps) {
            if (comp.size() >= 2)
                nontrivial.push_back(&comp);
            else
                level_orig.push_back(rem.to_original[comp.front()]);
        }
        if (nontrivial.size() > 1) {
            // two edge-bearing components would give an induced 2K2
            VertexId a = rem.to_original[(*nontrivial[0])[0]];
            VertexId b = rem.to_original[rem.graph.neighbors((*nontrivial[0])[0]).front()];
            VertexId c = rem.to_original[(*nontrivial[1])[0]];
            VertexId d = rem.to_original[rem.graph.neighbors((*nontrivial[1])[0]).front()];
            throw NotTwoK2FreeError(a, b, c, d);
        }
        std::sort(level_orig.begin(), level_orig.end());
        tower.levels.push_back(std::move(level_orig));

        if (nontrivial.empty()) break;

        InducedGraph next = induced(rem.graph, *nontrivial[0]);
        for (auto& id : next.to_original) id = rem.to_original[id];
        cur = std::move(next);
    }
    return tower;
}

TowerVerdict validate_tower(const Graph& g, const CliqueTower& t) {
    int n = g.vertex_count();
    if (t.n != n) return {false, "vertex count mismatch"};
    if (t.cliques.size() != t.levels.size()) return {false, "clique/level count mismatch"};

    std::vector<int> hits(n, 0);
    for (const auto& q : t.cliques)
        for (VertexId v : q) {
            if (v < 0 || v >= n) return {false, "vertex id out of range"};
            ++hits[v];
        }
    for (const auto& d : t.levels)
        for (VertexId v : d) {
            if (v < 0 || v >= n) return {false, "vertex id out of range"};
            ++hits[v];
        }
    for (int v = 0; v < n; ++v)
        if (hits[v] != 1) return {false, "not a partition of V"};

    for (size_t i = 0; i < t.cliques.size(); ++i) {
        if (t.cliques[i].size() < 2) return {false, "clique smaller than 2"};
        if (i + 1 < t.cliques.size() && t.cliques[i].size() < t.cliques[i + 1].size())
            return {false, "sizes not non-increasing"};
        if (!is_clique(g, t.cliques[i])) return {false, "Q" + std::to_string(i + 1) + " not a clique"};
    }

    auto d = t.first_class_vertices();
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j)
            if (g.has_edge(d[i], d[j])) return {false, "D not independent"};

    for (size_t i = 0; i < t.cliques.size(); ++i)
        for (size_t j = i + 1; j < t.cliques.size(); ++j) {
            bool cross = false;
            for (VertexId u : t.cliques[i]) {
                for (VertexId v : t.cliques[j])
                    if (g.has_edge(u, v)) {
                        cross = true;
                        break;
                    }
                if (cross) break;
            }
            if (!cross)
                return {false, "no edge between Q" + std::to_string(i + 1) + " and Q" +
                                   std::to_string(j + 1)};
        }

    auto owner = t.clique_of();
    for (VertexId v : d)
        for (VertexId u : g.neighbors(v))
            if (owner[u] < 0) return {false, "D vertex with neighbor outside the cliques"};

    return {true, ""};
}

std::string serialize_tower(const CliqueTower& t) {
    std::string out;
    for (size_t i = 0; i < t.cliques.size(); ++i) {
        out += "Q" + std::to_string(i + 1) + ":";
        for (VertexId v : t.cliques[i]) out += " " + std::to_string(v);
        out += '\n';
        out += "D" + std::to_string(i + 1) + ":";
        for (VertexId v : t.levels[i]) out += " " + std::to_string(v);
        out += '\n';
    }
    return out;
}

}  // namespace twowalk
