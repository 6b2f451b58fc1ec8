#include "twowalk/first_class.hpp"

#include <algorithm>

#include "twowalk/errors.hpp"

namespace twowalk {

std::vector<VertexId> FirstClassEdges::saturated_q() const {
    std::vector<VertexId> q;
    q.reserve(edges.size());
    for (auto [d, qv] : edges) q.push_back(qv);
    std::sort(q.begin(), q.end());
    return q;
}

namespace {

// Kuhn's algorithm over the two unit copies of each D vertex. owner[q] is
// the left copy currently holding q, encoded 2*di + copy.
struct DemandMatcher {
    const std::vector<std::vector<VertexId>>& dq;  // per D index, Q-neighbors ascending
    std::vector<int> owner;                        // by G vertex id, -1 free
    std::vector<char> visited;                     // by G vertex id, per augmentation

    bool augment(int left) {
        for (VertexId q : dq[left / 2]) {
            if (visited[q]) continue;
            visited[q] = 1;
            if (owner[q] < 0 || augment(owner[q])) {
                owner[q] = left;
                return true;
            }
        }
        return false;
    }
};

}  // namespace

std::variant<FirstClassEdges, HallViolator> select_first_class_edges(const Graph& g,
                                                                     const CliqueTower& t) {
    auto d_vertices = t.first_class_vertices();
    if (d_vertices.empty()) return FirstClassEdges{};

    auto owner_clique = t.clique_of();
    std::vector<std::vector<VertexId>> dq(d_vertices.size());
    for (size_t i = 0; i < d_vertices.size(); ++i) {
        for (VertexId u : g.neighbors(d_vertices[i])) {
            if (owner_clique[u] < 0)
                throw InternalError("D vertex adjacent to a non-clique vertex");
            dq[i].push_back(u);  // adjacency is sorted already
        }
    }

    DemandMatcher matcher{dq, std::vector<int>(g.vertex_count(), -1),
                          std::vector<char>(g.vertex_count(), 0)};

    for (size_t i = 0; i < d_vertices.size(); ++i) {
        for (int copy = 0; copy < 2; ++copy) {
            std::fill(matcher.visited.begin(), matcher.visited.end(), 0);
            if (matcher.augment(static_cast<int>(2 * i + copy))) continue;

            // Hall failure: the alternating tree is exactly the visited q's
            // and the D vertices owning them, plus the vertex that failed.
            std::vector<VertexId> d0{d_vertices[i]};
            for (VertexId q = 0; q < g.vertex_count(); ++q)
                if (matcher.visited[q]) d0.push_back(d_vertices[matcher.owner[q] / 2]);
            std::sort(d0.begin(), d0.end());
            d0.erase(std::unique(d0.begin(), d0.end()), d0.end());
            return HallViolator{std::move(d0)};
        }
    }

    FirstClassEdges result;
    for (VertexId q = 0; q < g.vertex_count(); ++q)
        if (matcher.owner[q] >= 0)
            result.edges.emplace_back(d_vertices[matcher.owner[q] / 2], q);
    std::sort(result.edges.begin(), result.edges.end());
    return result;
}

std::optional<ToughnessCertificate> certificate_from_violator(const Graph& g,
                                                              std::span<const VertexId> d0) {
    std::vector<char> in_cut(g.vertex_count(), 0);
    for (VertexId d : d0)
        for (VertexId u : g.neighbors(d)) in_cut[u] = 1;

    std::vector<VertexId> cut;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (in_cut[v]) cut.push_back(v);

    std::vector<VertexId> rest;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!in_cut[v]) rest.push_back(v);
    int omega = static_cast<int>(components(induced(g, rest).graph).size());
    if (omega <= 1) return std::nullopt;  // degenerate, no toughness conclusion

    Rational ratio(static_cast<long long>(cut.size()), omega);
    if (!(ratio < Rational(2, 1)))
        throw InternalError("violator produced a ratio >= 2");
    return ToughnessCertificate{std::move(cut), omega, ratio};
}

}  // namespace twowalk
