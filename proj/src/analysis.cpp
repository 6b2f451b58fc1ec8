#include "twowalk/analysis.hpp"

#include <algorithm>
#include <unordered_set>

#include "twowalk/errors.hpp"

namespace twowalk {

namespace {

// Smallest edge inside `set`, scanning members in ascending order; nullopt
// when the induced subgraph on `set` is edgeless.
std::optional<std::pair<int, int>> edge_inside(const std::vector<Bitset>& rows,
                                               const Bitset& set) {
    for (int c = set.first(); c >= 0; c = set.next(c)) {
        int d = rows[c].first_common(set);
        if (d >= 0) return std::make_pair(std::min(c, d), std::max(c, d));
    }
    return std::nullopt;
}

}  // namespace

std::optional<TwoK2Witness> find_induced_2k2(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 4 || g.edge_count() < 2) return std::nullopt;

    auto rows = g.adjacency_bits();
    Bitset full(n);
    full.fill();

    // A vertex whose non-neighborhood is edgeless cannot sit on the first
    // edge of any induced 2K2; skipping its edges keeps dense inputs cheap.
    std::vector<char> has_far_edge(n, 0);
    for (int v = 0; v < n; ++v) {
        Bitset x = full;
        x.subtract(rows[v]);
        x.reset(v);
        has_far_edge[v] = edge_inside(rows, x).has_value();
    }

    for (int a = 0; a < n; ++a) {
        if (!has_far_edge[a]) continue;
        for (int b : g.neighbors(a)) {
            if (b < a || !has_far_edge[b]) continue;
            Bitset x = full;
            x.subtract(rows[a]);
            x.subtract(rows[b]);
            x.reset(a);
            x.reset(b);
            if (auto e = edge_inside(rows, x))
                return TwoK2Witness{a, b, e->first, e->second};
        }
    }
    return std::nullopt;
}

bool lemma1_check(const Graph& g, std::span<const VertexId> a) {
    int n = g.vertex_count();
    std::vector<char> removed(n, 0);
    for (VertexId v : a) removed[v] = 1;

    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack;
    int edge_bearing = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (removed[s] || seen[s]) continue;
        bool has_edge = false;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : g.neighbors(v)) {
                if (removed[u]) continue;
                has_edge = true;
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        if (has_edge && ++edge_bearing > 1) return false;
    }
    return true;
}

namespace {

void bron_kerbosch(std::vector<int>& r, Bitset p, Bitset x, const std::vector<Bitset>& rows,
                   std::vector<std::vector<VertexId>>& out) {
    if (!p.any() && !x.any()) {
        out.push_back(std::vector<VertexId>(r.begin(), r.end()));
        return;
    }
    // pivot: maximize |P n N(u)| over P u X, smallest id on ties
    int pivot = -1, best = -1;
    Bitset px = p | x;
    px.for_each([&](int u) {
        int c = p.intersection_count(rows[u]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    });
    Bitset cand = p;
    cand.subtract(rows[pivot]);
    cand.for_each([&](int v) {
        r.push_back(v);
        bron_kerbosch(r, p & rows[v], x & rows[v], rows, out);
        r.pop_back();
        p.reset(v);
        x.set(v);
    });
}

}  // namespace

std::vector<std::vector<VertexId>> maximal_cliques(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return {};
    auto rows = g.adjacency_bits();
    Bitset p(n);
    p.fill();
    std::vector<int> r;
    std::vector<std::vector<VertexId>> out;
    bron_kerbosch(r, p, Bitset(n), rows, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<VertexId>> maximum_cliques(const Graph& g) {
    auto all = maximal_cliques(g);
    size_t best = 0;
    for (const auto& c : all) best = std::max(best, c.size());
    std::vector<std::vector<VertexId>> out;
    for (auto& c : all)
        if (c.size() == best) out.push_back(std::move(c));
    return out;  // already lexicographically sorted
}

int clique_number(const Graph& g) {
    auto cliques = maximum_cliques(g);
    return cliques.empty() ? 0 : static_cast<int>(cliques.front().size());
}

Bitset dominated_set(const Graph& g, std::span<const VertexId> a) {
    Bitset dom(g.vertex_count());
    for (VertexId v : a) {
        dom.set(v);
        for (VertexId u : g.neighbors(v)) dom.set(u);
    }
    return dom;
}

bool is_dominating(const Graph& g, std::span<const VertexId> a) {
    return dominated_set(g, a).count() == g.vertex_count();
}

bool is_weakly_dominating(const Graph& g, std::span<const VertexId> a) {
    Bitset dom = dominated_set(g, a);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (dom.test(u)) continue;
        for (VertexId v : g.neighbors(u))
            if (u < v && !dom.test(v)) return false;
    }
    return true;
}

WeaklyDominatingClique find_weakly_dominating_maximum_clique(const Graph& g) {
    if (g.edge_count() == 0)
        throw NoWeaklyDominatingCliqueError("graph has no edges");
    auto candidates = maximum_cliques(g);
    int tried = 0;
    for (auto& c : candidates) {
        ++tried;
        if (is_weakly_dominating(g, c)) return {std::move(c), tried};
    }
    throw NoWeaklyDominatingCliqueError(
        "no maximum clique is weakly dominating (input not 2K2-free?)");
}

namespace {

int component_count_masked(const std::vector<uint32_t>& adj, uint32_t alive) {
    int count = 0;
    uint32_t rem = alive;
    while (rem) {
        ++count;
        uint32_t comp = rem & (~rem + 1);  // lowest bit
        for (;;) {
            uint32_t grow = comp;
            uint32_t frontier = comp;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                grow |= adj[v] & rem;
            }
            if (grow == comp) break;
            comp = grow;
        }
        rem &= ~comp;
    }
    return count;
}

}  // namespace

ToughnessValue toughness_exact(const Graph& g, int limit_n) {
    int n = g.vertex_count();
    if (n > limit_n || n > 30)
        throw TooLargeError("toughness_exact: n = " + std::to_string(n) + " exceeds limit " +
                            std::to_string(std::min(limit_n, 30)));
    if (n == 0) return ToughnessValue::inf();

    std::vector<uint32_t> adj(n, 0);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : g.neighbors(u)) adj[u] |= 1u << v;

    uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    if (component_count_masked(adj, full) > 1)
        return ToughnessValue::of(Rational(0, 1));  // disconnected: the empty cut witnesses 0

    std::optional<Rational> best;
    for (int size = 1; size <= n - 2; ++size) {
        // Gosper's hack: all subsets of the given size, ascending
        uint32_t s = (1u << size) - 1;
        while (s <= full) {
            int cc = component_count_masked(adj, full & ~s);
            if (cc > 1) {
                Rational r(size, cc);
                if (!best || r < *best) best = r;
            }
            uint32_t c = s & (~s + 1);
            uint32_t r = s + c;
            if (r > full) break;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return best ? ToughnessValue::of(*best) : ToughnessValue::inf();
}

namespace {

struct HamSearch {
    const Graph& g;
    std::vector<uint32_t> adj;
    int n;
    std::vector<VertexId> path;
    uint32_t visited = 0;

    explicit HamSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {
        adj.assign(n, 0);
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v : g.neighbors(u)) adj[u] |= 1u << v;
    }

    bool viable(uint32_t rest, int entry) const {
        if (!rest) return true;
        // every unvisited vertex still needs two usable incidences
        uint32_t scan = rest;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            uint32_t open = adj[v] & (rest | (1u << entry) | 1u);
            if (std::popcount(open) < 2) return false;
        }
        // and the unvisited set plus the entry point must hang together
        uint32_t comp = 1u << entry;
        for (;;) {
            uint32_t grow = comp;
            uint32_t frontier = comp;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                grow |= adj[v] & rest;
            }
            grow &= rest | (1u << entry);
            if (grow == comp) break;
            comp = grow;
        }
        return (comp & rest) == rest;
    }

    bool dfs(int v) {
        uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
        if (visited == full) return (adj[v] >> 0) & 1;  // close back to vertex 0
        for (VertexId u : g.neighbors(v)) {
            if (u == 0 || (visited >> u) & 1) continue;
            visited |= 1u << u;
            path.push_back(u);
            if (viable(full & ~visited, u) && dfs(u)) return true;
            path.pop_back();
            visited &= ~(1u << u);
        }
        return false;
    }
};

}  // namespace

std::optional<Walk> hamiltonian_cycle_exact(const Graph& g, int limit_n) {
    int n = g.vertex_count();
    if (n > limit_n || n > 30)
        throw TooLargeError("hamiltonian_cycle_exact: n = " + std::to_string(n) +
                            " exceeds limit " + std::to_string(std::min(limit_n, 30)));
    if (n == 0) return std::nullopt;
    if (n == 1) return Walk{{0}};
    if (n == 2) return std::nullopt;
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) < 2) return std::nullopt;

    HamSearch search(g);
    search.path.push_back(0);
    search.visited = 1;
    if (!search.dfs(0)) return std::nullopt;
    search.path.push_back(0);
    return Walk{std::move(search.path)};
}

}  // namespace twowalk
