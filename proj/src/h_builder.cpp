#include "twowalk/h_builder.hpp"

#include <algorithm>
#include <unordered_set>

#include "twowalk/errors.hpp"
#include "twowalk/verifier.hpp"

namespace twowalk {

HGraph step1_first_class(int n, const FirstClassEdges& e) {
    HGraph h(n);
    for (auto [d, q] : e.edges) h.add_edge(std::min(d, q), std::max(d, q), EdgeClass::First);
    return h;
}

void step2_second_class(const Graph& g, const CliqueTower& t, const GammaGraph& gamma,
                        HGraph& h) {
    for (const auto& e : gamma.edges) {
        if (e.color != EdgeClass::Red) continue;
        if (!gamma.is_w(e.u) || !gamma.is_w(e.v))
            throw InternalError("red edge off the w vertices");
        const auto& qi = t.cliques[e.u];
        const auto& qj = t.cliques[e.v];

        // prefer endpoints that are still even in H, then lexicographic
        int best_score = 3;
        std::pair<VertexId, VertexId> best{-1, -1};
        for (VertexId u : qi)
            for (VertexId v : qj) {
                if (!g.has_edge(u, v)) continue;
                int score = (h.degree(u) % 2) + (h.degree(v) % 2);
                auto pair = std::minmax(u, v);
                std::pair<VertexId, VertexId> cand{pair.first, pair.second};
                if (score < best_score || (score == best_score && cand < best)) {
                    best_score = score;
                    best = cand;
                }
            }
        if (best.first < 0) throw NoCrossEdgeError(e.u + 1, e.v + 1);
        h.add_edge(best.first, best.second, EdgeClass::Second);
    }
}

void step3_third_class(const Graph& g, const CliqueTower& t, HGraph& h) {
    auto add_third = [&](VertexId u, VertexId v, int times) {
        if (!g.has_edge(u, v))
            throw ConstructionFailedError("third-class edge not in G");
        if (h.multiplicity(u, v) + times > 2)
            throw ConstructionFailedError("third-class edge over multiplicity budget");
        for (int i = 0; i < times; ++i)
            h.add_edge(std::min(u, v), std::max(u, v), EdgeClass::Third);
    };

    for (const auto& clique : t.cliques) {
        // (a) perfectly match the odd-degree vertices, degree-3 ones first
        std::vector<VertexId> odd3, odd1;
        for (VertexId v : clique) {
            if (h.degree(v) % 2 == 0) continue;
            (h.degree(v) >= 3 ? odd3 : odd1).push_back(v);
        }
        std::vector<VertexId> odd = odd3;
        odd.insert(odd.end(), odd1.begin(), odd1.end());
        if (odd.size() % 2)
            throw ConstructionFailedError("odd number of odd-degree vertices in a clique");
        for (size_t i = 0; i + 1 < odd.size(); i += 2) add_third(odd[i], odd[i + 1], 1);

        // (b) close the degree-{0,2} vertices into a circle
        std::vector<VertexId> circle;
        for (VertexId v : clique)
            if (h.degree(v) == 0 || h.degree(v) == 2) circle.push_back(v);

        if (circle.size() >= 3) {
            for (size_t i = 0; i < circle.size(); ++i)
                add_third(circle[i], circle[(i + 1) % circle.size()], 1);
        } else if (circle.size() == 2) {
            // a circle on two vertices is a parallel pair, unless that would
            // exceed the 2*G budget (then both already hang on external edges)
            if (h.multiplicity(circle[0], circle[1]) == 0) add_third(circle[0], circle[1], 2);
        } else if (circle.size() == 1 && h.degree(circle[0]) == 0) {
            VertexId lone = circle[0];
            VertexId mate = -1;
            for (VertexId v : clique)
                if (v != lone && h.multiplicity(lone, v) == 0) {
                    mate = v;
                    break;
                }
            if (mate < 0)
                throw ConstructionFailedError("isolated clique vertex with no attachable mate");
            add_third(lone, mate, 2);
        }
    }
}

HVerdict validate_h(const Graph& g, const HGraph& h) {
    if (h.vertex_count() != g.vertex_count()) return {false, "vertex count mismatch"};
    int n = g.vertex_count();

    std::unordered_map<uint64_t, int> mult;
    std::vector<std::vector<VertexId>> adj(n);
    for (const auto& e : h.edges()) {
        if (e.cls != EdgeClass::First && e.cls != EdgeClass::Second && e.cls != EdgeClass::Third)
            return {false, "edge class foreign to H"};
        if (!g.has_edge(e.u, e.v)) return {false, "edge not in G"};
        uint64_t k = static_cast<uint64_t>(std::min(e.u, e.v)) * n + std::max(e.u, e.v);
        if (++mult[k] > 2) return {false, "pair multiplicity above 2"};
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (VertexId v = 0; v < n; ++v)
        if (h.degree(v) != 2 && h.degree(v) != 4)
            return {false, "vertex " + std::to_string(v) + " has degree " +
                               std::to_string(h.degree(v))};
    // connectivity over all of V (degrees above already force spanning)
    if (n > 0) {
        std::vector<char> seen(n, 0);
        std::vector<VertexId> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : adj[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        if (reached != n) return {false, "H disconnected"};
    }
    return {true, ""};
}

Walk euler_circuit(const MultiGraph& h) {
    int n = h.vertex_count();
    if (h.occurrence_count() == 0) {
        if (n == 1) return Walk{{0}};
        throw NotEulerianError("no edges");
    }
    for (VertexId v = 0; v < n; ++v) {
        if (h.degree(v) % 2) throw NotEulerianError("odd degree");
        if (h.degree(v) == 0) throw NotEulerianError("isolated vertex");
    }

    // incidence lists sorted by (neighbor, occurrence) for a deterministic tour
    std::vector<std::vector<std::pair<VertexId, int>>> inc(n);
    for (int i = 0; i < h.occurrence_count(); ++i) {
        const auto& e = h.edges()[i];
        inc[e.u].emplace_back(e.v, i);
        inc[e.v].emplace_back(e.u, i);
    }
    for (auto& list : inc) std::sort(list.begin(), list.end());

    std::vector<size_t> cursor(n, 0);
    std::vector<char> used(h.occurrence_count(), 0);
    std::vector<VertexId> stack{0}, circuit;
    while (!stack.empty()) {
        VertexId v = stack.back();
        while (cursor[v] < inc[v].size() && used[inc[v][cursor[v]].second]) ++cursor[v];
        if (cursor[v] == inc[v].size()) {
            circuit.push_back(v);
            stack.pop_back();
        } else {
            auto [u, idx] = inc[v][cursor[v]];
            used[idx] = 1;
            stack.push_back(u);
        }
    }
    if (static_cast<int>(circuit.size()) != h.occurrence_count() + 1)
        throw NotEulerianError("multigraph disconnected");
    std::reverse(circuit.begin(), circuit.end());
    return Walk{std::move(circuit)};
}

namespace {

struct TwoWalkSearch {
    const Graph& g;
    int n;
    std::vector<uint8_t> counts;
    std::vector<VertexId> seq;
    int covered = 1;
    std::vector<uint64_t> pow3;
    std::unordered_set<uint64_t> dead;

    explicit TwoWalkSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {
        counts.assign(n, 0);
        counts[0] = 1;
        seq.push_back(0);
        pow3.assign(n, 1);
        for (int i = 1; i < n; ++i) pow3[i] = pow3[i - 1] * 3;
    }

    uint64_t encode(VertexId at) const {
        uint64_t code = at;
        for (int i = 0; i < n; ++i) code = code * 3 + counts[i];
        return code;
    }

    bool dfs(VertexId v) {
        if (covered == n && v == 0) return true;
        uint64_t code = encode(v);
        if (dead.contains(code)) return false;
        // closing the walk does not count a new visit of the start
        if (covered == n && g.has_edge(v, 0)) {
            seq.push_back(0);
            return true;
        }
        for (VertexId u : g.neighbors(v)) {
            if (counts[u] >= 2) continue;
            if (++counts[u] == 1) ++covered;
            seq.push_back(u);
            if (dfs(u)) return true;
            seq.pop_back();
            if (--counts[u] == 0) --covered;
        }
        dead.insert(code);
        return false;
    }
};

}  // namespace

std::optional<Walk> exact_two_walk(const Graph& g, int limit_n) {
    int n = g.vertex_count();
    if (n > limit_n)
        throw TooLargeError("exact_two_walk: n = " + std::to_string(n) + " exceeds limit " +
                            std::to_string(limit_n));
    if (n == 0) return Walk{{}};
    if (n == 1) return Walk{{0}};
    if (!is_connected(g)) return std::nullopt;

    TwoWalkSearch search(g);
    if (!search.dfs(0)) return std::nullopt;
    return Walk{std::move(search.seq)};
}

namespace {

bool graph_complete(const Graph& g) {
    long long n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

TwoWalkResult fallback_search(const Graph& g, TwoWalkResult partial, const TwoWalkOptions& opts,
                              const std::string& why) {
    partial.note = why;
    try {
        if (auto walk = exact_two_walk(g, opts.fallback_limit)) {
            partial.outcome = WalkOutcome::WalkFound;
            partial.path = WalkPath::Fallback;
            partial.walk = std::move(*walk);
            return partial;
        }
        partial.outcome = WalkOutcome::NoWalkFound;
        partial.note += "; exact search found no 2-walk";
    } catch (const TooLargeError&) {
        partial.outcome = WalkOutcome::NoWalkFound;
        partial.note += "; fallback limit exceeded";
    }
    return partial;
}

}  // namespace

TwoWalkResult two_walk(const Graph& g, const TwoWalkOptions& opts) {
    TwoWalkResult result;
    int n = g.vertex_count();

    if (n == 0) {
        result.outcome = WalkOutcome::WalkFound;
        result.walk = Walk{{}};
        return result;
    }

    if (auto witness = find_induced_2k2(g)) {
        result.outcome = WalkOutcome::NotTwoK2Free;
        result.witness = *witness;
        return result;
    }

    if (n == 1) {
        result.outcome = WalkOutcome::WalkFound;
        result.walk = Walk{{0}};
        return result;
    }
    if (g.edge_count() == 0) {
        // several isolated vertices: the empty cut already shows tau = 0
        result.outcome = WalkOutcome::CertificateFound;
        result.certificate =
            ToughnessCertificate{{}, static_cast<int>(components(g).size()), Rational(0, 1)};
        return result;
    }
    if (n == 2) {
        result.outcome = WalkOutcome::WalkFound;
        result.walk = Walk{{0, 1, 0}};
        return result;
    }
    if (graph_complete(g)) {
        Walk w;
        for (VertexId v = 0; v < n; ++v) w.seq.push_back(v);
        w.seq.push_back(0);
        result.outcome = WalkOutcome::WalkFound;
        result.walk = std::move(w);
        return result;
    }

    try {
        CliqueTower tower = clique_tower(g);
        if (auto verdict = validate_tower(g, tower); !verdict.ok)
            throw ConstructionFailedError("tower invalid: " + verdict.violation);
        if (opts.keep_trace) result.trace.tower = tower;

        auto matched = select_first_class_edges(g, tower);
        if (std::holds_alternative<HallViolator>(matched)) {
            const auto& violator = std::get<HallViolator>(matched);
            if (auto cert = certificate_from_violator(g, violator.d0)) {
                result.outcome = WalkOutcome::CertificateFound;
                result.certificate = std::move(*cert);
                return result;
            }
            return fallback_search(g, std::move(result), opts,
                                   "fallback: degenerate Hall violator");
        }
        FirstClassEdges first = std::get<FirstClassEdges>(std::move(matched));
        if (opts.keep_trace) result.trace.first_class = first;

        GammaGraph gamma = add_red_edges(add_blue_edges(tower, first));
        if (auto verdict = validate_gamma(gamma); !verdict.ok)
            throw ConstructionFailedError("gamma invalid: " + verdict.violation);
        if (opts.keep_trace) result.trace.gamma = gamma;

        HGraph h = step1_first_class(n, first);
        step2_second_class(g, tower, gamma, h);
        step3_third_class(g, tower, h);
        if (auto verdict = validate_h(g, h); !verdict.ok)
            throw ConstructionFailedError("H invalid: " + verdict.violation);
        if (opts.keep_trace) result.trace.h = h;

        Walk walk = euler_circuit(h);
        if (auto verdict = verify_two_walk(g, walk); !verdict.ok())
            throw ConstructionFailedError("euler circuit failed verification: " +
                                          verdict.violations.front().check);

        result.outcome = WalkOutcome::WalkFound;
        result.path = WalkPath::Constructive;
        result.walk = std::move(walk);
        return result;
    } catch (const ConstructionFailedError& e) {
        return fallback_search(g, std::move(result), opts,
                               std::string("fallback: ") + e.what());
    } catch (const NoCrossEdgeError& e) {
        return fallback_search(g, std::move(result), opts,
                               std::string("fallback: ") + e.what());
    } catch (const NotEulerianError& e) {
        return fallback_search(g, std::move(result), opts,
                               std::string("fallback: ") + e.what());
    } catch (const NoWeaklyDominatingCliqueError& e) {
        return fallback_search(g, std::move(result), opts,
                               std::string("fallback: ") + e.what());
    }
}

}  // namespace twowalk
