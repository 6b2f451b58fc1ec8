#include "twowalk/verifier.hpp"

#include <algorithm>
#include <unordered_map>

namespace twowalk {

namespace {

void flag(VerdictReport& r, const std::string& check, const std::string& detail) {
    r.violations.push_back({check, detail});
}

}  // namespace

VerdictReport verify_two_walk(const Graph& g, const Walk& w) {
    VerdictReport report;
    int n = g.vertex_count();
    const auto& seq = w.seq;

    if (seq.empty()) {
        if (n != 0) flag(report, "spanning", "empty walk on a non-empty graph");
        return report;
    }
    for (VertexId v : seq)
        if (v < 0 || v >= n) {
            flag(report, "range", "vertex " + std::to_string(v) + " out of range");
            return report;
        }

    if (seq.size() >= 2 && seq.front() != seq.back())
        flag(report, "closed", "first vertex differs from last");

    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.has_edge(seq[i], seq[i + 1]))
            flag(report, "adjacency",
                 std::to_string(seq[i]) + " and " + std::to_string(seq[i + 1]) +
                     " are not adjacent (position " + std::to_string(i) + ")");

    std::vector<int> counts(n, 0);
    for (VertexId v : seq) ++counts[v];
    if (seq.size() >= 2 && seq.front() == seq.back()) --counts[seq.front()];

    for (VertexId v = 0; v < n; ++v) {
        if (counts[v] == 0)
            flag(report, "spanning", "vertex " + std::to_string(v) + " missing");
        else if (counts[v] > 2)
            flag(report, "visits",
                 "vertex " + std::to_string(v) + " visited " + std::to_string(counts[v]) +
                     " times");
    }
    return report;
}

VerdictReport verify_h(const Graph& g, const HGraph& h) {
    VerdictReport report;
    int n = g.vertex_count();
    if (h.vertex_count() != n) {
        flag(report, "vertices", "vertex count mismatch");
        return report;
    }

    std::vector<int> deg(n, 0);
    std::unordered_map<uint64_t, int> mult;
    std::vector<std::vector<VertexId>> adj(n);
    for (const auto& e : h.edges()) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            flag(report, "range", "edge endpoint out of range");
            return report;
        }
        if (e.cls != EdgeClass::First && e.cls != EdgeClass::Second &&
            e.cls != EdgeClass::Third)
            flag(report, "classes", "edge class foreign to H");
        if (!g.has_edge(e.u, e.v))
            flag(report, "subgraph", "pair (" + std::to_string(e.u) + "," +
                                         std::to_string(e.v) + ") is not an edge of G");
        uint64_t k =
            static_cast<uint64_t>(std::min(e.u, e.v)) * n + static_cast<VertexId>(std::max(e.u, e.v));
        ++mult[k];
        ++deg[e.u];
        ++deg[e.v];
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (const auto& [k, m] : mult)
        if (m > 2)
            flag(report, "multiplicity",
                 "pair (" + std::to_string(k / n) + "," + std::to_string(k % n) +
                     ") has multiplicity " + std::to_string(m));
    for (VertexId v = 0; v < n; ++v) {
        if (deg[v] == 0)
            flag(report, "spanning", "vertex " + std::to_string(v) + " missing from H");
        else if (deg[v] != 2 && deg[v] != 4)
            flag(report, "degrees",
                 "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]));
    }
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
        if (reached != n) flag(report, "connected", "H is disconnected");
    }
    return report;
}

VerdictReport verify_gamma(const GammaGraph& gamma) {
    VerdictReport report;
    int n = gamma.vertex_count();
    std::vector<int> deg(n, 0), red(n, 0), blue(n, 0);
    std::vector<std::vector<int>> adj(n);

    for (const auto& e : gamma.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            flag(report, "range", "edge endpoint out of range");
            return report;
        }
        if (e.u == e.v) flag(report, "loops", "loop at " + std::to_string(e.u));
        ++deg[e.u];
        ++deg[e.v];
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
        if (e.color == EdgeClass::Blue) {
            if (gamma.is_w(e.u) == gamma.is_w(e.v))
                flag(report, "blue", "blue edge not between a w vertex and D'");
            ++blue[e.u];
            ++blue[e.v];
        } else if (e.color == EdgeClass::Red) {
            if (!gamma.is_w(e.u) || !gamma.is_w(e.v))
                flag(report, "red", "red edge off the w vertices");
            ++red[e.u];
            ++red[e.v];
        } else {
            flag(report, "classes", "edge class foreign to gamma");
        }
    }
    for (int v = gamma.clique_count; v < n; ++v) {
        if (blue[v] != 2)
            flag(report, "blue", "D' vertex " + std::to_string(v) + " has " +
                                     std::to_string(blue[v]) + " blue edges");
        if (red[v] != 0)
            flag(report, "red", "red edge at D' vertex " + std::to_string(v));
    }
    for (int v = 0; v < gamma.clique_count; ++v)
        if (red[v] > 2)
            flag(report, "red",
                 "w vertex " + std::to_string(v) + " has " + std::to_string(red[v]) +
                     " red edges");
    for (int v = 0; v < n; ++v)
        if (deg[v] % 2)
            flag(report, "even", "vertex " + std::to_string(v) + " has odd degree");
    if (n > 0) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        if (reached != n) flag(report, "connected", "gamma is disconnected");
    }
    return report;
}

VerdictReport verify_certificate(const Graph& g, const ToughnessCertificate& c) {
    VerdictReport report;
    int n = g.vertex_count();

    std::vector<char> in_cut(n, 0);
    for (VertexId v : c.cut) {
        if (v < 0 || v >= n) {
            flag(report, "range", "cut vertex out of range");
            return report;
        }
        in_cut[v] = 1;
    }

    std::vector<char> seen(n, 0);
    int comps = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (in_cut[s] || seen[s]) continue;
        ++comps;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : g.neighbors(v))
                if (!in_cut[u] && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
    }

    if (comps <= 1)
        flag(report, "components", "removing the cut leaves " + std::to_string(comps) +
                                       " component(s)");
    if (comps != c.component_count)
        flag(report, "component_count",
             "stored " + std::to_string(c.component_count) + ", recomputed " +
                 std::to_string(comps));
    Rational expected(static_cast<long long>(c.cut.size()), comps > 0 ? comps : 1);
    if (comps > 0 && c.ratio != expected)
        flag(report, "ratio", "stored " + c.ratio.str() + ", recomputed " + expected.str());
    if (!(c.ratio < Rational(2, 1)))
        flag(report, "ratio", "ratio " + c.ratio.str() + " is not below 2");
    return report;
}

}  // namespace twowalk
