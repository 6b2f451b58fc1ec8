#include "twowalk/gamma.hpp"

#include <algorithm>
#include <numeric>

#include "twowalk/errors.hpp"

namespace twowalk {

std::vector<int> GammaGraph::degrees() const {
    std::vector<int> deg(vertex_count(), 0);
    for (const auto& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

std::vector<int> GammaGraph::red_degrees() const {
    std::vector<int> deg(vertex_count(), 0);
    for (const auto& e : edges)
        if (e.color == EdgeClass::Red) {
            ++deg[e.u];
            ++deg[e.v];
        }
    return deg;
}

GammaGraph add_blue_edges(const CliqueTower& t, const FirstClassEdges& e) {
    GammaGraph gamma;
    gamma.clique_count = t.level_count();
    gamma.d_ids = t.first_class_vertices();

    std::vector<int> d_index(t.n, -1);
    for (size_t i = 0; i < gamma.d_ids.size(); ++i) d_index[gamma.d_ids[i]] = static_cast<int>(i);
    auto owner = t.clique_of();

    for (auto [d, q] : e.edges) {
        if (d_index[d] < 0 || owner[q] < 0)
            throw InternalError("first-class edge endpoint missing from the tower");
        int w = owner[q];
        int dprime = gamma.clique_count + d_index[d];
        gamma.edges.push_back({w, dprime, EdgeClass::Blue, d, q});
    }
    return gamma;
}

namespace {

std::vector<std::vector<int>> gamma_components(const GammaGraph& gamma) {
    int n = gamma.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : gamma.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : adj[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    // every component contains a w vertex, and the w ids come first, so the
    // smallest member ordering is the smallest-w ordering
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

}  // namespace

GammaGraph add_red_edges(GammaGraph gamma) {
    auto deg = gamma.degrees();
    auto comps = gamma_components(gamma);

    auto odd_in = [&](const std::vector<int>& comp) {
        std::vector<int> odd;
        for (int v : comp)
            if (deg[v] % 2) {
                if (!gamma.is_w(v)) throw InternalError("odd-degree D' vertex");
                odd.push_back(v);
            }
        return odd;
    };

    auto add_red = [&](int a, int b) {
        if (a == b) throw InternalError("red loop");
        gamma.edges.push_back({std::min(a, b), std::max(a, b), EdgeClass::Red});
    };

    if (comps.size() == 1) {
        // one component: a perfect pairing of the odd vertices, index order
        auto odd = odd_in(comps.front());
        if (odd.size() % 2) throw InternalError("odd number of odd-degree vertices");
        for (size_t i = 0; i + 1 < odd.size(); i += 2) add_red(odd[i], odd[i + 1]);
        return gamma;
    }

    // several components: representatives chained into a red cycle, the
    // leftover odd vertices paired within their own components
    size_t m = comps.size();
    std::vector<int> plus(m), minus(m);
    std::vector<std::vector<int>> leftover(m);
    for (size_t i = 0; i < m; ++i) {
        auto odd = odd_in(comps[i]);
        if (odd.size() % 2) throw InternalError("odd number of odd-degree vertices");
        if (!odd.empty()) {
            plus[i] = odd[0];
            minus[i] = odd[1];
            leftover[i].assign(odd.begin() + 2, odd.end());
        } else {
            int w = -1;
            for (int v : comps[i])
                if (gamma.is_w(v)) {
                    w = v;
                    break;
                }
            if (w < 0) throw InternalError("component without a w vertex");
            plus[i] = minus[i] = w;
        }
    }
    for (size_t i = 0; i < m; ++i) add_red(plus[i], minus[(i + 1) % m]);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j + 1 < leftover[i].size(); j += 2)
            add_red(leftover[i][j], leftover[i][j + 1]);
    return gamma;
}

GammaVerdict validate_gamma(const GammaGraph& gamma) {
    auto deg = gamma.degrees();
    auto red = gamma.red_degrees();
    std::vector<int> blue(gamma.vertex_count(), 0);
    for (const auto& e : gamma.edges) {
        if (e.u == e.v) return {false, "loop"};
        bool uw = gamma.is_w(e.u), vw = gamma.is_w(e.v);
        if (e.color == EdgeClass::Blue) {
            if (uw == vw) return {false, "blue edge not between a w vertex and D'"};
            ++blue[e.u];
            ++blue[e.v];
        } else if (e.color == EdgeClass::Red) {
            if (!uw || !vw) return {false, "red edge at a D' vertex"};
        } else {
            return {false, "edge class foreign to gamma"};
        }
    }
    for (int v = gamma.clique_count; v < gamma.vertex_count(); ++v) {
        if (blue[v] != 2) return {false, "D' vertex without exactly two blue edges"};
        if (red[v] != 0) return {false, "red edge at a D' vertex"};
    }
    for (int v = 0; v < gamma.clique_count; ++v)
        if (red[v] > 2) return {false, "w vertex with more than two red edges"};
    for (int v = 0; v < gamma.vertex_count(); ++v)
        if (deg[v] % 2) return {false, "odd degree"};
    if (gamma_components(gamma).size() > 1) return {false, "gamma disconnected"};
    return {true, ""};
}

}  // namespace twowalk
