#include "twowalk/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <stdexcept>

#include "twowalk/errors.hpp"

namespace twowalk {

Graph Graph::from_edges(int n, std::span<const std::pair<VertexId, VertexId>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("vertex id out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    int m = 0;
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        m += static_cast<int>(list.size());
    }
    g.m_ = m / 2;
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    const auto& list = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    VertexId target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(list.begin(), list.end(), target);
}

void Graph::add_edge(VertexId u, VertexId v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::out_of_range("vertex id out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it != adj_[u].end() && *it == v) return;
    adj_[u].insert(it, v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(m_);
    for (VertexId u = 0; u < vertex_count(); ++u)
        for (VertexId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Bitset Graph::neighbor_bits(VertexId v) const {
    Bitset b(vertex_count());
    for (VertexId u : adj_[v]) b.set(u);
    return b;
}

std::vector<Bitset> Graph::adjacency_bits() const {
    std::vector<Bitset> rows;
    rows.reserve(vertex_count());
    for (VertexId v = 0; v < vertex_count(); ++v) rows.push_back(neighbor_bits(v));
    return rows;
}

namespace {

bool parse_int(std::string_view tok, long long& out) {
    if (tok.empty()) return false;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return res.ec == std::errc() && res.ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    bool have_header = false;
    long long header_n = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
    long long max_id = -1;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        auto toks = split_ws(line);
        if (toks.empty() || toks[0].front() == '#') continue;

        if (toks[0] == "p") {
            if (have_header || !edges.empty())
                throw ParseError(line_no, "unexpected header line");
            long long m = 0;
            if (toks.size() != 3 || !parse_int(toks[1], header_n) || !parse_int(toks[2], m) ||
                header_n < 0 || m < 0)
                throw ParseError(line_no, "malformed header");
            have_header = true;
            continue;
        }
        if (toks[0] == "e") {
            long long u = 0, v = 0;
            if (toks.size() != 3 || !parse_int(toks[1], u) || !parse_int(toks[2], v))
                throw ParseError(line_no, "malformed edge line");
            if (u < 0 || v < 0) throw ParseError(line_no, "negative vertex id");
            if (have_header && (u >= header_n || v >= header_n))
                throw ParseError(line_no, "vertex id out of range");
            if (u == v) throw ParseError(line_no, "self-loop");
            edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
            max_id = std::max({max_id, u, v});
            continue;
        }
        throw ParseError(line_no, "malformed line");
    }

    int n = have_header ? static_cast<int>(header_n) : static_cast<int>(max_id + 1);
    return Graph::from_edges(n, edges);
}

std::string serialize_graph(const Graph& g) {
    auto es = g.edges();
    std::string out = "p " + std::to_string(g.vertex_count()) + " " + std::to_string(es.size());
    out += '\n';
    for (auto [u, v] : es) {
        out += "e ";
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<VertexId>> comps;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<VertexId> comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

InducedGraph induced(const Graph& g, std::span<const VertexId> s) {
    std::vector<VertexId> ids(s.begin(), s.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    std::vector<int> local(g.vertex_count(), -1);
    for (size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] < 0 || ids[i] >= g.vertex_count())
            throw std::out_of_range("vertex id out of range");
        local[ids[i]] = static_cast<int>(i);
    }

    Graph sub(static_cast<int>(ids.size()));
    std::vector<std::pair<VertexId, VertexId>> es;
    for (VertexId u : ids)
        for (VertexId v : g.neighbors(u))
            if (u < v && local[v] >= 0) es.emplace_back(local[u], local[v]);
    return {Graph::from_edges(static_cast<int>(ids.size()), es), std::move(ids)};
}

bool is_clique(const Graph& g, std::span<const VertexId> s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || components(g).size() == 1;
}

}  // namespace twowalk
