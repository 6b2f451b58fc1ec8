#include "twowalk/multigraph.hpp"

#include <stdexcept>

namespace twowalk {

std::string_view edge_class_name(EdgeClass c) {
    switch (c) {
        case EdgeClass::First: return "first";
        case EdgeClass::Second: return "second";
        case EdgeClass::Third: return "third";
        case EdgeClass::Blue: return "blue";
        case EdgeClass::Red: return "red";
    }
    return "?";
}

uint64_t MultiGraph::key(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    return static_cast<uint64_t>(u) * static_cast<uint64_t>(vertex_count()) +
           static_cast<uint64_t>(v);
}

void MultiGraph::add_edge(VertexId u, VertexId v, EdgeClass cls) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::out_of_range("vertex id out of range");
    if (u == v) throw std::invalid_argument("loop in multigraph");
    edges_.push_back({u, v, cls});
    ++deg_[u];
    ++deg_[v];
    ++mult_[key(u, v)];
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const {
    auto it = mult_.find(key(u, v));
    return it == mult_.end() ? 0 : it->second;
}

std::map<VertexId, int> Walk::visit_counts() const {
    std::map<VertexId, int> counts;
    for (VertexId v : seq) ++counts[v];
    if (seq.size() >= 2 && seq.front() == seq.back()) --counts[seq.front()];
    return counts;
}

}  // namespace twowalk
