#include "twowalk/json_io.hpp"

#include <algorithm>

namespace twowalk {

using nlohmann::json;

namespace {

json class_lists(const std::optional<HGraph>& h) {
    std::vector<std::pair<VertexId, VertexId>> first, second, third;
    if (h) {
        for (const auto& e : h->edges()) {
            auto pair = std::minmax(e.u, e.v);
            auto& bucket = e.cls == EdgeClass::First    ? first
                           : e.cls == EdgeClass::Second ? second
                                                        : third;
            bucket.emplace_back(pair.first, pair.second);
        }
    }
    auto dump = [](std::vector<std::pair<VertexId, VertexId>>& v) {
        std::sort(v.begin(), v.end());
        json arr = json::array();
        for (auto [a, b] : v) arr.push_back(json::array({a, b}));
        return arr;
    };
    return json{{"first", dump(first)}, {"second", dump(second)}, {"third", dump(third)}};
}

}  // namespace

json walk_json(const TwoWalkResult& r) {
    json visits = json::object();
    for (auto [v, c] : r.walk.visit_counts()) visits[std::to_string(v)] = c;
    return json{{"walk", r.walk.seq},
                {"visits", visits},
                {"path", r.path == WalkPath::Constructive ? "constructive" : "fallback"},
                {"classes", class_lists(r.trace.h)}};
}

json certificate_json(const ToughnessCertificate& c) {
    return json{{"cut", c.cut}, {"components", c.component_count}, {"ratio", c.ratio.str()}};
}

json verdict_json(const VerdictReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back(json{{"check", v.check}, {"detail", v.detail}});
    return json{{"ok", r.ok()}, {"violations", violations}};
}

json witness_json(const TwoK2Witness& w) { return json::array({w.a, w.b, w.c, w.d}); }

json trace_json(const PipelineTrace& t) {
    json out = json::object();
    if (t.tower) {
        json q = json::array(), d = json::array();
        for (const auto& c : t.tower->cliques) q.push_back(c);
        for (const auto& l : t.tower->levels) d.push_back(l);
        out["tower"] = json{{"Q", q}, {"D", d}, {"candidates_tried", t.tower->candidates_tried}};
    }
    if (t.first_class) {
        json edges = json::array();
        for (auto [dv, qv] : t.first_class->edges) edges.push_back(json::array({dv, qv}));
        out["first_class"] = edges;
    }
    if (t.gamma) {
        std::vector<std::array<int, 3>> blue;
        std::vector<std::array<int, 2>> red;
        for (const auto& e : t.gamma->edges) {
            if (e.color == EdgeClass::Blue)
                blue.push_back({e.g_d, std::min(e.u, e.v) + 1, e.g_q});
            else
                red.push_back({e.u + 1, e.v + 1});
        }
        std::sort(blue.begin(), blue.end());
        std::sort(red.begin(), red.end());
        json jb = json::array(), jr = json::array();
        for (auto& b : blue) jb.push_back(json::array({b[0], b[1], b[2]}));
        for (auto& r : red) jr.push_back(json::array({r[0], r[1]}));
        out["gamma"] = json{{"cliques", t.gamma->clique_count},
                            {"d_ids", t.gamma->d_ids},
                            {"blue", jb},
                            {"red", jr}};
    }
    return out;
}

Walk walk_from_json(const json& j) {
    Walk w;
    for (const auto& v : j.at("walk")) w.seq.push_back(v.get<VertexId>());
    return w;
}

}  // namespace twowalk
