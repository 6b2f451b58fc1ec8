#include <doctest.h>

#include "test_util.hpp"
#include "twowalk/analysis.hpp"
#include "twowalk/decomposition.hpp"
#include "twowalk/errors.hpp"
#include "twowalk/generators.hpp"

using namespace twowalk;
using namespace twowalk::testutil;

TEST_SUITE("decomposition") {

TEST_CASE("tower of K4 is a single clique") {
    CliqueTower t = clique_tower(complete_graph(4));
    REQUIRE(t.level_count() == 1);
    CHECK(t.cliques[0] == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(t.levels[0].empty());
    CHECK(validate_tower(complete_graph(4), t).ok);
}

TEST_CASE("tower of G1") {
    Graph g1 = fixed_graph("G1");
    CliqueTower t = clique_tower(g1);
    REQUIRE(t.level_count() == 1);
    CHECK(t.cliques[0] == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(t.levels[0] == std::vector<VertexId>{4, 5});
    CHECK(validate_tower(g1, t).ok);
}

TEST_CASE("tower of G2") {
    Graph g2 = fixed_graph("G2");
    CliqueTower t = clique_tower(g2);
    REQUIRE(t.level_count() == 2);
    CHECK(t.cliques[0] == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(t.levels[0] == std::vector<VertexId>{6});
    CHECK(t.cliques[1] == std::vector<VertexId>{4, 5});
    CHECK(t.levels[1].empty());
    CHECK(validate_tower(g2, t).ok);
}

TEST_CASE("tower on a disconnected 2K2-free input puts isolated vertices in D1") {
    Graph g(5);  // triangle plus two isolated vertices
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    CliqueTower t = clique_tower(g);
    REQUIRE(t.level_count() == 1);
    CHECK(t.cliques[0] == std::vector<VertexId>{0, 1, 2});
    CHECK(t.levels[0] == std::vector<VertexId>{3, 4});
    CHECK(validate_tower(g, t).ok);
}

TEST_CASE("tower rejects a 2K2 remainder") {
    // K3 dominating everything, remainder two disjoint edges -> the input
    // itself contains a 2K2 and the peel must notice
    Graph g(7);
    for (int u = 0; u < 3; ++u)
        for (int v = u + 1; v < 3; ++v) g.add_edge(u, v);
    g.add_edge(3, 4);
    g.add_edge(5, 6);
    for (int v = 3; v < 7; ++v) g.add_edge(0, v);
    g.add_edge(1, 3);
    g.add_edge(1, 5);
    CHECK_FALSE(is_2k2_free(g));
    CHECK_THROWS_AS(clique_tower(g), NotTwoK2FreeError);
}

TEST_CASE("determinism: identical towers across runs") {
    SplitMix64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = gen_co_chordal(4 + trial % 9, 0.4, rng.next());
        if (g.edge_count() == 0) continue;
        CliqueTower a = clique_tower(g);
        CliqueTower b = clique_tower(g);
        CHECK(a.cliques == b.cliques);
        CHECK(a.levels == b.levels);
    }
}

TEST_CASE("round-trip validation over generated corpora") {
    SplitMix64 rng(59);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = trial % 2 == 0 ? gen_co_chordal(3 + trial % 10, 0.45, rng.next())
                                 : gen_split(2 + trial % 6, trial % 5, 0.55, rng.next());
        if (g.edge_count() == 0) continue;
        REQUIRE(is_2k2_free(g));
        CliqueTower t = clique_tower(g);
        auto verdict = validate_tower(g, t);
        INFO(verdict.violation);
        CHECK(verdict.ok);
    }
}

TEST_CASE("weak domination chain: later cliques are weakly dominated by earlier ones") {
    SplitMix64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = gen_co_chordal(5 + trial % 9, 0.5, rng.next());
        if (g.edge_count() == 0) continue;
        CliqueTower t = clique_tower(g);
        for (int i = 0; i < t.level_count(); ++i)
            for (int j = i + 1; j < t.level_count(); ++j)
                for (VertexId u : t.cliques[j])
                    for (VertexId v : t.cliques[j]) {
                        if (u >= v || !g.has_edge(u, v)) continue;
                        bool dominated = false;
                        for (VertexId q : t.cliques[i]) {
                            if (g.has_edge(u, q) || g.has_edge(v, q)) {
                                dominated = true;
                                break;
                            }
                        }
                        CHECK(dominated);
                    }
    }
}

TEST_CASE("validate_tower flags tampering") {
    Graph g1 = fixed_graph("G1");
    CliqueTower t = clique_tower(g1);

    CliqueTower bad_d = t;
    bad_d.cliques[0] = {0, 1};
    bad_d.levels[0] = {2, 3, 4, 5};  // 2 and 3 are adjacent
    CHECK(validate_tower(g1, bad_d).violation == "D not independent");

    CliqueTower bad_sizes = t;
    bad_sizes.cliques = {{4, 0}, {1, 2, 3}};
    bad_sizes.levels = {{}, {5}};
    CHECK(validate_tower(g1, bad_sizes).violation == "sizes not non-increasing");

    CliqueTower bad_part = t;
    bad_part.levels[0] = {4};
    CHECK(validate_tower(g1, bad_part).violation == "not a partition of V");
}

TEST_CASE("serialization format") {
    CliqueTower t = clique_tower(fixed_graph("G2"));
    CHECK(serialize_tower(t) == "Q1: 0 1 2 3\nD1: 6\nQ2: 4 5\nD2:\n");
}

}  // TEST_SUITE
