#include <doctest.h>

#include "test_util.hpp"
#include "twowalk/analysis.hpp"
#include "twowalk/errors.hpp"
#include "twowalk/generators.hpp"
#include "twowalk/h_builder.hpp"
#include "twowalk/verifier.hpp"

using namespace twowalk;
using namespace twowalk::testutil;

TEST_SUITE("generators") {

TEST_CASE("split: degenerate parameters") {
    CHECK(gen_split(4, 0, 0.5, 1) == complete_graph(4));
    Graph attached = gen_split(4, 2, 1.0, 1);
    CHECK(attached.vertex_count() == 6);
    CHECK(attached.edge_count() == 6 + 8);
    CHECK(gen_split(1, 3, 1.0, 1) == star_graph(3));
}

TEST_CASE("determinism: identical seeds give identical graphs") {
    for (uint64_t seed : {1ull, 42ull, 0xDEADBEEFull}) {
        CHECK(gen_split(5, 3, 0.6, seed) == gen_split(5, 3, 0.6, seed));
        CHECK(gen_co_chordal(9, 0.4, seed) == gen_co_chordal(9, 0.4, seed));
    }
    // and different seeds are not all the same graph
    bool differs = false;
    for (uint64_t s = 0; s < 8 && !differs; ++s)
        differs = !(gen_split(5, 3, 0.5, s) == gen_split(5, 3, 0.5, s + 100));
    CHECK(differs);
}

TEST_CASE("split and co-chordal outputs are 2K2-free") {
    SplitMix64 rng(89);
    for (int trial = 0; trial < 300; ++trial) {
        Graph split = gen_split(1 + trial % 7, trial % 6, 0.1 * (trial % 11), rng.next());
        CHECK(is_2k2_free(split));
        Graph coch = gen_co_chordal(1 + trial % 14, 0.1 + 0.08 * (trial % 10), rng.next());
        CHECK(is_2k2_free(coch));
    }
}

TEST_CASE("chordal intermediates admit a perfect elimination ordering") {
    SplitMix64 rng(97);
    for (int trial = 0; trial < 120; ++trial) {
        Graph chordal = gen_chordal(1 + trial % 12, 0.2 + 0.06 * (trial % 10), rng.next());
        CHECK(is_chordal_peo(chordal));
    }
    CHECK(gen_co_chordal(1, 0.5, 3).vertex_count() == 1);
}

TEST_CASE("the 2-tough filter accepts and rejects the right candidates") {
    CHECK(toughness_exact(complete_graph(5)).at_least(Rational(2, 1)));
    CHECK_FALSE(toughness_exact(cycle_graph(4)).at_least(Rational(2, 1)));
    CHECK_FALSE(is_2k2_free(two_k2()));
}

TEST_CASE("filtered generator returns 2-tough 2K2-free graphs") {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 8 + trial;
        Graph g = gen_filtered_2tough(n, rng.next());
        CHECK(g.vertex_count() == n);
        CHECK(is_2k2_free(g));
        CHECK(toughness_exact(g).at_least(Rational(2, 1)));
    }
}

TEST_CASE("every filtered instance walks constructively") {
    SplitMix64 rng(103);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = gen_filtered_2tough(8 + trial % 9, rng.next());
        auto r = two_walk(g);
        REQUIRE(r.outcome == WalkOutcome::WalkFound);
        CHECK(r.path == WalkPath::Constructive);
        CHECK(verify_two_walk(g, r.walk).ok());
    }
}

TEST_CASE("fixed graphs: counts, freeness, and the unknown-name error") {
    Graph g1 = fixed_graph("G1");
    CHECK(g1.vertex_count() == 6);
    CHECK(g1.edge_count() == 10);
    CHECK(is_2k2_free(g1));

    Graph g2 = fixed_graph("G2");
    CHECK(g2.vertex_count() == 7);
    CHECK(g2.edge_count() == 13);
    CHECK(is_2k2_free(g2));

    CHECK_THROWS_AS(fixed_graph("G9"), std::invalid_argument);
}

}  // TEST_SUITE
