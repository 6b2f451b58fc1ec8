#pragma once

#include <cstdint>
#include <string>

#include "twowalk/graph.hpp"

namespace twowalk {

// splitmix64. Every generator draws from this fixed, documented stream so
// corpora reproduce bit-exactly across platforms; see README for the
// constants and draw orders.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform-enough in [0, bound); plain modulo, bias is irrelevant next to
    // reproducibility.
    uint64_t below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }
};

// Clique block 0..clique_size-1, independent block after it; each cross pair
// (d, q) is drawn in d-major, q-ascending order with probability attach_prob.
Graph gen_split(int clique_size, int indep_size, double attach_prob, uint64_t seed);

// Random chordal graph by reverse perfect elimination: vertex v picks an
// earlier anchor u and attaches to a random subset of the clique u was
// created with (plus u itself).
Graph gen_chordal(int n, double edge_prob, uint64_t seed);

// Complement of gen_chordal; always 2K2-free.
Graph gen_co_chordal(int n, double edge_prob, uint64_t seed);

Graph complement(const Graph& g);

inline constexpr int kFilteredDefaultAttempts = 400;

// Draws dense split / co-chordal candidates alternately and keeps the first
// that is 2K2-free with exact toughness >= 2. Throws ExhaustedError.
Graph gen_filtered_2tough(int n, uint64_t seed, int max_attempts = kFilteredDefaultAttempts);

// The two hand-built worked graphs G1 and G2. Both are gate-checked
// 2K2-free by the test suite rather than trusted.
Graph fixed_graph(const std::string& name);

}  // namespace twowalk
