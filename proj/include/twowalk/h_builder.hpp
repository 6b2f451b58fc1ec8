#pragma once

#include <optional>
#include <string>

#include "twowalk/analysis.hpp"
#include "twowalk/decomposition.hpp"
#include "twowalk/first_class.hpp"
#include "twowalk/gamma.hpp"
#include "twowalk/multigraph.hpp"

namespace twowalk {

// Step 1: H starts as exactly the first-class edges.
HGraph step1_first_class(int n, const FirstClassEdges& e);

// Step 2: one G-edge between Q_i and Q_j per red edge w_i w_j. Among the
// candidates, edges whose endpoints currently have even degree in H are
// preferred (fewer degree-3 vertices later), ties broken lexicographically.
// Throws NoCrossEdgeError when no candidate exists.
void step2_second_class(const Graph& g, const CliqueTower& t, const GammaGraph& gamma,
                        HGraph& h);

// Step 3, per clique in tower order: perfectly match the odd-degree
// vertices (degree-3 ones paired first), then close the degree-{0,2}
// vertices into a third-class cycle; two vertices get a parallel pair when
// the multiplicity budget allows, a lone degree-0 vertex is attached to a
// cliquemate by a parallel pair. Throws ConstructionFailedError on dead ends.
void step3_third_class(const Graph& g, const CliqueTower& t, HGraph& h);

struct HVerdict {
    bool ok = true;
    std::string violation;
};

// Spanning, connected, multiplicity <= 2 within E(g), degrees in {2,4}.
HVerdict validate_h(const Graph& g, const HGraph& h);

// Hierholzer circuit consuming every occurrence exactly once; visits each
// vertex degree/2 times under the closed-walk convention. Throws
// NotEulerianError when a precondition fails.
Walk euler_circuit(const MultiGraph& h);

inline constexpr int kFallbackDefaultLimit = 14;

// Exhaustive closed-walk search with per-vertex visit budget 2, memoized on
// (current vertex, visit-count vector). Throws TooLargeError above limit_n.
std::optional<Walk> exact_two_walk(const Graph& g, int limit_n = kFallbackDefaultLimit);

enum class WalkOutcome { WalkFound, CertificateFound, NotTwoK2Free, NoWalkFound };
enum class WalkPath { Constructive, Fallback };

struct PipelineTrace {
    std::optional<CliqueTower> tower;
    std::optional<FirstClassEdges> first_class;
    std::optional<GammaGraph> gamma;
    std::optional<HGraph> h;
};

struct TwoWalkOptions {
    int fallback_limit = kFallbackDefaultLimit;
    bool keep_trace = true;
};

struct TwoWalkResult {
    WalkOutcome outcome = WalkOutcome::NoWalkFound;
    Walk walk;
    WalkPath path = WalkPath::Constructive;
    std::optional<TwoK2Witness> witness;
    std::optional<ToughnessCertificate> certificate;
    PipelineTrace trace;
    std::string note;  // why the fallback ran / why no walk was produced
};

// Full pipeline: 2K2-freeness gate, trivial cases, tower -> first-class
// matching -> gamma -> H -> Euler circuit, with the certificate branch on
// Hall failure and the exact-search fallback on construction failure.
TwoWalkResult two_walk(const Graph& g, const TwoWalkOptions& opts = {});

}  // namespace twowalk
