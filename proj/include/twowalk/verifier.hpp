#pragma once

#include <string>
#include <vector>

#include "twowalk/first_class.hpp"
#include "twowalk/gamma.hpp"
#include "twowalk/graph.hpp"
#include "twowalk/multigraph.hpp"

namespace twowalk {

struct Violation {
    std::string check;
    std::string detail;
};

// Every violation is reported, not just the first; fuzz triage depends on
// the full list.
struct VerdictReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// The verifiers recompute everything from g and the artifact alone; they
// share nothing with the builders beyond the core graph types.

// Closed, consecutive vertices adjacent, spanning, visits <= 2. A
// single-vertex walk on n = 1 and the degenerate u,v,u on n = 2 count as
// spanning 2-walks.
VerdictReport verify_two_walk(const Graph& g, const Walk& w);

// Spanning, connected, multiplicity <= 2, pairs in E(g), degrees in {2,4}.
VerdictReport verify_h(const Graph& g, const HGraph& h);

VerdictReport verify_gamma(const GammaGraph& gamma);

VerdictReport verify_certificate(const Graph& g, const ToughnessCertificate& c);

}  // namespace twowalk
