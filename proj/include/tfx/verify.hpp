#pragma once

#include "tfx/certificates.hpp"
#include "tfx/graph.hpp"

namespace tfx {

/// Independent certificate checker. Each function re-derives what it needs
/// by direct adjacency queries only, so a passing check does not depend on
/// any solver internals.
namespace verify {

bool coloring(const Graph& g, const ColoringCert& c);
bool bipartition(const Graph& g, const BipartitionCert& c);
bool odd_cycle(const Graph& g, const OddCycleCert& c);
bool transversal(const Graph& g, const TransversalCert& c);
bool matching(const Graph& g, const MatchingCert& c);
bool cover(const Graph& g, const CoverCert& c);
bool c5_homomorphism(const Graph& g, const C5HomCert& c);
bool triangle(const Graph& g, const TriangleCert& c);

} // namespace verify
} // namespace tfx
