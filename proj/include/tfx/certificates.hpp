#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "tfx/bitset.hpp"

namespace tfx {

/// Witnesses attached to invariant answers. Every solver returns one of
/// these; the independent checker in verify.hpp validates them against the
/// graph without sharing any solver code.

struct ColoringCert {
    int k = 0;
    std::vector<int> color; // vertex -> 0..k-1
};

struct BipartitionCert {
    VertexSet left, right;
};

struct OddCycleCert {
    std::vector<int> cycle; // simple cycle of odd length, consecutive + wrap adjacent
};

struct TransversalCert {
    VertexSet removed;
    BipartitionCert residual; // bipartition of the untouched vertices
};

struct MatchingCert {
    std::vector<std::pair<int, int>> edges;
};

struct CoverCert {
    VertexSet cover;
};

struct C5HomCert {
    std::vector<int> phi; // vertex -> 0..4; edges map to C5 edges
};

struct TriangleCert {
    std::array<int, 3> vertices;
};

} // namespace tfx
