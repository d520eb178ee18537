#pragma once

#include <optional>

#include "tfx/certificates.hpp"
#include "tfx/graph.hpp"

namespace tfx {

struct TriangleCheck {
    bool triangle_free = true;
    std::optional<TriangleCert> witness;
};
TriangleCheck is_triangle_free(const Graph& g);

/// Bipartition when the graph is bipartite, otherwise an odd-cycle witness.
struct BipartiteCheck {
    std::optional<BipartitionCert> bipartition;
    std::optional<OddCycleCert> odd_cycle;
    bool is_bipartite() const { return bipartition.has_value(); }
};
BipartiteCheck is_bipartite(const Graph& g);

/// Length of a shortest odd cycle with a witness; nullopt iff bipartite.
struct OddGirthResult {
    std::optional<int> length;
    std::optional<OddCycleCert> cycle;
};
OddGirthResult odd_girth(const Graph& g);

bool is_connected(const Graph& g); // vacuously true for n <= 1

/// Decision form: proper k-coloring or proof of impossibility by exhausted
/// search. `nodes` counts decisions explored.
bool k_colorable(const Graph& g, int k, ColoringCert* out, unsigned long long* nodes);

struct ChromaticResult {
    int chi = 0;
    ColoringCert coloring;
    // Search exhaustion record for the lower-bound side: the failed
    // (chi-1)-coloring attempt and the nodes it visited.
    unsigned long long nodes_at_chi_minus_1 = 0;
};
ChromaticResult chromatic_number(const Graph& g); // exact; n <= 64

struct OctResult {
    int d2 = 0;
    TransversalCert transversal;
    unsigned long long nodes_below = 0; // nodes exhausted at depth d2-1
};
OctResult odd_cycle_transversal(const Graph& g);

struct MatchingResult {
    int nu = 0;
    MatchingCert matching;
};
MatchingResult max_matching(const Graph& g);

struct CoverResult {
    int tau = 0;
    CoverCert cover;
    unsigned long long nodes = 0;
};
CoverResult min_vertex_cover(const Graph& g); // exact; n <= 64

/// Edge-preserving map into C5, or definite nonexistence by exhausted
/// backtracking. Exists iff g is a subgraph of some blow-up of C5.
std::optional<C5HomCert> c5_homomorphism(const Graph& g); // n <= 64

int min_degree(const Graph& g);
std::vector<int> degrees(const Graph& g);
int deg_into(const Graph& g, int v, const VertexSet& s);

/// Exact independence number; small-n helper used for search pruning.
int independence_number(const Graph& g);

} // namespace tfx
