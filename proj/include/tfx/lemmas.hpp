#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfx/certificates.hpp"
#include "tfx/graph.hpp"
#include "tfx/rational.hpp"

namespace tfx {

enum class ResidualClass { bipartite, c5_blowup_subgraph, other };
std::string residual_class_name(ResidualClass c);

struct BipartizationStep {
    int vertex = -1;           // original index
    int degree_at_deletion = 0;
    Rat threshold;             // 3*(n-i)/8 at that step
};

struct BipartizationTrace {
    Graph original;
    std::vector<BipartizationStep> deleted;
    VertexSet residual_vertices; // original indices
    Graph residual;              // induced, relabeled ascending
    ResidualClass residual_class = ResidualClass::other;
    std::optional<BipartitionCert> residual_bipartition; // on residual labels
    std::optional<C5HomCert> residual_c5hom;             // on residual labels
};

/// Repeatedly delete a vertex of current degree <= 3/8 of the current
/// order (minimum degree first, lowest index on ties) until none remains,
/// then classify the residual. Total on every graph; the |T| <= 15 and
/// bipartite-residual guarantees apply under the e(G) >= (n-4)^2/4 + 16,
/// n >= 90 precondition.
BipartizationTrace greedy_bipartization(const Graph& g);

/// Exact evaluation of (n-|S|-4)^2/4 + sum of original degrees over S
/// against (n-4)^2/4, for S a subset of the trace's deleted set.
struct DegreeSumCheck {
    Rat lhs, rhs;
    bool holds = false;
};
DegreeSumCheck check_degree_sum_inequality(const BipartizationTrace& trace,
                                           const VertexSet& s);

/// Outcome of the nu=3 structure classification.
struct ClassifierVerdict {
    enum class Case { c7, c5_star } kind = Case::c7;
    std::vector<int> cycle;      // case c7: the 7-cycle; case c5_star: the C5
    int star_center = -1;        // case c5_star
    std::vector<int> star_leaves;
    int r = 0;
};

/// For triangle-free H with no isolated vertices, nu(H)=3 and tau(H)>=4:
/// either H is a 7-cycle or V(H)=r+6 and H contains a vertex-disjoint
/// C5 plus K_{1,r}. Preconditions are checked; a failure to find a witness
/// would falsify the statement and raises InternalError.
ClassifierVerdict classify_nu3(const Graph& h);

/// Split T by majority side: T_X gets the vertices with at least as many
/// neighbors in Y as in X, T_Y the rest. Requires T, X, Y to partition
/// V(G) with X and Y independent.
std::pair<VertexSet, VertexSet> partition_T(const Graph& g, const VertexSet& t,
                                            const VertexSet& x, const VertexSet& y);

} // namespace tfx
