#pragma once

#include <functional>
#include <vector>

#include "tfx/graph.hpp"

namespace tfx {

/// Complete r-partite graph on n vertices with part sizes differing by at
/// most one; parts are consecutive blocks, larger parts first.
Graph turan_graph(int n, int r);
long long turan_edges(int n, int r);

/// T_2(n-1) with one cross edge xy replaced by the path x-z-y; the new
/// vertex z gets index n-1. Triangle-free, non-bipartite, n >= 5.
Graph h0(int n);

/// The 11-vertex, 20-edge triangle-free 4-chromatic graph: outer 5-cycle
/// u_0..u_4, ring vertex v_i (index 5+i) adjacent to u_{i-1} and u_{i+1},
/// hub w (index 10) adjacent to every v_i.
Graph grotzsch();

/// Parameters of one member of the Grotzsch blow-up family: five positive
/// ring-class sizes plus the hub class size, tied to n by the floor/ceil
/// split of (n-3)/2 and (n-7)/2.
struct GFamilyParams {
    int n = 0;
    std::vector<int> v_parts; // five entries, all >= 1
    int w_size = 0;

    void validate() const; // throws DomainError when the invariants fail
};

Graph g_family(const GFamilyParams& params);

/// One representative per composition of the ring total into five positive
/// parts, for each admissible floor/ceil variant, compositions in colex
/// order, deduplicated by canonical form.
void g_family_all(int n, const std::function<void(const Graph&, const GFamilyParams&)>& visit);
std::vector<Graph> g_family_all(int n);

/// C5 blow-up with part sizes (4, 4, 4, floor(n/2)-6, ceil(n/2)-6); n >= 14.
Graph h_n(int n);

Graph cycle(int k);  // k >= 3
Graph star(int r);   // K_{1,r}, center 0, r >= 1

} // namespace tfx
