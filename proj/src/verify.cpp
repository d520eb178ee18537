#include "tfx/verify.hpp"

#include <algorithm>

namespace tfx::verify {

bool coloring(const Graph& g, const ColoringCert& c) {
    int n = g.order();
    if (static_cast<int>(c.color.size()) != n) return false;
    for (int v = 0; v < n; ++v)
        if (c.color[static_cast<std::size_t>(v)] < 0 || c.color[static_cast<std::size_t>(v)] >= c.k)
            return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) &&
                c.color[static_cast<std::size_t>(u)] == c.color[static_cast<std::size_t>(v)])
                return false;
    return true;
}

bool bipartition(const Graph& g, const BipartitionCert& c) {
    int n = g.order();
    if (c.left.universe() != n || c.right.universe() != n) return false;
    if ((c.left & c.right).any()) return false;
    if ((c.left | c.right) != VertexSet::full(n)) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) {
                bool lu = c.left.test(u), lv = c.left.test(v);
                if (lu == lv) return false;
            }
    return true;
}

bool odd_cycle(const Graph& g, const OddCycleCert& c) {
    std::size_t k = c.cycle.size();
    if (k < 3 || k % 2 == 0) return false;
    std::vector<int> sorted = c.cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < k; ++i) {
        int u = c.cycle[i], v = c.cycle[(i + 1) % k];
        if (u < 0 || u >= g.order() || !g.adjacent(u, v)) return false;
    }
    return true;
}

bool transversal(const Graph& g, const TransversalCert& c) {
    int n = g.order();
    if (c.removed.universe() != n) return false;
    // The residual bipartition must cover exactly the kept vertices.
    VertexSet kept = VertexSet::full(n) - c.removed;
    if ((c.residual.left & c.residual.right).any()) return false;
    if ((c.residual.left | c.residual.right) != kept) return false;
    for (int u = 0; u < n; ++u) {
        if (c.removed.test(u)) continue;
        for (int v = u + 1; v < n; ++v) {
            if (c.removed.test(v) || !g.adjacent(u, v)) continue;
            if (c.residual.left.test(u) == c.residual.left.test(v)) return false;
        }
    }
    return true;
}

bool matching(const Graph& g, const MatchingCert& c) {
    std::vector<int> used;
    for (auto [u, v] : c.edges) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v) return false;
        if (!g.adjacent(u, v)) return false;
        used.push_back(u);
        used.push_back(v);
    }
    std::sort(used.begin(), used.end());
    return std::adjacent_find(used.begin(), used.end()) == used.end();
}

bool cover(const Graph& g, const CoverCert& c) {
    if (c.cover.universe() != g.order()) return false;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) && !c.cover.test(u) && !c.cover.test(v)) return false;
    return true;
}

bool c5_homomorphism(const Graph& g, const C5HomCert& c) {
    int n = g.order();
    if (static_cast<int>(c.phi.size()) != n) return false;
    for (int v = 0; v < n; ++v)
        if (c.phi[static_cast<std::size_t>(v)] < 0 || c.phi[static_cast<std::size_t>(v)] > 4)
            return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) {
                int d = (c.phi[static_cast<std::size_t>(u)] - c.phi[static_cast<std::size_t>(v)] + 5) % 5;
                if (d != 1 && d != 4) return false;
            }
    return true;
}

bool triangle(const Graph& g, const TriangleCert& c) {
    auto [a, b, d] = c.vertices;
    if (a == b || b == d || a == d) return false;
    if (a < 0 || b < 0 || d < 0 || a >= g.order() || b >= g.order() || d >= g.order()) return false;
    return g.adjacent(a, b) && g.adjacent(b, d) && g.adjacent(a, d);
}

} // namespace tfx::verify
