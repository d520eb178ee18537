#include "tfx/invariants.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

#include "tfx/canonical.hpp"

namespace tfx {

TriangleCheck is_triangle_free(const Graph& g) {
    int n = g.order();
    int words = g.row_words();
    for (int u = 0; u < n; ++u) {
        const uint64_t* ru = g.row(u);
        for (int v = u + 1; v < n; ++v) {
            if (!((ru[v >> 6] >> (v & 63)) & 1u)) continue;
            const uint64_t* rv = g.row(v);
            for (int i = 0; i < words; ++i) {
                uint64_t common = ru[i] & rv[i];
                if (common) {
                    int w = (i << 6) + std::countr_zero(common);
                    return {false, TriangleCert{{u, v, w}}};
                }
            }
        }
    }
    return {true, std::nullopt};
}

namespace {

// Turn a closed odd walk into a simple odd cycle: split at any repeated
// vertex and keep the odd half.
std::vector<int> simple_odd_cycle(std::vector<int> walk) {
    for (;;) {
        std::vector<int> pos(1024, -1);
        int mx = 0;
        for (int v : walk) mx = std::max(mx, v);
        pos.assign(static_cast<std::size_t>(mx) + 1, -1);
        int i = -1, j = -1;
        for (std::size_t k = 0; k < walk.size(); ++k) {
            int v = walk[k];
            if (pos[static_cast<std::size_t>(v)] >= 0) {
                i = pos[static_cast<std::size_t>(v)];
                j = static_cast<int>(k);
                break;
            }
            pos[static_cast<std::size_t>(v)] = static_cast<int>(k);
        }
        if (i < 0) return walk;
        std::vector<int> inner(walk.begin() + i, walk.begin() + j);
        std::vector<int> outer(walk.begin(), walk.begin() + i);
        outer.insert(outer.end(), walk.begin() + j, walk.end());
        walk = (inner.size() % 2 == 1) ? std::move(inner) : std::move(outer);
    }
}

std::vector<int> bfs_path(const std::vector<int>& parent, int v) {
    std::vector<int> path;
    for (int x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

BipartiteCheck is_bipartite(const Graph& g) {
    int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    for (int root = 0; root < n; ++root) {
        if (side[static_cast<std::size_t>(root)] != -1) continue;
        side[static_cast<std::size_t>(root)] = 0;
        std::queue<int> bfs;
        bfs.push(root);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            VertexSet nb = g.neighbors(u);
            for (int v = nb.first(); v != -1; v = nb.next(v)) {
                if (side[static_cast<std::size_t>(v)] == -1) {
                    side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(u)];
                    parent[static_cast<std::size_t>(v)] = u;
                    bfs.push(v);
                } else if (side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(u)]) {
                    // Same side: the two tree paths plus uv close an odd walk.
                    std::vector<int> pu = bfs_path(parent, u);
                    std::vector<int> pv = bfs_path(parent, v);
                    std::reverse(pv.begin(), pv.end());
                    pu.insert(pu.end(), pv.begin(), pv.end());
                    pu.pop_back(); // root listed twice
                    return {std::nullopt, OddCycleCert{simple_odd_cycle(std::move(pu))}};
                }
            }
        }
    }
    BipartitionCert c{VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v)
        (side[static_cast<std::size_t>(v)] == 0 ? c.left : c.right).set(v);
    return {std::move(c), std::nullopt};
}

OddGirthResult odd_girth(const Graph& g) {
    int n = g.order();
    int best = -1;
    int bw_root = -1, bw_x = -1, bw_y = -1;
    std::vector<int> dist(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(root)] = 0;
        std::queue<int> bfs;
        bfs.push(root);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            VertexSet nb = g.neighbors(u);
            for (int v = nb.first(); v != -1; v = nb.next(v))
                if (dist[static_cast<std::size_t>(v)] == -1) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    bfs.push(v);
                }
        }
        for (int x = 0; x < n; ++x) {
            if (dist[static_cast<std::size_t>(x)] < 0) continue;
            VertexSet nb = g.neighbors(x);
            for (int y = nb.next(x); y != -1; y = nb.next(y)) {
                if (dist[static_cast<std::size_t>(y)] != dist[static_cast<std::size_t>(x)]) continue;
                int len = 2 * dist[static_cast<std::size_t>(x)] + 1;
                if (best == -1 || len < best) {
                    best = len;
                    bw_root = root;
                    bw_x = x;
                    bw_y = y;
                }
            }
        }
    }
    if (best == -1) return {std::nullopt, std::nullopt};

    // Rebuild the witness walk from the recorded root.
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(bw_root)] = 0;
    std::queue<int> bfs;
    bfs.push(bw_root);
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        VertexSet nb = g.neighbors(u);
        for (int v = nb.first(); v != -1; v = nb.next(v))
            if (dist[static_cast<std::size_t>(v)] == -1) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                parent[static_cast<std::size_t>(v)] = u;
                bfs.push(v);
            }
    }
    std::vector<int> px = bfs_path(parent, bw_x);
    std::vector<int> py = bfs_path(parent, bw_y);
    std::reverse(py.begin(), py.end());
    px.insert(px.end(), py.begin(), py.end());
    px.pop_back();
    std::vector<int> cyc = simple_odd_cycle(std::move(px));
    return {best, OddCycleCert{std::move(cyc)}};
}

bool is_connected(const Graph& g) {
    int n = g.order();
    if (n <= 1) return true;
    VertexSet seen(n);
    std::vector<int> stack{0};
    seen.set(0);
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        VertexSet nb = g.neighbors(u);
        for (int v = nb.first(); v != -1; v = nb.next(v))
            if (!seen.test(v)) {
                seen.set(v);
                stack.push_back(v);
            }
    }
    return seen.count() == n;
}

// ---------------------------------------------------------------------------
// Chromatic number: DSATUR-ordered backtracking on the twin quotient.

namespace {

struct KColSearch {
    const Graph& g;
    int n, k;
    std::vector<int> col;
    unsigned long long nodes = 0;

    KColSearch(const Graph& graph, int colors)
        : g(graph), n(graph.order()), k(colors), col(static_cast<std::size_t>(graph.order()), -1) {}

    bool run() { return place(0); }

    bool place(int assigned) {
        ++nodes;
        if (assigned == n) return true;
        // Most saturated vertex first; ties by degree, then lowest index.
        int pick = -1, pick_sat = -1, pick_deg = -1;
        int used_max = -1;
        for (int v = 0; v < n; ++v) used_max = std::max(used_max, col[static_cast<std::size_t>(v)]);
        for (int v = 0; v < n; ++v) {
            if (col[static_cast<std::size_t>(v)] != -1) continue;
            unsigned neigh_cols = 0;
            VertexSet nb = g.neighbors(v);
            for (int u = nb.first(); u != -1; u = nb.next(u))
                if (col[static_cast<std::size_t>(u)] != -1)
                    neigh_cols |= 1u << col[static_cast<std::size_t>(u)];
            int sat = std::popcount(neigh_cols);
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        unsigned blocked = 0;
        VertexSet nb = g.neighbors(pick);
        for (int u = nb.first(); u != -1; u = nb.next(u))
            if (col[static_cast<std::size_t>(u)] != -1) blocked |= 1u << col[static_cast<std::size_t>(u)];
        int cap = std::min(k - 1, used_max + 1); // introduce at most one new color
        for (int c = 0; c <= cap; ++c) {
            if (blocked & (1u << c)) continue;
            col[static_cast<std::size_t>(pick)] = c;
            if (place(assigned + 1)) return true;
            col[static_cast<std::size_t>(pick)] = -1;
        }
        return false;
    }
};

} // namespace

bool k_colorable(const Graph& g, int k, ColoringCert* out, unsigned long long* nodes) {
    if (k < 0) throw DomainError("k_colorable: negative k");
    if (k > 32) throw DomainError("k_colorable: k > 32 unsupported");
    int n = g.order();
    if (n == 0) {
        if (out) *out = ColoringCert{k, {}};
        return true;
    }
    if (k == 0) return false;
    KColSearch s(g, k);
    bool ok = s.run();
    if (nodes) *nodes = s.nodes;
    if (ok && out) *out = ColoringCert{k, s.col};
    return ok;
}

ChromaticResult chromatic_number(const Graph& g) {
    int n = g.order();
    if (n > 64) throw CapacityError("chromatic_number: declared limit is n <= 64");
    if (n == 0) return {0, ColoringCert{0, {}}, 0};

    TwinClasses tc = twin_classes(g);
    const Graph& q = tc.quotient;

    // Greedy clique gives the lower bound to start from.
    int lb = 1;
    for (int v = 0; v < q.order(); ++v) {
        VertexSet cand = q.neighbors(v);
        int size = 1;
        for (int u = cand.first(); u != -1; u = cand.next(u)) {
            ++size;
            cand &= q.neighbors(u);
        }
        lb = std::max(lb, size);
    }

    unsigned long long fail_nodes = 0;
    for (int k = lb;; ++k) {
        ColoringCert qcert;
        unsigned long long nodes = 0;
        if (k_colorable(q, k, &qcert, &nodes)) {
            ColoringCert cert{k, std::vector<int>(static_cast<std::size_t>(n))};
            for (int v = 0; v < n; ++v)
                cert.color[static_cast<std::size_t>(v)] =
                    qcert.color[static_cast<std::size_t>(tc.class_of[static_cast<std::size_t>(v)])];
            return {k, std::move(cert), fail_nodes};
        }
        fail_nodes = nodes;
    }
}

// ---------------------------------------------------------------------------
// Odd-cycle transversal: iterative deepening on the deleted weight, with
// branching restricted to a freshly found shortest odd cycle. Runs on the
// twin quotient (class sizes as weights); a minimum transversal never
// splits a twin class.

namespace {

std::optional<std::vector<int>> shortest_odd_cycle_within(const Graph& g, const VertexSet& active) {
    int n = g.order();
    int best = -1, b_root = -1, b_x = -1, b_y = -1;
    std::vector<int> dist(static_cast<std::size_t>(n));
    for (int root = active.first(); root != -1; root = active.next(root)) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(root)] = 0;
        std::vector<int> q{root};
        for (std::size_t h = 0; h < q.size(); ++h) {
            int u = q[h];
            VertexSet nb = g.neighbors(u);
            nb &= active;
            for (int v = nb.first(); v != -1; v = nb.next(v))
                if (dist[static_cast<std::size_t>(v)] == -1) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    q.push_back(v);
                }
        }
        for (int x = active.first(); x != -1; x = active.next(x)) {
            if (dist[static_cast<std::size_t>(x)] < 0) continue;
            VertexSet nb = g.neighbors(x);
            nb &= active;
            for (int y = nb.next(x); y != -1; y = nb.next(y)) {
                if (dist[static_cast<std::size_t>(y)] != dist[static_cast<std::size_t>(x)]) continue;
                int len = 2 * dist[static_cast<std::size_t>(x)] + 1;
                if (best == -1 || len < best) {
                    best = len;
                    b_root = root;
                    b_x = x;
                    b_y = y;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(b_root)] = 0;
    std::vector<int> q{b_root};
    for (std::size_t h = 0; h < q.size(); ++h) {
        int u = q[h];
        VertexSet nb = g.neighbors(u);
        nb &= active;
        for (int v = nb.first(); v != -1; v = nb.next(v))
            if (dist[static_cast<std::size_t>(v)] == -1) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                parent[static_cast<std::size_t>(v)] = u;
                q.push_back(v);
            }
    }
    std::vector<int> px = bfs_path(parent, b_x);
    std::vector<int> py = bfs_path(parent, b_y);
    std::reverse(py.begin(), py.end());
    px.insert(px.end(), py.begin(), py.end());
    px.pop_back();
    return simple_odd_cycle(std::move(px));
}

struct OctSearch {
    const Graph& q;
    const std::vector<int>& weight;
    unsigned long long nodes = 0;
    VertexSet solution;
    bool found = false;

    OctSearch(const Graph& quotient, const std::vector<int>& w) : q(quotient), weight(w) {}

    bool dfs(VertexSet active, int budget, VertexSet forbidden, VertexSet deleted) {
        ++nodes;
        auto cyc = shortest_odd_cycle_within(q, active);
        if (!cyc) {
            solution = deleted;
            found = true;
            return true;
        }
        for (std::size_t i = 0; i < cyc->size(); ++i) {
            int c = (*cyc)[i];
            if (forbidden.test(c)) continue;
            if (weight[static_cast<std::size_t>(c)] > budget) continue;
            VertexSet a2 = active;
            a2.reset(c);
            VertexSet d2 = deleted;
            d2.set(c);
            VertexSet f2 = forbidden;
            for (std::size_t j = 0; j < i; ++j) f2.set((*cyc)[j]);
            if (dfs(a2, budget - weight[static_cast<std::size_t>(c)], f2, d2)) return true;
        }
        return false;
    }
};

// Cheap upper bound: repeatedly delete the heaviest-degree class on a
// found odd cycle.
int greedy_oct_weight(const Graph& q, const std::vector<int>& weight) {
    VertexSet active = VertexSet::full(q.order());
    int total = 0;
    for (;;) {
        auto cyc = shortest_odd_cycle_within(q, active);
        if (!cyc) return total;
        int pick = (*cyc)[0];
        for (int c : *cyc)
            if (q.deg_into(c, active) > q.deg_into(pick, active)) pick = c;
        active.reset(pick);
        total += weight[static_cast<std::size_t>(pick)];
    }
}

} // namespace

OctResult odd_cycle_transversal(const Graph& g) {
    int n = g.order();
    TwinClasses tc = twin_classes(g);
    const Graph& q = tc.quotient;
    std::vector<int> weight(static_cast<std::size_t>(q.order()));
    for (int c = 0; c < q.order(); ++c)
        weight[static_cast<std::size_t>(c)] = static_cast<int>(tc.members[static_cast<std::size_t>(c)].size());

    int ub = greedy_oct_weight(q, weight);
    // Declared limits: n <= 64 unrestricted, otherwise iterative deepening
    // stops at depth 8.
    int depth_cap = n <= 64 ? ub : std::min(ub, 8);

    unsigned long long below = 0;
    for (int t = 0; t <= depth_cap; ++t) {
        OctSearch s(q, weight);
        if (s.dfs(VertexSet::full(q.order()), t, VertexSet(q.order()), VertexSet(q.order()))) {
            // Expand classes back to original vertices.
            VertexSet removed(n);
            for (int c = s.solution.first(); c != -1; c = s.solution.next(c))
                for (int v : tc.members[static_cast<std::size_t>(c)]) removed.set(v);
            VertexSet kept = VertexSet::full(n) - removed;
            // 2-color the residual directly on the original graph.
            BipartitionCert bip{VertexSet(n), VertexSet(n)};
            std::vector<int> side(static_cast<std::size_t>(n), -1);
            for (int root = kept.first(); root != -1; root = kept.next(root)) {
                if (side[static_cast<std::size_t>(root)] != -1) continue;
                side[static_cast<std::size_t>(root)] = 0;
                std::vector<int> stack{root};
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    VertexSet nb = g.neighbors(u);
                    nb &= kept;
                    for (int v2 = nb.first(); v2 != -1; v2 = nb.next(v2))
                        if (side[static_cast<std::size_t>(v2)] == -1) {
                            side[static_cast<std::size_t>(v2)] = 1 - side[static_cast<std::size_t>(u)];
                            stack.push_back(v2);
                        }
                }
            }
            for (int v = kept.first(); v != -1; v = kept.next(v))
                (side[static_cast<std::size_t>(v)] == 0 ? bip.left : bip.right).set(v);
            int d2 = removed.count();
            return {d2, TransversalCert{std::move(removed), std::move(bip)}, below};
        }
        below = s.nodes;
    }
    throw CapacityError("odd_cycle_transversal: iterative deepening limit exceeded", ub);
}

// ---------------------------------------------------------------------------
// Maximum matching via augmenting paths with blossom contraction.

namespace {

struct Blossom {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> match, p, base;
    std::vector<char> used, blossom;

    explicit Blossom(const Graph& g) : n(g.order()), adj(static_cast<std::size_t>(g.order())) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.adjacent(u, v)) {
                    adj[static_cast<std::size_t>(u)].push_back(v);
                    adj[static_cast<std::size_t>(v)].push_back(u);
                }
        match.assign(static_cast<std::size_t>(n), -1);
    }

    void mark_path(int v, int b, int child) {
        while (base[static_cast<std::size_t>(v)] != b) {
            blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(v)])] = 1;
            blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(match[static_cast<std::size_t>(v)])])] = 1;
            p[static_cast<std::size_t>(v)] = child;
            child = match[static_cast<std::size_t>(v)];
            v = p[static_cast<std::size_t>(match[static_cast<std::size_t>(v)])];
        }
    }

    int lca(int a, int b) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (;;) {
            a = base[static_cast<std::size_t>(a)];
            seen[static_cast<std::size_t>(a)] = 1;
            if (match[static_cast<std::size_t>(a)] == -1) break;
            a = p[static_cast<std::size_t>(match[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base[static_cast<std::size_t>(b)];
            if (seen[static_cast<std::size_t>(b)]) return b;
            b = p[static_cast<std::size_t>(match[static_cast<std::size_t>(b)])];
        }
    }

    int find_path(int root) {
        used.assign(static_cast<std::size_t>(n), 0);
        p.assign(static_cast<std::size_t>(n), -1);
        base.resize(static_cast<std::size_t>(n));
        std::iota(base.begin(), base.end(), 0);
        used[static_cast<std::size_t>(root)] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj[static_cast<std::size_t>(v)]) {
                if (base[static_cast<std::size_t>(v)] == base[static_cast<std::size_t>(to)] ||
                    match[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match[static_cast<std::size_t>(to)] != -1 &&
                     p[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] != -1)) {
                    int cur = lca(v, to);
                    blossom.assign(static_cast<std::size_t>(n), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(i)])]) {
                            base[static_cast<std::size_t>(i)] = cur;
                            if (!used[static_cast<std::size_t>(i)]) {
                                used[static_cast<std::size_t>(i)] = 1;
                                q.push(i);
                            }
                        }
                } else if (p[static_cast<std::size_t>(to)] == -1) {
                    p[static_cast<std::size_t>(to)] = v;
                    if (match[static_cast<std::size_t>(to)] == -1) return to;
                    used[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] = 1;
                    q.push(match[static_cast<std::size_t>(to)]);
                }
            }
        }
        return -1;
    }

    int solve() {
        int res = 0;
        for (int v = 0; v < n; ++v) {
            if (match[static_cast<std::size_t>(v)] != -1) continue;
            int u = find_path(v);
            if (u == -1) continue;
            ++res;
            while (u != -1) {
                int pv = p[static_cast<std::size_t>(u)];
                int ppv = match[static_cast<std::size_t>(pv)];
                match[static_cast<std::size_t>(u)] = pv;
                match[static_cast<std::size_t>(pv)] = u;
                u = ppv;
            }
        }
        return res;
    }
};

} // namespace

MatchingResult max_matching(const Graph& g) {
    Blossom b(g);
    int nu = b.solve();
    MatchingCert cert;
    for (int v = 0; v < g.order(); ++v)
        if (b.match[static_cast<std::size_t>(v)] > v)
            cert.edges.emplace_back(v, b.match[static_cast<std::size_t>(v)]);
    return {nu, std::move(cert)};
}

// ---------------------------------------------------------------------------
// Minimum vertex cover: branch and bound, matching lower bound.

namespace {

struct CoverSearch {
    const Graph& g;
    int n;
    VertexSet best;
    int best_size;
    unsigned long long nodes = 0;

    explicit CoverSearch(const Graph& graph, int seed_size, VertexSet seed)
        : g(graph), n(graph.order()), best(std::move(seed)), best_size(seed_size) {}

    int greedy_matching_lb(const VertexSet& active) const {
        VertexSet free = active;
        int m = 0;
        for (int u = free.first(); u != -1; u = free.next(u)) {
            if (!free.test(u)) continue;
            VertexSet nb = g.neighbors(u);
            nb &= free;
            int v = nb.first();
            if (v == u) v = nb.next(u);
            if (v != -1) {
                free.reset(u);
                free.reset(v);
                ++m;
            }
        }
        return m;
    }

    void rec(VertexSet active, VertexSet chosen, int chosen_count) {
        ++nodes;
        // Drop isolated vertices; apply the pendant rule; find a branch vertex.
        for (;;) {
            int pendant = -1, max_v = -1, max_d = 0;
            for (int v = active.first(); v != -1; v = active.next(v)) {
                int d = g.deg_into(v, active);
                if (d == 0) {
                    active.reset(v);
                    continue;
                }
                if (d == 1 && pendant == -1) pendant = v;
                if (d > max_d) {
                    max_d = d;
                    max_v = v;
                }
            }
            if (max_v == -1) {
                if (chosen_count < best_size) {
                    best_size = chosen_count;
                    best = chosen;
                }
                return;
            }
            if (chosen_count + greedy_matching_lb(active) >= best_size) return;
            if (pendant != -1) {
                VertexSet nb = g.neighbors(pendant);
                nb &= active;
                int v = nb.first();
                active.reset(pendant);
                active.reset(v);
                chosen.set(v);
                ++chosen_count;
                continue;
            }
            // Branch: max_v in the cover, or all its neighbors are.
            {
                VertexSet a2 = active;
                a2.reset(max_v);
                VertexSet c2 = chosen;
                c2.set(max_v);
                rec(a2, c2, chosen_count + 1);
            }
            VertexSet nb = g.neighbors(max_v);
            nb &= active;
            int add = nb.count();
            VertexSet a2 = active;
            a2.reset(max_v);
            a2 -= nb;
            VertexSet c2 = chosen;
            c2 |= nb;
            rec(a2, c2, chosen_count + add);
            return;
        }
    }
};

} // namespace

CoverResult min_vertex_cover(const Graph& g) {
    int n = g.order();
    if (n > 64) throw CapacityError("min_vertex_cover: declared limit is n <= 64");
    // Greedy seed: take a max-degree vertex until no edges remain.
    VertexSet active = VertexSet::full(n);
    VertexSet seed(n);
    int seed_size = 0;
    for (;;) {
        int max_v = -1, max_d = 0;
        for (int v = active.first(); v != -1; v = active.next(v)) {
            int d = g.deg_into(v, active);
            if (d > max_d) {
                max_d = d;
                max_v = v;
            }
        }
        if (max_v == -1) break;
        seed.set(max_v);
        active.reset(max_v);
        ++seed_size;
    }
    CoverSearch s(g, seed_size, seed);
    // Exact matching number seeds the lower bound at the root.
    int nu = max_matching(g).nu;
    if (nu < s.best_size)
        s.rec(VertexSet::full(n), VertexSet(n), 0);
    return {s.best_size, CoverCert{s.best}, s.nodes};
}

// ---------------------------------------------------------------------------
// C5 homomorphism by backtracking with forward constraint propagation.

namespace {

constexpr int c5_mask_around(int c) {
    return (1 << ((c + 1) % 5)) | (1 << ((c + 4) % 5));
}

struct C5Hom {
    const Graph& g;
    std::vector<int> phi;
    std::vector<int> order;       // BFS order of current component
    std::vector<char> edge_fixed; // reflection symmetry broken yet?

    explicit C5Hom(const Graph& graph)
        : g(graph), phi(static_cast<std::size_t>(graph.order()), -1) {}

    bool assign_component(int root) {
        order.clear();
        order.push_back(root);
        VertexSet seen(g.order());
        seen.set(root);
        for (std::size_t h = 0; h < order.size(); ++h) {
            VertexSet nb = g.neighbors(order[h]);
            for (int v = nb.first(); v != -1; v = nb.next(v))
                if (!seen.test(v)) {
                    seen.set(v);
                    order.push_back(v);
                }
        }
        return place(0);
    }

    bool place(std::size_t idx) {
        if (idx == order.size()) return true;
        int v = order[idx];
        int domain;
        if (idx == 0) {
            domain = 1 << 0; // rotation symmetry: root maps to 0
        } else {
            domain = 31;
            VertexSet nb = g.neighbors(v);
            for (int u = nb.first(); u != -1; u = nb.next(u))
                if (phi[static_cast<std::size_t>(u)] != -1)
                    domain &= c5_mask_around(phi[static_cast<std::size_t>(u)]);
            if (idx == 1) domain &= (1 << 1); // reflection symmetry: first edge maps to 01
        }
        while (domain) {
            int c = std::countr_zero(static_cast<unsigned>(domain));
            domain &= domain - 1;
            phi[static_cast<std::size_t>(v)] = c;
            if (place(idx + 1)) return true;
            phi[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<C5HomCert> c5_homomorphism(const Graph& g) {
    int n = g.order();
    if (n > 64) throw CapacityError("c5_homomorphism: declared limit is n <= 64");
    C5Hom solver(g);
    VertexSet done(n);
    for (int v = 0; v < n; ++v) {
        if (done.test(v)) continue;
        if (!solver.assign_component(v)) return std::nullopt;
        for (int u : solver.order) done.set(u);
    }
    return C5HomCert{solver.phi};
}

// ---------------------------------------------------------------------------

int min_degree(const Graph& g) { return g.min_degree(); }
std::vector<int> degrees(const Graph& g) { return g.degrees(); }
int deg_into(const Graph& g, int v, const VertexSet& s) { return g.deg_into(v, s); }

namespace {

int alpha_rec(const Graph& g, VertexSet active) {
    // Strip vertices of degree <= 1 greedily, then branch on a max-degree
    // vertex: alpha = max(alpha(G - v), 1 + alpha(G - N[v])).
    int taken = 0;
    for (;;) {
        int low = -1, low_d = 2, max_v = -1, max_d = -1;
        for (int v = active.first(); v != -1; v = active.next(v)) {
            int d = g.deg_into(v, active);
            if (d < low_d) {
                low = v;
                low_d = d;
            }
            if (d > max_d) {
                max_d = d;
                max_v = v;
            }
        }
        if (max_v == -1) return taken;
        if (low_d <= 1) {
            VertexSet nb = g.neighbors(low);
            nb &= active;
            active.reset(low);
            active -= nb;
            ++taken;
            continue;
        }
        VertexSet without = active;
        without.reset(max_v);
        VertexSet closed = g.neighbors(max_v);
        closed &= active;
        VertexSet with = without;
        with -= closed;
        return taken + std::max(alpha_rec(g, without), 1 + alpha_rec(g, with));
    }
}

} // namespace

int independence_number(const Graph& g) { return alpha_rec(g, VertexSet::full(g.order())); }

} // namespace tfx
