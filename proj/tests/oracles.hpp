#pragma once

// Independent reference implementations used as test oracles. Everything
// here is deliberately written from scratch against the definitions, not
// against the library code it checks.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tfx/graph.hpp"

namespace oracle {

// --- reference graph6 codec -------------------------------------------------

inline std::string ref_graph6_encode(int n, const std::vector<std::vector<bool>>& adj) {
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    std::vector<bool> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(adj[i][j]);
    while (bits.size() % 6) bits.push_back(false);
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = (v << 1) | (bits[k + b] ? 1 : 0);
        out.push_back(static_cast<char>(v + 63));
    }
    return out;
}

inline std::vector<std::vector<bool>> adj_of(const tfx::Graph& g) {
    int n = g.order();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) adj[u][v] = g.adjacent(u, v);
    return adj;
}

inline std::string ref_graph6(const tfx::Graph& g) { return ref_graph6_encode(g.order(), adj_of(g)); }

// --- exhaustive permutation isomorphism --------------------------------------

inline bool brute_isomorphic(const tfx::Graph& a, const tfx::Graph& b) {
    int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Minimum adjacency word over all permutations; a brute-force canonical key.
inline std::vector<bool> brute_canon_key(const tfx::Graph& g) {
    int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> best;
    bool have = false;
    do {
        std::vector<bool> key;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) key.push_back(g.adjacent(perm[i], perm[j]));
        if (!have || key < best) {
            best = key;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// --- brute invariants ---------------------------------------------------------

inline bool brute_k_colorable(const tfx::Graph& g, int k) {
    int n = g.order();
    if (n == 0) return true;
    if (k == 0) return false;
    std::vector<int> col(n, 0);
    for (;;) {
        bool proper = true;
        for (int u = 0; u < n && proper; ++u)
            for (int v = u + 1; v < n && proper; ++v)
                if (g.adjacent(u, v) && col[u] == col[v]) proper = false;
        if (proper) return true;
        int i = 0;
        while (i < n && col[i] == k - 1) col[i++] = 0;
        if (i == n) return false;
        ++col[i];
    }
}

inline int brute_chromatic(const tfx::Graph& g) {
    if (g.order() == 0) return 0;
    for (int k = 1;; ++k)
        if (brute_k_colorable(g, k)) return k;
}

inline bool brute_bipartite_mask(const tfx::Graph& g, unsigned keep_mask) {
    // 2-color the kept vertices by simple propagation.
    int n = g.order();
    std::vector<int> side(n, -1);
    for (int root = 0; root < n; ++root) {
        if (!((keep_mask >> root) & 1u) || side[root] != -1) continue;
        side[root] = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                if (v == u || !((keep_mask >> v) & 1u) || !g.adjacent(u, v)) continue;
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    stack.push_back(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline int brute_d2(const tfx::Graph& g) {
    int n = g.order();
    unsigned full = n == 32 ? 0xffffffffu : ((1u << n) - 1);
    for (int size = 0; size <= n; ++size) {
        // all deletion sets of this size
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            unsigned del = 0;
            for (int i : idx) del |= 1u << i;
            if (brute_bipartite_mask(g, full & ~del)) return size;
            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return n;
}

inline int brute_matching(const tfx::Graph& g, unsigned used = 0, int from_u = 0) {
    int n = g.order();
    for (int u = from_u; u < n; ++u) {
        if ((used >> u) & 1u) continue;
        int best = 0;
        for (int v = u + 1; v < n; ++v) {
            if ((used >> v) & 1u || !g.adjacent(u, v)) continue;
            best = std::max(best, 1 + brute_matching(g, used | (1u << u) | (1u << v), u + 1));
        }
        // u stays unmatched, or matches one of its partners
        best = std::max(best, brute_matching(g, used | (1u << u), u + 1));
        return best;
    }
    return 0;
}

inline int brute_cover(const tfx::Graph& g) {
    int n = g.order();
    for (int size = 0; size <= n; ++size) {
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            unsigned cov = 0;
            for (int i : idx) cov |= 1u << i;
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                for (int v = u + 1; v < n && ok; ++v)
                    if (g.adjacent(u, v) && !((cov >> u) & 1u) && !((cov >> v) & 1u)) ok = false;
            if (ok) return size;
            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return n;
}

// Shortest odd cycle by DFS over simple paths.
inline int brute_odd_girth(const tfx::Graph& g) {
    int n = g.order();
    int best = -1;
    std::vector<int> path;
    std::vector<bool> on(n, false);
    std::function<void(int, int)> dfs = [&](int start, int u) {
        for (int v = 0; v < n; ++v) {
            if (!g.adjacent(u, v)) continue;
            if (v == start && path.size() >= 3) {
                if (path.size() % 2 == 1 &&
                    (best == -1 || static_cast<int>(path.size()) < best))
                    best = static_cast<int>(path.size());
            }
            if (v > start && !on[v]) {
                on[v] = true;
                path.push_back(v);
                dfs(start, v);
                path.pop_back();
                on[v] = false;
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        std::fill(on.begin(), on.end(), false);
        on[s] = true;
        dfs(s, s);
    }
    return best; // -1 when bipartite
}

inline bool brute_triangle_free(const tfx::Graph& g) {
    int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return false;
    return true;
}

// --- labeled enumeration with permutation dedup (n <= 6) ----------------------

template <typename Filter>
inline long long labeled_class_count(int n, Filter&& keep) {
    int m = n * (n - 1) / 2;
    std::set<std::vector<bool>> classes;
    for (long long mask = 0; mask < (1LL << m); ++mask) {
        tfx::Graph g(n);
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if ((mask >> bit) & 1) g.add_edge(i, j);
        if (!keep(g)) continue;
        classes.insert(brute_canon_key(g));
    }
    return static_cast<long long>(classes.size());
}

// --- random graphs -------------------------------------------------------------

inline tfx::Graph random_graph(int n, double p, std::mt19937_64& rng) {
    tfx::Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline tfx::Graph random_relabel(const tfx::Graph& g, std::mt19937_64& rng) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return g.relabeled(perm);
}

} // namespace oracle
