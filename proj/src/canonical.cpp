#include "tfx/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <map>
#include <numeric>

namespace tfx {

TwinClasses twin_classes(const Graph& g) {
    TwinClasses tc;
    int n = g.order();
    tc.class_of.assign(static_cast<std::size_t>(n), -1);
    std::map<std::vector<uint64_t>, int> seen;
    for (int v = 0; v < n; ++v) {
        std::vector<uint64_t> key(g.row(v), g.row(v) + g.row_words());
        auto [it, fresh] = seen.emplace(std::move(key), static_cast<int>(tc.members.size()));
        if (fresh) tc.members.emplace_back();
        tc.class_of[static_cast<std::size_t>(v)] = it->second;
        tc.members[static_cast<std::size_t>(it->second)].push_back(v);
    }
    int q = static_cast<int>(tc.members.size());
    tc.quotient = Graph(q);
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b)
            if (g.adjacent(tc.members[static_cast<std::size_t>(a)][0],
                           tc.members[static_cast<std::size_t>(b)][0]))
                tc.quotient.add_edge(a, b);
    return tc;
}

namespace {

// Upper-triangle adjacency bits of the relabeled graph, packed so that
// lexicographic byte order equals word-wise numeric order.
using Cert = std::vector<uint64_t>;

struct CanonSearch {
    const Graph& q;
    const std::vector<int>& color; // per-vertex color; cells never mix colors
    int n;
    std::vector<VertexSet> rows;

    Cert best_cert, first_cert;
    std::vector<int> best_inv, first_inv; // position -> vertex
    bool have_first = false;

    std::vector<std::vector<int>> gens;
    uint64_t nodes = 0;
    static constexpr uint64_t kNodeCap = 20'000'000;
    static constexpr std::size_t kGenCap = 256;

    using Cells = std::vector<std::vector<int>>;

    explicit CanonSearch(const Graph& graph, const std::vector<int>& colors)
        : q(graph), color(colors), n(graph.order()) {
        rows.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) rows.push_back(q.neighbors(v));
    }

    Cert cert_of(const std::vector<int>& inv) const {
        long long bits = static_cast<long long>(n) * (n - 1) / 2;
        Cert c(static_cast<std::size_t>((bits + 63) / 64), 0);
        long long t = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++t)
                if (rows[static_cast<std::size_t>(inv[static_cast<std::size_t>(j)])].test(
                        inv[static_cast<std::size_t>(i)]))
                    c[static_cast<std::size_t>(t >> 6)] |= uint64_t{1} << (63 - (t & 63));
        return c;
    }

    // Equitable refinement: split every cell by its vector of neighbor
    // counts against all current cells, ordering new cells by ascending
    // count vector. Restarts until stable; deterministic and invariant
    // under isomorphism.
    void refine(Cells& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<VertexSet> masks;
            masks.reserve(cells.size());
            for (const auto& c : cells) {
                VertexSet m(n);
                for (int v : c) m.set(v);
                masks.push_back(std::move(m));
            }
            for (std::size_t ci = 0; ci < cells.size() && !changed; ++ci) {
                auto& cell = cells[ci];
                if (cell.size() <= 1) continue;
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> key;
                    key.reserve(cells.size());
                    for (const auto& m : masks)
                        key.push_back(q.deg_into(v, m));
                    keyed.emplace_back(std::move(key), v);
                }
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                bool split = false;
                for (std::size_t k = 1; k < keyed.size(); ++k)
                    if (keyed[k].first != keyed[0].first) {
                        split = true;
                        break;
                    }
                if (!split) continue;
                Cells pieces;
                for (std::size_t k = 0; k < keyed.size(); ++k) {
                    if (k == 0 || keyed[k].first != keyed[k - 1].first) pieces.emplace_back();
                    pieces.back().push_back(keyed[k].second);
                }
                for (auto& p : pieces) std::sort(p.begin(), p.end());
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci),
                             std::make_move_iterator(pieces.begin()),
                             std::make_move_iterator(pieces.end()));
                changed = true;
            }
        }
    }

    bool gen_fixes_path(const std::vector<int>& g, const std::vector<int>& path) const {
        for (int p : path)
            if (g[static_cast<std::size_t>(p)] != p) return false;
        return true;
    }

    void leaf(const Cells& cells) {
        std::vector<int> inv(static_cast<std::size_t>(n));
        for (std::size_t p = 0; p < cells.size(); ++p) inv[p] = cells[p][0];
        Cert c = cert_of(inv);
        if (!have_first) {
            first_cert = c;
            first_inv = inv;
            best_cert = c;
            best_inv = inv;
            have_first = true;
            return;
        }
        auto record_automorphism = [&](const std::vector<int>& ref_inv) {
            // Equal certificates: mapping this labeling onto the reference
            // labeling is an automorphism.
            std::vector<int> lab(static_cast<std::size_t>(n));
            for (int p = 0; p < n; ++p) lab[static_cast<std::size_t>(inv[static_cast<std::size_t>(p)])] = p;
            std::vector<int> sigma(static_cast<std::size_t>(n));
            bool ident = true;
            for (int v = 0; v < n; ++v) {
                sigma[static_cast<std::size_t>(v)] =
                    ref_inv[static_cast<std::size_t>(lab[static_cast<std::size_t>(v)])];
                if (sigma[static_cast<std::size_t>(v)] != v) ident = false;
            }
            if (!ident && gens.size() < kGenCap) gens.push_back(std::move(sigma));
        };
        if (c == first_cert) record_automorphism(first_inv);
        if (c < best_cert) {
            best_cert = c;
            best_inv = inv;
        } else if (c == best_cert && c != first_cert) {
            record_automorphism(best_inv);
        }
    }

    void run(Cells cells, std::vector<int>& path) {
        if (++nodes > kNodeCap)
            throw CapacityError("canonical labeling exceeded its node budget");
        refine(cells);
        std::size_t ti = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                ti = i;
                break;
            }
        if (ti == cells.size()) {
            leaf(cells);
            return;
        }

        // Orbit pruning against automorphisms that fix the current path.
        std::vector<int> parent(static_cast<std::size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        };
        std::size_t merged = 0;
        auto absorb_gens = [&]() {
            for (; merged < gens.size(); ++merged)
                if (gen_fixes_path(gens[merged], path))
                    for (int v = 0; v < n; ++v) unite(v, gens[merged][static_cast<std::size_t>(v)]);
        };
        absorb_gens();

        std::vector<int> tried;
        for (int v : cells[ti]) {
            absorb_gens();
            bool skip = false;
            for (int u : tried)
                if (find(u) == find(v)) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            tried.push_back(v);

            Cells child = cells;
            auto& target = child[ti];
            target.erase(std::find(target.begin(), target.end(), v));
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(ti), std::vector<int>{v});
            path.push_back(v);
            run(std::move(child), path);
            path.pop_back();
        }
    }
};

std::vector<int> quotient_canonical_positions(const Graph& q, const std::vector<int>& colors) {
    int n = q.order();
    if (n == 0) return {};
    CanonSearch s(q, colors);
    // Initial cells: group by color, ascending color value.
    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < n; ++v) by_color[colors[static_cast<std::size_t>(v)]].push_back(v);
    CanonSearch::Cells cells;
    for (auto& [c, vs] : by_color) cells.push_back(std::move(vs));
    std::vector<int> path;
    s.run(std::move(cells), path);
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(s.best_inv[static_cast<std::size_t>(p)])] = p;
    return pos;
}

// ---------------------------------------------------------------------------
// Flat single-word implementation for graphs on at most 64 vertices: the
// search hot path. Same rules as the general implementation (initial cells
// by ascending color, count-vector refinement with ascending splits, first
// non-singleton target cell, minimum certificate, orbit pruning by
// path-fixing generators), with all scratch in one reusable workspace.

struct SmallCanon {
    static constexpr int kMaxGens = 96;

    int n = 0;
    int cert_words = 0;
    uint64_t row[64];
    int color[64];

    struct Part {
        int8_t order[64];  // position -> vertex
        uint64_t cell_end; // bit p set iff position p closes its cell
    };
    Part level[65]; // partition per recursion depth

    int8_t path[64];
    int path_len = 0;

    uint64_t best_cert[32], first_cert[32];
    int8_t best_inv[64], first_inv[64];
    bool have_first = false;

    int8_t gens[kMaxGens][64];
    int gen_count = 0;

    uint64_t nodes = 0;
    static constexpr uint64_t kNodeCap = 20'000'000;

    // scratch
    int key[64][64]; // per cell member: counts against each cell
    int8_t lab_buf[64];

    void load(const Graph& g, const int* colors) {
        n = g.order();
        cert_words = (n * (n - 1) / 2 + 63) / 64;
        for (int v = 0; v < n; ++v) {
            row[v] = n > 0 ? g.row(v)[0] : 0;
            color[v] = colors[v];
        }
        path_len = 0;
        have_first = false;
        gen_count = 0;
        nodes = 0;
    }

    void initial_partition(Part& p) const {
        int at = 0;
        // ascending color value, vertices ascending inside a cell
        int order_buf[64];
        for (int i = 0; i < n; ++i) order_buf[i] = i;
        std::stable_sort(order_buf, order_buf + n,
                         [&](int a, int b) { return color[a] < color[b]; });
        p.cell_end = 0;
        for (int i = 0; i < n; ++i) {
            p.order[at++] = static_cast<int8_t>(order_buf[i]);
            if (i + 1 == n || color[order_buf[i + 1]] != color[order_buf[i]])
                p.cell_end |= uint64_t{1} << i;
        }
    }

    void refine(Part& p) {
        bool changed = true;
        while (changed) {
            changed = false;
            // cell masks in current order
            uint64_t cell_mask[64];
            int cell_at[64]; // start position of each cell
            int cells = 0;
            {
                int start = 0;
                uint64_t m = 0;
                for (int pos = 0; pos < n; ++pos) {
                    m |= uint64_t{1} << p.order[pos];
                    if (p.cell_end & (uint64_t{1} << pos)) {
                        cell_mask[cells] = m;
                        cell_at[cells] = start;
                        ++cells;
                        m = 0;
                        start = pos + 1;
                    }
                }
            }
            for (int c = 0; c < cells && !changed; ++c) {
                int a = cell_at[c];
                int b = c + 1 < cells ? cell_at[c + 1] : n;
                int len = b - a;
                if (len <= 1) continue;
                for (int i = 0; i < len; ++i) {
                    int v = p.order[a + i];
                    for (int d = 0; d < cells; ++d)
                        key[i][d] = std::popcount(row[v] & cell_mask[d]);
                }
                // stable insertion sort of members by key, ascending
                int idx[64];
                for (int i = 0; i < len; ++i) idx[i] = i;
                auto key_less = [&](int x, int y) {
                    for (int d = 0; d < cells; ++d) {
                        if (key[x][d] != key[y][d]) return key[x][d] < key[y][d];
                    }
                    return false;
                };
                for (int i = 1; i < len; ++i) {
                    int x = idx[i];
                    int j = i - 1;
                    while (j >= 0 && key_less(x, idx[j])) {
                        idx[j + 1] = idx[j];
                        --j;
                    }
                    idx[j + 1] = x;
                }
                bool split = false;
                for (int i = 1; i < len; ++i)
                    if (key_less(idx[0], idx[i]) || key_less(idx[i], idx[0])) {
                        split = true;
                        break;
                    }
                if (!split) continue;
                int8_t new_order[64];
                for (int i = 0; i < len; ++i) new_order[i] = p.order[a + idx[i]];
                for (int i = 0; i < len; ++i) p.order[a + i] = new_order[i];
                // close a cell wherever adjacent keys differ
                for (int i = 0; i + 1 < len; ++i) {
                    if (key_less(idx[i], idx[i + 1]))
                        p.cell_end |= uint64_t{1} << (a + i);
                }
                changed = true;
            }
        }
    }

    static int first_nonsingleton(const Part& p, int n_) {
        int start = 0;
        for (int pos = 0; pos < n_; ++pos) {
            if (p.cell_end & (uint64_t{1} << pos)) {
                if (pos - start >= 1) {
                    if (pos > start) return start;
                }
                start = pos + 1;
            }
        }
        return -1;
    }

    void leaf(const Part& p) {
        uint64_t cert[32];
        for (int w = 0; w < cert_words; ++w) cert[w] = 0;
        long long t = 0;
        for (int j = 1; j < n; ++j) {
            uint64_t rj = row[p.order[j]];
            for (int i = 0; i < j; ++i, ++t)
                if ((rj >> p.order[i]) & 1u)
                    cert[t >> 6] |= uint64_t{1} << (63 - (t & 63));
        }
        auto cmp = [&](const uint64_t* a, const uint64_t* b) {
            for (int w = 0; w < cert_words; ++w) {
                if (a[w] != b[w]) return a[w] < b[w] ? -1 : 1;
            }
            return 0;
        };
        if (!have_first) {
            std::copy(cert, cert + cert_words, first_cert);
            std::copy(cert, cert + cert_words, best_cert);
            std::copy(p.order, p.order + n, first_inv);
            std::copy(p.order, p.order + n, best_inv);
            have_first = true;
            return;
        }
        auto record = [&](const int8_t* ref_inv) {
            if (gen_count >= kMaxGens) return;
            for (int pos = 0; pos < n; ++pos) lab_buf[p.order[pos]] = static_cast<int8_t>(pos);
            int8_t* sigma = gens[gen_count];
            bool ident = true;
            for (int v = 0; v < n; ++v) {
                sigma[v] = ref_inv[lab_buf[v]];
                if (sigma[v] != v) ident = false;
            }
            if (!ident) ++gen_count;
        };
        int cf = cmp(cert, first_cert);
        if (cf == 0) record(first_inv);
        int cb = cmp(cert, best_cert);
        if (cb < 0) {
            std::copy(cert, cert + cert_words, best_cert);
            std::copy(p.order, p.order + n, best_inv);
        } else if (cb == 0 && cf != 0) {
            record(best_inv);
        }
    }

    void run(int depth) {
        if (++nodes > kNodeCap)
            throw CapacityError("canonical labeling exceeded its node budget");
        Part& p = level[depth];
        refine(p);
        int target = first_nonsingleton(p, n);
        if (target < 0) {
            leaf(p);
            return;
        }
        int end = target;
        while (!(p.cell_end & (uint64_t{1} << end))) ++end;

        uint64_t parent[64];
        auto uf_reset = [&]() {
            for (int i = 0; i < n; ++i) parent[i] = static_cast<uint64_t>(i);
        };
        auto uf_find = [&](int x) {
            while (parent[x] != static_cast<uint64_t>(x)) {
                parent[x] = parent[parent[x]];
                x = static_cast<int>(parent[x]);
            }
            return x;
        };
        auto uf_union = [&](int a, int b) {
            a = uf_find(a);
            b = uf_find(b);
            if (a != b) parent[std::max(a, b)] = static_cast<uint64_t>(std::min(a, b));
        };
        int merged = 0;
        uf_reset();
        auto absorb = [&]() {
            for (; merged < gen_count; ++merged) {
                bool fixes = true;
                for (int i = 0; i < path_len && fixes; ++i)
                    if (gens[merged][path[i]] != path[i]) fixes = false;
                if (fixes)
                    for (int v = 0; v < n; ++v) uf_union(v, gens[merged][v]);
            }
        };
        absorb();

        int8_t tried[64];
        int tried_count = 0;
        for (int pos = target; pos <= end; ++pos) {
            int v = p.order[pos];
            absorb();
            bool skip = false;
            for (int i = 0; i < tried_count && !skip; ++i)
                if (uf_find(tried[i]) == uf_find(v)) skip = true;
            if (skip) continue;
            tried[tried_count++] = static_cast<int8_t>(v);

            Part& child = level[depth + 1];
            child = p;
            // move v to the front of its cell as a singleton
            int at = target;
            child.order[at++] = static_cast<int8_t>(v);
            for (int q2 = target; q2 <= end; ++q2)
                if (p.order[q2] != v) child.order[at++] = p.order[q2];
            child.cell_end |= uint64_t{1} << target;
            path[path_len++] = static_cast<int8_t>(v);
            run(depth + 1);
            --path_len;
        }
    }
};

// One workspace per thread; SmallCanon is ~90 KB of flat scratch.
thread_local SmallCanon tls_small_canon;

// labeling for graphs on <= 64 vertices, twin collapse included.
std::vector<int> small_canonical_labeling(const Graph& g) {
    int n = g.order();
    uint64_t rows[64];
    for (int v = 0; v < n; ++v) rows[v] = g.row(v)[0];

    // twin classes: group equal rows, class order by smallest member
    int class_of[64], rep[64], mult[64];
    int q = 0;
    for (int v = 0; v < n; ++v) {
        int c = -1;
        for (int d = 0; d < q; ++d)
            if (rows[rep[d]] == rows[v]) {
                c = d;
                break;
            }
        if (c == -1) {
            c = q++;
            rep[c] = v;
            mult[c] = 0;
        }
        class_of[v] = c;
        ++mult[c];
    }
    // quotient rows over class indices
    SmallCanon& sc = tls_small_canon;
    sc.n = q;
    sc.cert_words = (q * (q - 1) / 2 + 63) / 64;
    for (int c = 0; c < q; ++c) {
        uint64_t r = 0;
        uint64_t m = rows[rep[c]];
        while (m) {
            int u = std::countr_zero(m);
            m &= m - 1;
            r |= uint64_t{1} << class_of[u];
        }
        sc.row[c] = r;
        sc.color[c] = mult[c];
    }
    sc.path_len = 0;
    sc.have_first = false;
    sc.gen_count = 0;
    sc.nodes = 0;
    sc.initial_partition(sc.level[0]);
    sc.run(0);

    int qpos[64];
    for (int p = 0; p < q; ++p) qpos[sc.best_inv[p]] = p;
    int order[64];
    for (int c = 0; c < q; ++c) order[qpos[c]] = c;
    int offset[65];
    offset[0] = 0;
    for (int p = 0; p < q; ++p) offset[p + 1] = offset[p] + mult[order[p]];
    int at[64];
    for (int c = 0; c < q; ++c) at[c] = offset[qpos[c]];
    std::vector<int> lab(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) lab[static_cast<std::size_t>(v)] = at[class_of[v]]++;
    return lab;
}

} // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    int n = g.order();
    if (n == 0) return {};
    if (n <= 64) return small_canonical_labeling(g);
    TwinClasses tc = twin_classes(g);
    int q = tc.quotient.order();
    if (q > 128)
        throw CapacityError("canonical labeling: more than 128 twin classes",
                            std::nullopt);
    std::vector<int> colors(static_cast<std::size_t>(q));
    for (int c = 0; c < q; ++c)
        colors[static_cast<std::size_t>(c)] = static_cast<int>(tc.members[static_cast<std::size_t>(c)].size());
    std::vector<int> qpos = quotient_canonical_positions(tc.quotient, colors);

    // Expand: classes occupy consecutive blocks in canonical class order;
    // members keep their ascending original order inside a block.
    std::vector<int> order(static_cast<std::size_t>(q));
    for (int c = 0; c < q; ++c) order[static_cast<std::size_t>(qpos[static_cast<std::size_t>(c)])] = c;
    std::vector<int> lab(static_cast<std::size_t>(n));
    int at = 0;
    for (int p = 0; p < q; ++p)
        for (int v : tc.members[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])])
            lab[static_cast<std::size_t>(v)] = at++;
    return lab;
}

CanonicalForm canonical_form(const Graph& g) {
    int n = g.order();
    if (n > 0 && n <= 64) {
        std::vector<int> lab = canonical_labeling(g);
        uint64_t nr[64] = {};
        for (int v = 0; v < n; ++v) {
            uint64_t m = g.row(v)[0];
            uint64_t t = 0;
            while (m) {
                int u = std::countr_zero(m);
                m &= m - 1;
                t |= uint64_t{1} << lab[static_cast<std::size_t>(u)];
            }
            nr[lab[static_cast<std::size_t>(v)]] = t;
        }
        std::string out;
        out.push_back(static_cast<char>(63 + (n <= 62 ? n : 0)));
        if (n > 62) {
            out[0] = static_cast<char>(126);
            out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
            out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
            out.push_back(static_cast<char>(63 + (n & 63)));
        }
        int val = 0, nb = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                val = (val << 1) | static_cast<int>((nr[j] >> i) & 1u);
                if (++nb == 6) {
                    out.push_back(static_cast<char>(63 + val));
                    val = 0;
                    nb = 0;
                }
            }
        if (nb > 0) out.push_back(static_cast<char>(63 + (val << (6 - nb))));
        return CanonicalForm{std::move(out)};
    }
    return CanonicalForm{to_graph6(g.relabeled(canonical_labeling(g)))};
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace tfx
