#include "tfx/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "tfx/canonical.hpp"
#include "tfx/constructions.hpp"
#include "tfx/invariants.hpp"

namespace tfx {

// ---------------------------------------------------------------------------
// Predicate

Predicate Predicate::parse(const std::string& text) {
    Predicate p;
    std::size_t at = 0;
    while (at <= text.size()) {
        std::size_t comma = text.find(',', at);
        std::string atom = text.substr(at, comma == std::string::npos ? comma : comma - at);
        at = comma == std::string::npos ? text.size() + 1 : comma + 1;
        // trim spaces
        while (!atom.empty() && atom.front() == ' ') atom.erase(atom.begin());
        while (!atom.empty() && atom.back() == ' ') atom.pop_back();
        if (atom.empty() || atom == "triangle-free" || atom == "tf") continue;
        if (atom == "non-bipartite") {
            p.non_bipartite = true;
        } else if (atom == "connected") {
            p.connected = true;
        } else if (atom.rfind("chi>=", 0) == 0) {
            p.chi_ge = std::stoi(atom.substr(5));
        } else if (atom.rfind("d2>=", 0) == 0) {
            p.d2_ge = std::stoi(atom.substr(4));
        } else {
            throw DomainError("unknown predicate atom: " + atom);
        }
    }
    return p;
}

std::string Predicate::to_string() const {
    std::string s = "triangle-free";
    if (non_bipartite) s += ",non-bipartite";
    if (chi_ge > 0) s += ",chi>=" + std::to_string(chi_ge);
    if (d2_ge > 0) s += ",d2>=" + std::to_string(d2_ge);
    if (connected) s += ",connected";
    return s;
}

namespace {

// Decision version of d2 >= k: no transversal of size < k exists.
bool d2_at_least(const Graph& g, int k) {
    if (k <= 0) return true;
    try {
        return odd_cycle_transversal(g).d2 >= k;
    } catch (const CapacityError&) {
        // Within enumeration sizes this cannot trigger; treat as not met.
        return false;
    }
}

bool chi_at_least(const Graph& g, int k) {
    if (k <= 0) return true;
    if (k == 1) return g.order() > 0;
    // chi >= k iff no (k-1)-coloring; collapse twins first.
    TwinClasses tc = twin_classes(g);
    return !k_colorable(tc.quotient, k - 1, nullptr, nullptr);
}

} // namespace

bool Predicate::eval(const Graph& g) const {
    if (connected && !is_connected(g)) return false;
    if (non_bipartite && is_bipartite(g).is_bipartite()) return false;
    if (chi_ge > 0 && !chi_at_least(g, chi_ge)) return false;
    if (d2_ge > 0 && !d2_at_least(g, d2_ge)) return false;
    return true;
}

int default_enumerate_ceiling() {
    if (const char* env = std::getenv("TFX_CEILING")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 11;
}

// ---------------------------------------------------------------------------
// Canonical augmentation
//
// Parents on k vertices are extended by one vertex adjacent to an
// independent set S (this preserves triangle-freeness and every
// triangle-free graph arises this way). A child is kept iff its new vertex
// could have been the canonical deletion vertex: it must attain the minimum
// of the invariant key (degree, sorted neighbor degrees); on ties the
// deleted-subgraph canonical forms are compared against the key-minimal
// vertex carrying the largest canonical label. Children of one parent are
// deduplicated by canonical form, which makes the generation exact.

namespace {

struct MaxEdgesState {
    int best = -1;
    std::vector<std::string> witnesses;
    int target = 0;
    long long mantel_full = 0;
};

struct Dfs {
    int target;
    Predicate pred;
    const std::function<void(const Graph&, const std::string&)>* sink;
    EnumStats stats;
    MaxEdgesState* opt = nullptr; // set in max_edges mode

    // candidate-loop scratch, reused across millions of calls
    std::vector<int> key_new, key_buf, w0;

    Dfs(int n, Predicate p) : target(n), pred(p), sink(nullptr) {}

    void run(const Graph& root) { visit_accepted(root, to_graph6(root)); }

    void visit_accepted(const Graph& g, const std::string& canon_g6) {
        ++stats.nodes;
        if (g.order() == target) {
            ++stats.generated;
            if (opt) {
                int e = static_cast<int>(g.edge_count());
                if (e < opt->best) return;
                if (!pred.eval(g)) return;
                ++stats.emitted;
                if (e > opt->best) {
                    opt->best = e;
                    opt->witnesses.clear();
                }
                opt->witnesses.push_back(canon_g6);
            } else {
                if (!pred.eval(g)) return;
                ++stats.emitted;
                if (sink) (*sink)(from_graph6(canon_g6), canon_g6);
            }
            return;
        }
        extend(g);
    }

    void extend(const Graph& g) {
        int k = g.order();
        std::vector<int> deg = g.degrees();
        int delta = k == 0 ? 0 : *std::min_element(deg.begin(), deg.end());
        int cap = delta + 1; // the new vertex must end up with minimum degree
        VertexSet min_deg_mask(k);
        for (int v = 0; v < k; ++v)
            if (deg[static_cast<std::size_t>(v)] == delta) min_deg_mask.set(v);

        std::unordered_set<std::string> seen_children;
        std::vector<int> chosen;
        VertexSet chosen_mask(k);
        VertexSet closed(k); // chosen plus all their neighbors

        // Every independent subset of size <= cap, ascending order.
        std::function<void(int)> rec = [&](int from) {
            candidate(g, deg, chosen, chosen_mask, min_deg_mask, delta, seen_children);
            if (static_cast<int>(chosen.size()) == cap) return;
            for (int u = from; u < k; ++u) {
                if (closed.test(u)) continue;
                VertexSet save = closed;
                chosen.push_back(u);
                chosen_mask.set(u);
                closed.set(u);
                closed |= g.neighbors(u);
                rec(u + 1);
                chosen.pop_back();
                chosen_mask.reset(u);
                closed = save;
            }
        };
        rec(0);
    }

    // The kept child must have its new vertex as a minimum of the invariant
    // key (degree, sorted neighbor degrees). Both parts are evaluated on
    // the parent plus S, so the child graph is only materialized for
    // survivors.
    void candidate(const Graph& g, const std::vector<int>& deg, const std::vector<int>& s,
                   const VertexSet& s_mask, const VertexSet& min_deg_mask, int delta,
                   std::unordered_set<std::string>& seen_children) {
        ++stats.candidates;
        int k = g.order();
        int sz = static_cast<int>(s.size());
        // Old vertices keep degree >= delta (+1 inside S); the new vertex can
        // only attain the minimum if every parent min-degree vertex joined S
        // whenever |S| = delta+1.
        if (sz == delta + 1 && !s_mask.contains(min_deg_mask)) return;

        // Sorted neighbor-degree key of the new vertex: degrees of S in H.
        key_new.clear();
        for (int u : s) key_new.push_back(deg[static_cast<std::size_t>(u)] + 1);
        std::sort(key_new.begin(), key_new.end());

        // Competing vertices: exactly those of degree sz in H.
        w0.clear();
        bool new_strictly_beaten = false;
        for (int v = 0; v < k && !new_strictly_beaten; ++v) {
            int dv = deg[static_cast<std::size_t>(v)] + (s_mask.test(v) ? 1 : 0);
            if (dv != sz) continue;
            key_buf.clear();
            VertexSet nb = g.neighbors(v);
            for (int u = nb.first(); u != -1; u = nb.next(u))
                key_buf.push_back(deg[static_cast<std::size_t>(u)] + (s_mask.test(u) ? 1 : 0));
            if (s_mask.test(v)) key_buf.push_back(sz); // edge to the new vertex
            std::sort(key_buf.begin(), key_buf.end());
            if (key_buf < key_new) new_strictly_beaten = true;
            if (key_buf == key_new) w0.push_back(v);
        }
        if (new_strictly_beaten) return;

        Graph h(k + 1);
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v)
                if (g.adjacent(u, v)) h.add_edge(u, v);
        for (int u : s) h.add_edge(u, k);

        std::string canon;
        if (!w0.empty() && !tie_break_accepts(h, k, w0, &canon)) return;
        if (canon.empty()) canon = canonical_form(h).g6;
        if (!seen_children.insert(canon).second) return;

        if (opt && h.order() < target) {
            // Admissible completion bound: each later vertex attaches to an
            // independent set of the current graph, and the added block is
            // itself triangle-free.
            int remaining = target - h.order();
            long long ub = h.edge_count() +
                           static_cast<long long>(remaining) * independence_number(h) +
                           mantel_bound(remaining);
            ub = std::min(ub, opt->mantel_full);
            if (ub < opt->best) return;
        }
        visit_accepted(h, canon);
    }

    // w0 holds the old vertices sharing the new vertex's key. Ties are
    // resolved against the key-minimal vertex with the largest canonical
    // label; deletion-similar candidates are also kept (the per-parent
    // dedup removes their duplicates). Fills `canon` when it computes a
    // full labeling anyway.
    static bool tie_break_accepts(const Graph& h, int v_new, const std::vector<int>& w0,
                                  std::string* canon) {
        int n = h.order();
        std::vector<int> lab = canonical_labeling(h);
        int w = v_new;
        for (int v : w0)
            if (lab[static_cast<std::size_t>(v)] > lab[static_cast<std::size_t>(w)]) w = v;
        bool ok = w == v_new;
        if (!ok) {
            VertexSet keep_v = VertexSet::full(n);
            keep_v.reset(v_new);
            VertexSet keep_w = VertexSet::full(n);
            keep_w.reset(w);
            ok = canonical_form(h.induced_subgraph(keep_v)) ==
                 canonical_form(h.induced_subgraph(keep_w));
        }
        if (ok) *canon = to_graph6(h.relabeled(lab));
        return ok;
    }
};

int effective_ceiling(const SearchLimits& limits) {
    return limits.enumerate_ceiling > 0 ? limits.enumerate_ceiling : default_enumerate_ceiling();
}

int token_depth_policy(int n) { return std::clamp(n - 4, 0, 7); }

} // namespace

void enumerate_triangle_free(int n, const Predicate& pred,
                             const std::function<void(const Graph&, const std::string&)>& visit,
                             EnumStats* stats, const SearchLimits& limits) {
    if (n < 1) throw DomainError("enumerate_triangle_free: need n >= 1");
    if (n > effective_ceiling(limits))
        throw CapacityError("enumerate_triangle_free: n exceeds the enumeration ceiling of " +
                            std::to_string(effective_ceiling(limits)));
    Dfs dfs(n, pred);
    dfs.sink = &visit;
    dfs.run(Graph(1));
    if (stats) stats->add(dfs.stats);
}

void enumerate_from_token(const std::string& token_g6, int n, const Predicate& pred,
                          const std::function<void(const Graph&, const std::string&)>& visit,
                          EnumStats* stats) {
    Graph root = from_graph6(token_g6);
    if (root.order() > n) throw DomainError("enumerate_from_token: token larger than target");
    Dfs dfs(n, pred);
    dfs.sink = &visit;
    dfs.run(root);
    if (stats) stats->add(dfs.stats);
}

std::vector<std::string> split_frontier(int n, const Predicate& pred, int depth) {
    (void)pred; // tokens are predicate-independent; atoms apply at full size
    if (depth < 0 || depth >= n) throw DomainError("split_frontier: need 0 <= depth < n");
    std::vector<std::string> tokens;
    Dfs dfs(depth + 1, Predicate{});
    std::function<void(const Graph&, const std::string&)> sink =
        [&](const Graph&, const std::string& g6) { tokens.push_back(g6); };
    dfs.sink = &sink;
    dfs.run(Graph(1));
    return tokens;
}

namespace {

// Deterministic parallel runner: fixed token partition, one independent
// result slot per token, merged in token order. Scheduling starts with the
// sparsest tokens (their subtrees dominate), which only affects wall time,
// never results.
template <typename PerToken>
void run_tokens(const std::vector<std::string>& tokens, int jobs, PerToken&& fn) {
    int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tokens.size())));
    std::vector<std::size_t> schedule(tokens.size());
    std::iota(schedule.begin(), schedule.end(), std::size_t{0});
    std::stable_sort(schedule.begin(), schedule.end(), [&](std::size_t a, std::size_t b) {
        return from_graph6(tokens[a]).edge_count() < from_graph6(tokens[b]).edge_count();
    });
    if (workers == 1) {
        for (std::size_t i : schedule) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= schedule.size()) return;
                fn(schedule[i]);
            }
        });
    for (auto& t : pool) t.join();
}

} // namespace

std::vector<std::string> enumerate_collect(int n, const Predicate& pred, EnumStats* stats,
                                           const SearchLimits& limits) {
    if (n < 1) throw DomainError("enumerate_collect: need n >= 1");
    if (n > effective_ceiling(limits))
        throw CapacityError("enumerate: n exceeds the enumeration ceiling of " +
                            std::to_string(effective_ceiling(limits)));
    std::vector<std::string> tokens = split_frontier(n, pred, token_depth_policy(n));
    std::vector<std::vector<std::string>> partial(tokens.size());
    std::vector<EnumStats> pstats(tokens.size());
    run_tokens(tokens, limits.jobs, [&](std::size_t i) {
        enumerate_from_token(
            tokens[i], n, pred,
            [&](const Graph&, const std::string& g6) { partial[i].push_back(g6); }, &pstats[i]);
    });
    std::vector<std::string> out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        out.insert(out.end(), partial[i].begin(), partial[i].end());
        if (stats) stats->add(pstats[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

MaxEdgesResult max_edges(int n, const Predicate& pred, const SearchLimits& limits) {
    if (n < 1) throw DomainError("max_edges: need n >= 1");
    if (n > limits.max_edges_ceiling)
        throw CapacityError("max_edges: n exceeds the ceiling of " +
                            std::to_string(limits.max_edges_ceiling));

    std::vector<std::string> tokens = split_frontier(n, pred, token_depth_policy(n));
    std::vector<MaxEdgesResult> partial(tokens.size());
    run_tokens(tokens, limits.jobs, [&](std::size_t i) {
        Graph root = from_graph6(tokens[i]);
        Dfs dfs(n, pred);
        MaxEdgesState state;
        state.target = n;
        state.mantel_full = mantel_bound(n);
        dfs.opt = &state;
        dfs.run(root);
        partial[i].max_edges = state.best;
        partial[i].witnesses = std::move(state.witnesses);
        partial[i].stats = dfs.stats;
    });

    MaxEdgesResult out;
    for (const auto& p : partial) out.max_edges = std::max(out.max_edges, p.max_edges);
    for (auto& p : partial) {
        out.stats.add(p.stats);
        if (p.max_edges == out.max_edges && out.max_edges >= 0)
            out.witnesses.insert(out.witnesses.end(), p.witnesses.begin(), p.witnesses.end());
    }
    std::sort(out.witnesses.begin(), out.witnesses.end());
    out.witnesses.erase(std::unique(out.witnesses.begin(), out.witnesses.end()),
                        out.witnesses.end());
    // emitted counted per token against local bests; recount from witnesses
    // is not possible, so keep the deterministic per-token sum.
    return out;
}

// ---------------------------------------------------------------------------
// Theorem verification

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::equality: return "bound-met-with-equality";
        case Verdict::strict: return "bound-strict";
        case Verdict::violated: return "bound-violated";
        case Verdict::not_applicable: return "bound-not-applicable";
    }
    return "?";
}

namespace {

Predicate hypothesis_of(BoundId bound) {
    Predicate p;
    switch (bound) {
        case BoundId::mantel: break;
        case BoundId::erdos_andrasfai: p.non_bipartite = true; break;
        case BoundId::chi4: p.chi_ge = 4; break;
        case BoundId::d2ge4: p.d2_ge = 4; break;
        case BoundId::brouwer:
            throw DomainError("verify: the r-partite bound is evaluated as a formula only");
    }
    return p;
}

int theorem_threshold(BoundId bound) {
    switch (bound) {
        case BoundId::mantel: return 0;
        case BoundId::erdos_andrasfai: return 1;
        case BoundId::chi4: return 90;
        case BoundId::d2ge4: return 90;
        case BoundId::brouwer: return 1;
    }
    return 0;
}

void check_witnesses(SearchReport& rep, const SearchLimits& limits) {
    rep.witness_check_ran = false;
    if (rep.capacity_hit || rep.max_edges < 0) return;
    switch (rep.bound) {
        case BoundId::mantel: {
            // Equality case is unique: the balanced complete bipartite graph.
            rep.witness_check_ran = true;
            std::string turan = canonical_form(turan_graph(rep.n, 2)).g6;
            rep.witness_check_ok =
                rep.witnesses.size() == 1 && rep.witnesses[0] == turan;
            rep.witness_check_note = "unique extremal graph is T_2(n)";
            break;
        }
        case BoundId::erdos_andrasfai: {
            if (rep.n < 5) return;
            rep.witness_check_ran = true;
            std::string h = canonical_form(h0(rep.n)).g6;
            rep.witness_check_ok =
                std::find(rep.witnesses.begin(), rep.witnesses.end(), h) != rep.witnesses.end();
            rep.witness_check_note = "H_0(n) appears among the extremal graphs";
            break;
        }
        case BoundId::chi4: {
            if (rep.n < 12) return;
            rep.witness_check_ran = true;
            std::vector<std::string> family;
            g_family_all(rep.n, [&](const Graph& g, const GFamilyParams&) {
                family.push_back(canonical_form(g).g6);
            });
            std::sort(family.begin(), family.end());
            rep.witness_check_ok = true;
            for (const auto& w : rep.witnesses)
                if (!std::binary_search(family.begin(), family.end(), w))
                    rep.witness_check_ok = false;
            rep.witness_check_note = "every extremal graph lies in the blow-up family";
            break;
        }
        case BoundId::d2ge4: {
            if (rep.n < 14) return;
            rep.witness_check_ran = true;
            std::string h = canonical_form(h_n(rep.n)).g6;
            rep.witness_check_ok =
                std::find(rep.witnesses.begin(), rep.witnesses.end(), h) != rep.witnesses.end();
            rep.witness_check_note = "H_n appears among the extremal graphs";
            break;
        }
        case BoundId::brouwer: break;
    }
    (void)limits;
}

} // namespace

int verify_exit_code(const std::vector<SearchReport>& reports) {
    bool capacity = false;
    for (const auto& r : reports) {
        if (r.verdict == Verdict::violated) return 4;
        capacity = capacity || r.capacity_hit;
    }
    return capacity ? 3 : 0;
}

std::vector<SearchReport> verify_theorem(BoundId bound, int from, int to,
                                         const SearchLimits& limits) {
    if (from < 1 || to < from) throw DomainError("verify_theorem: bad n range");
    Predicate pred = hypothesis_of(bound);
    std::vector<SearchReport> out;
    for (int n = from; n <= to; ++n) {
        SearchReport rep;
        rep.n = n;
        rep.predicate = pred;
        rep.bound = bound;
        auto start = std::chrono::steady_clock::now();
        bool bound_defined = true;
        try {
            rep.bound_value = bound_value(bound, n);
        } catch (const DomainError&) {
            bound_defined = false; // n below the formula's domain
        }
        try {
            MaxEdgesResult res = max_edges(n, pred, limits);
            rep.max_edges = res.max_edges;
            rep.witnesses = res.witnesses;
            rep.stats = res.stats;
        } catch (const CapacityError&) {
            rep.capacity_hit = true;
        }
        if (rep.capacity_hit || rep.max_edges < 0 || !bound_defined) {
            rep.verdict = Verdict::not_applicable;
        } else if (n < theorem_threshold(bound)) {
            rep.verdict = Verdict::not_applicable; // recorded, not asserted
        } else if (rep.max_edges == rep.bound_value) {
            rep.verdict = Verdict::equality;
        } else if (rep.max_edges < rep.bound_value) {
            rep.verdict = Verdict::strict;
        } else {
            rep.verdict = Verdict::violated;
        }
        if (bound_defined) check_witnesses(rep, limits);
        rep.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        out.push_back(std::move(rep));
    }
    return out;
}

} // namespace tfx
