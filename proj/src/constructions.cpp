#include "tfx/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tfx/canonical.hpp"

namespace tfx {

namespace {

std::vector<int> turan_parts(int n, int r) {
    // Parts may be empty when r > n; that keeps t_2(n) defined from n = 0 up.
    if (r < 1 || n < 0) throw DomainError("turan: need r >= 1 and n >= 0");
    std::vector<int> sizes(static_cast<std::size_t>(r), n / r);
    for (int i = 0; i < n % r; ++i) ++sizes[static_cast<std::size_t>(i)];
    return sizes;
}

} // namespace

Graph turan_graph(int n, int r) {
    std::vector<int> sizes = turan_parts(n, r);
    Graph kr(r);
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) kr.add_edge(a, b);
    return blow_up({std::move(kr), std::move(sizes)});
}

long long turan_edges(int n, int r) {
    std::vector<int> sizes = turan_parts(n, r);
    long long sq = 0;
    for (int s : sizes) sq += static_cast<long long>(s) * s;
    return (static_cast<long long>(n) * n - sq) / 2;
}

Graph h0(int n) {
    if (n < 5) throw DomainError("h0: need n >= 5");
    Graph g(n);
    int half = (n - 1 + 1) / 2; // ceil((n-1)/2), size of the first part of T_2(n-1)
    for (int a = 0; a < half; ++a)
        for (int b = half; b < n - 1; ++b) g.add_edge(a, b);
    int x = 0, y = half, z = n - 1;
    g.remove_edge(x, y);
    g.add_edge(x, z);
    g.add_edge(y, z);
    return g;
}

Graph grotzsch() {
    Graph g(11);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);           // outer cycle
        g.add_edge(5 + i, (i + 4) % 5);       // v_i -- u_{i-1}
        g.add_edge(5 + i, (i + 1) % 5);       // v_i -- u_{i+1}
        g.add_edge(10, 5 + i);                // hub
    }
    return g;
}

namespace {

// The blow-up template: u_0..u_4, v_0..v_4, w with unit sizes gives the
// Grotzsch graph back.
Graph g_template() { return grotzsch(); }

bool matches_variant(int n, int sum_v, int w_size) {
    int a = (n - 3) / 2, a2 = (n - 3 + 1) / 2;
    int b = (n - 7 + 1) / 2, b2 = (n - 7) / 2;
    return (sum_v == a && w_size == b) || (sum_v == a2 && w_size == b2);
}

} // namespace

void GFamilyParams::validate() const {
    if (v_parts.size() != 5) throw DomainError("g_family: exactly five ring classes required");
    long long sum = 0;
    for (int p : v_parts) {
        if (p < 1) throw DomainError("g_family: every ring class must be nonempty");
        sum += p;
    }
    if (w_size < 1) throw DomainError("g_family: hub class must be nonempty");
    if (5 + sum + w_size != n) throw DomainError("g_family: sizes do not add up to n");
    if (!matches_variant(n, static_cast<int>(sum), w_size))
        throw DomainError("g_family: sizes violate the floor/ceil split of (n-3)/2 and (n-7)/2");
}

Graph g_family(const GFamilyParams& params) {
    params.validate();
    std::vector<int> sizes(11, 1);
    for (int i = 0; i < 5; ++i) sizes[static_cast<std::size_t>(5 + i)] = params.v_parts[static_cast<std::size_t>(i)];
    sizes[10] = params.w_size;
    return blow_up({g_template(), std::move(sizes)});
}

namespace {

// Compositions of `total` into five positive parts, colex order.
void for_each_composition(int total, const std::function<void(const std::array<int, 5>&)>& f) {
    if (total < 5) return;
    std::array<int, 5> c{};
    // Colex: advance the leftmost position last.
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == 4) {
            c[4] = left;
            if (left >= 1) f(c);
            return;
        }
        for (int v = 1; v <= left - (4 - idx); ++v) {
            c[static_cast<std::size_t>(idx)] = v;
            rec(idx + 1, left - v);
        }
    };
    rec(0, total);
}

// Dihedral transforms of a composition around the 5-cycle; skipping
// non-minimal ones avoids building most isomorphic duplicates before the
// canonical-form dedup.
bool dihedral_minimal(const std::array<int, 5>& c) {
    for (int rot = 0; rot < 5; ++rot)
        for (int flip = 0; flip < 2; ++flip) {
            if (rot == 0 && flip == 0) continue;
            std::array<int, 5> t{};
            for (int i = 0; i < 5; ++i) {
                int j = flip ? (5 - i) % 5 : i;
                t[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>((j + rot) % 5)];
            }
            if (t < c) return false;
        }
    return true;
}

} // namespace

void g_family_all(int n, const std::function<void(const Graph&, const GFamilyParams&)>& visit) {
    if (n < 12) throw DomainError("g_family_all: need n >= 12");
    int floor_v = (n - 3) / 2, ceil_v = (n - 3 + 1) / 2;
    int ceil_w = (n - 7 + 1) / 2, floor_w = (n - 7) / 2;
    std::vector<std::pair<int, int>> variants{{floor_v, ceil_w}};
    if (ceil_v != floor_v) variants.emplace_back(ceil_v, floor_w);

    std::set<std::string> seen;
    for (auto [sum_v, w_size] : variants) {
        if (sum_v < 5 || w_size < 1) continue;
        for_each_composition(sum_v, [&](const std::array<int, 5>& comp) {
            if (!dihedral_minimal(comp)) return;
            GFamilyParams p;
            p.n = n;
            p.v_parts.assign(comp.begin(), comp.end());
            p.w_size = w_size;
            Graph g = g_family(p);
            std::string key = canonical_form(g).g6;
            if (seen.insert(std::move(key)).second) visit(g, p);
        });
    }
}

std::vector<Graph> g_family_all(int n) {
    std::vector<Graph> out;
    g_family_all(n, [&](const Graph& g, const GFamilyParams&) { out.push_back(g); });
    return out;
}

Graph h_n(int n) {
    if (n < 14) throw DomainError("h_n: need n >= 14");
    std::vector<int> sizes{4, 4, 4, n / 2 - 6, (n + 1) / 2 - 6};
    return blow_up({cycle(5), std::move(sizes)});
}

Graph cycle(int k) {
    if (k < 3) throw DomainError("cycle: need k >= 3");
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

Graph star(int r) {
    if (r < 1) throw DomainError("star: need r >= 1");
    Graph g(r + 1);
    for (int i = 1; i <= r; ++i) g.add_edge(0, i);
    return g;
}

} // namespace tfx
