#include <doctest.h>

#include "oracles.hpp"
#include "tfx/bounds.hpp"
#include "tfx/canonical.hpp"
#include "tfx/constructions.hpp"
#include "tfx/invariants.hpp"

using namespace tfx;

TEST_CASE("Turan graphs") {
    Graph t = turan_graph(8, 2);
    CHECK(t.edge_count() == 16);
    CHECK(is_isomorphic(t, blow_up({Graph::from_edges(2, {{0, 1}}), {4, 4}})));

    CHECK(turan_edges(10, 2) == 25);
    for (int n = 1; n <= 6; ++n) {
        Graph kn = turan_graph(n, n);
        CHECK(kn.edge_count() == static_cast<long long>(n) * (n - 1) / 2);
    }
    CHECK(is_isomorphic(turan_graph(3, 4), turan_graph(3, 3))); // empty part
    CHECK_THROWS_AS(turan_graph(3, 0), DomainError);

    for (int n = 1; n <= 1000; ++n) CHECK(turan_edges(n, 2) == n * n / 4);
}

TEST_CASE("H0: the subdivided Turan graph") {
    CHECK(h0(5).edge_count() == 5);
    CHECK(h0(6).edge_count() == 7);
    CHECK_THROWS_AS(h0(4), DomainError);

    for (int n = 5; n <= 40; ++n) {
        Graph h = h0(n);
        CHECK(h.order() == n);
        CHECK(h.edge_count() == (n - 1) * (n - 1) / 4 + 1);
        CHECK(is_triangle_free(h).triangle_free);
        CHECK_FALSE(is_bipartite(h).is_bipartite());
    }
    for (int n = 5; n <= 12; ++n) CHECK(chromatic_number(h0(n)).chi == 3);
}

TEST_CASE("the 11-vertex 4-chromatic fixture") {
    Graph gamma = grotzsch();
    CHECK(gamma.order() == 11);
    CHECK(gamma.edge_count() == 20);
    CHECK(is_triangle_free(gamma).triangle_free);
    CHECK(chromatic_number(gamma).chi == 4);

    std::vector<int> ones(11, 1);
    CHECK(is_isomorphic(gamma, blow_up({gamma, ones})));
}

TEST_CASE("blow-up family members") {
    GFamilyParams p;
    p.n = 14;
    p.v_parts = {1, 1, 1, 1, 1};
    p.w_size = 4;
    Graph g = g_family(p);
    CHECK(g.order() == 14);
    CHECK(g.edge_count() == 35);
    CHECK(is_triangle_free(g).triangle_free);
    CHECK(chromatic_number(g).chi == 4);

    // Five positive ring parts cannot sum to 4, so no member exists at n=11.
    GFamilyParams bad;
    bad.n = 11;
    bad.v_parts = {1, 1, 1, 1, 1};
    bad.w_size = 1;
    CHECK_THROWS_AS(g_family(bad), DomainError);

    GFamilyParams big;
    big.n = 90;
    big.v_parts = {9, 9, 9, 9, 7}; // sums to 43 = floor(87/2)
    big.w_size = 42;               // ceil(83/2)
    Graph gb = g_family(big);
    CHECK(gb.edge_count() == 1897);
    CHECK(gb.edge_count() == chi4_bound(90));

    GFamilyParams wrong = big;
    wrong.w_size = 41;
    CHECK_THROWS_AS(g_family(wrong), DomainError);
}

TEST_CASE("family enumeration: compositions, variants, dedup") {
    // n=12: only the ceil variant admits five positive parts.
    std::vector<GFamilyParams> params12;
    g_family_all(12, [&](const Graph&, const GFamilyParams& p) { params12.push_back(p); });
    REQUIRE(params12.size() == 1);
    CHECK(params12[0].v_parts == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(params12[0].w_size == 2);

    // n=14: (1,1,1,1,1)+w4 and the rotations of (2,1,1,1,1)+w3 collapse to
    // one class each.
    std::vector<Graph> members14 = g_family_all(14);
    CHECK(members14.size() == 2);

    for (int n : {12, 16, 20, 33}) {
        for (const Graph& g : g_family_all(n)) {
            CHECK(g.order() == n);
            CHECK(g.edge_count() == (n - 3) * (n - 3) / 4 + 5);
            CHECK(is_triangle_free(g).triangle_free);
        }
    }

    // Emitted members are pairwise non-isomorphic.
    std::vector<Graph> members20 = g_family_all(20);
    for (std::size_t i = 0; i < members20.size(); ++i)
        for (std::size_t j = i + 1; j < members20.size(); ++j)
            CHECK_FALSE(is_isomorphic(members20[i], members20[j]));

    // Every member has a 3-vertex transversal, and chi = 4 forces at least 2.
    for (int n : {12, 21, 30, 47, 60})
        for (const Graph& g : g_family_all(n)) {
            OctResult oct = odd_cycle_transversal(g);
            CHECK(oct.d2 >= 2);
            CHECK(oct.d2 <= 3);
        }
}

TEST_CASE("the d2=4 extremal blow-up") {
    Graph h24 = h_n(24);
    CHECK(h24.order() == 24);
    CHECK(h24.edge_count() == 116);

    Graph h25 = h_n(25);
    CHECK(h25.edge_count() == 126);
    // sizes (4,4,4,6,7)
    CHECK(h25.order() == 25);

    CHECK_THROWS_AS(h_n(13), DomainError);
    for (int n = 14; n <= 40; ++n) {
        Graph h = h_n(n);
        CHECK(h.edge_count() == (n - 4) * (n - 4) / 4 + 16);
        CHECK(is_triangle_free(h).triangle_free);
    }
    CHECK(odd_cycle_transversal(h_n(24)).d2 == 4);

    // The exact transversal equals the smallest blow-up class: min(4, n/2-6).
    // It reaches 4 at n = 20 and stays there.
    for (int n = 14; n <= 30; ++n)
        CHECK(odd_cycle_transversal(h_n(n)).d2 == std::min(4, n / 2 - 6));
}

TEST_CASE("cycles, stars, unions") {
    CHECK(disjoint_union(cycle(5), star(1)).order() == 7);
    CHECK(max_matching(cycle(7)).nu == 3);
    CHECK(min_vertex_cover(cycle(7)).tau == 4);
    CHECK(max_matching(star(4)).nu == 1);
    CHECK_THROWS_AS(cycle(2), DomainError);
    CHECK_THROWS_AS(star(0), DomainError);

    Graph u = disjoint_union(cycle(5), star(3));
    CHECK(u.order() == 9);
    CHECK(u.edge_count() == 8);
    CHECK(u.adjacent(5, 6));
    CHECK_FALSE(u.adjacent(4, 5));
}
