#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tfx/canonical.hpp"
#include "tfx/constructions.hpp"

using namespace tfx;

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(11);
    Graph gamma = grotzsch();
    CanonicalForm base = canonical_form(gamma);
    for (int trial = 0; trial < 100; ++trial)
        CHECK(canonical_form(oracle::random_relabel(gamma, rng)) == base);

    Graph c5 = cycle(5);
    std::vector<int> reversed{4, 3, 2, 1, 0};
    CHECK(canonical_form(c5) == canonical_form(c5.relabeled(reversed)));
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    Graph k2_k1 = Graph::from_edges(3, {{0, 1}});
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(canonical_form(k2_k1) != canonical_form(p3));

    Graph star3 = star(3);
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(is_isomorphic(star3, p4));
}

TEST_CASE("isomorphism agrees with exhaustive permutation testing") {
    std::mt19937_64 rng(42);
    // Random pairs across the same order, plus relabeled positives.
    for (int n = 2; n <= 7; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            Graph a = oracle::random_graph(n, 0.5, rng);
            Graph b = oracle::random_graph(n, 0.5, rng);
            CHECK(is_isomorphic(a, b) == oracle::brute_isomorphic(a, b));
            Graph c = oracle::random_relabel(a, rng);
            CHECK(is_isomorphic(a, c));
        }
    }
    // Equal degree sequences, non-isomorphic: C6 vs two triangles.
    Graph c6 = cycle(6);
    Graph two_k3 = disjoint_union(cycle(3), cycle(3));
    CHECK_FALSE(is_isomorphic(c6, two_k3));
    CHECK_FALSE(oracle::brute_isomorphic(c6, two_k3));
}

TEST_CASE("canonical labeling handles highly symmetric graphs") {
    std::mt19937_64 rng(5);
    std::vector<Graph> symmetric;
    symmetric.push_back(Graph(12));                              // edgeless
    symmetric.push_back(turan_graph(12, 2));                     // K_{6,6}
    symmetric.push_back(blow_up({cycle(5), {3, 3, 3, 3, 3}}));   // balanced C5 blow-up
    Graph matching6(12);
    for (int i = 0; i < 6; ++i) matching6.add_edge(2 * i, 2 * i + 1);
    symmetric.push_back(matching6);
    symmetric.push_back(disjoint_union(cycle(4), cycle(4)));
    for (const Graph& g : symmetric) {
        CanonicalForm base = canonical_form(g);
        for (int trial = 0; trial < 20; ++trial)
            CHECK(canonical_form(oracle::random_relabel(g, rng)) == base);
    }
}

TEST_CASE("canonical form matches brute-force canonical keys at small n") {
    std::mt19937_64 rng(8);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            Graph a = oracle::random_graph(n, 0.45, rng);
            Graph b = oracle::random_graph(n, 0.45, rng);
            bool same_key = oracle::brute_canon_key(a) == oracle::brute_canon_key(b);
            CHECK(same_key == (canonical_form(a) == canonical_form(b)));
        }
    }
}

TEST_CASE("twin classes collapse equal neighborhoods") {
    Graph gamma = grotzsch();
    TwinClasses tc = twin_classes(gamma);
    CHECK(tc.quotient.order() == 11); // Grotzsch graph has no twins

    Graph big = blow_up({grotzsch(), {1, 1, 1, 1, 1, 4, 4, 4, 4, 4, 7}});
    TwinClasses tc2 = twin_classes(big);
    CHECK(tc2.quotient.order() == 11);
    CHECK(is_isomorphic(tc2.quotient, gamma));
}

TEST_CASE("canonical labeling retains blow-up fixtures at n near 128") {
    Graph big = blow_up({grotzsch(), {1, 1, 1, 1, 1, 11, 11, 11, 11, 11, 58}});
    CHECK(big.order() == 118);
    std::mt19937_64 rng(13);
    CanonicalForm base = canonical_form(big);
    for (int trial = 0; trial < 5; ++trial)
        CHECK(canonical_form(oracle::random_relabel(big, rng)) == base);
}
