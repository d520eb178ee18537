#include <doctest.h>

#include <random>

#include "tfx/bounds.hpp"

using namespace tfx;

TEST_CASE("closed-form values") {
    CHECK(mantel_bound(10) == 25);
    CHECK(mantel_bound(0) == 0);
    CHECK(mantel_bound(11) == 30);

    CHECK(erdos_andrasfai_bound(5) == 5);
    CHECK(erdos_andrasfai_bound(1) == 1);
    CHECK(erdos_andrasfai_bound(11) == 26);

    CHECK(brouwer_bound(10, 2) == 21);
    CHECK(brouwer_bound(6, 3) == 11); // t_3(6) = 12, minus 2 plus 1

    CHECK(chi4_bound(11) == 21);
    CHECK(chi4_bound(90) == 1897);
    CHECK(chi4_bound(14) == 35);

    CHECK(d2ge4_bound(24) == 116);
    CHECK(d2ge4_bound(90) == 1865);
    CHECK(d2ge4_bound(5) == 16);

    CHECK_THROWS_AS(mantel_bound(-1), DomainError);
    CHECK_THROWS_AS(chi4_bound(3), DomainError);
    CHECK_THROWS_AS(brouwer_bound(4, 5), DomainError);
}

TEST_CASE("the r=2 refinement collapses to the non-bipartite bound") {
    for (int n = 2; n <= 100; ++n)
        CHECK(brouwer_bound(n, 2) == erdos_andrasfai_bound(n));
}

TEST_CASE("bounds are monotone in n") {
    long long prev_m = mantel_bound(5), prev_e = erdos_andrasfai_bound(5),
              prev_c = chi4_bound(5), prev_d = d2ge4_bound(5);
    for (long long n = 6; n <= 10000; ++n) {
        CHECK(mantel_bound(n) >= prev_m);
        CHECK(erdos_andrasfai_bound(n) >= prev_e);
        CHECK(chi4_bound(n) >= prev_c);
        CHECK(d2ge4_bound(n) >= prev_d);
        prev_m = mantel_bound(n);
        prev_e = erdos_andrasfai_bound(n);
        prev_c = chi4_bound(n);
        prev_d = d2ge4_bound(n);
    }
}

TEST_CASE("bound ordering at large n") {
    for (long long n = 90; n <= 2000; ++n) {
        CHECK(d2ge4_bound(n) < chi4_bound(n));
        CHECK(chi4_bound(n) < erdos_andrasfai_bound(n));
        CHECK(erdos_andrasfai_bound(n) < mantel_bound(n));
    }
}

TEST_CASE("cyclic distance-2 inequality: fixed cases") {
    auto all_ones = c5_blowup_inequality({Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)}, Rat(1));
    CHECK(all_ones.holds);
    CHECK(all_ones.lhs == Rat(5));
    CHECK(all_ones.rhs == Rat(5));

    auto skew = c5_blowup_inequality({Rat(2), Rat(1), Rat(1), Rat(1), Rat(1)}, Rat(1));
    CHECK(skew.lhs == Rat(7));
    CHECK(skew.rhs == Rat(7));
    CHECK(skew.holds);

    auto zero = c5_blowup_inequality({Rat(3), Rat(1), Rat(9), Rat(2), Rat(5)}, Rat(0));
    CHECK(zero.rhs == Rat(0));
    CHECK(zero.holds);

    CHECK_THROWS_AS(c5_blowup_inequality({Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)}, Rat(2)),
                    DomainError);
    CHECK_THROWS_AS(c5_blowup_inequality({Rat(0), Rat(1), Rat(1), Rat(1), Rat(1)}, Rat(0)),
                    DomainError);
}

TEST_CASE("cyclic distance-2 inequality: random rational tuples") {
    std::mt19937_64 rng(2024);
    int equalities = 0, strict = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        long long den = 1 + static_cast<long long>(rng() % 9);
        long long z0n = static_cast<long long>(rng() % 8);
        Rat z0(z0n, den);
        std::array<Rat, 5> z;
        for (auto& zi : z) {
            long long extra = static_cast<long long>(rng() % 15);
            if (z0n == 0 && extra == 0) extra = 1; // z_i must stay positive
            zi = z0 + Rat(extra, den);
        }
        auto res = c5_blowup_inequality(z, z0);
        CHECK(res.holds);
        if (res.lhs == res.rhs)
            ++equalities;
        else
            ++strict;
    }
    CHECK(equalities > 0);
    CHECK(strict > 0);
}

TEST_CASE("rational arithmetic is exact and overflow-checked") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-1, -2) == Rat(1, 2));
    CHECK(Rat(1, -2) < Rat(0));
    CHECK(Rat(7, 3).str() == "7/3");
    CHECK(Rat(6, 3).str() == "2");
    CHECK_THROWS_AS(Rat(1, 0), DomainError);
    CHECK_THROWS_AS(Rat(INT64_MAX, 1) * Rat(3, 1), DomainError);
}

TEST_CASE("bound ids round-trip by name") {
    for (BoundId id : {BoundId::mantel, BoundId::erdos_andrasfai, BoundId::brouwer,
                       BoundId::chi4, BoundId::d2ge4})
        CHECK(bound_from_name(bound_name(id)) == id);
    CHECK_FALSE(bound_from_name("nope").has_value());
    CHECK(bound_value(BoundId::brouwer, 10, 2) == 21);
    CHECK_THROWS_AS(bound_value(BoundId::brouwer, 10), DomainError);
}
