#include "doctest.h"

#include "hypermatch/errors.hpp"
#include "hypermatch/extremal.hpp"
#include "oracles.hpp"

using namespace hypermatch;

TEST_CASE("f_bound values") {
    // m = 1 vanishes for any n >= k
    for (int n = 3; n <= 10; ++n) CHECK(f_bound(n, 1, 3) == 0);
    // direct binomial evaluation
    CHECK(f_bound(9, 3, 3) == 56);      // max{84-35, 56}
    CHECK(f_bound(100, 3, 3) == 9604);  // max{161700-152096, 56}
    CHECK(f_bound(12, 2, 3) == 55);     // max{220-165, 10}
    CHECK_THROWS_AS(f_bound(7, 3, 3), precondition_error);
    CHECK(f_bound(8, 3, 3) == binomial(8, 3));  // n = km-1 accepted
}

TEST_CASE("S and D constructions") {
    KGraph s = make_S(9, 3, 3);
    KGraph d = make_D(9, 3, 3);
    CHECK(s.edge_count() == 49);  // 84 - 35
    CHECK(d.edge_count() == 56);  // C(8,3)
    CHECK(s.n() == 9);
    CHECK(d.n() == 9);

    // S(n,1,k) is edgeless ([m-1] is empty)
    CHECK(make_S(7, 1, 3).edge_count() == 0);

    // membership characterizations
    for (const Edge& e : s.edges()) CHECK(e[0] <= 2);
    for (const Edge& e : d.edges()) CHECK(e.back() <= 8);

    CHECK_THROWS_AS(make_S(8, 3, 3), precondition_error);
}

TEST_CASE("edge counts match the f branches across the grid") {
    for (int k = 2; k <= 3; ++k)
        for (int m = 1; m * k <= 12; ++m)
            for (int n = k * m; n <= 12; ++n) {
                CHECK(BigInt(make_S(n, m, k).edge_count()) ==
                      binomial(n, k) - binomial(n - m + 1, k));
                CHECK(BigInt(make_D(n, m, k).edge_count()) == binomial(k * m - 1, k));
                BigInt f = f_bound(n, m, k);
                CHECK(f == std::max(BigInt(make_S(n, m, k).edge_count()),
                                    BigInt(make_D(n, m, k).edge_count())));
            }
}

TEST_CASE("S and D are stable") {
    for (int k = 2; k <= 3; ++k)
        for (int m = 1; m * k <= 10; ++m)
            for (int n = k * m; n <= 10; ++n) {
                CHECK(make_S(n, m, k).is_stable());
                CHECK(make_D(n, m, k).is_stable());
            }
}

TEST_CASE("auxiliary constructions") {
    AuxGraph hd = make_HD(9, 2, 3);
    CHECK(hd.graph.edge_count() == 20);  // 2 * C(5,3)
    CHECK(hd.m == 2);
    CHECK(hd.r == 0);

    AuxGraph hs = make_HS(9, 3, 3);
    CHECK(hs.graph.edge_count() == 3 * make_S(9, 3, 3).edge_count());
    for (const Edge& e : hs.graph.edges()) {
        int labels = 0;
        for (int v : e)
            if (v > 9) ++labels;
        CHECK(labels == 1);
    }
}

TEST_CASE("closeness") {
    KGraph s = make_S(9, 3, 3);
    KGraph empty = KGraph::build(9, 3, {});
    CHECK(closeness(s, s) == 0);
    CHECK(closeness(s, empty) == Rat(49, 729));
    CHECK(closeness(empty, s) == 0);  // asymmetric by definition
    CHECK_THROWS_AS(closeness(s, KGraph::build(8, 3, {})), input_error);

    // monotone: adding edges to h2 never increases closeness(h1, h2)
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        KGraph h2 = oracle::random_kgraph(rng, 9, 3, 10);
        Rat before = closeness(s, h2);
        Edge extra;
        for (const Edge& e : all_k_subsets(9, 3))
            if (!h2.has_edge(e)) {
                extra = e;
                break;
            }
        CHECK(closeness(s, h2.with_edge(extra)) <= before);
    }

    AuxGraph hd = make_HD(9, 2, 3);
    CHECK(closeness(hd, hd) == 0);
}

TEST_CASE("f superadditivity") {
    CHECK(check_f_superadditivity(9, 3, 3));
    CHECK(check_f_superadditivity(6, 2, 3));
    for (int k = 1; k <= 5; ++k)
        for (int m = 2; m <= 10; ++m) CHECK(check_f_superadditivity(k * m, m, k));
    CHECK_THROWS_AS(check_f_superadditivity(9, 1, 3), precondition_error);
}

TEST_CASE("f shift inequalities") {
    CHECK(check_f_shift_ineq(30, 8, 2, ShiftIneq::kLower));
    CHECK(check_f_shift_ineq(30, 8, 2, ShiftIneq::kUpper));
    for (long long x = 4; x <= 60; ++x)
        for (long long y = 2; 3 * y <= x; ++y)
            for (long long a = 1; a < y; ++a) {
                CHECK(check_f_shift_ineq(x, y, a, ShiftIneq::kLower));
                CHECK(check_f_shift_ineq(x, y, a, ShiftIneq::kUpper));
            }
    CHECK_THROWS_AS(check_f_shift_ineq(30, 8, 8, ShiftIneq::kLower), precondition_error);
}
