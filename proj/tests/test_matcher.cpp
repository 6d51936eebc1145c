#include "doctest.h"

#include "hypermatch/extremal.hpp"
#include "hypermatch/matcher.hpp"
#include "oracles.hpp"

using namespace hypermatch;

TEST_CASE("nu on complete, extremal, empty graphs") {
    for (int n = 3; n <= 9; ++n)
        CHECK(nu(KGraph::build(n, 3, all_k_subsets(n, 3))) == n / 3);
    CHECK(nu(make_S(9, 3, 3)) == 2);
    CHECK(nu(make_D(9, 3, 3)) == 2);
    CHECK(nu(KGraph::build(5, 2, {})) == 0);
}

TEST_CASE("nu agrees with the exhaustive oracle") {
    Rng rng(17);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 5 + static_cast<int>(uniform_below(rng, 4));  // 5..8
        KGraph g = oracle::random_kgraph(rng, n, 3, 1 + static_cast<int>(uniform_below(rng, 25)));
        int expected = oracle::nu_bruteforce(g);
        CHECK(nu(g) == expected);
        CHECK(nu_at_least(g, expected));
        CHECK_FALSE(nu_at_least(g, expected + 1));
        Matching w = max_matching(g);
        CHECK(w.size() == expected);
        CHECK(validate_matching(g, w));
    }
}

TEST_CASE("nu monotone under edge addition, bounded by n/k") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        KGraph g = oracle::random_kgraph(rng, 8, 3, 5);
        int before = nu(g);
        CHECK(before <= g.n() / g.k());
        for (const Edge& e : all_k_subsets(8, 3))
            if (!g.has_edge(e)) {
                CHECK(nu(g.with_edge(e)) >= before);
                break;
            }
    }
}

TEST_CASE("perfect matchings") {
    CHECK(has_perfect_matching(KGraph::build(6, 3, all_k_subsets(6, 3))));
    CHECK_FALSE(has_perfect_matching(KGraph::build(7, 3, all_k_subsets(7, 3))));
    // every perfect matching of S(6,2,3) would need two disjoint edges both
    // meeting {1}
    CHECK_FALSE(has_perfect_matching(make_S(6, 2, 3)));
    auto w = perfect_matching(KGraph::build(6, 3, all_k_subsets(6, 3)));
    REQUIRE(w.has_value());
    CHECK(w->size() == 2);
}

TEST_CASE("rainbow basics") {
    // m = 1: any edge works
    Family single = Family::build({KGraph::build(5, 2, {{2, 4}})});
    auto rm1 = rainbow(single);
    REQUIRE(rm1.has_value());
    CHECK(rm1->pairs[0].second == Edge{2, 4});

    // m copies of the complete k-graph on [km]
    for (int m = 2; m <= 3; ++m) {
        KGraph complete = KGraph::build(3 * m, 3, all_k_subsets(3 * m, 3));
        Family fam = Family::build(std::vector<KGraph>(static_cast<size_t>(m), complete));
        CHECK(rainbow(fam).has_value());
    }

    // m copies of S: pigeonhole on [m-1]
    for (int m = 2; m <= 3; ++m) {
        KGraph s = make_S(3 * m + 1, m, 3);
        Family fam = Family::build(std::vector<KGraph>(static_cast<size_t>(m), s));
        CHECK_FALSE(rainbow(fam).has_value());
    }
}

TEST_CASE("rainbow agrees with the exhaustive oracle") {
    Rng rng(29);
    for (int trial = 0; trial < 150; ++trial) {
        int m = 2 + static_cast<int>(uniform_below(rng, 2));
        Family fam = oracle::random_family(rng, 7, 3, m, 12);
        bool expected = oracle::rainbow_bruteforce(fam);
        auto got = rainbow(fam);
        CHECK(got.has_value() == expected);
        if (got) CHECK(validate_rainbow(fam, *got));
    }
}

TEST_CASE("reductions") {
    Family fam = Family::build({make_S(6, 2, 3), make_D(6, 2, 3)});
    AuxGraph h = reduce_H(fam);
    CHECK(h.graph.edge_count() == fam.member(0).edge_count() + fam.member(1).edge_count());
    CHECK(h.m == 2);
    CHECK(h.r == 0);
    CHECK(h.graph.k() == 4);

    AuxGraph hs = reduce_Hstar(fam);
    CHECK(hs.r == 0);  // floor(6/3) - 2
    Family fam9 = Family::build({make_S(9, 2, 3), make_S(9, 2, 3)});
    AuxGraph hs9 = reduce_Hstar(fam9);
    CHECK(hs9.r == 1);
    CHECK(hs9.graph.edge_count() ==
          2 * make_S(9, 2, 3).edge_count() + static_cast<int>(oracle::binomial_oracle(9, 3)));

    // m-fold S reduction equals the direct construction
    Family sfam = Family::build({make_S(9, 3, 3), make_S(9, 3, 3), make_S(9, 3, 3)});
    CHECK(reduce_H(sfam) == make_HS(9, 3, 3));
}

TEST_CASE("aux matching equivalence on named families") {
    for (int m = 2; m <= 2; ++m) {
        Family s2 = Family::build(std::vector<KGraph>(2, make_S(6, 2, 3)));
        CHECK(aux_matching_equiv(s2));
    }
    Family complete = Family::build(std::vector<KGraph>(2, KGraph::build(6, 3, all_k_subsets(6, 3))));
    CHECK(aux_matching_equiv(complete));
}

TEST_CASE("aux matching equivalence on random families") {
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 1 + static_cast<int>(uniform_below(rng, 3));
        int n = 3 * m + static_cast<int>(uniform_below(rng, static_cast<uint64_t>(10 - 3 * m)));
        Family fam = oracle::random_family(rng, n, 3, m, 15);
        CHECK(aux_matching_equiv(fam));
    }
}
