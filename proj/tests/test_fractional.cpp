#include "doctest.h"

#include "hypermatch/errors.hpp"
#include "hypermatch/extremal.hpp"
#include "hypermatch/fractional.hpp"
#include "hypermatch/matcher.hpp"
#include "oracles.hpp"

using namespace hypermatch;

namespace {

KGraph five_cycle() {
    return KGraph::build(5, 2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
}

KGraph fano_plane() {
    return KGraph::build(7, 3,
                         {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
}

}  // namespace

TEST_CASE("max_fractional on pinned instances") {
    KGraph single = KGraph::build(3, 3, {{1, 2, 3}});
    CHECK(max_fractional(single).value == 1);

    LpCertificate c5 = max_fractional(five_cycle());
    CHECK(c5.value == Rat(5, 2));
    CHECK(lp_certificate_ok(five_cycle(), c5));

    LpCertificate fano = max_fractional(fano_plane());
    CHECK(fano.value == Rat(7, 3));
    CHECK(lp_certificate_ok(fano_plane(), fano));
}

TEST_CASE("max_fractional dominates nu and certificates always audit") {
    Rng rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 5 + static_cast<int>(uniform_below(rng, 3));
        KGraph g = oracle::random_kgraph(rng, n, 3, 1 + static_cast<int>(uniform_below(rng, 20)));
        LpCertificate cert = max_fractional(g);
        CHECK(lp_certificate_ok(g, cert));
        CHECK(cert.value >= nu(g));
    }
}

TEST_CASE("perfect fractional matchings") {
    CHECK(has_perfect_fractional(KGraph::build(6, 3, all_k_subsets(6, 3))));
    // isolated vertex: load stuck at 0
    CHECK_FALSE(has_perfect_fractional(KGraph::build(4, 3, {{1, 2, 3}})));
    // vertex 1 lies in every edge of S(6,2,3): total weight <= 1 < 2
    CHECK_FALSE(has_perfect_fractional(make_S(6, 2, 3)));
    // fractional relaxation can beat nu: the Fano plane has no perfect
    // integral matching but value 7/3 = n/k
    CHECK(has_perfect_fractional(fano_plane()));
    CHECK(nu(fano_plane()) == 1);
}

TEST_CASE("extend_complete3 base cases") {
    // all-zero loads on K6: some perfect fractional matching of mass 2
    std::vector<Rat> zero(6, Rat(0));
    FracMatching added = extend_complete3(6, zero);
    CHECK(added.total_weight() == 2);
    for (int v = 1; v <= 6; ++v) CHECK(added.load(v) == 1);

    // the worked example: five loads of 1/2 and four zeros on K9; the added
    // mass must be (9 - 5/2) / 3 = 13/6
    std::vector<Rat> loads(9, Rat(1, 2));
    loads[5] = loads[6] = loads[7] = loads[8] = 0;
    FracMatching added9 = extend_complete3(9, loads);
    CHECK(added9.all_weights_nonneg());
    for (int v = 1; v <= 9; ++v)
        CHECK(loads[static_cast<size_t>(v - 1)] + added9.load(v) == 1);
    CHECK(added9.total_weight() == Rat(13, 6));
}

TEST_CASE("extend_complete3 patch formulas at saturated leftovers") {
    // when both leftover loads are already 1 the a-triples carry 1/3 each
    // and the b-edges vanish; reproduced by loads that saturate in one step
    std::vector<Rat> loads{Rat(1, 2), Rat(1, 2), 0, 0, 0, 0};
    FracMatching added = extend_complete3(6, loads);
    for (int v = 1; v <= 6; ++v)
        CHECK(loads[static_cast<size_t>(v - 1)] + added.load(v) == 1);
    CHECK(added.all_weights_nonneg());
}

TEST_CASE("extend_complete3 rejects bad inputs") {
    std::vector<Rat> loads(6, Rat(0));
    CHECK_THROWS_AS(extend_complete3(7, std::vector<Rat>(7, Rat(0))), precondition_error);
    loads[0] = 1;
    CHECK_THROWS_AS(extend_complete3(6, loads), precondition_error);
    std::vector<Rat> three_zeros{Rat(1, 2), Rat(1, 2), Rat(1, 2), 0, 0, 0};
    CHECK_THROWS_AS(extend_complete3(6, three_zeros), precondition_error);
}

TEST_CASE("extend_complete3 randomized postcondition audit") {
    Rng rng(67);
    for (int nv : {6, 9, 12}) {
        for (int trial = 0; trial < 120; ++trial) {
            std::vector<Rat> loads(static_cast<size_t>(nv), Rat(0));
            // leave the last four vertices at zero, draw the rest from a
            // small rational grid in [0,1)
            for (int v = 0; v + 4 < nv; ++v) {
                uint64_t den = 2 + uniform_below(rng, 11);
                uint64_t num = uniform_below(rng, den);  // < den keeps it < 1
                loads[static_cast<size_t>(v)] = Rat(num, den);
            }
            FracMatching added = extend_complete3(nv, loads);
            CHECK(added.all_weights_nonneg());
            for (int v = 1; v <= nv; ++v)
                CHECK(loads[static_cast<size_t>(v - 1)] + added.load(v) == 1);
        }
    }
}

TEST_CASE("project_aux") {
    Family fam = Family::build({make_S(9, 2, 3), make_S(9, 2, 3)});
    AuxGraph aux = reduce_Hstar(fam);

    FracMatching w(aux.total_vertices(), 4);
    SUBCASE("empty weight function") {
        auto loads = project_aux(aux, w);
        for (const Rat& l : loads) CHECK(l == 0);
    }
    SUBCASE("unit weight on one v-edge") {
        w.add_weight({1, 2, 3, aux.v_label(1)}, 1);
        auto loads = project_aux(aux, w);
        CHECK(loads[0] == 1);
        CHECK(loads[1] == 1);
        CHECK(loads[2] == 1);
        CHECK(loads[3] == 0);
    }
    SUBCASE("handshake identity") {
        Rng rng(71);
        for (int trial = 0; trial < 20; ++trial) {
            FracMatching rw(aux.total_vertices(), 4);
            // spread weight 1/4 over four distinct v-edges of member 1
            const KGraph& g = fam.member(0);
            for (int pick = 0; pick < 4; ++pick) {
                Edge e = g.edge(static_cast<int>(uniform_below(rng, static_cast<uint64_t>(g.edge_count()))));
                e.push_back(aux.v_label(1));
                rw.add_weight(e, Rat(1, 16));
            }
            auto loads = project_aux(aux, rw);
            Rat sum = 0;
            for (const Rat& l : loads) sum += l;
            CHECK(sum == rw.total_weight() * 3);
        }
    }
    SUBCASE("u-edges rejected") {
        FracMatching bad(aux.total_vertices(), 4);
        bad.add_weight({1, 2, 3, aux.u_label(1)}, 1);
        CHECK_THROWS_AS(project_aux(aux, bad), input_error);
    }
    SUBCASE("overloaded v-label rejected") {
        FracMatching bad(aux.total_vertices(), 4);
        bad.add_weight({1, 2, 3, aux.v_label(1)}, 1);
        bad.add_weight({1, 4, 5, aux.v_label(1)}, Rat(1, 2));
        CHECK_THROWS_AS(project_aux(aux, bad), input_error);
    }
}

TEST_CASE("distribute_to_u") {
    SUBCASE("two unit edges stay whole") {
        FracMatching residual(6, 3);
        residual.add_weight({1, 2, 3}, 1);
        residual.add_weight({4, 5, 6}, 1);
        auto parcels = distribute_to_u(residual, 2);
        REQUIRE(parcels.size() == 2);
        CHECK(parcels[0].weights().size() == 1);
        CHECK(parcels[1].weights().size() == 1);
    }
    SUBCASE("halves split across a parcel boundary") {
        FracMatching residual(9, 3);
        residual.add_weight({1, 2, 3}, Rat(1, 2));
        residual.add_weight({1, 2, 4}, Rat(1, 2));
        residual.add_weight({1, 2, 5}, Rat(1, 2));
        residual.add_weight({1, 2, 6}, Rat(1, 2));
        auto parcels = distribute_to_u(residual, 2);
        REQUIRE(parcels.size() == 2);
        for (const auto& p : parcels) CHECK(p.total_weight() == 1);
        // parcels reassemble the residual edge by edge
        FracMatching sum(9, 3);
        for (const auto& p : parcels)
            for (const auto& [e, wt] : p.weights()) sum.add_weight(e, wt);
        CHECK(sum.weights() == residual.weights());
    }
    SUBCASE("empty case") {
        FracMatching residual(6, 3);
        CHECK(distribute_to_u(residual, 0).empty());
    }
    SUBCASE("mass mismatch rejected") {
        FracMatching residual(6, 3);
        residual.add_weight({1, 2, 3}, Rat(3, 2));
        CHECK_THROWS_AS(distribute_to_u(residual, 2), input_error);
    }
    SUBCASE("random residuals reassemble") {
        Rng rng(73);
        for (int trial = 0; trial < 40; ++trial) {
            FracMatching residual(9, 3);
            int count = 1 + static_cast<int>(uniform_below(rng, 3));
            // build mass exactly `count` from random eighths
            Rat remaining(count);
            auto universe = all_k_subsets(9, 3);
            size_t at = uniform_below(rng, universe.size());
            while (remaining > 0) {
                Rat take = std::min(remaining, Rat(1 + uniform_below(rng, 6), 8));
                residual.add_weight(universe[at % universe.size()], take);
                at += 1 + uniform_below(rng, 5);
                remaining -= take;
            }
            auto parcels = distribute_to_u(residual, count);
            CHECK(static_cast<int>(parcels.size()) == count);
            FracMatching sum(9, 3);
            for (const auto& p : parcels) {
                CHECK(p.total_weight() == 1);
                CHECK(p.all_weights_nonneg());
                for (const auto& [e, wt] : p.weights()) sum.add_weight(e, wt);
            }
            CHECK(sum.weights() == residual.weights());
        }
    }
}

TEST_CASE("composite project -> extend -> distribute reaches every load") {
    // an H*-style instance: n = 12, m = 2, r = 2. Each v_i spreads unit
    // weight over four member edges in quarters, leaving every base load at
    // 3/4 on [8] and zero on 9..12; the pipeline rebuilds the u-mass.
    KGraph complete = KGraph::build(12, 3, all_k_subsets(12, 3));
    Family fam = Family::build({complete, complete});
    AuxGraph aux = reduce_Hstar(fam);
    REQUIRE(aux.r == 2);

    FracMatching w(aux.total_vertices(), 4);
    auto put = [&](int label, Edge base) {
        base.push_back(aux.v_label(label));
        std::sort(base.begin(), base.end());
        w.add_weight(base, Rat(1, 4));
    };
    put(1, {1, 2, 3});
    put(1, {4, 5, 6});
    put(1, {1, 7, 8});
    put(1, {2, 4, 7});
    put(2, {1, 5, 6});
    put(2, {2, 3, 6});
    put(2, {3, 5, 8});
    put(2, {4, 7, 8});

    auto loads = project_aux(aux, w);
    for (int v = 1; v <= 8; ++v) CHECK(loads[static_cast<size_t>(v - 1)] == Rat(3, 4));
    for (int v = 9; v <= 12; ++v) CHECK(loads[static_cast<size_t>(v - 1)] == 0);

    FracMatching added = extend_complete3(12, loads);
    auto parcels = distribute_to_u(added, aux.r);
    REQUIRE(static_cast<int>(parcels.size()) == aux.r);

    // assemble the full fractional matching on H* and audit every vertex
    FracMatching full(aux.total_vertices(), 4);
    for (const auto& [e, wt] : w.weights()) full.add_weight(e, wt);
    for (int j = 0; j < aux.r; ++j)
        for (const auto& [e, wt] : parcels[static_cast<size_t>(j)].weights()) {
            Edge ue = e;
            ue.push_back(aux.u_label(j + 1));
            std::sort(ue.begin(), ue.end());
            full.add_weight(ue, wt);
        }
    for (int v = 1; v <= aux.total_vertices(); ++v) CHECK(full.load(v) == 1);
    CHECK(full.is_perfect());
    CHECK(full.total_weight() == Rat(aux.total_vertices(), 4));
}
