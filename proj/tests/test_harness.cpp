#include "doctest.h"

#include <cmath>

#include "potts/errors.hpp"
#include "potts/harness.hpp"
#include "test_helpers.hpp"

using namespace potts;

TEST_CASE("region sampling stays inside the region") {
    RegionSpec region = certified_region(3, 6);
    Rng rng(3);
    Graph g = testing::random_graph(rng, 5, 8);
    for (int trial = 0; trial < 50; ++trial) {
        EdgeWeights full = sample_region_weights(g, region, rng, true);
        for (int e = 0; e < g.edge_count(); ++e) CHECK(region.contains(full[e]));
        EdgeWeights droplet = sample_region_weights(g, region, rng, false);
        for (int e = 0; e < g.edge_count(); ++e) {
            cplx w = droplet[e];
            bool in_droplet = std::abs(w) <= region.eps ||
                              (std::abs(std::arg(w)) <= region.eps * region.theta &&
                               std::abs(w) <= 1.0);
            CHECK(in_droplet);
        }
    }
}

TEST_CASE("zero-free scan on a small family") {
    ScanOptions opt;
    opt.delta = 3;
    opt.k = 6;
    opt.n_max = 4;
    opt.samples_per_graph = 40;
    opt.seed = 7;
    ScanReport rep = zero_free_scan(opt);
    CHECK(rep.graphs_tested == 10);
    CHECK(rep.violations.empty());
    CHECK(rep.min_normalized_modulus > 1e-10);

    SUBCASE("identical seeds reproduce the report") {
        ScanReport again = zero_free_scan(opt);
        CHECK(again.min_normalized_modulus == rep.min_normalized_modulus);
        CHECK(again.worst_graph == rep.worst_graph);
        CHECK(again.worst_weights == rep.worst_weights);
    }
    SUBCASE("a different seed moves the minimum") {
        opt.seed = 8;
        ScanReport other = zero_free_scan(opt);
        CHECK(other.min_normalized_modulus != rep.min_normalized_modulus);
    }
}

TEST_CASE("two colours on a triangle vanish at w=0: the harness self-test") {
    // Below the colour bound the partition
    // function really does vanish inside the region, and the flags show it.
    Graph t = testing::triangle();
    cplx z = potts_exact(t, 2, cplx{0, 0});
    CHECK(std::abs(z) == 0.0);
    RegionSpec region{3, 0.05, 0.42, 0.18};
    CHECK(region.contains({0, 0}));
    auto locus = root_locus(t, 2, region);
    bool found_zero_root_inside = false;
    for (const auto& entry : locus) {
        if (std::abs(entry.root) < 1e-9 && entry.in_region) found_zero_root_inside = true;
    }
    CHECK(found_zero_root_inside);
}

TEST_CASE("induction invariants on explicit instances") {
    CertifiedPoint cp = certify_point(3, 6);
    Graph path = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    SUBCASE("equal colours give angle zero and ratio one") {
        EdgeWeights w = EdgeWeights::uniform(path, {0.5, 0.01});
        auto rep = induction_invariant_check(path, 6, w, Boundary{{0}, {2}}, 3, 4, 4, cp.params,
                                             ConditionSystem::improved);
        CHECK(rep.all_ok());
        CHECK(rep.angle == 0.0);
        CHECK(rep.ratio_distance == 0.0);
    }
    SUBCASE("unit weights make all colours symmetric") {
        EdgeWeights w = EdgeWeights::uniform(path, {1, 0});
        auto rep = induction_invariant_check(path, 6, w, Boundary{{0}, {2}}, 3, 1, 5, cp.params,
                                             ConditionSystem::improved);
        CHECK(rep.all_ok());
        CHECK(rep.ratio_distance == doctest::Approx(0.0));
    }
    SUBCASE("weights violating the region are rejected") {
        EdgeWeights w = EdgeWeights::uniform(path, {0, 2});
        CHECK_THROWS_AS(induction_invariant_check(path, 6, w, Boundary{{0}, {2}}, 3, 1, 2,
                                                  cp.params, ConditionSystem::improved),
                        ContractError);
    }
    SUBCASE("non-leaf boundaries are rejected") {
        EdgeWeights w = EdgeWeights::uniform(path, {0.5, 0});
        CHECK_THROWS_AS(induction_invariant_check(path, 6, w, Boundary{{1}, {2}}, 3, 1, 2,
                                                  cp.params, ConditionSystem::improved),
                        ContractError);
    }
}

TEST_CASE("colour-classification conclusions at a free vertex") {
    CertifiedPoint cp = certify_point(3, 6);
    Graph star = testing::star(3);
    EdgeWeights w = EdgeWeights::uniform(star, {0.02, 0.0});
    auto rep = induction_colour_check(star, 6, w, Boundary{{1, 2}, {1, 2}}, 0, cp.params,
                                      ConditionSystem::improved);
    CHECK(rep.all_ok());
    CHECK(rep.free_neighbours == 1);
}

TEST_CASE("induction scan over a small family stays clean") {
    InductionScanOptions opt;
    opt.n_max = 4;
    opt.delta = 3;
    opt.k = 6;
    opt.draws = 4;
    opt.seed = 99;
    auto rep = induction_scan(opt);
    CHECK(rep.graphs == 10);
    CHECK(rep.pair_instances > 0);
    CHECK(rep.colour_instances > 0);
    CHECK(rep.violations.empty());
    CHECK(rep.worst_angle_slack >= 0);
    CHECK(rep.worst_ratio_slack >= 0);
}

TEST_CASE("root locus flags") {
    RegionSpec region = certified_region(3, 6);
    SUBCASE("single edge at k=3 has its root far outside") {
        auto locus = root_locus(testing::single_edge(), 3, region);
        REQUIRE(locus.size() == 1);
        CHECK(std::abs(locus[0].root - cplx{-2, 0}) < 1e-10);
        CHECK_FALSE(locus[0].in_region);
        CHECK(locus[0].residual <= 1e-8);
    }
    SUBCASE("edgeless graphs have no roots") {
        CHECK(root_locus(Graph::from_edges(2, {}), 3, region).empty());
    }
}
