#include "doctest.h"

#include <cmath>

#include "potts/errors.hpp"
#include "potts/interpolation.hpp"
#include "test_helpers.hpp"

using namespace potts;

namespace {

RegionSpec degree3_region() { return certified_region(3, 6); }

std::vector<cplx> naive_compose(const std::vector<cplx>& q, const std::vector<double>& p) {
    std::vector<cplx> result{0.0};
    std::vector<cplx> power{1.0};
    auto mul = [](const std::vector<cplx>& a, const std::vector<double>& b) {
        std::vector<cplx> r(a.size() + b.size() - 1, 0.0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    };
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (result.size() < power.size()) result.resize(power.size(), 0.0);
        for (std::size_t i = 0; i < power.size(); ++i) result[i] += q[j] * power[i];
        power = mul(power, p);
    }
    return result;
}

} // namespace

TEST_CASE("region membership") {
    RegionSpec r{3, 0.1, 0.42, 0.18};
    CHECK(r.contains({0.5, 0}));
    CHECK(r.contains({0.05, 0.02}));
    CHECK_FALSE(r.contains({0, 0.5}));
    CHECK(r.contains({0, 0})); // the eps disk is closed
    CHECK(r.contains({1.1, 0})); // inside the disk around 1
    CHECK_FALSE(r.contains({1.2, 0.2}));
}

TEST_CASE("default disk radii around 1") {
    CHECK(default_one_disk_radius(3) == doctest::Approx(0.18));
    CHECK(default_one_disk_radius(4) == doctest::Approx(0.13));
    CHECK(default_one_disk_radius(8) == doctest::Approx(0.065));
}

TEST_CASE("edge subset sums on the named graphs") {
    SUBCASE("empty subset contributes k^n") {
        Graph g = testing::path3();
        for (auto backend : {CoeffBackend::subset_enumeration, CoeffBackend::connected_cluster}) {
            auto e = edge_subset_sums(g, 5, 0, backend);
            CHECK(e[0] == BigUint::pow(5, 3));
        }
    }
    SUBCASE("single edge") {
        auto e = edge_subset_sums(testing::single_edge(), 7, 1);
        CHECK(e[1] == BigUint(7));
    }
    SUBCASE("triangle sums for generic k") {
        for (int k : {2, 3, 5, 11}) {
            for (auto backend :
                 {CoeffBackend::subset_enumeration, CoeffBackend::connected_cluster}) {
                auto e = edge_subset_sums(testing::triangle(), k, 3, backend);
                BigUint k2 = BigUint::pow(k, 2);
                BigUint e1 = k2;
                e1.mul_u64(3);
                CHECK(e[1] == e1);
                BigUint e2 = BigUint(static_cast<std::uint64_t>(3 * k));
                CHECK(e[2] == e2);
                CHECK(e[3] == BigUint(static_cast<std::uint64_t>(k)));
            }
        }
    }
}

TEST_CASE("backends agree bit-exactly on random graphs") {
    Rng rng(2718);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testing::random_graph(rng, 2 + static_cast<int>(rng.next_below(6)), 12);
        int k = 2 + static_cast<int>(rng.next_below(8));
        int M = static_cast<int>(rng.next_below(g.edge_count() + 1));
        auto a = edge_subset_sums(g, k, M, CoeffBackend::subset_enumeration);
        auto b = edge_subset_sums(g, k, M, CoeffBackend::connected_cluster);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    }
}

TEST_CASE("q coefficients") {
    SUBCASE("single edge expands linearly") {
        cplx w{0.25, 0.1};
        auto a = q_coefficients(testing::single_edge(), 4, w, 1);
        CHECK(std::abs(a[0] - cplx{16, 0}) < 1e-12);
        CHECK(std::abs(a[1] - 4.0 * (w - 1.0)) < 1e-12);
    }
    SUBCASE("w = 1 kills every positive order") {
        auto a = q_coefficients(testing::triangle(), 3, {1, 0}, 3);
        for (int m = 1; m <= 3; ++m) CHECK(a[m] == cplx{0, 0});
    }
    SUBCASE("triangle series matches the exact evaluator along the segment") {
        Rng rng(12);
        auto a = q_coefficients(testing::triangle(), 3, {0, 0}, 3);
        CHECK(std::abs(a[0] - cplx{27, 0}) < 1e-12);
        CHECK(std::abs(a[1] - cplx{-27, 0}) < 1e-12);
        CHECK(std::abs(a[2] - cplx{9, 0}) < 1e-12);
        CHECK(std::abs(a[3] - cplx{-3, 0}) < 1e-12);
        for (int i = 0; i < 10; ++i) {
            cplx z = rng.in_disk(0.0, 1.0);
            cplx series = 0;
            for (int m = 3; m >= 0; --m) series = series * z + a[m];
            cplx direct = potts_exact(testing::triangle(), 3, 1.0 - z);
            CHECK(std::abs(series - direct) <= 1e-9 * std::abs(direct));
        }
    }
    SUBCASE("full-order series reconstructs the partition function") {
        Rng rng(77);
        for (int trial = 0; trial < 8; ++trial) {
            Graph g = testing::random_graph(rng, 3 + static_cast<int>(rng.next_below(4)), 10);
            int k = 2 + static_cast<int>(rng.next_below(5));
            cplx w = rng.in_disk(0.5, 0.4);
            auto a = q_coefficients(g, k, w, g.edge_count());
            cplx z = rng.in_disk(0.0, 1.0);
            cplx series = 0;
            for (int m = g.edge_count(); m >= 0; --m) series = series * z + a[m];
            cplx direct = potts_exact(g, k, 1.0 + z * (w - 1.0));
            CHECK(std::abs(series - direct) <= 1e-9 * std::abs(direct));
        }
    }
}

TEST_CASE("disk map construction") {
    SUBCASE("degree one is the identity") {
        auto p = disk_map(0.5, 1);
        REQUIRE(p.size() == 2);
        CHECK(p[0] == 0.0);
        CHECK(p[1] == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("endpoints pinned for every parameter choice") {
        Rng rng(5);
        for (int trial = 0; trial < 20; ++trial) {
            double rho = rng.uniform(0.05, 0.95);
            int N = 1 + static_cast<int>(rng.next_below(16));
            auto p = disk_map(rho, N);
            CHECK(p[0] == 0.0);
            double at_one = 0;
            for (double c : p) at_one += c;
            CHECK(at_one == doctest::Approx(1.0).epsilon(1e-13));
        }
    }
    SUBCASE("containment reporting") {
        auto p = disk_map(0.7, 8);
        // A generous region absorbs the whole boundary image.
        RegionSpec fat{3, 0.9, 1.2, 3.0};
        CHECK_FALSE(disk_map_escape(p, fat, {0, 0}, 0.05).has_value());
        // The certified degree-3 region is far thinner than this map's image;
        // the checker must report the escape rather than pretend otherwise.
        auto esc = disk_map_escape(p, degree3_region(), {0, 0}, 0.05);
        REQUIRE(esc.has_value());
        CHECK_FALSE(degree3_region().contains(esc->image));
    }
}

TEST_CASE("composition truncation") {
    SUBCASE("identity map returns q") {
        std::vector<cplx> q{1, 2, 3, 4};
        auto f = compose_truncate(q, {0.0, 1.0}, 3);
        for (int i = 0; i < 4; ++i) CHECK(std::abs(f[i] - q[i]) < 1e-15);
    }
    SUBCASE("square map spreads coefficients") {
        auto f = compose_truncate({1, 1}, {0.0, 0.0, 1.0}, 2);
        CHECK(f[0] == cplx{1, 0});
        CHECK(f[1] == cplx{0, 0});
        CHECK(f[2] == cplx{1, 0});
    }
    SUBCASE("matches the full expansion") {
        Rng rng(31);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<cplx> q(7);
            for (auto& c : q) c = rng.in_disk(0.0, 2.0);
            std::vector<double> p(5, 0.0);
            for (std::size_t j = 1; j < p.size(); ++j) p[j] = rng.uniform(-1.0, 1.0);
            auto full = naive_compose(q, p);
            auto got = compose_truncate(q, p, 11);
            for (int i = 0; i <= 11; ++i) {
                cplx want = i < static_cast<int>(full.size()) ? full[i] : cplx{0, 0};
                CHECK(std::abs(got[i] - want) <= 1e-12 * (1 + std::abs(want)));
            }
        }
    }
}

TEST_CASE("log series via the power-sum recurrence") {
    SUBCASE("log(1+z) is the alternating harmonic series") {
        auto c = log_taylor({1, 1}, 8);
        for (int m = 1; m <= 8; ++m) {
            double want = (m % 2 ? 1.0 : -1.0) / m;
            CHECK(c[m].real() == doctest::Approx(want).epsilon(1e-12));
            CHECK(c[m].imag() == doctest::Approx(0.0));
        }
    }
    SUBCASE("squaring doubles the series") {
        auto c1 = log_taylor({1, 1}, 6);
        auto c2 = log_taylor({1, 2, 1}, 6);
        for (int m = 1; m <= 6; ++m) CHECK(std::abs(c2[m] - 2.0 * c1[m]) < 1e-12);
    }
    SUBCASE("partial sums converge to the direct logarithm") {
        Rng rng(8);
        std::vector<cplx> roots;
        std::vector<cplx> f{1.0};
        for (int i = 0; i < 8; ++i) {
            cplx r = std::polar(rng.uniform(1.3, 3.0), rng.uniform(0.0, 6.28));
            roots.push_back(r);
            std::vector<cplx> next(f.size() + 1, 0.0);
            for (std::size_t j = 0; j < f.size(); ++j) {
                next[j + 1] += f[j] * (-1.0 / r); // (1 - z/r) factors keep f(0) = 1
                next[j] += f[j];
            }
            f = std::move(next);
        }
        cplx z{0.5, 0};
        cplx direct = 0;
        for (std::size_t j = f.size(); j-- > 0;) direct = direct * z + f[j];
        direct = std::log(direct / f[0]);
        int M = 16;
        for (; M < 400; M *= 2) {
            auto c = log_taylor(f, M);
            if (std::abs(c[M]) * std::abs(std::pow(z, M)) < 1e-12) {
                cplx sum = 0;
                double zp = 1;
                for (int m = 1; m <= M; ++m) {
                    zp *= std::abs(z);
                    sum += c[m] * std::pow(z, m);
                }
                CHECK(std::abs(sum - direct) < 1e-10);
                break;
            }
        }
        REQUIRE(M < 400);
    }
    SUBCASE("exponentiation inverts the series") {
        Rng rng(10);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<cplx> b(9);
            b[0] = 1.0;
            for (std::size_t i = 1; i < b.size(); ++i) b[i] = rng.in_disk(0.0, 0.8);
            auto c = log_taylor(b, 8);
            auto back = exp_from_log(c, 8);
            for (int m = 0; m <= 8; ++m) CHECK(std::abs(back[m] - b[m]) < 1e-12);
        }
    }
    SUBCASE("zero constant term is rejected") {
        CHECK_THROWS_AS(log_taylor({0, 1}, 3), ContractError);
    }
}

TEST_CASE("approximation pipeline on closed-form counts") {
    InterpolationPlan plan = default_plan(3, 6);
    SUBCASE("path on three vertices at w=0") {
        auto r = approx_Z(testing::path3(), 6, {0, 0}, 0.01, plan);
        CHECK(std::abs(r.xi / 150.0 - 1.0) <= 0.01);
    }
    SUBCASE("triangle at w=0") {
        auto r = approx_Z(testing::triangle(), 6, {0, 0}, 0.01, plan);
        CHECK(std::abs(r.xi / 120.0 - 1.0) <= 0.01);
    }
    SUBCASE("w=1 is exact") {
        auto r = approx_Z(testing::triangle(), 6, {1, 0}, 0.01, plan);
        CHECK(std::abs(r.xi - 216.0) <= 1e-9);
        CHECK(r.tail_verified);
    }
    SUBCASE("w outside the region is rejected") {
        CHECK_THROWS_AS(approx_Z(testing::triangle(), 6, {0, 0.5}, 0.01, plan), ContractError);
    }
    SUBCASE("degree above the region is rejected") {
        CHECK_THROWS_AS(approx_Z(testing::star(4), 6, {0, 0}, 0.01, plan), ContractError);
    }
    SUBCASE("edgeless graphs short-circuit") {
        auto r = approx_Z(Graph::from_edges(3, {}), 6, {0, 0}, 0.01, plan);
        CHECK(r.xi == cplx{216, 0});
    }
}

TEST_CASE("tail estimates shrink as the series grows") {
    // The reported tail is the series mass beyond the summed order, so a
    // longer sum may never report a larger tail.
    InterpolationPlan plan = default_plan(4, 8);
    Graph cube = parse_graph("0 1\n0 2\n0 4\n1 3\n1 5\n2 3\n2 6\n3 7\n4 5\n4 6\n5 7\n6 7");
    int cap = 120;
    for (double wv : {0.0, 0.3, 0.7}) {
        auto a = q_coefficients(cube, 8, {wv, 0}, cube.edge_count());
        auto p = disk_map(plan.rho, plan.map_degree);
        auto b = compose_truncate(a, p, cube.edge_count() * plan.map_degree);
        auto c = log_taylor(b, cap);
        double prev = 1e300;
        for (int M = 3; M <= cap; ++M) {
            double tail = std::abs(c[cap]);
            for (int j = M + 1; j <= cap; ++j) tail += std::abs(c[j]);
            CHECK(tail <= prev * (1 + 1e-12) + 1e-300);
            prev = tail;
        }
    }
}

TEST_CASE("approximation tracks the oracle on small connected graphs") {
    InterpolationPlan plan = default_plan(3, 6);
    Rng rng(55);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = testing::random_graph(rng, 3 + static_cast<int>(rng.next_below(3)), 6);
        if (max_degree(g) > 3) continue;
        CoeffVector poly = potts_poly_in_w(g, 6);
        for (double w : {0.0, 0.3, 0.7}) {
            auto r = approx_Z(g, 6, {w, 0}, 0.01, plan);
            cplx exact = poly.eval({w, 0});
            CHECK(std::abs(r.xi / exact - 1.0) <= 0.01);
        }
    }
}
