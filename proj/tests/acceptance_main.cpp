// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Exit status 0 when every executed criterion passes, 2 otherwise.

#include <algorithm>
#include <cmath>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "potts/conditions.hpp"
#include "potts/enumerate.hpp"
#include "potts/exact.hpp"
#include "potts/geometry.hpp"
#include "potts/harness.hpp"
#include "potts/interpolation.hpp"
#include "potts/parallel.hpp"
#include "potts/rng.hpp"
#include "potts/roots.hpp"

using namespace potts;

namespace {

constexpr double kE = 2.718281828459045235360287471352662498;

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> details;

    void fail(const std::string& what) {
        pass = false;
        details.push_back(what);
    }
};

Outcome criterion_small_delta_table() {
    Outcome out;
    int rows_checked = 0;
    double worst_margin = 1e300, worst_theta_gap = 0;
    for (const auto& row : small_delta_reference()) {
        ++rows_checked;
        auto result = minimal_k(row.delta, ConditionSystem::improved);
        if (result.k_min != row.k) {
            out.fail("delta " + std::to_string(row.delta) + ": k_min " +
                     std::to_string(result.k_min) + " != " + std::to_string(row.k));
        }
        auto rep = improved_conditions(ConditionParams::make(row.delta, row.k, row.K, 0.0));
        worst_margin = std::min(worst_margin, rep.min_margin);
        if (!(rep.min_margin > 0)) {
            out.fail("delta " + std::to_string(row.delta) + ": published (K,theta) margin " +
                     std::to_string(rep.min_margin));
        }
        double gap = std::abs(row.theta - std::asin(row.K));
        worst_theta_gap = std::max(worst_theta_gap, gap);
        if (!(gap <= 5e-5)) {
            std::ostringstream os;
            os << "delta " << row.delta << ": |theta - asin K| = " << gap << " > 5e-5";
            out.fail(os.str());
        }
    }
    std::ostringstream os;
    os << rows_checked << " rows; worst margin " << worst_margin << "; worst theta gap "
       << worst_theta_gap;
    out.summary = os.str();
    return out;
}

Outcome criterion_growth_table() {
    Outcome out;
    double worst_excess = -1e300;
    for (const auto& row : growth_reference()) {
        auto result = minimal_k(row.delta, ConditionSystem::improved);
        int rounded = static_cast<int>(std::ceil(result.c_val * row.delta + 1 - 1e-12));
        if (rounded != row.k) {
            out.fail("delta " + std::to_string(row.delta) + ": ceil(c*delta+1) = " +
                     std::to_string(rounded) + " != " + std::to_string(row.k));
        }
        worst_excess = std::max(worst_excess, result.c_val - row.c);
        if (!(result.c_val <= row.c + 0.01)) {
            std::ostringstream os;
            os << "delta " << row.delta << ": c " << result.c_val << " exceeds " << row.c
               << " + 0.01";
            out.fail(os.str());
        }
    }
    std::ostringstream os;
    os << growth_reference().size() << " rows; worst c excess over published " << worst_excess;
    out.summary = os.str();
    return out;
}

Outcome criterion_general_bound() {
    Outcome out;
    double worst_margin = 1e300;
    for (int delta = 3; delta <= 200; ++delta) {
        auto rep = proposition_k_bound(delta);
        worst_margin = std::min(worst_margin, rep.at_eps_zero.min_margin);
        if (!rep.at_eps_zero.holds) {
            out.fail("delta " + std::to_string(delta) + ": conditions fail at K=1/delta");
        }
        if (rep.at_eps_zero.binding_index != delta - 1) {
            out.fail("delta " + std::to_string(delta) + ": binding index " +
                     std::to_string(rep.at_eps_zero.binding_index) + " != " +
                     std::to_string(delta - 1));
        }
        if (!rep.f_bound_ok) out.fail("delta " + std::to_string(delta) + ": growth bound fails");
        if (!(rep.eps_max > 0)) out.fail("delta " + std::to_string(delta) + ": eps_max is zero");
    }
    std::ostringstream os;
    os << "degrees 3..200 at k = ceil(e*delta+1); worst margin " << worst_margin;
    out.summary = os.str();
    return out;
}

Outcome criterion_oracle_identity() {
    Outcome out;
    const int graphs = 200, w_per_graph = 5;
    std::vector<double> worst(graphs, 0.0);
    std::vector<std::string> errors(graphs);
    Rng master(20240901);
    std::vector<Rng> streams;
    for (int i = 0; i < graphs; ++i) streams.push_back(master.split(i));
    parallel_for(graphs, [&](std::size_t i) {
        Rng rng = streams[i];
        int n = 2 + static_cast<int>(rng.next_below(7));
        int max_edges = std::min(12, n * (n - 1) / 2);
        std::vector<std::pair<int, int>> all;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) all.push_back({u, v});
        }
        int want = static_cast<int>(rng.next_below(max_edges + 1));
        for (int j = 0; j < want; ++j) {
            int pick = j + static_cast<int>(rng.next_below(all.size() - j));
            std::swap(all[j], all[pick]);
        }
        all.resize(want);
        Graph g = Graph::from_edges(n, std::move(all));
        int k = 2 + static_cast<int>(rng.next_below(5));
        for (int t = 0; t < w_per_graph; ++t) {
            cplx w = rng.in_disk(0.0, 2.0);
            cplx zp = potts_exact(g, k, w);
            cplx zrc = random_cluster_exact(g, static_cast<double>(k), w - 1.0);
            double rel = std::abs(zp - zrc) / std::abs(zp);
            worst[i] = std::max(worst[i], rel);
            if (!(rel <= 1e-9)) {
                std::ostringstream os;
                os << "graph " << i << " (n=" << n << ", m=" << g.edge_count() << ", k=" << k
                   << "): relative gap " << rel;
                errors[i] = os.str();
            }
        }
    });
    double overall = 0;
    for (int i = 0; i < graphs; ++i) {
        overall = std::max(overall, worst[i]);
        if (!errors[i].empty()) out.fail(errors[i]);
    }
    std::ostringstream os;
    os << graphs << " graphs x " << w_per_graph << " weights; worst relative gap " << overall;
    out.summary = os.str();
    return out;
}

Outcome criterion_zero_free_scan() {
    Outcome out;
    ScanOptions opt;
    opt.delta = 3;
    opt.k = 6;
    opt.n_max = 7;
    opt.samples_per_graph = 200;
    opt.seed = 424242;
    opt.region = certified_region(3, 6, ConditionSystem::improved, 0.18);
    auto rep = zero_free_scan(opt);
    if (!rep.violations.empty()) {
        out.fail(std::to_string(rep.violations.size()) + " violations");
    }
    if (!(rep.min_normalized_modulus > 1e-10)) {
        out.fail("minimum normalized modulus " + std::to_string(rep.min_normalized_modulus));
    }
    std::ostringstream os;
    os << rep.graphs_tested << " graphs x " << rep.samples_per_graph << " samples; min |Z|/k^n = "
       << rep.min_normalized_modulus;
    out.summary = os.str();
    return out;
}

Outcome criterion_induction_invariants() {
    Outcome out;
    InductionScanOptions opt;
    opt.n_max = 6;
    opt.delta = 3;
    opt.k = 6;
    opt.draws = 50;
    opt.max_boundary = 3;
    opt.seed = 777;
    opt.system = ConditionSystem::improved;
    auto rep = induction_scan(opt);
    for (std::size_t i = 0; i < rep.violations.size() && i < 10; ++i) out.fail(rep.violations[i]);
    if (!rep.violations.empty()) out.pass = false;
    std::ostringstream os;
    os << rep.graphs << " graphs, " << rep.pair_instances << " pair checks, "
       << rep.colour_instances << " colour checks; slack to theta " << rep.worst_angle_slack
       << ", to K " << rep.worst_ratio_slack;
    out.summary = os.str();
    return out;
}

Outcome criterion_interpolation() {
    Outcome out;
    const int k = 8;
    InterpolationPlan plan;
    plan.backend = CoeffBackend::subset_enumeration;
    plan.region = certified_region(4, k, ConditionSystem::improved, 0.13);
    auto graphs = enumerate_graphs(8, 4, true);
    const std::vector<double> w_values{0.0, 0.3, 0.7};

    struct Slot {
        double worst_rel = 0;
        double last_tail = 0;
        bool backend_mismatch = false;
        std::string error;
    };
    std::vector<Slot> slots(graphs.size());
    parallel_for(graphs.size(), [&](std::size_t gi) {
        const Graph& g = graphs[gi];
        Slot& slot = slots[gi];
        auto subset = edge_subset_sums(g, k, g.edge_count(), CoeffBackend::subset_enumeration);
        auto cluster = edge_subset_sums(g, k, g.edge_count(), CoeffBackend::connected_cluster);
        if (subset != cluster) {
            slot.backend_mismatch = true;
            slot.error = "backend disagreement on graph " + std::to_string(gi);
            return;
        }
        CoeffVector poly = potts_poly_in_w(g, k);
        for (double wv : w_values) {
            auto r = approx_Z(g, k, cplx{wv, 0}, 0.01, plan);
            cplx exact = poly.eval(cplx{wv, 0});
            double rel = std::abs(r.xi / exact - 1.0);
            slot.worst_rel = std::max(slot.worst_rel, rel);
            slot.last_tail = r.tail_estimate;
            if (!(rel <= 0.01)) {
                std::ostringstream os;
                os << "graph " << gi << " (n=" << g.vertex_count() << ", m=" << g.edge_count()
                   << ") at w=" << wv << ": relative error " << rel;
                slot.error = os.str();
            }
        }
    });
    double worst = 0;
    for (const auto& slot : slots) {
        worst = std::max(worst, slot.worst_rel);
        if (!slot.error.empty()) out.fail(slot.error);
    }
    std::ostringstream os;
    os << graphs.size() << " graphs x " << w_values.size()
       << " weights, both backends bit-equal; worst |xi/Z - 1| = " << worst;
    out.summary = os.str();
    return out;
}

Outcome criterion_geometry_suites() {
    Outcome out;
    constexpr double kPi = 3.141592653589793238462643383279502884;
    const int trials = 10000;
    Rng rng(60601);
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        double alpha = rng.uniform(0.0, 2 * kPi / 3 - 1e-9);
        double base = rng.uniform(0.0, 2 * kPi);
        int count = 1 + static_cast<int>(rng.next_below(9));
        std::vector<Vec2> us;
        for (int i = 0; i < count; ++i)
            us.push_back(std::polar(rng.uniform(1e-3, 10.0), base + rng.uniform(0.0, alpha)));
        if (!cone_sum_bound_holds(us, alpha)) ++failures;
    }
    if (failures) out.fail("cone sum bound: " + std::to_string(failures) + " counterexamples");

    int simple_failures = 0;
    for (int t = 0; t < trials; ++t) {
        Vec2 u = std::polar(rng.uniform(1e-3, 5.0), rng.uniform(0.0, 2 * kPi));
        Vec2 v = std::polar(rng.uniform(1e-3, 5.0), rng.uniform(0.0, 2 * kPi));
        auto [a, b] = simple_geom_bounds(u, v);
        if (!a || !b) ++simple_failures;
    }
    if (simple_failures)
        out.fail("simple bounds: " + std::to_string(simple_failures) + " counterexamples");

    int convex_failures = 0;
    for (int t = 0; t < trials; ++t) {
        int d = 1 + static_cast<int>(rng.next_below(5));
        double r = rng.uniform(1e-3, 1.0 / d - 1e-6);
        auto sample = [&] {
            cplx prod = 1;
            for (int i = 0; i < d; ++i) prod *= rng.in_disk(1.0, r);
            return prod;
        };
        cplx z1 = sample(), z2 = sample();
        double lambda = rng.next_double();
        if (!in_disk_power(lambda * z1 + (1 - lambda) * z2, r, d, 1e-12)) ++convex_failures;
    }
    if (convex_failures)
        out.fail("disk-power convexity: " + std::to_string(convex_failures) + " counterexamples");

    int pair_failures = 0;
    for (int t = 0; t < trials; ++t) {
        double phi = rng.uniform(0.0, kPi / 3 - 1e-9);
        double r = rng.uniform(1.0, 4.0);
        double len = rng.uniform(1e-2, 5.0);
        double ratio = std::exp(rng.uniform(-std::log(r), std::log(r)));
        Vec2 u = std::polar(len, rng.uniform(0.0, 2 * kPi));
        Vec2 v = u / len * (len / ratio) * std::polar(1.0, rng.uniform(-phi, phi));
        if (!pair_distance_bound(u, v, r, phi)) ++pair_failures;
    }
    if (pair_failures)
        out.fail("pair distance envelope: " + std::to_string(pair_failures) + " counterexamples");

    out.summary = "4 suites x 10^4 randomized trials, zero counterexamples";
    if (!out.pass) out.summary = "counterexamples found";
    return out;
}

Outcome criterion_root_locus() {
    Outcome out;
    RegionSpec region = certified_region(3, 6, ConditionSystem::improved, 0.18);
    auto graphs = enumerate_graphs(6, 3, true);
    struct Slot {
        int roots = 0;
        int inside = 0;
        double worst_residual = 0;
        std::string error;
    };
    std::vector<Slot> slots(graphs.size());
    parallel_for(graphs.size(), [&](std::size_t gi) {
        const Graph& g = graphs[gi];
        Slot& slot = slots[gi];
        auto locus = root_locus(g, 6, region);
        for (const auto& entry : locus) {
            ++slot.roots;
            slot.worst_residual = std::max(slot.worst_residual, entry.residual);
            if (entry.in_region) {
                ++slot.inside;
                std::ostringstream os;
                os << "graph " << gi << ": root (" << entry.root.real() << ", "
                   << entry.root.imag() << ") inside the region";
                slot.error = os.str();
            }
            if (entry.residual > 1e-8) {
                std::ostringstream os;
                os << "graph " << gi << ": residual " << entry.residual;
                slot.error = os.str();
            }
        }
    });
    long total_roots = 0;
    double worst_res = 0;
    for (const auto& slot : slots) {
        total_roots += slot.roots;
        worst_res = std::max(worst_res, slot.worst_residual);
        if (!slot.error.empty()) out.fail(slot.error);
    }
    std::ostringstream os;
    os << graphs.size() << " graphs, " << total_roots
       << " roots, none inside the region; worst residual " << worst_res;
    out.summary = os.str();
    return out;
}

struct Criterion {
    int index;
    const char* name;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "small-degree colour bounds reproduce the published table", criterion_small_delta_table},
    {2, "continuous thresholds match the published growth constants", criterion_growth_table},
    {3, "e*delta+1 bound certified for degrees 3..200", criterion_general_bound},
    {4, "colouring and cluster-expansion oracles agree", criterion_oracle_identity},
    {5, "zero-free scan over connected graphs up to 7 vertices", criterion_zero_free_scan},
    {6, "leaf-boundary induction invariants hold exhaustively", criterion_induction_invariants},
    {7, "interpolation tracks the oracle at 1% on degree-4 graphs", criterion_interpolation},
    {8, "plane-geometry property suites", criterion_geometry_suites},
    {9, "no weight-polynomial root enters the certified region", criterion_root_locus},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (std::strcmp(argv[i], "--list") == 0) {
            for (const auto& c : kCriteria) std::cout << c.index << ": " << c.name << "\n";
            return 0;
        } else {
            std::cerr << "usage: potts_acceptance [--criterion N | --list]\n";
            return 1;
        }
    }
    bool all_pass = true;
    for (const auto& c : kCriteria) {
        if (only != 0 && c.index != only) continue;
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.summary = std::string("exception: ") + e.what();
        }
        std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.index << ": " << c.name
                  << " -- " << out.summary << "\n";
        for (const auto& d : out.details) std::cout << "       " << d << "\n";
        all_pass = all_pass && out.pass;
    }
    return all_pass ? 0 : 2;
}
