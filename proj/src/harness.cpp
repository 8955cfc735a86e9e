#include "potts/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "potts/errors.hpp"
#include "potts/geometry.hpp"
#include "potts/parallel.hpp"
#include "potts/roots.hpp"

namespace potts {

namespace {

bool in_droplet(const RegionSpec& r, cplx w) {
    if (std::abs(w) <= r.eps) return true;
    return std::abs(std::arg(w)) <= r.eps * r.theta && std::abs(w) <= 1.0;
}

cplx draw_weight(const RegionSpec& r, Rng& rng, bool include_one_disk) {
    double u = rng.next_double();
    if (include_one_disk) {
        if (u < 0.3) return rng.in_disk(0.0, r.eps);
        if (u < 0.6) return std::polar(r.eps + (1.0 - r.eps) * rng.next_double(),
                                       r.eps * r.theta * (2.0 * rng.next_double() - 1.0));
        if (u < 0.8) return rng.in_disk(1.0, r.delta_disk);
        return cplx{rng.next_double(), 0.0};
    }
    if (u < 0.3) return rng.in_disk(0.0, r.eps);
    if (u < 0.7) return std::polar(r.eps + (1.0 - r.eps) * rng.next_double(),
                                   r.eps * r.theta * (2.0 * rng.next_double() - 1.0));
    return cplx{rng.next_double(), 0.0};
}

} // namespace

EdgeWeights sample_region_weights(const Graph& g, const RegionSpec& region, Rng& rng,
                                  bool include_one_disk) {
    std::vector<cplx> w(g.edge_count());
    for (auto& we : w) we = draw_weight(region, rng, include_one_disk);
    return EdgeWeights(g, std::move(w));
}

ScanReport zero_free_scan(const ScanOptions& opt) {
    RegionSpec region = opt.region;
    if (region.eps == 0 && region.theta == 0) region = certified_region(opt.delta, opt.k);
    region.validate();

    auto graphs = enumerate_graphs(opt.n_max, opt.delta, opt.connected_only);
    ScanReport report;
    report.samples_per_graph = opt.samples_per_graph;
    report.graphs_tested = static_cast<long>(graphs.size());
    report.region = region;
    report.min_normalized_modulus = std::numeric_limits<double>::infinity();

    struct PerGraph {
        double min_norm = std::numeric_limits<double>::infinity();
        std::vector<cplx> worst_weights;
        std::vector<ScanViolation> violations;
    };
    std::vector<PerGraph> partial(graphs.size());
    Rng master(opt.seed);

    parallel_for(graphs.size(), [&](std::size_t gi) {
        const Graph& g = graphs[gi];
        Rng rng = master.split(gi);
        double scale = std::pow(static_cast<double>(opt.k), g.vertex_count());
        PerGraph& slot = partial[gi];
        for (int s = 0; s < opt.samples_per_graph; ++s) {
            EdgeWeights w = sample_region_weights(g, region, rng, true);
            double norm = std::abs(potts_exact(g, opt.k, w)) / scale;
            if (norm < slot.min_norm) {
                slot.min_norm = norm;
                slot.worst_weights = w.values();
            }
            if (norm <= opt.zero_tolerance) {
                slot.violations.push_back({canonical_code(g), w.values(), norm});
            }
        }
    });

    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const PerGraph& slot = partial[gi];
        if (slot.min_norm < report.min_normalized_modulus) {
            report.min_normalized_modulus = slot.min_norm;
            report.worst_graph = canonical_code(graphs[gi]);
            report.worst_weights = slot.worst_weights;
        }
        report.violations.insert(report.violations.end(), slot.violations.begin(),
                                 slot.violations.end());
    }
    if (graphs.empty()) report.min_normalized_modulus = 0;
    return report;
}

namespace {

void require_droplet_weights(const Graph& g, const EdgeWeights& w, const ConditionParams& p) {
    RegionSpec droplet{p.delta, p.eps, p.theta, 0.0};
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!in_droplet(droplet, w[e]))
            throw ContractError("weight on edge " + std::to_string(e) +
                                " violates the region conditions");
    }
}

} // namespace

InductionInstanceReport induction_invariant_check(const Graph& g, int k, const EdgeWeights& w,
                                                  const Boundary& b, int u, int ell, int ell_prime,
                                                  const ConditionParams& p, ConditionSystem sys,
                                                  double tolerance, const EvalCaps& caps) {
    b.validate(g, k);
    if (ell < 1 || ell > k || ell_prime < 1 || ell_prime > k)
        throw ContractError("colour out of range");
    std::vector<int> full = b.vertices;
    full.push_back(u);
    if (!is_leaf_independent(g, full))
        throw ContractError("W'u must be a leaf-independent set");
    require_droplet_weights(g, w, p);
    if (!check_system(sys, p).holds)
        throw ContractError("condition system does not hold at these parameters");

    auto vec = restricted_colour_vector(g, k, w, b, u, caps);
    InductionInstanceReport rep;
    rep.x = vec[ell - 1];
    rep.y = vec[ell_prime - 1];
    rep.nonzero_ok = rep.x != cplx{} && rep.y != cplx{};
    if (rep.nonzero_ok) {
        rep.angle = angle_between(rep.x, rep.y);
        rep.ratio_distance = std::abs(rep.x / rep.y - 1.0);
        rep.modulus_ratio = std::abs(rep.x) / std::abs(rep.y);
        rep.angle_ok = rep.angle <= p.theta + tolerance;
        rep.ratio_disk_ok = rep.ratio_distance <= p.K + tolerance;
        rep.modulus_bound_ok = rep.modulus_ratio <= 1.0 + p.K + tolerance;
    }
    cplx total = 0;
    for (cplx z : vec) total += z;
    cplx direct = potts_restricted(g, k, w, b, caps);
    rep.restriction_sum_ok = std::abs(total - direct) <= 1e-10 * std::max(1.0, std::abs(direct));
    return rep;
}

ColourInstanceReport induction_colour_check(const Graph& g, int k, const EdgeWeights& w,
                                            const Boundary& b_prime, int u,
                                            const ConditionParams& p, ConditionSystem sys,
                                            double tolerance, const EvalCaps& caps) {
    b_prime.validate(g, k);
    if (!is_leaf_independent(g, b_prime.vertices))
        throw ContractError("W' must be a leaf-independent set");
    if (b_prime.colour_of(u) != 0) throw ContractError("u must be free");
    require_droplet_weights(g, w, p);
    if (!check_system(sys, p).holds)
        throw ContractError("condition system does not hold at these parameters");

    auto classes = classify_colours(g, b_prime, u, k, w, p.eps);
    auto vec = restricted_colour_vector(g, k, w, b_prime, u, caps);
    ColourInstanceReport rep;
    int d = classes.free_neighbour_count;
    int bb = p.delta - d;
    rep.free_neighbours = d;

    std::vector<int> good_or_neutral = classes.good;
    good_or_neutral.insert(good_or_neutral.end(), classes.neutral.begin(), classes.neutral.end());

    rep.nonzero_ok = true;
    for (int c : good_or_neutral) {
        if (vec[c - 1] == cplx{}) rep.nonzero_ok = false;
    }

    double angle_cap = (d + bb * p.eps) * p.theta + tolerance;
    rep.angle_ok = true;
    rep.worst_angle = 0;
    if (rep.nonzero_ok) {
        for (std::size_t i = 0; i < good_or_neutral.size(); ++i) {
            for (std::size_t j = i + 1; j < good_or_neutral.size(); ++j) {
                double a = angle_between(vec[good_or_neutral[i] - 1], vec[good_or_neutral[j] - 1]);
                rep.worst_angle = std::max(rep.worst_angle, a);
                if (a > angle_cap) rep.angle_ok = false;
            }
        }
    }

    // Good-pair ratios live in B(1,K)^d. At d = 0 the set degenerates to {1}
    // and floating error admits no tolerance, so only exact symmetry would be
    // testable; those instances are skipped.
    rep.ratio_power_ok = true;
    if (rep.nonzero_ok && d >= 1) {
        for (int c1 : classes.good) {
            for (int c2 : classes.good) {
                if (c1 == c2) continue;
                if (!in_disk_power(vec[c1 - 1] / vec[c2 - 1], p.K, d, 1e-9))
                    rep.ratio_power_ok = false;
            }
        }
    }

    rep.modulus_envelope_ok = true;
    if (rep.nonzero_ok && sys == ConditionSystem::improved) {
        double grow = std::pow(1 + p.K, d);
        for (int c = 1; c <= k; ++c) {
            if (vec[c - 1] == cplx{}) continue; // bad colours may legitimately vanish
            double cap = std::pow(p.eps, classes.bad_multiplicity[c]) * grow;
            for (int j : classes.good) {
                double ratio = std::abs(vec[c - 1]) / std::abs(vec[j - 1]);
                if (ratio > cap * (1 + tolerance) + tolerance) rep.modulus_envelope_ok = false;
            }
        }
    }
    return rep;
}

namespace {

// Leaf-independent subsets of size 1..cap, listed deterministically.
std::vector<std::vector<int>> leaf_independent_sets(const Graph& g, int cap) {
    std::vector<int> leaves;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 1) leaves.push_back(v);
    }
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!current.empty()) out.push_back(current);
        if (static_cast<int>(current.size()) == cap) return;
        for (std::size_t i = start; i < leaves.size(); ++i) {
            bool independent = true;
            for (int chosen : current) {
                for (auto [nb, e] : g.neighbours(leaves[i])) {
                    (void)e;
                    if (nb == chosen) independent = false;
                }
            }
            if (!independent) continue;
            current.push_back(leaves[i]);
            rec(i + 1);
            current.pop_back();
        }
    };
    rec(0);
    return out;
}

void enumerate_colour_lists(int k, int len, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> colours(len, 1);
    for (;;) {
        f(colours);
        int i = len - 1;
        while (i >= 0 && colours[i] == k) {
            colours[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++colours[i];
    }
}

} // namespace

InductionScanReport induction_scan(const InductionScanOptions& opt) {
    CertifiedPoint certified = certify_point(opt.delta, opt.k, opt.system);
    const ConditionParams params = certified.params;
    RegionSpec droplet{params.delta, params.eps, params.theta, 0.0};

    auto graphs = enumerate_graphs(opt.n_max, opt.delta, true);
    InductionScanReport report;
    report.params = params;
    report.graphs = static_cast<long>(graphs.size());
    report.worst_angle_slack = std::numeric_limits<double>::infinity();
    report.worst_ratio_slack = std::numeric_limits<double>::infinity();

    struct PerGraph {
        long pair_instances = 0;
        long colour_instances = 0;
        double angle_slack = std::numeric_limits<double>::infinity();
        double ratio_slack = std::numeric_limits<double>::infinity();
        std::vector<std::string> violations;
    };
    std::vector<PerGraph> partial(graphs.size());
    Rng master(opt.seed);

    parallel_for(graphs.size(), [&](std::size_t gi) {
        const Graph& g = graphs[gi];
        PerGraph& slot = partial[gi];
        Rng rng = master.split(gi);
        auto boundaries = leaf_independent_sets(g, opt.max_boundary);
        auto note = [&](const std::string& what) {
            std::ostringstream os;
            os << "graph#" << gi << " (n=" << g.vertex_count() << "): " << what;
            slot.violations.push_back(os.str());
        };
        for (int draw = 0; draw < opt.draws; ++draw) {
            EdgeWeights w = sample_region_weights(g, droplet, rng, false);
            // Leaf-boundary pair conclusions, every split of W into (W',u).
            for (const auto& ws : boundaries) {
                for (std::size_t pick = 0; pick < ws.size(); ++pick) {
                    int u = ws[pick];
                    std::vector<int> rest;
                    for (std::size_t i = 0; i < ws.size(); ++i) {
                        if (i != pick) rest.push_back(ws[i]);
                    }
                    enumerate_colour_lists(opt.k, static_cast<int>(rest.size()),
                                           [&](const std::vector<int>& lp) {
                        Boundary b{rest, lp};
                        auto vec = restricted_colour_vector(g, opt.k, w, b, u);
                        cplx total = 0;
                        for (cplx z : vec) total += z;
                        cplx direct = potts_restricted(g, opt.k, w, b);
                        if (std::abs(total - direct) > 1e-10 * std::max(1.0, std::abs(direct)))
                            note("restriction sum mismatch");
                        for (int ell = 1; ell <= opt.k; ++ell) {
                            for (int ellp = 1; ellp <= opt.k; ++ellp) {
                                ++slot.pair_instances;
                                cplx x = vec[ell - 1], y = vec[ellp - 1];
                                if (x == cplx{} || y == cplx{}) {
                                    note("restricted value vanished");
                                    continue;
                                }
                                double angle = angle_between(x, y);
                                double ratio = std::abs(x / y - 1.0);
                                slot.angle_slack = std::min(slot.angle_slack, params.theta - angle);
                                slot.ratio_slack = std::min(slot.ratio_slack, params.K - ratio);
                                if (angle > params.theta + opt.tolerance) note("angle bound violated");
                                if (ratio > params.K + opt.tolerance) note("ratio disk violated");
                                if (std::abs(x) / std::abs(y) > 1 + params.K + opt.tolerance)
                                    note("modulus ratio violated");
                            }
                        }
                    });
                }
            }
            // Colour-classification conclusions at free vertices, including
            // the empty boundary.
            std::vector<std::vector<int>> primes = boundaries;
            primes.push_back({});
            for (const auto& wp : primes) {
                enumerate_colour_lists(opt.k, static_cast<int>(wp.size()),
                                       [&](const std::vector<int>& lp) {
                    Boundary b{wp, lp};
                    for (int u = 0; u < g.vertex_count(); ++u) {
                        if (b.colour_of(u) != 0) continue;
                        ++slot.colour_instances;
                        auto rep = induction_colour_check(g, opt.k, w, b, u, params, opt.system,
                                                          opt.tolerance);
                        if (!rep.nonzero_ok) note("good/neutral restricted value vanished");
                        if (!rep.angle_ok) note("classification angle bound violated");
                        if (!rep.ratio_power_ok) note("good-pair ratio left B(1,K)^d");
                        if (!rep.modulus_envelope_ok) note("modulus envelope violated");
                    }
                });
            }
        }
    });

    for (const auto& slot : partial) {
        report.pair_instances += slot.pair_instances;
        report.colour_instances += slot.colour_instances;
        report.worst_angle_slack = std::min(report.worst_angle_slack, slot.angle_slack);
        report.worst_ratio_slack = std::min(report.worst_ratio_slack, slot.ratio_slack);
        report.violations.insert(report.violations.end(), slot.violations.begin(),
                                 slot.violations.end());
    }
    return report;
}

std::vector<RootLocusEntry> root_locus(const Graph& g, int k, const RegionSpec& region,
                                       const EvalCaps& caps) {
    std::vector<RootLocusEntry> out;
    if (g.edge_count() == 0) return out;
    CoeffVector poly = potts_poly_in_w(g, k, caps);
    auto roots = roots_in_w(poly);
    for (cplx r : roots) {
        out.push_back({r, region.contains(r), root_residual(poly.complex_coeffs(), r)});
    }
    return out;
}

} // namespace potts
