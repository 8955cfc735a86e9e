#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "potts/conditions.hpp"
#include "potts/enumerate.hpp"
#include "potts/exact.hpp"
#include "potts/interpolation.hpp"
#include "potts/rng.hpp"

namespace potts {

/// Draw one weight per edge from the region, stratified over the closed
/// eps-disk, the sector, the disk around 1 and the real segment [0,1) with
/// probabilities 0.3 / 0.3 / 0.2 / 0.2. include_one_disk=false drops
/// the third stratum (the induction checks only cover the first two) and
/// reweights to 0.3 / 0.4 / 0.3.
EdgeWeights sample_region_weights(const Graph& g, const RegionSpec& region, Rng& rng,
                                  bool include_one_disk);

struct ScanOptions {
    int delta = 3;
    int k = 6;
    int n_max = 7;
    int samples_per_graph = 200;
    std::uint64_t seed = 1;
    bool connected_only = true;
    double zero_tolerance = 1e-10;
    RegionSpec region; // default-constructed: derive from (delta,k) at run time
};

struct ScanViolation {
    CanonicalCode graph;
    std::vector<cplx> weights;
    double normalized_modulus;
};

struct ScanReport {
    long graphs_tested = 0;
    long samples_per_graph = 0;
    double min_normalized_modulus = 0;
    CanonicalCode worst_graph;
    std::vector<cplx> worst_weights;
    std::vector<ScanViolation> violations;
    RegionSpec region;
};

/// Evaluates |Z|/k^n over enumerated graphs and sampled region weights;
/// a violation is any value at or below the zero tolerance.
ScanReport zero_free_scan(const ScanOptions& opt);

/// Conclusions checked by the induction harness for one boundary instance.
/// x and y are the restricted values at colours ell and ell_prime for the
/// boundary (W',L') extended by u.
struct InductionInstanceReport {
    cplx x, y;
    double angle = 0;
    double ratio_distance = 0; // |x/y - 1|
    double modulus_ratio = 0;  // |x|/|y|
    bool nonzero_ok = false;
    bool angle_ok = false;         // angle <= theta
    bool ratio_disk_ok = false;    // x/y in B(1,K)
    bool modulus_bound_ok = false; // |x|/|y| <= 1+K
    bool restriction_sum_ok = false;
    bool all_ok() const {
        return nonzero_ok && angle_ok && ratio_disk_ok && modulus_bound_ok && restriction_sum_ok;
    }
};

/// Checks the leaf-boundary conclusions for W = (W' from `b`) + u. Weights
/// must satisfy the region's first two conditions and the parameters must
/// pass the chosen system; both are enforced.
InductionInstanceReport induction_invariant_check(const Graph& g, int k, const EdgeWeights& w,
                                                  const Boundary& b, int u, int ell, int ell_prime,
                                                  const ConditionParams& p, ConditionSystem sys,
                                                  double tolerance = 1e-9,
                                                  const EvalCaps& caps = {});

/// Colour-classification conclusions at a free vertex u: restricted values
/// nonzero over good and neutral colours, pairwise angles at most
/// (d + b*eps)*theta, good-pair ratios in B(1,K)^d (skipped when d = 0,
/// where only exact symmetry is licensed), and the modulus envelope
/// eps^m(ell) (1+K)^d against good colours.
struct ColourInstanceReport {
    int free_neighbours = 0;
    bool nonzero_ok = false;
    bool angle_ok = false;
    bool ratio_power_ok = false;
    bool modulus_envelope_ok = false;
    double worst_angle = 0;
    bool all_ok() const { return nonzero_ok && angle_ok && ratio_power_ok && modulus_envelope_ok; }
};

ColourInstanceReport induction_colour_check(const Graph& g, int k, const EdgeWeights& w,
                                            const Boundary& b_prime, int u,
                                            const ConditionParams& p, ConditionSystem sys,
                                            double tolerance = 1e-9, const EvalCaps& caps = {});

struct InductionScanOptions {
    int n_max = 6;
    int delta = 3;
    int k = 6;
    int draws = 50;
    int max_boundary = 3; // |W| cap for leaf boundaries
    std::uint64_t seed = 1;
    ConditionSystem system = ConditionSystem::improved;
    double tolerance = 1e-9;
};

struct InductionScanReport {
    long graphs = 0;
    long pair_instances = 0;   // (W,u,L',ell,ell') checks
    long colour_instances = 0; // free-vertex classification checks
    double worst_angle_slack = 0;
    double worst_ratio_slack = 0;
    std::vector<std::string> violations;
    ConditionParams params;
};

/// Exhaustive sweep: all enumerated connected graphs, all leaf-independent
/// boundaries up to the size cap, all colour pairs, sampled region weights.
InductionScanReport induction_scan(const InductionScanOptions& opt);

struct RootLocusEntry {
    cplx root;
    bool in_region;
    double residual;
};

/// Roots of the weight polynomial with region membership flags.
std::vector<RootLocusEntry> root_locus(const Graph& g, int k, const RegionSpec& region,
                                       const EvalCaps& caps = {});

} // namespace potts
