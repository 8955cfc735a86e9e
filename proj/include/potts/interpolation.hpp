#pragma once

#include <optional>
#include <vector>

#include "potts/conditions.hpp"
#include "potts/exact.hpp"
#include "potts/graph.hpp"

namespace potts {

/// Weight region: the closed disk |w| <= eps, the sector |arg w| <= eps*theta
/// with eps < |w| <= 1, and the open disk |1-w| < delta_disk around 1.
struct RegionSpec {
    int delta = 3;
    double eps = 0;
    double theta = 0;
    double delta_disk = 0;

    bool contains(cplx w) const;
    void validate() const;
};

/// Disk radius around w = 1 that is zero-free for any colour count at the
/// given maximum degree: 0.18 at degree 3, 0.13 at degree 4, 0.52/delta
/// beyond (the latter is a default meant to be vetted by the scan harness,
/// and can be overridden wherever a RegionSpec is accepted).
double default_one_disk_radius(int delta);

/// Region assembled from a certified condition-system point: K from the
/// reference row (or best-K search), theta = asin K, eps the largest value
/// keeping the system strict.
RegionSpec certified_region(int delta, int k, ConditionSystem sys = ConditionSystem::improved,
                            double delta_disk_override = 0);

bool region_contains(const RegionSpec& r, cplx w);

enum class CoeffBackend { subset_enumeration, connected_cluster };
std::string to_string(CoeffBackend b);
CoeffBackend coeff_backend_from_string(const std::string& s);

/// e_m = sum over edge subsets F with |F| = m of k^{c(F)}, for m = 0..M,
/// as exact integers. The subset backend enumerates all subsets directly;
/// the connected-cluster backend enumerates connected edge sets once each
/// and assembles disjoint unions, and must agree bit-exactly.
std::vector<BigUint> edge_subset_sums(const Graph& g, int k, int M,
                                      CoeffBackend backend = CoeffBackend::subset_enumeration,
                                      const EvalCaps& caps = {});

/// Coefficients a_0..a_M of q(z) = Z(G;k,1+z(w-1)): a_m = (w-1)^m e_m.
std::vector<cplx> q_coefficients(const Graph& g, int k, cplx w, int M,
                                 CoeffBackend backend = CoeffBackend::subset_enumeration,
                                 const EvalCaps& caps = {});

/// Coefficients p_0..p_N (p_0 = 0) of p(z) = g(rho z)/g(rho) with
/// g(y) = sum_{j=1..N} y^j / j, so p(0) = 0 and p(1) = 1 exactly.
std::vector<double> disk_map(double rho, int N);

/// First boundary sample z with |z| = 1 + delta_prime whose image
/// w(z) = 1 + p(z)(w-1) leaves the region, if any.
struct EscapeSample {
    cplx z;
    cplx image;
};
std::optional<EscapeSample> disk_map_escape(const std::vector<double>& p, const RegionSpec& region,
                                            cplx w, double delta_prime, int samples = 720);

/// Coefficients b_0..b_M of q(p(z)); requires p[0] == 0, which makes the
/// truncation exact for the first M coefficients.
std::vector<cplx> compose_truncate(const std::vector<cplx>& q, const std::vector<double>& p, int M);

/// Taylor coefficients c_1..c_M of log(f(z)/b_0) via the power-sum
/// recurrence m c_m = m b_m/b_0 - sum_{j<m} j c_j b_{m-j}/b_0.
/// Slot 0 of the result is unused (zero).
std::vector<cplx> log_taylor(const std::vector<cplx>& b, int M);

/// Inverse recurrence: series of exp(sum c_m z^m), normalized to b_0 = 1.
std::vector<cplx> exp_from_log(const std::vector<cplx>& c, int M);

struct InterpolationPlan {
    int order = 0;           // coefficient order cap, 1..|E|; 0 means all of them
    double rho = 0.7;        // disk-map sharpness
    int map_degree = 8;      // disk-map polynomial degree
    CoeffBackend backend = CoeffBackend::connected_cluster;
    double delta_prime = 0.05;
    int boundary_samples = 720;
    bool strict_region = false; // fail instead of flagging when the map escapes
    RegionSpec region;
};

/// Default plan for a degree/colour pair, region from certified_region.
InterpolationPlan default_plan(int delta, int k);

struct ApproxResult {
    cplx xi;
    cplx log_xi;
    int coeff_order = 0;                 // q coefficients actually used
    int order = 0;                       // log-series terms summed
    std::vector<double> term_magnitudes; // |c_m| for m = 1..order
    double tail_estimate = 0; // series mass beyond order, floored by the last computed term
    bool tail_verified = false;          // last three terms all under eps_acc/10
    bool region_check = false;           // disk-map image stayed in the region
    CoeffBackend backend;
};

/// Multiplicative approximation of Z(G;k,w) for w in the plan's region:
/// xi = b_0 exp(sum_{m<=M} c_m). The costly resource is the coefficient
/// order of q, capped by plan.order at the edge count; with all of them the
/// composition f = q(p(z)) is a complete polynomial and the series order M
/// grows until the last three terms drop below eps_acc/10. If the cap (or a
/// hard series bound) is hit first, tail_verified reports false and xi is
/// still returned. Accuracy is validated against the exact evaluators in
/// tests.
ApproxResult approx_Z(const Graph& g, int k, cplx w, double eps_acc,
                      const InterpolationPlan& plan, const EvalCaps& caps = {});

} // namespace potts
