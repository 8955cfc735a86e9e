#pragma once

#include <string>
#include <vector>

namespace potts {

enum class ConditionSystem { basic, closed_interval, improved };

std::string to_string(ConditionSystem s);
ConditionSystem condition_system_from_string(const std::string& s);

/// Parameter tuple for the zero-freeness condition systems. theta is always
/// derived as asin(K), never set independently.
struct ConditionParams {
    int delta = 3;     // maximum degree, >= 3
    double k = 0;      // colour count; real values allowed in continuous mode
    double eps = 0;    // weight-region parameter, in [0,1)
    double K = 0;      // ratio-disk radius, in (0,1)
    double theta = 0;  // asin(K)

    static ConditionParams make(int delta, double k, double K, double eps);
};

struct MarginEntry {
    std::string name; // which inequality, e.g. "d=2 ratio" or "theta upper"
    int d;            // per-term index, or -1 for global constraints
    double margin;    // normalized slack; the inequality holds iff > 0
};

/// Every margin is normalized to the form lhs - rhs of an inequality that
/// must be strictly positive. holds is evaluated against a 1e-12 strictness
/// tolerance; weak mode admits margins that are merely nonnegative.
struct ConditionReport {
    bool holds = false;
    bool weak = false;
    std::vector<MarginEntry> margins;
    int binding_index = -1; // d attaining the minimum per-term margin
    double min_margin = 0;  // minimum over all margins, global ones included
    std::string reason;     // first failing inequality when holds is false

    const MarginEntry* find(const std::string& name) const;
};

inline constexpr double kStrictTolerance = 1e-12;

/// Ratio condition (1+eps)^2 / ((k-b)(1-K)^d - eps*b) in (0, K] for each
/// d = 0..delta-1 with b = delta-d, plus theta in (0, pi/(3(delta-1+eps)))
/// and K < 1/(delta-1).
ConditionReport basic_conditions(const ConditionParams& p, bool weak = false);

/// Variant whose conclusions cover the closed weight interval: numerator
/// (1+eps)^(2+b), denominator (1-K)^d (k-b) - eps*b*(1+eps)^b. Degenerates
/// to the basic system at eps = 0.
ConditionReport closed_interval_conditions(const ConditionParams& p, bool weak = false);

/// Small-degree system: for d = 0..delta-2
///     (1+eps)^2 (1+K)^d <= K * [cos((d+b eps) theta/2)(k-b) - eps b (1+K)^d]
/// and for d = 0..delta-1
///     (1+eps)(1+K)^d f(d,K,(d+b eps) theta) <= K * [same denominator],
/// with f the two-branch envelope below. No K < 1/(delta-1) constraint.
ConditionReport improved_conditions(const ConditionParams& p, bool weak = false);

ConditionReport check_system(ConditionSystem sys, const ConditionParams& p, bool weak = false);

/// max( 2 sin(phi/2), sqrt(1 + (1+K)^(-2d) - 2 cos(phi) (1+K)^(-d)) ).
double ratio_envelope(int d, double K, double phi);

/// delta * (delta/(delta-1))^d - d.
double f_delta(int delta, double d);

struct PropositionReport {
    int k = 0;            // ceil(e*delta + 1)
    double K = 0;         // 1/delta
    ConditionReport at_eps_zero;
    double eps_max = 0;   // largest eps keeping the system strict, by bisection
    bool f_bound_ok = false; // f_delta(delta-1) + delta - 1 < e*delta
    double f_bound_margin = 0;
};

/// Certifies the e*delta + 1 colour bound at K = 1/delta for one degree.
PropositionReport proposition_k_bound(int delta);

/// Largest eps in [0,1) for which the system still holds strictly at fixed
/// (delta,k,K); 0 if it fails already at eps = 0. Bisection to 1e-9.
double max_feasible_eps(ConditionSystem sys, int delta, double k, double K);

/// Best K for fixed (delta,k,eps): 1e4-point sweep bracketing plus
/// golden-section refinement of the minimum margin.
struct KSearchResult {
    double K = 0;
    double margin = -1e300;
};
KSearchResult best_K(ConditionSystem sys, int delta, double k, double eps);

struct MinimalKResult {
    int k_min = 0;
    double K_star = 0;
    double margin = 0;  // margin at (k_min, K_star)
    double k_cont = 0;  // least real k admitting a feasible K, to 1e-6
    double c_val = 0;   // (k_cont - 1) / delta
};

/// Least integer k (and the continuous threshold) making the system feasible
/// for some K at eps = 0. Throws SearchError past k_cap.
MinimalKResult minimal_k(int delta, ConditionSystem sys, int k_cap = 0);

/// Published reference values the tables command regenerates and diffs
/// against: per-degree (K, theta, k) for the small-degree system and the
/// growth constants c with their colour bounds.
struct SmallDeltaRow {
    int delta;
    double K;
    double theta;
    int k;
};
const std::vector<SmallDeltaRow>& small_delta_reference(); // degrees 3..13

struct GrowthRow {
    int delta;
    double c;
    int k;
};
const std::vector<GrowthRow>& growth_reference(); // degrees 3..12

/// Reference colour bound for a degree: the table value for 3 <= delta <= 13,
/// ceil(e*delta + 1) beyond.
int reference_k_min(int delta);

/// A condition-system point certified feasible, with the largest strict eps.
struct CertifiedPoint {
    ConditionParams params; // eps set to eps_max
    double eps_max = 0;
    ConditionSystem system = ConditionSystem::improved;
};

/// K from the reference row when (delta,k) matches one, otherwise the best-K
/// search; eps by bisection at that K. Throws SearchError if infeasible.
CertifiedPoint certify_point(int delta, double k, ConditionSystem sys = ConditionSystem::improved);

} // namespace potts
