#include "potts/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "potts/errors.hpp"

namespace potts {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kE = 2.718281828459045235360287471352662498;
} // namespace

std::string to_string(ConditionSystem s) {
    switch (s) {
        case ConditionSystem::basic: return "basic";
        case ConditionSystem::closed_interval: return "closed";
        case ConditionSystem::improved: return "improved";
    }
    return "?";
}

ConditionSystem condition_system_from_string(const std::string& s) {
    if (s == "basic") return ConditionSystem::basic;
    if (s == "closed") return ConditionSystem::closed_interval;
    if (s == "improved") return ConditionSystem::improved;
    throw ParseError("unknown condition system: " + s);
}

ConditionParams ConditionParams::make(int delta, double k, double K, double eps) {
    if (delta < 3) throw ContractError("ConditionParams: delta must be >= 3");
    if (!(K > 0.0 && K < 1.0)) throw ContractError("ConditionParams: K must lie in (0,1)");
    if (!(eps >= 0.0 && eps < 1.0)) throw ContractError("ConditionParams: eps must lie in [0,1)");
    ConditionParams p;
    p.delta = delta;
    p.k = k;
    p.K = K;
    p.eps = eps;
    p.theta = std::asin(K);
    return p;
}

const MarginEntry* ConditionReport::find(const std::string& name) const {
    for (const auto& m : margins) {
        if (m.name == name) return &m;
    }
    return nullptr;
}

namespace {

struct ReportBuilder {
    ConditionReport rep;
    double min_per_term = std::numeric_limits<double>::infinity();

    void add(std::string name, int d, double margin) {
        rep.margins.push_back({std::move(name), d, margin});
        if (d >= 0 && margin < min_per_term) {
            min_per_term = margin;
            rep.binding_index = d;
        }
    }

    ConditionReport finish(bool weak) {
        rep.min_margin = std::numeric_limits<double>::infinity();
        for (const auto& m : rep.margins) rep.min_margin = std::min(rep.min_margin, m.margin);
        double floor = weak ? 0.0 : kStrictTolerance;
        rep.holds = rep.min_margin > floor || (weak && rep.min_margin >= 0.0);
        rep.weak = weak;
        if (!rep.holds) {
            for (const auto& m : rep.margins) {
                if (!(m.margin > floor)) {
                    rep.reason = m.name + " margin " + std::to_string(m.margin);
                    break;
                }
            }
        }
        return std::move(rep);
    }
};

void add_theta_range(ReportBuilder& b, const ConditionParams& p) {
    b.add("theta lower", -1, p.theta);
    b.add("theta upper", -1, kPi / (3.0 * (p.delta - 1 + p.eps)) - p.theta);
}

} // namespace

ConditionReport basic_conditions(const ConditionParams& p, bool weak) {
    ReportBuilder b;
    add_theta_range(b, p);
    b.add("K cap", -1, 1.0 / (p.delta - 1) - p.K);
    double num = (1 + p.eps) * (1 + p.eps);
    for (int d = 0; d <= p.delta - 1; ++d) {
        int bb = p.delta - d;
        double denom = (p.k - bb) * std::pow(1 - p.K, d) - p.eps * bb;
        b.add("d=" + std::to_string(d) + " denominator", d, denom);
        b.add("d=" + std::to_string(d) + " ratio", d, p.K * denom - num);
    }
    return b.finish(weak);
}

ConditionReport closed_interval_conditions(const ConditionParams& p, bool weak) {
    ReportBuilder b;
    add_theta_range(b, p);
    b.add("K cap", -1, 1.0 / (p.delta - 1) - p.K);
    for (int d = 0; d <= p.delta - 1; ++d) {
        int bb = p.delta - d;
        double denom = std::pow(1 - p.K, d) * (p.k - bb) - p.eps * bb * std::pow(1 + p.eps, bb);
        double num = std::pow(1 + p.eps, 2 + bb);
        b.add("d=" + std::to_string(d) + " denominator", d, denom);
        b.add("d=" + std::to_string(d) + " ratio", d, p.K * denom - num);
    }
    return b.finish(weak);
}

double ratio_envelope(int d, double K, double phi) {
    if (d < 0) throw ContractError("ratio_envelope: d must be nonnegative");
    if (!(K > 0.0 && K < 1.0)) throw ContractError("ratio_envelope: K must lie in (0,1)");
    if (!(phi >= 0.0 && phi < kPi)) throw ContractError("ratio_envelope: phi must lie in [0, pi)");
    double shrink = std::pow(1 + K, -static_cast<double>(d));
    double chord = 2.0 * std::sin(phi / 2.0);
    double skew = std::sqrt(std::max(0.0, 1.0 + shrink * shrink - 2.0 * std::cos(phi) * shrink));
    return std::max(chord, skew);
}

ConditionReport improved_conditions(const ConditionParams& p, bool weak) {
    ReportBuilder b;
    add_theta_range(b, p);
    for (int d = 0; d <= p.delta - 1; ++d) {
        int bb = p.delta - d;
        double phi = (d + bb * p.eps) * p.theta;
        double grow = std::pow(1 + p.K, d);
        double denom = std::cos(phi / 2.0) * (p.k - bb) - p.eps * bb * grow;
        b.add("d=" + std::to_string(d) + " denominator", d, denom);
        if (d <= p.delta - 2) {
            b.add("d=" + std::to_string(d) + " pair",
                  d, p.K * denom - (1 + p.eps) * (1 + p.eps) * grow);
        }
        double env = ratio_envelope(d, p.K, std::min(phi, kPi * (1 - 1e-15)));
        b.add("d=" + std::to_string(d) + " envelope",
              d, p.K * denom - (1 + p.eps) * grow * env);
    }
    return b.finish(weak);
}

ConditionReport check_system(ConditionSystem sys, const ConditionParams& p, bool weak) {
    switch (sys) {
        case ConditionSystem::basic: return basic_conditions(p, weak);
        case ConditionSystem::closed_interval: return closed_interval_conditions(p, weak);
        case ConditionSystem::improved: return improved_conditions(p, weak);
    }
    throw ContractError("unknown condition system");
}

double f_delta(int delta, double d) {
    if (delta < 3) throw ContractError("f_delta: delta must be >= 3");
    if (d < 0) throw ContractError("f_delta: d must be nonnegative");
    return delta * std::pow(static_cast<double>(delta) / (delta - 1), d) - d;
}

namespace {

// Numeric-only twin of the report builders for the optimizer hot paths; a
// property test pins it to the reports' min_margin.
double min_margin_numeric(ConditionSystem sys, int delta, double k, double K, double eps) {
    double theta = std::asin(K);
    double lo = std::min(theta, kPi / (3.0 * (delta - 1 + eps)) - theta);
    if (sys != ConditionSystem::improved) lo = std::min(lo, 1.0 / (delta - 1) - K);
    for (int d = 0; d <= delta - 1; ++d) {
        int bb = delta - d;
        if (sys == ConditionSystem::basic) {
            double denom = (k - bb) * std::pow(1 - K, d) - eps * bb;
            lo = std::min({lo, denom, K * denom - (1 + eps) * (1 + eps)});
        } else if (sys == ConditionSystem::closed_interval) {
            double denom = std::pow(1 - K, d) * (k - bb) - eps * bb * std::pow(1 + eps, bb);
            lo = std::min({lo, denom, K * denom - std::pow(1 + eps, 2 + bb)});
        } else {
            double phi = (d + bb * eps) * theta;
            double grow = std::pow(1 + K, d);
            double denom = std::cos(phi / 2.0) * (k - bb) - eps * bb * grow;
            lo = std::min(lo, denom);
            if (d <= delta - 2) lo = std::min(lo, K * denom - (1 + eps) * (1 + eps) * grow);
            double env = ratio_envelope(d, K, std::min(phi, kPi * (1 - 1e-15)));
            lo = std::min(lo, K * denom - (1 + eps) * grow * env);
        }
    }
    return lo;
}

double min_margin_at(ConditionSystem sys, int delta, double k, double K, double eps) {
    if (!(K > 0.0 && K < 1.0)) return -1e300;
    return min_margin_numeric(sys, delta, k, K, eps);
}

} // namespace

double max_feasible_eps(ConditionSystem sys, int delta, double k, double K) {
    if (!(min_margin_at(sys, delta, k, K, 0.0) > kStrictTolerance)) return 0.0;
    double lo = 0.0, hi = 1.0 - 1e-12;
    // Margins are non-increasing in eps, so plain bisection applies.
    while (hi - lo > 1e-9) {
        double mid = 0.5 * (lo + hi);
        if (min_margin_at(sys, delta, k, K, mid) > kStrictTolerance) lo = mid;
        else hi = mid;
    }
    return lo;
}

KSearchResult best_K(ConditionSystem sys, int delta, double k, double eps) {
    constexpr int kGrid = 10000;
    KSearchResult best;
    int best_i = -1;
    for (int i = 1; i < kGrid; ++i) {
        double K = static_cast<double>(i) / kGrid;
        double m = min_margin_at(sys, delta, k, K, eps);
        if (m > best.margin) {
            best = {K, m};
            best_i = i;
        }
    }
    if (best_i < 0) return best;
    // Golden-section refinement inside the bracketing grid cells.
    double a = std::max(1e-12, (best_i - 1.0) / kGrid);
    double b = std::min(1.0 - 1e-12, (best_i + 1.0) / kGrid);
    const double inv_phi = 0.6180339887498948482;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = min_margin_at(sys, delta, k, x1, eps);
    double f2 = min_margin_at(sys, delta, k, x2, eps);
    for (int it = 0; it < 60; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = min_margin_at(sys, delta, k, x2, eps);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = min_margin_at(sys, delta, k, x1, eps);
        }
    }
    double K = (f1 > f2) ? x1 : x2;
    double m = std::max(f1, f2);
    if (m > best.margin) best = {K, m};
    return best;
}

MinimalKResult minimal_k(int delta, ConditionSystem sys, int k_cap) {
    if (delta < 3) throw ContractError("minimal_k: delta must be >= 3");
    if (k_cap <= 0) k_cap = 20 * delta;
    MinimalKResult out;
    KSearchResult at_min;
    int k_min = -1;
    for (int k = delta + 1; k <= k_cap; ++k) {
        auto r = best_K(sys, delta, k, 0.0);
        if (r.margin > kStrictTolerance) {
            k_min = k;
            at_min = r;
            break;
        }
    }
    if (k_min < 0)
        throw SearchError("no feasible colour count up to " + std::to_string(k_cap) +
                          " for delta " + std::to_string(delta));
    out.k_min = k_min;
    out.K_star = at_min.K;
    out.margin = at_min.margin;

    double lo = k_min - 1, hi = k_min;
    while (hi - lo > 1e-6) {
        double mid = 0.5 * (lo + hi);
        if (best_K(sys, delta, mid, 0.0).margin > kStrictTolerance) hi = mid;
        else lo = mid;
    }
    out.k_cont = hi;
    out.c_val = (out.k_cont - 1.0) / delta;
    return out;
}

PropositionReport proposition_k_bound(int delta) {
    if (delta < 3) throw ContractError("proposition_k_bound: delta must be >= 3");
    PropositionReport rep;
    rep.k = static_cast<int>(std::ceil(kE * delta + 1));
    rep.K = 1.0 / delta;
    rep.at_eps_zero = basic_conditions(ConditionParams::make(delta, rep.k, rep.K, 0.0));
    rep.eps_max = max_feasible_eps(ConditionSystem::basic, delta, rep.k, rep.K);
    rep.f_bound_margin = kE * delta - (f_delta(delta, delta - 1) + delta - 1);
    rep.f_bound_ok = rep.f_bound_margin > 0;
    return rep;
}

const std::vector<SmallDeltaRow>& small_delta_reference() {
    static const std::vector<SmallDeltaRow> rows = {
        {3, 0.4124, 0.4251, 6},   {4, 0.2900, 0.2943, 8},   {5, 0.2224, 0.2244, 11},
        {6, 0.1814, 0.1826, 14},  {7, 0.1536, 0.1543, 17},  {8, 0.1334, 0.1339, 20},
        {9, 0.1179, 0.1183, 23},  {10, 0.1057, 0.1060, 26}, {11, 0.0959, 0.0961, 29},
        {12, 0.0877, 0.0879, 32}, {13, 0.0800, 0.0802, 35},
    };
    return rows;
}

const std::vector<GrowthRow>& growth_reference() {
    static const std::vector<GrowthRow> rows = {
        {3, 1.485, 6},   {4, 1.749, 8},   {5, 1.939, 11},  {6, 2.081, 14},  {7, 2.193, 17},
        {8, 2.283, 20},  {9, 2.357, 23},  {10, 2.419, 26}, {11, 2.472, 29}, {12, 2.517, 32},
    };
    return rows;
}

int reference_k_min(int delta) {
    for (const auto& row : small_delta_reference()) {
        if (row.delta == delta) return row.k;
    }
    return static_cast<int>(std::ceil(kE * delta + 1));
}

CertifiedPoint certify_point(int delta, double k, ConditionSystem sys) {
    double K = 0;
    for (const auto& row : small_delta_reference()) {
        if (sys == ConditionSystem::improved && row.delta == delta && row.k == k) {
            K = row.K;
            break;
        }
    }
    if (K == 0) {
        auto r = best_K(sys, delta, k, 0.0);
        if (!(r.margin > kStrictTolerance))
            throw SearchError("no feasible K at delta " + std::to_string(delta) + ", k " +
                              std::to_string(k));
        K = r.K;
    }
    CertifiedPoint cp;
    cp.system = sys;
    cp.eps_max = max_feasible_eps(sys, delta, k, K);
    cp.params = ConditionParams::make(delta, k, K, cp.eps_max);
    return cp;
}

} // namespace potts
