#include "potts/reports.hpp"

#include <cmath>
#include <sstream>

namespace potts {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

json complex_pair(cplx z) { return json::array({z.real(), z.imag()}); }
} // namespace

json exact_report(cplx z, const Graph& g, int k) {
    return json{{"Z", complex_pair(z)},
                {"n", g.vertex_count()},
                {"m", g.edge_count()},
                {"k", k}};
}

json poly_report(const CoeffVector& coeffs, const Graph& g, int k) {
    json n = json::array();
    for (const auto& c : coeffs.exact_coeffs()) n.push_back(c.to_string());
    return json{{"N", n}, {"n", g.vertex_count()}, {"m", g.edge_count()}, {"k", k}};
}

json condition_report_json(ConditionSystem sys, const ConditionParams& p,
                           const ConditionReport& rep) {
    json margins = json::array();
    for (const auto& m : rep.margins) {
        margins.push_back(json{{"name", m.name}, {"d", m.d}, {"margin", m.margin}});
    }
    return json{{"system", to_string(sys)},
                {"delta", p.delta},
                {"k", p.k},
                {"K", p.K},
                {"eps", p.eps},
                {"theta", p.theta},
                {"holds", rep.holds},
                {"binding_index", rep.binding_index},
                {"min_margin", rep.min_margin},
                {"margins", margins},
                {"reason", rep.reason}};
}

json approx_report(const ApproxResult& r) {
    return json{{"xi_re", r.xi.real()},
                {"xi_im", r.xi.imag()},
                {"log_xi", complex_pair(r.log_xi)},
                {"M", r.order},
                {"coeff_order", r.coeff_order},
                {"backend", to_string(r.backend)},
                {"tail_estimate", r.tail_estimate},
                {"tail_verified", r.tail_verified},
                {"region_check", r.region_check}};
}

json scan_report_json(const ScanReport& rep, const ScanOptions& opt) {
    json violations = json::array();
    for (const auto& v : rep.violations) {
        json ws = json::array();
        for (cplx w : v.weights) ws.push_back(complex_pair(w));
        violations.push_back(json{{"graph_n", v.graph.n},
                                  {"graph_code", v.graph.bits},
                                  {"weights", ws},
                                  {"normalized_modulus", v.normalized_modulus}});
    }
    return json{{"delta", opt.delta},
                {"k", opt.k},
                {"n_max", opt.n_max},
                {"samples_per_graph", rep.samples_per_graph},
                {"seed", opt.seed},
                {"graphs_tested", rep.graphs_tested},
                {"min_normalized_modulus", rep.min_normalized_modulus},
                {"worst_graph_n", rep.worst_graph.n},
                {"worst_graph_code", rep.worst_graph.bits},
                {"violations", violations},
                {"region", json{{"eps", rep.region.eps},
                                {"theta", rep.region.theta},
                                {"delta_disk", rep.region.delta_disk}}}};
}

json induction_report_json(const InductionScanReport& rep, const InductionScanOptions& opt) {
    return json{{"delta", opt.delta},
                {"k", opt.k},
                {"n_max", opt.n_max},
                {"draws", opt.draws},
                {"seed", opt.seed},
                {"system", to_string(opt.system)},
                {"graphs", rep.graphs},
                {"pair_instances", rep.pair_instances},
                {"colour_instances", rep.colour_instances},
                {"worst_angle_slack", rep.worst_angle_slack},
                {"worst_ratio_slack", rep.worst_ratio_slack},
                {"violations", rep.violations},
                {"params", json{{"K", rep.params.K},
                                {"theta", rep.params.theta},
                                {"eps", rep.params.eps}}}};
}

json root_locus_json(const std::vector<RootLocusEntry>& locus, const RegionSpec& region) {
    json roots = json::array();
    int inside = 0;
    for (const auto& e : locus) {
        roots.push_back(json{{"re", e.root.real()},
                             {"im", e.root.imag()},
                             {"in_region", e.in_region},
                             {"residual", e.residual}});
        if (e.in_region) ++inside;
    }
    return json{{"roots", roots},
                {"in_region_count", inside},
                {"region", json{{"eps", region.eps},
                                {"theta", region.theta},
                                {"delta_disk", region.delta_disk}}}};
}

std::vector<TableRow> regenerate_tables(int delta_min, int delta_max, ConditionSystem sys) {
    std::vector<TableRow> rows;
    for (int delta = delta_min; delta <= delta_max; ++delta) {
        TableRow row;
        row.delta = delta;
        row.system = to_string(sys);
        auto result = minimal_k(delta, sys);
        row.k_min = result.k_min;
        row.K_star = result.K_star;
        row.theta = std::asin(result.K_star);
        row.c_val = result.c_val;
        row.min_margin = result.margin;
        row.reference_k = reference_k_min(delta);
        row.k_matches = row.k_min == row.reference_k;
        for (const auto& ref : small_delta_reference()) {
            if (ref.delta != delta) continue;
            row.reference_K = ref.K;
            row.reference_theta = ref.theta;
            row.theta_gap = std::abs(ref.theta - std::asin(ref.K));
            if (sys == ConditionSystem::improved) {
                auto rep = check_system(sys, ConditionParams::make(delta, ref.k, ref.K, 0.0));
                row.reference_feasible = rep.holds;
                row.eps_max = max_feasible_eps(sys, delta, ref.k, ref.K);
            }
        }
        if (row.eps_max == 0 && row.k_min > 0)
            row.eps_max = max_feasible_eps(sys, delta, row.k_min, row.K_star);
        for (const auto& ref : growth_reference()) {
            if (ref.delta != delta) continue;
            row.reference_c = ref.c;
            row.c_matches = static_cast<int>(std::ceil(row.c_val * delta + 1 - 1e-12)) == ref.k &&
                            row.c_val <= ref.c + 0.01;
        }
        rows.push_back(row);
    }
    return rows;
}

json tables_json(const std::vector<TableRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        out.push_back(json{{"delta", r.delta},
                           {"system", r.system},
                           {"k_min", r.k_min},
                           {"K_star", r.K_star},
                           {"theta", r.theta},
                           {"c_val", r.c_val},
                           {"eps_max", r.eps_max},
                           {"margins", json::array({r.min_margin})},
                           {"reference_k", r.reference_k},
                           {"reference_c", r.reference_c},
                           {"reference_K", r.reference_K},
                           {"k_matches", r.k_matches},
                           {"c_matches", r.c_matches},
                           {"reference_feasible", r.reference_feasible},
                           {"theta_gap", r.theta_gap}});
    }
    return json{{"rows", out}};
}

std::string tables_text(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "delta  k_min  ref_k  ok   K_star   theta    c_val    ref_c   ok   eps_max    ref(K)"
          "  feasible  theta_gap\n";
    char line[256];
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line,
                      "%5d  %5d  %5d  %-3s  %7.4f  %7.4f  %7.4f  %6.3f  %-3s  %9.6f  %6.4f"
                      "  %-8s  %.2e\n",
                      r.delta, r.k_min, r.reference_k, r.k_matches ? "yes" : "NO", r.K_star,
                      r.theta, r.c_val, r.reference_c, r.reference_c == 0 ? "-"
                                                       : r.c_matches    ? "yes"
                                                                        : "NO",
                      r.eps_max, r.reference_K,
                      r.reference_K == 0 ? "-" : (r.reference_feasible ? "yes" : "NO"),
                      r.theta_gap);
        os << line;
    }
    return os.str();
}

std::string tables_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "delta,system,k_min,reference_k,k_matches,K_star,theta,c_val,reference_c,c_matches,"
          "eps_max,reference_K,reference_feasible,theta_gap\n";
    for (const auto& r : rows) {
        os << r.delta << ',' << r.system << ',' << r.k_min << ',' << r.reference_k << ','
           << (r.k_matches ? 1 : 0) << ',' << r.K_star << ',' << r.theta << ',' << r.c_val << ','
           << r.reference_c << ',' << (r.c_matches ? 1 : 0) << ',' << r.eps_max << ','
           << r.reference_K << ',' << (r.reference_feasible ? 1 : 0) << ',' << r.theta_gap
           << '\n';
    }
    return os.str();
}

std::string root_locus_csv(const std::vector<RootLocusEntry>& locus) {
    std::ostringstream os;
    os << "re,im,in_region\n";
    for (const auto& e : locus) {
        os << e.root.real() << ',' << e.root.imag() << ',' << (e.in_region ? 1 : 0) << '\n';
    }
    return os.str();
}

std::string region_boundary_csv(const RegionSpec& region, int samples_per_segment) {
    std::ostringstream os;
    os << "re,im,segment\n";
    auto emit = [&](cplx z, const char* segment) {
        os << z.real() << ',' << z.imag() << ',' << segment << '\n';
    };
    double half = region.eps * region.theta;
    // eps-disk arc outside the sector
    for (int i = 0; i <= samples_per_segment; ++i) {
        double a = half + (2 * kPi - 2 * half) * i / samples_per_segment;
        emit(std::polar(region.eps, a), "eps_disk");
    }
    // sector rays and unit arc
    for (int i = 0; i <= samples_per_segment; ++i) {
        double r = region.eps + (1.0 - region.eps) * i / samples_per_segment;
        emit(std::polar(r, half), "sector_upper");
        emit(std::polar(r, -half), "sector_lower");
    }
    for (int i = 0; i <= samples_per_segment; ++i) {
        double a = -half + 2 * half * i / samples_per_segment;
        emit(std::polar(1.0, a), "unit_arc");
    }
    for (int i = 0; i <= samples_per_segment; ++i) {
        double a = 2 * kPi * i / samples_per_segment;
        emit(1.0 + std::polar(region.delta_disk, a), "one_disk");
    }
    return os.str();
}

} // namespace potts
