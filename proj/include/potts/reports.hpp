#pragma once

#include <string>

#include <json.hpp>

#include "potts/conditions.hpp"
#include "potts/harness.hpp"
#include "potts/interpolation.hpp"

namespace potts {

using json = nlohmann::json;

json exact_report(cplx z, const Graph& g, int k);
json poly_report(const CoeffVector& coeffs, const Graph& g, int k);
json condition_report_json(ConditionSystem sys, const ConditionParams& p,
                           const ConditionReport& rep);
json approx_report(const ApproxResult& r);
json scan_report_json(const ScanReport& rep, const ScanOptions& opt);
json induction_report_json(const InductionScanReport& rep, const InductionScanOptions& opt);
json root_locus_json(const std::vector<RootLocusEntry>& locus, const RegionSpec& region);

/// One row per degree: the regenerated bounds next to the published ones.
struct TableRow {
    int delta = 0;
    std::string system;
    int k_min = 0;
    double K_star = 0;
    double theta = 0;
    double c_val = 0;
    double eps_max = 0;        // at the reference K when one exists, else at K_star
    double min_margin = 0;     // reference-point margin at eps = 0
    int reference_k = 0;
    double reference_c = 0;    // 0 when the continuous reference stops earlier
    double reference_K = 0;    // 0 beyond the published range
    double reference_theta = 0;
    bool k_matches = false;
    bool c_matches = false;         // ceil(c*delta+1) equals the bound, c within 0.01
    bool reference_feasible = false; // published (K,theta) row passes at eps = 0
    double theta_gap = 0;           // |theta_published - asin(K_published)|
};

std::vector<TableRow> regenerate_tables(int delta_min, int delta_max, ConditionSystem sys);
json tables_json(const std::vector<TableRow>& rows);
std::string tables_text(const std::vector<TableRow>& rows);
std::string tables_csv(const std::vector<TableRow>& rows);

std::string root_locus_csv(const std::vector<RootLocusEntry>& locus);

/// Piecewise boundary of the weight region as "re,im,segment" lines, for
/// external plotting.
std::string region_boundary_csv(const RegionSpec& region, int samples_per_segment = 200);

} // namespace potts
