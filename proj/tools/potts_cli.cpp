#include <complex>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "potts/errors.hpp"
#include "potts/reports.hpp"
#include "potts/roots.hpp"

using namespace potts;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

cplx parse_complex(const std::string& text) {
    std::size_t comma = text.find(',');
    try {
        if (comma == std::string::npos) return {std::stod(text), 0.0};
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ParseError("cannot parse complex value: " + text + " (want \"re\" or \"re,im\")");
    }
}

Boundary parse_boundary(const std::string& text) {
    Boundary b;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("boundary entries look like \"vertex=colour\"");
        b.vertices.push_back(std::stoi(item.substr(0, eq)));
        b.colours.push_back(std::stoi(item.substr(eq + 1)));
    }
    return b;
}

EdgeWeights load_weights(const Graph& g, const std::string& path, cplx fallback) {
    if (path.empty()) return EdgeWeights::uniform(g, fallback);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open weight file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_weights(g, buf.str(), fallback);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    out << content;
}

RegionSpec region_for(int delta, int k, double eps_override, double K_override,
                      double delta_disk_override) {
    if (eps_override > 0 && K_override > 0) {
        RegionSpec r{delta, eps_override, std::asin(K_override),
                     delta_disk_override > 0 ? delta_disk_override : default_one_disk_radius(delta)};
        r.validate();
        return r;
    }
    RegionSpec r = certified_region(delta, k, ConditionSystem::improved, delta_disk_override);
    if (eps_override > 0) r.eps = eps_override;
    return r;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"anti-ferromagnetic Potts partition function toolkit"};
    app.require_subcommand(1);

    std::string graph_path, weights_path, out_path, boundary_text, format = "json";
    std::string w_text = "0", q_text = "0", v_text = "0", system_text = "improved";
    std::string backend_text = "cluster", model = "potts";
    int k = 6, delta = 3, n_max = 6, samples = 200, draws = 50, max_boundary = 3;
    int order = 0, map_degree = 8, delta_min = 3, delta_max = 13;
    int cap_free = 16, cap_edges = 24;
    double K = 0, eps = 0, eps_acc = 0.01, rho = 0.7, delta_disk = 0, delta_prime = 0.05;
    bool poly = false, weak = false, strict_region = false, all_graphs = false;
    std::uint64_t seed = 1;

    auto add_caps = [&](CLI::App* cmd) {
        cmd->add_option("--cap-n", cap_free, "colouring enumeration cap (free vertices)");
        cmd->add_option("--cap-m", cap_edges, "edge subset enumeration cap");
    };

    auto* exact = app.add_subcommand("exact", "evaluate a partition function by enumeration");
    exact->add_option("--graph", graph_path, "edge-list file")->required();
    exact->add_option("--k", k, "number of colours")->required();
    exact->add_option("--w", w_text, "uniform edge weight, re[,im]");
    exact->add_option("--weights", weights_path, "per-edge weight file (u v re im)");
    exact->add_option("--boundary", boundary_text, "fixed vertices, e.g. 0=1,3=2");
    exact->add_option("--model", model, "potts | rc")->check(CLI::IsMember({"potts", "rc"}));
    exact->add_option("--q", q_text, "random-cluster q, re[,im]");
    exact->add_option("--v", v_text, "random-cluster uniform v, re[,im]");
    exact->add_flag("--poly", poly, "emit exact weight-polynomial coefficients");
    add_caps(exact);

    auto* approx = app.add_subcommand("approx", "interpolation approximation of Z(G;k,w)");
    approx->add_option("--graph", graph_path)->required();
    approx->add_option("--k", k)->required();
    approx->add_option("--w", w_text, "evaluation point in [0,1], re[,im]");
    approx->add_option("--eps", eps_acc, "multiplicative accuracy target");
    approx->add_option("--order", order, "coefficient order cap (0 = all)");
    approx->add_option("--rho", rho, "disk-map sharpness");
    approx->add_option("--map-degree", map_degree, "disk-map degree");
    approx->add_option("--backend", backend_text, "subset | cluster")
        ->check(CLI::IsMember({"subset", "cluster"}));
    approx->add_option("--delta", delta_disk, "radius of the disk around 1");
    approx->add_option("--delta-prime", delta_prime, "boundary-check radius excess");
    approx->add_option("--max-degree", delta, "region degree (default: graph's)");
    approx->add_flag("--strict-region", strict_region, "fail if the disk map escapes the region");
    add_caps(approx);

    auto* check = app.add_subcommand("check", "evaluate a zero-freeness condition system");
    check->add_option("--system", system_text, "basic | closed | improved")
        ->check(CLI::IsMember({"basic", "closed", "improved"}));
    check->add_option("--delta", delta, "maximum degree")->required();
    check->add_option("--k", k, "number of colours")->required();
    check->add_option("--K", K, "ratio-disk radius")->required();
    check->add_option("--eps", eps, "weight-region parameter");
    check->add_flag("--weak", weak, "accept margins that are merely nonnegative");

    auto* tables = app.add_subcommand("tables", "regenerate the bound tables and diff them");
    tables->add_option("--delta-min", delta_min);
    tables->add_option("--delta-max", delta_max);
    tables->add_option("--system", system_text)
        ->check(CLI::IsMember({"basic", "closed", "improved"}));
    tables->add_option("--format", format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* scan = app.add_subcommand("scan", "zero-free scan over enumerated graphs");
    scan->add_option("--delta", delta)->required();
    scan->add_option("--k", k)->required();
    scan->add_option("--nmax", n_max, "largest vertex count");
    scan->add_option("--samples", samples, "weight draws per graph");
    scan->add_option("--seed", seed);
    scan->add_option("--eps", eps, "region eps override");
    scan->add_option("--K", K, "region K override");
    scan->add_option("--delta-disk", delta_disk, "radius of the disk around 1");
    scan->add_flag("--all-graphs", all_graphs, "include disconnected graphs");

    auto* roots = app.add_subcommand("roots", "weight-polynomial roots with region flags");
    roots->add_option("--graph", graph_path)->required();
    roots->add_option("--k", k)->required();
    roots->add_option("--max-degree", delta, "region degree (default: graph's)");
    roots->add_option("--eps", eps, "region eps override");
    roots->add_option("--K", K, "region K override");
    roots->add_option("--delta-disk", delta_disk, "radius of the disk around 1");
    roots->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    roots->add_option("--boundary-csv", out_path, "also write the region boundary polyline");
    add_caps(roots);

    auto* induction = app.add_subcommand("induction-check",
                                         "leaf-boundary invariant sweep over enumerated graphs");
    induction->add_option("--delta", delta)->required();
    induction->add_option("--k", k)->required();
    induction->add_option("--nmax", n_max);
    induction->add_option("--draws", draws, "weight draws per graph");
    induction->add_option("--max-boundary", max_boundary, "largest fixed-set size");
    induction->add_option("--seed", seed);
    induction->add_option("--system", system_text)
        ->check(CLI::IsMember({"basic", "closed", "improved"}));

    CLI11_PARSE(app, argc, argv);

    try {
        EvalCaps caps{cap_free, cap_edges};

        if (*exact) {
            Graph g = load_graph_file(graph_path);
            if (model == "rc") {
                cplx z = random_cluster_exact(g, parse_complex(q_text),
                                              load_weights(g, weights_path, parse_complex(v_text)),
                                              caps);
                json rep = exact_report(z, g, k);
                rep["model"] = "random-cluster";
                std::cout << rep.dump(2) << "\n";
                return kExitOk;
            }
            if (poly) {
                std::cout << poly_report(potts_poly_in_w(g, k, caps), g, k).dump(2) << "\n";
                return kExitOk;
            }
            EdgeWeights w = load_weights(g, weights_path, parse_complex(w_text));
            cplx z = boundary_text.empty()
                         ? potts_exact(g, k, w, caps)
                         : potts_restricted(g, k, w, parse_boundary(boundary_text), caps);
            std::cout << exact_report(z, g, k).dump(2) << "\n";
            return kExitOk;
        }

        if (*approx) {
            Graph g = load_graph_file(graph_path);
            InterpolationPlan plan;
            plan.order = order;
            plan.rho = rho;
            plan.map_degree = map_degree;
            plan.backend = coeff_backend_from_string(backend_text);
            plan.delta_prime = delta_prime;
            plan.strict_region = strict_region;
            int region_delta = std::max({3, delta, max_degree(g)});
            plan.region = certified_region(region_delta, k, ConditionSystem::improved, delta_disk);
            auto r = approx_Z(g, k, parse_complex(w_text), eps_acc, plan, caps);
            std::cout << approx_report(r).dump(2) << "\n";
            return kExitOk;
        }

        if (*check) {
            auto sys = condition_system_from_string(system_text);
            auto p = ConditionParams::make(delta, k, K, eps);
            auto rep = check_system(sys, p, weak);
            std::cout << condition_report_json(sys, p, rep).dump(2) << "\n";
            return rep.holds ? kExitOk : kExitVerification;
        }

        if (*tables) {
            auto rows = regenerate_tables(delta_min, delta_max,
                                          condition_system_from_string(system_text));
            if (format == "json") std::cout << tables_json(rows).dump(2) << "\n";
            else if (format == "csv") std::cout << tables_csv(rows);
            else std::cout << tables_text(rows);
            for (const auto& r : rows) {
                bool row_ok = r.k_matches && (r.reference_c == 0 || r.c_matches) &&
                              (r.reference_K == 0 || r.reference_feasible);
                if (!row_ok) {
                    std::cerr << "mismatch at delta " << r.delta << "\n";
                    return kExitVerification;
                }
            }
            return kExitOk;
        }

        if (*scan) {
            ScanOptions opt;
            opt.delta = delta;
            opt.k = k;
            opt.n_max = n_max;
            opt.samples_per_graph = samples;
            opt.seed = seed;
            opt.connected_only = !all_graphs;
            if (K > 0 && eps > 0) opt.region = region_for(delta, k, eps, K, delta_disk);
            else if (delta_disk > 0 || eps > 0) opt.region = region_for(delta, k, eps, 0, delta_disk);
            auto rep = zero_free_scan(opt);
            std::cout << scan_report_json(rep, opt).dump(2) << "\n";
            return rep.violations.empty() ? kExitOk : kExitVerification;
        }

        if (*roots) {
            Graph g = load_graph_file(graph_path);
            int region_delta = std::max({3, delta, max_degree(g)});
            RegionSpec region = region_for(region_delta, k, eps, K, delta_disk);
            auto locus = root_locus(g, k, region, caps);
            if (!out_path.empty()) write_file(out_path, region_boundary_csv(region));
            if (format == "json") std::cout << root_locus_json(locus, region).dump(2) << "\n";
            else std::cout << root_locus_csv(locus);
            for (const auto& e : locus) {
                if (e.in_region) return kExitVerification;
            }
            return kExitOk;
        }

        if (*induction) {
            InductionScanOptions opt;
            opt.delta = delta;
            opt.k = k;
            opt.n_max = n_max;
            opt.draws = draws;
            opt.max_boundary = max_boundary;
            opt.seed = seed;
            opt.system = condition_system_from_string(system_text);
            auto rep = induction_scan(opt);
            std::cout << induction_report_json(rep, opt).dump(2) << "\n";
            return rep.violations.empty() ? kExitOk : kExitVerification;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
