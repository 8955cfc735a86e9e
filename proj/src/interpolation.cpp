#include "potts/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "potts/errors.hpp"

namespace potts {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
} // namespace

bool RegionSpec::contains(cplx w) const {
    if (std::abs(w) <= eps) return true;
    if (std::abs(std::arg(w)) <= eps * theta && std::abs(w) <= 1.0) return true;
    if (std::abs(1.0 - w) < delta_disk) return true;
    return false;
}

void RegionSpec::validate() const {
    if (delta < 3) throw ContractError("RegionSpec: delta must be >= 3");
    if (!(eps > 0.0 && eps < 1.0)) throw ContractError("RegionSpec: eps must lie in (0,1)");
    if (!(theta > 0.0)) throw ContractError("RegionSpec: theta must be positive");
    if (!(delta_disk > 0.0)) throw ContractError("RegionSpec: delta_disk must be positive");
}

bool region_contains(const RegionSpec& r, cplx w) { return r.contains(w); }

double default_one_disk_radius(int delta) {
    if (delta < 3) throw ContractError("default_one_disk_radius: delta must be >= 3");
    if (delta == 3) return 0.18;
    if (delta == 4) return 0.13;
    return 0.52 / delta;
}

RegionSpec certified_region(int delta, int k, ConditionSystem sys, double delta_disk_override) {
    CertifiedPoint cp = certify_point(delta, k, sys);
    RegionSpec r;
    r.delta = delta;
    r.eps = cp.eps_max;
    r.theta = cp.params.theta;
    r.delta_disk = delta_disk_override > 0 ? delta_disk_override : default_one_disk_radius(delta);
    r.validate();
    return r;
}

std::string to_string(CoeffBackend b) {
    return b == CoeffBackend::subset_enumeration ? "subset" : "cluster";
}

CoeffBackend coeff_backend_from_string(const std::string& s) {
    if (s == "subset") return CoeffBackend::subset_enumeration;
    if (s == "cluster") return CoeffBackend::connected_cluster;
    throw ParseError("unknown coefficient backend: " + s);
}

namespace {

std::vector<BigUint> subset_backend(const Graph& g, int k, int M) {
    int n = g.vertex_count();
    int m = g.edge_count();
    std::vector<BigUint> kpow(n + 1);
    for (int c = 0; c <= n; ++c) kpow[c] = BigUint::pow(static_cast<std::uint64_t>(k), c);
    std::vector<BigUint> e(M + 1);
    std::vector<int> parent(n);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        int size = __builtin_popcountll(mask);
        if (size > M) continue;
        for (int i = 0; i < n; ++i) parent[i] = i;
        int components = n;
        for (int ei = 0; ei < m; ++ei) {
            if (mask >> ei & 1) {
                int a = find(g.edges()[ei].first), b = find(g.edges()[ei].second);
                if (a != b) {
                    parent[a] = b;
                    --components;
                }
            }
        }
        e[size] += kpow[components];
    }
    return e;
}

// Connected edge sets, each emitted exactly once: anchored at their
// minimum-index edge, grown through an extension list in index order.
// Skipped extension edges stay excluded for the rest of that branch.
struct ClusterEnumerator {
    const Graph& g;
    int M;
    std::vector<char> blocked;
    std::vector<int> cluster_edges;
    std::uint64_t vmask = 0;
    // per (vertex mask, size): number of connected edge sets
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> counts;

    ClusterEnumerator(const Graph& gr, int order_cap) : g(gr), M(order_cap) {}

    void record() {
        auto& per_size = counts[vmask];
        if (per_size.empty()) per_size.assign(M + 1, 0);
        ++per_size[cluster_edges.size()];
    }

    std::uint64_t vertex_bit(int v) const { return 1ULL << v; }

    void grow(std::vector<int> ext) {
        record();
        if (static_cast<int>(cluster_edges.size()) == M) return;
        for (std::size_t i = 0; i < ext.size(); ++i) {
            int e = ext[i];
            auto [a, ab] = g.edges()[e];
            cluster_edges.push_back(e);
            std::uint64_t added_bits = (vertex_bit(a) | vertex_bit(ab)) & ~vmask;
            vmask |= added_bits;
            std::vector<int> next(ext.begin() + i + 1, ext.end());
            std::vector<int> fresh;
            for (int v : {a, ab}) {
                if (!(added_bits & vertex_bit(v))) continue;
                for (auto [nb, f] : g.neighbours(v)) {
                    (void)nb;
                    if (!blocked[f]) {
                        blocked[f] = 1;
                        fresh.push_back(f);
                        next.push_back(f);
                    }
                }
            }
            grow(std::move(next));
            for (int f : fresh) blocked[f] = 0;
            vmask &= ~added_bits;
            cluster_edges.pop_back();
        }
    }

    void run() {
        int m = g.edge_count();
        for (int anchor = 0; anchor < m; ++anchor) {
            blocked.assign(m, 0);
            for (int e = 0; e <= anchor; ++e) blocked[e] = 1;
            auto [a, b] = g.edges()[anchor];
            cluster_edges = {anchor};
            vmask = vertex_bit(a) | vertex_bit(b);
            std::vector<int> ext;
            for (int v : {a, b}) {
                for (auto [nb, f] : g.neighbours(v)) {
                    (void)nb;
                    if (!blocked[f]) {
                        blocked[f] = 1;
                        ext.push_back(f);
                    }
                }
            }
            grow(std::move(ext));
        }
    }
};

std::vector<BigUint> cluster_backend(const Graph& g, int k, int M) {
    int n = g.vertex_count();
    if (n > 16)
        throw SizeError("connected-cluster backend keeps a table over vertex subsets; "
                        "limited to 16 vertices");
    if (M > 0) {
        ClusterEnumerator enumerator(g, M);
        enumerator.run();

        // Disjoint unions: dp[U][m] = sum over collections of vertex-disjoint
        // clusters with union U and m edges of k^(cluster count). The lowest
        // vertex of U picks out a unique member cluster, which bounds the
        // recursion to strict submasks.
        std::vector<std::vector<BigUint>> dp(1ULL << n);
        dp[0].assign(M + 1, BigUint());
        dp[0][0] = BigUint(1);
        for (std::uint64_t U = 1; U < (1ULL << n); ++U) {
            auto& row = dp[U];
            row.assign(M + 1, BigUint());
            std::uint64_t low = U & (~U + 1);
            for (std::uint64_t sub = U; sub; sub = (sub - 1) & U) {
                if (!(sub & low)) continue;
                auto it = enumerator.counts.find(sub);
                if (it == enumerator.counts.end()) continue;
                const auto& rest = dp[U & ~sub];
                for (int s = 1; s <= M; ++s) {
                    std::uint64_t cnt = it->second[s];
                    if (!cnt) continue;
                    for (int r = 0; s + r <= M; ++r) {
                        if (rest[r].is_zero()) continue;
                        BigUint term = rest[r];
                        term.mul_u64(cnt);
                        term.mul_u64(static_cast<std::uint64_t>(k));
                        row[s + r] += term;
                    }
                }
            }
        }
        std::vector<BigUint> e(M + 1);
        for (std::uint64_t U = 0; U < (1ULL << n); ++U) {
            if (dp[U].empty()) continue;
            int isolated = n - __builtin_popcountll(U);
            for (int s = 0; s <= M; ++s) {
                if (dp[U][s].is_zero()) continue;
                BigUint term = dp[U][s];
                for (int c = 0; c < isolated; ++c) term.mul_u64(static_cast<std::uint64_t>(k));
                e[s] += term;
            }
        }
        return e;
    }
    std::vector<BigUint> e(1);
    e[0] = BigUint::pow(static_cast<std::uint64_t>(k), n);
    return e;
}

} // namespace

std::vector<BigUint> edge_subset_sums(const Graph& g, int k, int M, CoeffBackend backend,
                                      const EvalCaps& caps) {
    if (k < 1) throw ContractError("edge_subset_sums: k must be >= 1");
    int m = g.edge_count();
    if (M < 0 || M > m) throw ContractError("edge_subset_sums: order must lie in [0, edge count]");
    if (m > caps.max_edges)
        throw SizeError("edge-subset sums over " + std::to_string(m) + " edges exceed cap " +
                        std::to_string(caps.max_edges));
    if (g.vertex_count() > 63)
        throw SizeError("edge_subset_sums: vertex masks limited to 63 vertices");
    return backend == CoeffBackend::subset_enumeration ? subset_backend(g, k, M)
                                                       : cluster_backend(g, k, M);
}

std::vector<cplx> q_coefficients(const Graph& g, int k, cplx w, int M, CoeffBackend backend,
                                 const EvalCaps& caps) {
    auto e = edge_subset_sums(g, k, M, backend, caps);
    std::vector<cplx> a(e.size());
    cplx shift = w - 1.0;
    cplx power = 1.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        a[i] = power * e[i].to_double();
        power *= shift;
    }
    return a;
}

std::vector<double> disk_map(double rho, int N) {
    if (!(rho > 0.0 && rho < 1.0)) throw ContractError("disk_map: rho must lie in (0,1)");
    if (N < 1) throw ContractError("disk_map: degree must be >= 1");
    std::vector<double> p(N + 1, 0.0);
    double norm = 0.0;
    double rp = 1.0;
    for (int j = 1; j <= N; ++j) {
        rp *= rho;
        p[j] = rp / j;
        norm += p[j];
    }
    for (int j = 1; j <= N; ++j) p[j] /= norm; // p(1) = 1 exactly up to this division
    return p;
}

namespace {

cplx eval_real_poly(const std::vector<double>& p, cplx z) {
    cplx acc = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
    return acc;
}

} // namespace

std::optional<EscapeSample> disk_map_escape(const std::vector<double>& p, const RegionSpec& region,
                                            cplx w, double delta_prime, int samples) {
    if (samples < 8) throw ContractError("disk_map_escape: need at least 8 samples");
    double radius = 1.0 + delta_prime;
    for (int i = 0; i < samples; ++i) {
        cplx z = std::polar(radius, 2.0 * kPi * i / samples);
        cplx image = 1.0 + eval_real_poly(p, z) * (w - 1.0);
        if (!region.contains(image)) return EscapeSample{z, image};
    }
    return std::nullopt;
}

std::vector<cplx> compose_truncate(const std::vector<cplx>& q, const std::vector<double>& p,
                                   int M) {
    if (p.empty() || p[0] != 0.0)
        throw ContractError("compose_truncate: map must have zero constant term");
    if (M < 0) throw ContractError("compose_truncate: M must be nonnegative");
    if (q.empty()) throw ContractError("compose_truncate: q must be nonempty");
    // Horner over truncated polynomial products.
    std::vector<cplx> acc(1, q.back());
    for (std::size_t j = q.size() - 1; j-- > 0;) {
        std::vector<cplx> next(std::min<std::size_t>(M + 1, acc.size() + p.size() - 1), 0.0);
        for (std::size_t s = 0; s < acc.size(); ++s) {
            if (acc[s] == cplx{}) continue;
            for (std::size_t t = 1; t < p.size() && s + t <= static_cast<std::size_t>(M); ++t) {
                next[s + t] += acc[s] * p[t];
            }
        }
        next[0] = q[j];
        acc = std::move(next);
    }
    acc.resize(M + 1, 0.0);
    return acc;
}

std::vector<cplx> log_taylor(const std::vector<cplx>& b, int M) {
    if (b.empty() || b[0] == cplx{}) throw ContractError("log_taylor: b_0 must be nonzero");
    if (M < 0) throw ContractError("log_taylor: M must be nonnegative");
    std::vector<cplx> c(M + 1, 0.0);
    auto ratio = [&](int i) { return i < static_cast<int>(b.size()) ? b[i] / b[0] : cplx{}; };
    for (int m = 1; m <= M; ++m) {
        cplx s = static_cast<double>(m) * ratio(m);
        for (int j = 1; j < m; ++j) s -= static_cast<double>(j) * c[j] * ratio(m - j);
        c[m] = s / static_cast<double>(m);
    }
    return c;
}

std::vector<cplx> exp_from_log(const std::vector<cplx>& c, int M) {
    std::vector<cplx> b(M + 1, 0.0);
    b[0] = 1.0;
    auto coef = [&](int i) { return i < static_cast<int>(c.size()) ? c[i] : cplx{}; };
    for (int m = 1; m <= M; ++m) {
        cplx s = 0.0;
        for (int j = 1; j <= m; ++j) s += static_cast<double>(j) * coef(j) * b[m - j];
        b[m] = s / static_cast<double>(m);
    }
    return b;
}

InterpolationPlan default_plan(int delta, int k) {
    InterpolationPlan plan;
    plan.region = certified_region(delta, k);
    return plan;
}

ApproxResult approx_Z(const Graph& g, int k, cplx w, double eps_acc,
                      const InterpolationPlan& plan, const EvalCaps& caps) {
    plan.region.validate();
    if (max_degree(g) > plan.region.delta)
        throw ContractError("approx_Z: graph degree exceeds the plan's region degree");
    if (k < reference_k_min(plan.region.delta))
        throw ContractError("approx_Z: k below the colour bound for this degree");
    if (!plan.region.contains(w)) throw ContractError("approx_Z: w outside the region");
    if (!(eps_acc > 0)) throw ContractError("approx_Z: accuracy target must be positive");

    ApproxResult res;
    res.backend = plan.backend;
    int m = g.edge_count();
    int coeff_order = plan.order > 0 ? std::min(plan.order, m) : m;
    res.coeff_order = coeff_order;

    auto p = disk_map(plan.rho, plan.map_degree);
    auto escape = disk_map_escape(p, plan.region, w, plan.delta_prime, plan.boundary_samples);
    res.region_check = !escape.has_value();
    if (escape && plan.strict_region) {
        throw ConfigError("disk map escapes the region at z = " + std::to_string(escape->z.real()) +
                          (escape->z.imag() < 0 ? "" : "+") + std::to_string(escape->z.imag()) +
                          "i");
    }

    if (m == 0) {
        res.xi = std::pow(static_cast<double>(k), g.vertex_count());
        res.log_xi = std::log(res.xi);
        res.order = 0;
        res.tail_verified = true;
        return res;
    }

    auto a = q_coefficients(g, k, w, coeff_order, plan.backend, caps);
    // With every coefficient of q in hand the composition is a complete
    // polynomial and the log series may run past the edge count; with a
    // truncated q the series is only trustworthy up to the same order.
    bool full_q = coeff_order == m;
    int series_cap = full_q
                         ? std::max(256, 4 * coeff_order * plan.map_degree)
                         : coeff_order;
    auto b = compose_truncate(a, p, full_q ? coeff_order * plan.map_degree : coeff_order);
    auto c = log_taylor(b, series_cap);

    double threshold = eps_acc / 10.0;
    int order = series_cap;
    res.tail_verified = false;
    for (int M = std::min(3, series_cap); M <= series_cap; ++M) {
        bool small_tail = true;
        for (int j = std::max(1, M - 2); j <= M; ++j) {
            if (std::abs(c[j]) >= threshold) small_tail = false;
        }
        if (small_tail) {
            order = M;
            res.tail_verified = true;
            break;
        }
    }
    res.order = order;
    res.term_magnitudes.resize(order);
    for (int i = 1; i <= order; ++i) res.term_magnitudes[i - 1] = std::abs(c[i]);
    cplx log_sum = 0.0;
    for (int i = 1; i <= order; ++i) log_sum += c[i];
    // Magnitude mass of the computed series beyond M, floored by the last
    // computed term; non-increasing in M by construction.
    res.tail_estimate = std::abs(c[series_cap]);
    for (int j = order + 1; j <= series_cap; ++j) res.tail_estimate += std::abs(c[j]);
    res.log_xi = std::log(b[0]) + log_sum;
    res.xi = b[0] * std::exp(log_sum);
    return res;
}

} // namespace potts
