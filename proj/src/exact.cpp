#include "potts/exact.hpp"

#include <algorithm>
#include <cmath>

#include "potts/errors.hpp"

namespace potts {

CoeffVector CoeffVector::from_exact(std::vector<BigUint> coeffs) {
    CoeffVector c;
    c.exact_ = true;
    c.values_.reserve(coeffs.size());
    for (const auto& x : coeffs) c.values_.push_back(x.to_double());
    c.ints_ = std::move(coeffs);
    return c;
}

CoeffVector CoeffVector::from_complex(std::vector<cplx> coeffs) {
    CoeffVector c;
    c.exact_ = false;
    c.values_ = std::move(coeffs);
    return c;
}

const std::vector<BigUint>& CoeffVector::exact_coeffs() const {
    if (!exact_) throw ContractError("CoeffVector: no exact coefficients");
    return ints_;
}

cplx CoeffVector::eval(cplx z) const {
    cplx acc = 0.0;
    for (std::size_t i = values_.size(); i-- > 0;) acc = acc * z + values_[i];
    return acc;
}

namespace {

struct Kahan {
    cplx sum{0.0, 0.0};
    cplx comp{0.0, 0.0};
    void add(cplx x) {
        cplx y = x - comp;
        cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// Edges from a vertex to vertices assigned before it in the enumeration
// order (boundary vertices count as assigned from the start).
struct EnumPlan {
    std::vector<int> order;                              // free vertices, enumeration order
    std::vector<std::vector<std::pair<int, int>>> prior; // per order slot: (neighbour, edge)
    cplx base{1.0, 0.0};                                 // fixed-fixed monochromatic edges
};

EnumPlan make_plan(const Graph& g, const EdgeWeights& w, const Boundary& b, int skip_vertex = -1) {
    EnumPlan plan;
    int n = g.vertex_count();
    std::vector<char> fixed(n, 0);
    for (int v : b.vertices) fixed[v] = 1;
    for (int v = 0; v < n; ++v) {
        if (!fixed[v] && v != skip_vertex) plan.order.push_back(v);
    }
    std::vector<int> slot(n, -1);
    for (std::size_t i = 0; i < plan.order.size(); ++i) slot[plan.order[i]] = static_cast<int>(i);
    plan.prior.resize(plan.order.size());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        if (u == skip_vertex || v == skip_vertex) continue;
        bool fu = fixed[u], fv = fixed[v];
        if (fu && fv) {
            if (b.colour_of(u) == b.colour_of(v)) plan.base *= w[e];
        } else if (fu || fv) {
            int free_end = fu ? v : u;
            plan.prior[slot[free_end]].push_back({fu ? u : v, e});
        } else {
            int later = slot[u] > slot[v] ? u : v;
            plan.prior[slot[later]].push_back({later == u ? v : u, e});
        }
    }
    return plan;
}

void check_enum_cap(std::size_t free_count, const EvalCaps& caps) {
    if (static_cast<int>(free_count) > caps.max_free_vertices)
        throw SizeError("colouring enumeration over " + std::to_string(free_count) +
                        " free vertices exceeds cap " + std::to_string(caps.max_free_vertices));
}

// Depth-first walk over colourings of plan.order, carrying the partial
// product of monochromatic edge weights; leaf() sees the full product.
template <typename Leaf>
void walk_colourings(int k, const EdgeWeights& w, const EnumPlan& plan,
                     std::vector<int>& colour, Leaf&& leaf) {
    int depth_count = static_cast<int>(plan.order.size());
    std::vector<cplx> partial(depth_count + 1);
    partial[0] = plan.base;
    std::vector<int> choice(depth_count, 0);
    int d = 0;
    while (d >= 0) {
        if (d == depth_count) {
            leaf(partial[d]);
            --d;
            continue;
        }
        int c = ++choice[d];
        if (c > k) {
            choice[d] = 0;
            --d;
            continue;
        }
        int v = plan.order[d];
        colour[v] = c;
        cplx prod = partial[d];
        for (auto [nb, e] : plan.prior[d]) {
            if (colour[nb] == c) prod *= w[e];
        }
        partial[d + 1] = prod;
        ++d;
    }
}

} // namespace

cplx potts_exact(const Graph& g, int k, const EdgeWeights& w, const EvalCaps& caps) {
    if (k < 1) throw ContractError("potts_exact: k must be >= 1");
    return potts_restricted(g, k, w, Boundary{}, caps);
}

cplx potts_exact(const Graph& g, int k, cplx w, const EvalCaps& caps) {
    return potts_exact(g, k, EdgeWeights::uniform(g, w), caps);
}

cplx potts_restricted(const Graph& g, int k, const EdgeWeights& w, const Boundary& b,
                      const EvalCaps& caps) {
    if (k < 1) throw ContractError("potts_restricted: k must be >= 1");
    b.validate(g, k);
    EnumPlan plan = make_plan(g, w, b);
    check_enum_cap(plan.order.size(), caps);
    std::vector<int> colour(g.vertex_count(), 0);
    for (std::size_t i = 0; i < b.vertices.size(); ++i) colour[b.vertices[i]] = b.colours[i];
    Kahan acc;
    walk_colourings(k, w, plan, colour, [&](cplx leaf) { acc.add(leaf); });
    return acc.sum;
}

std::vector<cplx> restricted_colour_vector(const Graph& g, int k, const EdgeWeights& w,
                                           const Boundary& b, int u, const EvalCaps& caps) {
    if (k < 1) throw ContractError("restricted_colour_vector: k must be >= 1");
    b.validate(g, k);
    if (b.colour_of(u) != 0) throw ContractError("restricted_colour_vector: u already fixed");
    EnumPlan plan = make_plan(g, w, b, u);
    check_enum_cap(plan.order.size() + 1, caps);
    std::vector<int> colour(g.vertex_count(), 0);
    for (std::size_t i = 0; i < b.vertices.size(); ++i) colour[b.vertices[i]] = b.colours[i];

    // Factors contributed by u's edges, per colour of u, derived at every
    // leaf from the neighbour colours (colour[] holds boundary values too).
    std::vector<std::pair<int, int>> u_edges; // (neighbour, edge)
    for (auto [nb, e] : g.neighbours(u)) u_edges.push_back({nb, e});

    std::vector<Kahan> acc(k + 1);
    walk_colourings(k, w, plan, colour, [&](cplx leaf) {
        for (int c = 1; c <= k; ++c) {
            cplx prod = leaf;
            for (auto [nb, e] : u_edges) {
                if (colour[nb] == c) prod *= w[e];
            }
            acc[c].add(prod);
        }
    });
    std::vector<cplx> out(k);
    for (int c = 1; c <= k; ++c) out[c - 1] = acc[c].sum;
    return out;
}

cplx random_cluster_exact(const Graph& g, cplx q, const EdgeWeights& v, const EvalCaps& caps) {
    int m = g.edge_count();
    if (m > caps.max_edges)
        throw SizeError("edge-subset enumeration over " + std::to_string(m) +
                        " edges exceeds cap " + std::to_string(caps.max_edges));
    int n = g.vertex_count();
    std::vector<cplx> qpow(n + 1);
    qpow[0] = 1.0;
    for (int i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * q;

    std::vector<int> parent(n);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    Kahan acc;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        for (int i = 0; i < n; ++i) parent[i] = i;
        int components = n;
        cplx prod = 1.0;
        for (int e = 0; e < m; ++e) {
            if (mask >> e & 1) {
                prod *= v[e];
                int a = find(g.edges()[e].first), b = find(g.edges()[e].second);
                if (a != b) {
                    parent[a] = b;
                    --components;
                }
            }
        }
        acc.add(qpow[components] * prod);
    }
    return acc.sum;
}

cplx random_cluster_exact(const Graph& g, cplx q, cplx v, const EvalCaps& caps) {
    return random_cluster_exact(g, q, EdgeWeights::uniform(g, v), caps);
}

CoeffVector potts_poly_in_w(const Graph& g, int k, const EvalCaps& caps) {
    if (k < 1) throw ContractError("potts_poly_in_w: k must be >= 1");
    int n = g.vertex_count();
    int m = g.edge_count();
    check_enum_cap(n, caps);
    if (n > 0 && (n - 1) * std::log2(static_cast<double>(k)) > 120.0)
        throw SizeError("potts_poly_in_w: k^n exceeds the exact counter range");
    if (n == 0) return CoeffVector::from_exact({BigUint(1)});

    // Colour permutations preserve the set of monochromatic edges, so the
    // counts split evenly over the colour of vertex 0: enumerate with
    // colour(0) pinned and scale by k afterwards. Verified against
    // potts_exact in the evaluation-consistency tests.
    std::vector<std::vector<int>> prior(n); // neighbours with smaller index
    for (auto [u, v] : g.edges()) prior[std::max(u, v)].push_back(std::min(u, v));

    std::vector<unsigned __int128> buckets(m + 1, 0);
    std::vector<int> colour(n, 0);
    std::vector<int> mono(n + 1, 0);
    colour[0] = 1;
    int d = 1; // vertex 0 pinned
    if (n == 1) {
        buckets[0] = 1;
    } else {
        colour[1] = 0;
        while (d >= 1) {
            if (d == n) {
                ++buckets[mono[d]];
                --d;
                continue;
            }
            if (++colour[d] > k) {
                colour[d] = 0;
                --d;
                continue;
            }
            int add = 0;
            for (int u : prior[d]) {
                if (colour[u] == colour[d]) ++add;
            }
            mono[d + 1] = mono[d] + add;
            ++d;
            if (d < n) colour[d] = 0;
        }
    }
    std::vector<BigUint> coeffs(m + 1);
    for (int j = 0; j <= m; ++j) {
        coeffs[j] = BigUint::from_u128(buckets[j]);
        coeffs[j].mul_u64(static_cast<std::uint64_t>(k));
    }
    return CoeffVector::from_exact(std::move(coeffs));
}

} // namespace potts
