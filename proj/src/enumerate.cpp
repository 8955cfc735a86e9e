#include "potts/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "potts/errors.hpp"

namespace potts {

namespace {

// Bit layout of the upper triangle: pair (i,j), i < j, contributes the next
// bit in the order (0,1), (0,2), (1,2), (0,3), ... i.e. column by column.
// Placing vertices one position at a time then fixes a fresh chunk of bits
// per step, which makes prefix pruning straightforward.
struct CanonSearch {
    int n;
    const std::vector<std::uint64_t>& adj; // adjacency bitmask per vertex
    int total_bits;
    std::uint64_t best;
    std::vector<int> perm;
    std::uint64_t used = 0;

    CanonSearch(int n_, const std::vector<std::uint64_t>& adj_)
        : n(n_), adj(adj_), total_bits(n_ * (n_ - 1) / 2), best(~0ULL), perm(n_, -1) {}

    void dfs(int t, std::uint64_t prefix, int prefix_len) {
        if (t == n) {
            best = std::min(best, prefix);
            return;
        }
        struct Cand {
            std::uint64_t chunk;
            int v;
        };
        std::vector<Cand> cands;
        cands.reserve(n - t);
        for (int v = 0; v < n; ++v) {
            if (used >> v & 1) continue;
            std::uint64_t chunk = 0;
            for (int j = 0; j < t; ++j) chunk = (chunk << 1) | (adj[perm[j]] >> v & 1);
            cands.push_back({chunk, v});
        }
        std::sort(cands.begin(), cands.end(),
                  [](const Cand& a, const Cand& b) { return a.chunk < b.chunk; });
        for (const auto& c : cands) {
            std::uint64_t next = (prefix << t) | c.chunk;
            int next_len = prefix_len + t;
            if (best != ~0ULL) {
                std::uint64_t best_prefix = best >> (total_bits - next_len);
                if (next > best_prefix) break; // candidates are sorted; the rest only get larger
            }
            perm[t] = c.v;
            used |= 1ULL << c.v;
            dfs(t + 1, next, next_len);
            used &= ~(1ULL << c.v);
        }
    }
};

} // namespace

CanonicalCode canonical_code(const Graph& g) {
    int n = g.vertex_count();
    if (n > 11) throw SizeError("canonical_code: limited to 11 vertices");
    if (n <= 1) return {n, 0};
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1ULL << v;
        adj[v] |= 1ULL << u;
    }
    CanonSearch search(n, adj);
    search.dfs(0, 0, 0);
    return {n, search.best};
}

Graph graph_from_code(const CanonicalCode& code) {
    std::vector<std::pair<int, int>> edges;
    int bit = code.n * (code.n - 1) / 2;
    for (int j = 1; j < code.n; ++j) {
        for (int i = 0; i < j; ++i) {
            --bit;
            if (code.bits >> bit & 1) edges.push_back({i, j});
        }
    }
    return Graph::from_edges(code.n, std::move(edges));
}

std::vector<Graph> enumerate_graphs(int n_max, int degree_cap, bool connected_only) {
    if (n_max < 1) throw ContractError("enumerate_graphs: n_max must be >= 1");
    if (n_max > 9) throw SizeError("enumerate_graphs: capped at 9 vertices");
    if (degree_cap < 0) throw ContractError("enumerate_graphs: degree cap must be >= 0");

    std::vector<Graph> out;
    std::vector<Graph> level{Graph::from_edges(1, {})};
    out.push_back(level[0]);
    for (int n = 2; n <= n_max; ++n) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<CanonicalCode> codes;
        for (const Graph& base : level) {
            int base_n = n - 1;
            std::uint64_t subset_count = 1ULL << base_n;
            for (std::uint64_t s = connected_only ? 1 : 0; s < subset_count; ++s) {
                int attach = __builtin_popcountll(s);
                if (attach > degree_cap) continue;
                bool degree_ok = true;
                std::vector<std::pair<int, int>> edges = base.edges();
                for (int v = 0; v < base_n && degree_ok; ++v) {
                    if (s >> v & 1) {
                        if (base.degree(v) >= degree_cap) degree_ok = false;
                        else edges.push_back({v, n - 1});
                    }
                }
                if (!degree_ok) continue;
                Graph candidate = Graph::from_edges(n, std::move(edges));
                CanonicalCode code = canonical_code(candidate);
                if (seen.insert(code.bits).second) codes.push_back(code);
            }
        }
        std::sort(codes.begin(), codes.end());
        level.clear();
        for (const auto& code : codes) {
            level.push_back(graph_from_code(code));
            out.push_back(level.back());
        }
    }
    return out;
}

} // namespace potts
