#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "potts/graph.hpp"

namespace potts {

/// Isomorphism-invariant code: vertex count plus the lexicographically
/// minimal upper-triangle bit string of the adjacency matrix over all vertex
/// permutations (row-major, bit 0 the most significant position). Fits 64
/// bits for n <= 11; the generator caps well below that.
struct CanonicalCode {
    int n = 0;
    std::uint64_t bits = 0;

    bool operator==(const CanonicalCode&) const = default;
    bool operator<(const CanonicalCode& o) const {
        return n != o.n ? n < o.n : bits < o.bits;
    }
};

CanonicalCode canonical_code(const Graph& g);

/// Rebuild a representative graph from its code.
Graph graph_from_code(const CanonicalCode& code);

/// One representative per isomorphism class of simple graphs with n in
/// [1, n_max] and maximum degree <= degree_cap, connected only if asked.
/// Output is sorted by (n, code), so the stream is deterministic.
/// n_max is capped at 9.
std::vector<Graph> enumerate_graphs(int n_max, int degree_cap, bool connected_only);

} // namespace potts
