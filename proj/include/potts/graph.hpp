#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace potts {

/// Simple undirected graph with dense 0-based vertex indices. Edges are kept
/// both as an indexed list (edge subsets and per-edge weights are keyed by
/// edge index) and as adjacency lists carrying the edge index. Immutable
/// after construction.
class Graph {
public:
    Graph() = default;

    /// Validates and builds: rejects loops, duplicate edges and out-of-range
    /// endpoints. Edges are stored with u < v and sorted lexicographically,
    /// so equal edge sets produce identical Graph objects.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Neighbours of v as (neighbour, edge index) pairs.
    const std::vector<std::pair<int, int>>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool is_connected() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

int max_degree(const Graph& g);

/// Line-oriented edge list: '#' starts a comment, an optional "n <count>"
/// header pins the vertex count, every other non-blank line is "u v".
/// Without a header the vertex count is 1 + the largest index seen.
Graph parse_graph(const std::string& text);

/// Canonical text form; parse(serialize(g)) == g.
std::string serialize_graph(const Graph& g);

Graph load_graph_file(const std::string& path);

/// One complex weight per edge, keyed by edge index.
class EdgeWeights {
public:
    EdgeWeights() = default;
    EdgeWeights(const Graph& g, std::vector<std::complex<double>> per_edge);

    /// All edges share one value.
    static EdgeWeights uniform(const Graph& g, std::complex<double> w);

    std::complex<double> operator[](int edge_index) const { return w_[edge_index]; }
    const std::vector<std::complex<double>>& values() const { return w_; }

private:
    std::vector<std::complex<double>> w_;
};

/// "u v re im" per line; edges not mentioned default to fallback.
EdgeWeights parse_weights(const Graph& g, const std::string& text, std::complex<double> fallback);

/// Fixed vertices and their pre-assigned colours (1-based, in [1..k]).
struct Boundary {
    std::vector<int> vertices;
    std::vector<int> colours;

    bool empty() const { return vertices.empty(); }
    std::size_t size() const { return vertices.size(); }
    void validate(const Graph& g, int k) const;
    /// Colour of vertex v, or 0 if v is free.
    int colour_of(int v) const;
};

/// True iff every vertex of ws has degree exactly 1 and ws is independent.
bool is_leaf_independent(const Graph& g, const std::vector<int>& ws);

/// Colour status of each colour in [1..k] for a vertex u under a boundary:
/// good = no fixed neighbour carries it, bad = some fixed neighbour with
/// |w_uv| <= eps carries it, neutral = otherwise. bad_multiplicity[c] counts
/// the fixed neighbours of u coloured c whose edge weight has modulus <= eps.
struct ColourClassification {
    std::vector<int> good;
    std::vector<int> neutral;
    std::vector<int> bad;
    std::vector<int> bad_multiplicity; // size k+1, index by colour

    int free_neighbour_count = 0; // neighbours of u not fixed by the boundary
};

ColourClassification classify_colours(const Graph& g, const Boundary& b, int u, int k,
                                      const EdgeWeights& w, double eps);

} // namespace potts
