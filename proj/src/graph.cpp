#include "potts/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "potts/errors.hpp"

namespace potts {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw ContractError("vertex count must be nonnegative");
    for (auto& [u, v] : edges) {
        if (u == v) throw ParseError("loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] == edges[i - 1])
            throw ParseError("duplicate edge " + std::to_string(edges[i].first) + " " +
                             std::to_string(edges[i].second));
    }
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges_[e];
        g.adj_[u].push_back({v, e});
        g.adj_[v].push_back({u, e});
    }
    return g;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [u, e] : adj_[v]) {
            (void)e;
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n_;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    int max_index = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "n") {
            long count;
            if (!(ls >> count) || count < 0)
                throw ParseError("line " + std::to_string(lineno) + ": bad vertex-count header");
            n = static_cast<int>(count);
            continue;
        }
        long u, v;
        try {
            std::size_t pos;
            u = std::stol(first, &pos);
            if (pos != first.size()) throw std::invalid_argument(first);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": expected integer endpoint");
        }
        if (!(ls >> v))
            throw ParseError("line " + std::to_string(lineno) + ": expected \"u v\"");
        std::string extra;
        if (ls >> extra)
            throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
        if (u < 0 || v < 0)
            throw ParseError("line " + std::to_string(lineno) + ": negative vertex index");
        if (u == v)
            throw ParseError("line " + std::to_string(lineno) + ": loop at vertex " + std::to_string(u));
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        max_index = std::max(max_index, static_cast<int>(std::max(u, v)));
    }
    if (n < 0) n = max_index + 1;
    if (max_index >= n)
        throw ParseError("edge endpoint " + std::to_string(max_index) + " exceeds declared vertex count");
    // Re-check duplicates here so the error carries context from this file.
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second)
            throw ParseError("duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second));
    }
    return Graph::from_edges(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

EdgeWeights::EdgeWeights(const Graph& g, std::vector<std::complex<double>> per_edge)
    : w_(std::move(per_edge)) {
    if (static_cast<int>(w_.size()) != g.edge_count())
        throw ContractError("weight vector size does not match edge count");
    for (auto v : w_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw ContractError("edge weight must be finite");
    }
}

EdgeWeights EdgeWeights::uniform(const Graph& g, std::complex<double> w) {
    return EdgeWeights(g, std::vector<std::complex<double>>(g.edge_count(), w));
}

EdgeWeights parse_weights(const Graph& g, const std::string& text, std::complex<double> fallback) {
    std::vector<std::complex<double>> w(g.edge_count(), fallback);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int u, v;
        double re, im;
        if (!(ls >> u)) continue;
        if (!(ls >> v >> re >> im))
            throw ParseError("weights line " + std::to_string(lineno) + ": expected \"u v re im\"");
        if (u > v) std::swap(u, v);
        auto& es = g.edges();
        auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(u, v));
        if (it == es.end() || *it != std::make_pair(u, v))
            throw ParseError("weights line " + std::to_string(lineno) + ": no such edge " +
                             std::to_string(u) + " " + std::to_string(v));
        w[static_cast<int>(it - es.begin())] = {re, im};
    }
    return EdgeWeights(g, std::move(w));
}

void Boundary::validate(const Graph& g, int k) const {
    if (vertices.size() != colours.size())
        throw ContractError("boundary vertex and colour lists differ in length");
    std::set<int> seen;
    for (int v : vertices) {
        if (v < 0 || v >= g.vertex_count()) throw ContractError("boundary vertex out of range");
        if (!seen.insert(v).second) throw ContractError("boundary vertex repeated");
    }
    for (int c : colours) {
        if (c < 1 || c > k) throw ContractError("boundary colour out of range");
    }
}

int Boundary::colour_of(int v) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] == v) return colours[i];
    }
    return 0;
}

bool is_leaf_independent(const Graph& g, const std::vector<int>& ws) {
    for (int v : ws) {
        if (v < 0 || v >= g.vertex_count()) throw ContractError("vertex out of range");
        if (g.degree(v) != 1) return false;
    }
    std::set<int> in_set(ws.begin(), ws.end());
    if (in_set.size() != ws.size()) throw ContractError("vertices must be distinct");
    for (int v : ws) {
        for (auto [u, e] : g.neighbours(v)) {
            (void)e;
            if (in_set.count(u)) return false;
        }
    }
    return true;
}

ColourClassification classify_colours(const Graph& g, const Boundary& b, int u, int k,
                                      const EdgeWeights& w, double eps) {
    b.validate(g, k);
    if (b.colour_of(u) != 0) throw ContractError("classify_colours: vertex u is fixed");
    if (!(eps >= 0.0 && eps < 1.0)) throw ContractError("classify_colours: eps must lie in [0,1)");

    ColourClassification out;
    out.bad_multiplicity.assign(k + 1, 0);
    std::vector<char> carried(k + 1, 0); // colour appears on some fixed neighbour
    for (auto [v, e] : g.neighbours(u)) {
        int c = b.colour_of(v);
        if (c == 0) {
            ++out.free_neighbour_count;
            continue;
        }
        carried[c] = 1;
        if (std::abs(w[e]) <= eps) ++out.bad_multiplicity[c];
    }
    for (int c = 1; c <= k; ++c) {
        if (!carried[c]) out.good.push_back(c);
        else if (out.bad_multiplicity[c] > 0) out.bad.push_back(c);
        else out.neutral.push_back(c);
    }
    return out;
}

} // namespace potts
