#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpa/algebra.hpp"

#include "json.hpp"

namespace tpa {

/// Directed graph with one weight per ordered vertex pair. Self-loops are
/// allowed, parallel edges are not. Immutable after load.
class Graph {
public:
    explicit Graph(int vertex_count);

    void add_edge(int from, int to, Elem w);  // throws on duplicates / bad ids

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_; }
    /// Out-edges of u as (head, weight), sorted by head.
    const std::vector<std::pair<int, Elem>>& out(int u) const { return adj_[u]; }
    /// In-edges of v as (tail, weight), sorted by tail.
    const std::vector<std::pair<int, Elem>>& in(int v) const { return radj_[v]; }
    int in_degree(int v) const { return static_cast<int>(radj_[v].size()); }
    int out_degree(int u) const { return static_cast<int>(adj_[u].size()); }
    std::optional<Elem> weight(int u, int v) const;

private:
    int n_;
    std::size_t edges_ = 0;
    std::vector<std::vector<std::pair<int, Elem>>> adj_;
    std::vector<std::vector<std::pair<int, Elem>>> radj_;
};

Graph load_graph(const std::string& path, const Algebra& alg);
Graph graph_from_json(const nlohmann::json& doc, const Algebra& alg);

/// Lifted window graph of a given width (edges per arc). Vertices are all
/// (width-1)-edge walks, arcs all width-edge walks, each walk stored as its
/// vertex sequence in canonical lexicographic order.
struct WindowGraph {
    int width = 2;
    std::vector<std::vector<int>> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> arcs;  // indices into vertices
};

WindowGraph build_window_graph(const Graph& g, int width);

/// Closed-form width-2 window sizes from degree tables: (|E|, sum deg-*deg+).
std::pair<std::uint64_t, std::uint64_t> window_counts(const Graph& g);

/// All edge-walks of `width` edges ending at v, as vertex sequences of
/// length width+1, in lexicographic order.
std::vector<std::vector<int>> enumerate_windows_into(const Graph& g, int v, int width);

/// Number of walks with exactly `edges` edges, by dynamic programming.
std::uint64_t count_walks(const Graph& g, int edges);

/// Topological order if acyclic, nullopt otherwise.
std::optional<std::vector<int>> topo_order(const Graph& g);

/// Longest path edge count (acyclic graphs only).
int longest_path_edges(const Graph& g);

}  // namespace tpa
