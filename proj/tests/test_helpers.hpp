#pragma once

#include <random>
#include <string>
#include <vector>

#include "tpa/algebra.hpp"
#include "tpa/graph.hpp"
#include "tpa/instances.hpp"

namespace tpa::test {

inline std::string data_path(const std::string& file) {
    return std::string(TPA_TEST_DATA_DIR) + "/" + file;
}

/// 2-element table algebra from flat tables; agg defaults to AND.
inline Algebra two_elem(std::vector<std::size_t> tern,
                        std::vector<std::size_t> agg = {0, 0, 0, 1},
                        std::size_t top = 1, std::size_t seed = 0) {
    TableData d;
    d.size = 2;
    d.aggregate = std::move(agg);
    d.ternary[kDefaultGamma] = std::move(tern);
    d.top = top;
    d.seed = seed;
    return make_table_algebra(std::move(d));
}

/// First projection [x,y,z] = x over {0,1} with AND aggregation.
inline Algebra first_projection() {
    return two_elem({0, 0, 0, 0, 1, 1, 1, 1});
}

/// Degenerate AND-chain [x,y,z] = (x AND y) AND z, a full TTGS on {0,1}.
/// The seed is 1, the left identity of AND.
inline Algebra and_chain() {
    std::vector<std::size_t> tern(8);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y)
            for (std::size_t z = 0; z < 2; ++z)
                tern[(x * 2 + y) * 2 + z] = x & y & z;
    TableData d;
    d.size = 2;
    d.aggregate = {0, 0, 0, 1};
    d.ternary[kDefaultGamma] = std::move(tern);
    d.top = 1;
    d.seed = 1;
    d.factorization = std::vector<std::size_t>{0, 0, 0, 1};
    return make_table_algebra(std::move(d), "and-chain");
}

/// Random DAG: edges only forward in vertex order, min-plus weights 0..9.
inline Graph random_minplus_dag(std::mt19937_64& rng, int max_vertices = 6) {
    std::uniform_int_distribution<int> nv(2, max_vertices);
    const int n = nv(rng);
    std::uniform_int_distribution<int> wd(0, 9);
    std::uniform_int_distribution<int> coin(0, 99);
    const int density = 30 + static_cast<int>(rng() % 50);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng) < density) g.add_edge(u, v, Elem::of(wd(rng)));
        }
    }
    return g;
}

/// Random directed graph, cycles allowed, unit weights.
inline Graph random_graph(std::mt19937_64& rng, int max_vertices = 12) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    const int n = nv(rng);
    std::uniform_int_distribution<int> coin(0, 99);
    const int density = 10 + static_cast<int>(rng() % 30);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (coin(rng) < density) g.add_edge(u, v, Elem::of(1));
        }
    }
    return g;
}

/// All simple paths from s with at most max_edges edges, as vertex sequences
/// (the trivial path {s} included).
inline std::vector<std::vector<int>> simple_paths_from(const Graph& g, int s,
                                                       int max_edges) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur{s};
    std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()), 0);
    visited[static_cast<std::size_t>(s)] = 1;
    auto dfs = [&](auto&& self) -> void {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) - 1 == max_edges) return;
        for (const auto& [v, w] : g.out(cur.back())) {
            if (visited[static_cast<std::size_t>(v)]) continue;
            visited[static_cast<std::size_t>(v)] = 1;
            cur.push_back(v);
            self(self);
            cur.pop_back();
            visited[static_cast<std::size_t>(v)] = 0;
        }
    };
    dfs(dfs);
    return out;
}

inline std::vector<Elem> weights_of(const Graph& g, const std::vector<int>& path) {
    std::vector<Elem> ws;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        ws.push_back(*g.weight(path[i], path[i + 1]));
    }
    return ws;
}

}  // namespace tpa::test
