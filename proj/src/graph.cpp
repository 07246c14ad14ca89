#include "tpa/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

#include "tpa/instances.hpp"

namespace tpa {

using nlohmann::json;

Graph::Graph(int vertex_count) : n_(vertex_count), adj_(vertex_count), radj_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

void Graph::add_edge(int from, int to, Elem w) {
    if (from < 0 || from >= n_ || to < 0 || to >= n_) {
        throw std::invalid_argument("vertex index out of range: (" +
                                    std::to_string(from) + "," + std::to_string(to) + ")");
    }
    auto& row = adj_[from];
    auto it = std::lower_bound(row.begin(), row.end(), to,
                               [](const auto& e, int v) { return e.first < v; });
    if (it != row.end() && it->first == to) {
        throw std::invalid_argument("duplicate edge (" + std::to_string(from) + "," +
                                    std::to_string(to) + ")");
    }
    row.insert(it, {to, w});
    auto& rrow = radj_[to];
    auto rit = std::lower_bound(rrow.begin(), rrow.end(), from,
                                [](const auto& e, int v) { return e.first < v; });
    rrow.insert(rit, {from, w});
    ++edges_;
}

std::optional<Elem> Graph::weight(int u, int v) const {
    const auto& row = adj_[u];
    auto it = std::lower_bound(row.begin(), row.end(), v,
                               [](const auto& e, int x) { return e.first < x; });
    if (it != row.end() && it->first == v) return it->second;
    return std::nullopt;
}

Graph graph_from_json(const json& doc, const Algebra& alg) {
    int n = 0;
    try {
        n = doc.at("vertices").get<int>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed graph: ") + e.what());
    }
    Graph g(n);
    if (doc.contains("edges")) {
        for (const auto& e : doc["edges"]) {
            int from = 0, to = 0;
            try {
                from = e.at("from").get<int>();
                to = e.at("to").get<int>();
            } catch (const json::exception& ex) {
                throw std::invalid_argument(std::string("malformed edge: ") + ex.what());
            }
            g.add_edge(from, to, parse_weight(alg, e.at("weight")));
        }
    }
    return g;
}

Graph load_graph(const std::string& path, const Algebra& alg) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw std::invalid_argument("graph parse error: " + std::string(e.what()));
    }
    return graph_from_json(doc, alg);
}

namespace {

// All walks with exactly `edges` edges, as vertex sequences, lexicographic.
// Adjacency rows are sorted by head, so plain DFS emits canonical order.
void extend_walks(const Graph& g, std::vector<int>& cur, int remaining,
                  std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (const auto& [v, w] : g.out(cur.back())) {
        cur.push_back(v);
        extend_walks(g, cur, remaining - 1, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> all_walks(const Graph& g, int edges) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    for (int s = 0; s < g.vertex_count(); ++s) {
        cur.assign(1, s);
        extend_walks(g, cur, edges, out);
    }
    return out;
}

}  // namespace

WindowGraph build_window_graph(const Graph& g, int width) {
    if (width < 2) throw std::invalid_argument("window width must be >= 2");
    WindowGraph wg;
    wg.width = width;
    wg.vertices = all_walks(g, width - 1);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < wg.vertices.size(); ++i) index[wg.vertices[i]] = i;
    for (const auto& walk : all_walks(g, width)) {
        std::vector<int> head(walk.begin(), walk.end() - 1);
        std::vector<int> tail(walk.begin() + 1, walk.end());
        wg.arcs.emplace_back(index.at(head), index.at(tail));
    }
    return wg;
}

std::pair<std::uint64_t, std::uint64_t> window_counts(const Graph& g) {
    std::uint64_t arcs = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        arcs += static_cast<std::uint64_t>(g.in_degree(u)) *
                static_cast<std::uint64_t>(g.out_degree(u));
    }
    return {g.edge_count(), arcs};
}

std::vector<std::vector<int>> enumerate_windows_into(const Graph& g, int v, int width) {
    if (v < 0 || v >= g.vertex_count()) {
        throw std::invalid_argument("vertex index out of range");
    }
    if (width < 1) throw std::invalid_argument("window width must be >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> cur{v};
    // Walk backwards from v, then reverse; sorting restores canonical order.
    auto recurse = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            std::vector<int> walk(cur.rbegin(), cur.rend());
            out.push_back(std::move(walk));
            return;
        }
        for (const auto& [u, w] : g.in(cur.back())) {
            cur.push_back(u);
            self(self, remaining - 1);
            cur.pop_back();
        }
    };
    recurse(recurse, width);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_walks(const Graph& g, int edges) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> cur(n, 1);  // walks of 0 edges starting anywhere
    for (int step = 0; step < edges; ++step) {
        std::vector<std::uint64_t> next(n, 0);
        for (int u = 0; u < n; ++u) {
            for (const auto& [v, w] : g.out(u)) next[u] += cur[v];
        }
        cur = std::move(next);
    }
    std::uint64_t total = 0;
    for (auto c : cur) total += c;
    return total;
}

std::optional<std::vector<int>> topo_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> indeg(n);
    for (int v = 0; v < n; ++v) indeg[v] = g.in_degree(v);
    std::vector<int> order;
    std::vector<int> ready;
    for (int v = 0; v < n; ++v) {
        if (indeg[v] == 0) ready.push_back(v);
    }
    while (!ready.empty()) {
        int u = ready.back();
        ready.pop_back();
        order.push_back(u);
        for (const auto& [v, w] : g.out(u)) {
            if (--indeg[v] == 0) ready.push_back(v);
        }
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

int longest_path_edges(const Graph& g) {
    auto order = topo_order(g);
    if (!order) throw std::invalid_argument("longest_path_edges requires a DAG");
    std::vector<int> dist(g.vertex_count(), 0);
    int best = 0;
    for (auto it = order->rbegin(); it != order->rend(); ++it) {
        int u = *it;
        for (const auto& [v, w] : g.out(u)) {
            dist[u] = std::max(dist[u], dist[v] + 1);
        }
        best = std::max(best, dist[u]);
    }
    return best;
}

}  // namespace tpa
