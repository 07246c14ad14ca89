#include "tpa/path_eval.hpp"

#include <stdexcept>

namespace tpa {

namespace {

void require_odd(std::span<const Elem> ws) {
    if (ws.size() < 3 || ws.size() % 2 == 0) {
        throw std::invalid_argument("window fold needs an odd sequence of length >= 3");
    }
}

}  // namespace

Elem fold_odd(const Algebra& alg, const std::string& gamma, std::span<const Elem> ws) {
    require_odd(ws);
    const auto& t = alg.op(gamma);
    Elem acc = t(ws[0], ws[1], ws[2]);
    for (std::size_t i = 3; i + 1 < ws.size(); i += 2) {
        acc = t(acc, ws[i], ws[i + 1]);
    }
    return acc;
}

Elem fold_uncorrected(const Algebra& alg, const std::string& gamma,
                        std::span<const Elem> ws) {
    if (ws.size() < 3) {
        throw std::invalid_argument("fold needs at least 3 weights");
    }
    const auto& t = alg.op(gamma);
    Elem acc = t(ws[0], ws[1], ws[2]);
    for (std::size_t i = 3; i < ws.size(); ++i) {
        acc = t(acc, ws[i - 1], ws[i]);
    }
    return acc;
}

Elem seeded_fold(const Algebra& alg, const std::string& gamma, Elem seed,
                 std::span<const Elem> ws) {
    if (ws.size() < 2 || ws.size() % 2 != 0) {
        throw std::invalid_argument("seeded fold needs an even sequence of length >= 2");
    }
    const auto& t = alg.op(gamma);
    Elem acc = seed;
    for (std::size_t i = 0; i < ws.size(); i += 2) {
        acc = t(acc, ws[i], ws[i + 1]);
    }
    return acc;
}

Elem seeded_fold_wide(const Algebra& alg, Elem seed, std::span<const Elem> ws, int width) {
    if (width < 2) throw std::invalid_argument("window width must be >= 2");
    if (width == 2) {
        return seeded_fold(alg, alg.ternary_ops.begin()->first, seed, ws);
    }
    if (!alg.nary) {
        throw std::invalid_argument("algebra '" + alg.name +
                                    "' has no wide-window operation");
    }
    if (ws.empty() || ws.size() % static_cast<std::size_t>(width) != 0) {
        throw std::invalid_argument("sequence length must be a positive multiple of width");
    }
    Elem acc = seed;
    std::vector<Elem> args(static_cast<std::size_t>(width) + 1);
    for (std::size_t i = 0; i < ws.size(); i += static_cast<std::size_t>(width)) {
        args[0] = acc;
        for (int j = 0; j < width; ++j) args[static_cast<std::size_t>(j) + 1] = ws[i + j];
        acc = alg.nary(args);
    }
    return acc;
}

namespace {

// Trees over [lo, lo+len) with len odd. Shapes are generated uniquely by
// the choice of the three child span lengths, so no deduplication is needed.
std::vector<ParenNode> trees_over(int lo, int len) {
    std::vector<ParenNode> out;
    if (len == 1) {
        ParenNode leaf;
        leaf.leaf = lo;
        out.push_back(leaf);
        return out;
    }
    for (int a = 1; a <= len - 2; a += 2) {
        for (int b = 1; a + b <= len - 1; b += 2) {
            const int c = len - a - b;
            if (c < 1 || c % 2 == 0) continue;
            auto left = trees_over(lo, a);
            auto mid = trees_over(lo + a, b);
            auto right = trees_over(lo + a + b, c);
            for (const auto& l : left)
                for (const auto& m : mid)
                    for (const auto& r : right) {
                        ParenNode node;
                        node.kids = {l, m, r};
                        out.push_back(std::move(node));
                    }
        }
    }
    return out;
}

}  // namespace

std::vector<ParenNode> enumerate_parenthesizations(int k) {
    if (k < 1 || k % 2 == 0) {
        throw std::invalid_argument("parenthesizations exist only for odd k >= 1");
    }
    return trees_over(0, k);
}

Elem eval_parenthesization(const Algebra& alg, const std::string& gamma,
                           const ParenNode& tree, std::span<const Elem> ws) {
    if (tree.is_leaf()) {
        if (tree.leaf < 0 || static_cast<std::size_t>(tree.leaf) >= ws.size()) {
            throw std::invalid_argument("tree leaf count does not match sequence length");
        }
        return ws[static_cast<std::size_t>(tree.leaf)];
    }
    if (tree.kids.size() != 3) {
        throw std::invalid_argument("internal nodes must have exactly three children");
    }
    return alg.tern(gamma, eval_parenthesization(alg, gamma, tree.kids[0], ws),
                    eval_parenthesization(alg, gamma, tree.kids[1], ws),
                    eval_parenthesization(alg, gamma, tree.kids[2], ws));
}

namespace {

std::vector<Elem> path_weights(const Graph& g, std::span<const int> path) {
    std::vector<Elem> ws;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        auto w = g.weight(path[i], path[i + 1]);
        if (!w) {
            throw std::invalid_argument("vertex sequence is not a directed path");
        }
        ws.push_back(*w);
    }
    return ws;
}

}  // namespace

Elem path_cost(const Algebra& alg, const std::string& gamma, const Graph& g,
               std::span<const int> path) {
    auto ws = path_weights(g, path);
    return fold_odd(alg, gamma, ws);
}

std::vector<OptResult> oracle_opt_all(const Algebra& alg, const std::string& gamma,
                                      const Graph& g, int s, int max_edges,
                                      bool allow_revisits) {
    if (s < 0 || s >= g.vertex_count()) {
        throw std::invalid_argument("source vertex out of range");
    }
    if (max_edges < 2) throw std::invalid_argument("max_edges must be >= 2");
    std::vector<OptResult> out(static_cast<std::size_t>(g.vertex_count()),
                               OptResult{alg.top, alg.top});
    std::vector<Elem> ws;
    std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()), 0);
    auto dfs = [&](auto&& self, int u) -> void {
        const std::size_t k = ws.size();
        if (k >= 2) {
            auto& slot = out[static_cast<std::size_t>(u)];
            if (k % 2 == 0) {
                slot.even_opt = alg.aggregate(slot.even_opt, seeded_fold(alg, gamma, alg.seed, ws));
            } else if (k >= 3) {
                slot.odd_opt = alg.aggregate(slot.odd_opt, fold_odd(alg, gamma, ws));
            }
        }
        if (k == static_cast<std::size_t>(max_edges)) return;
        for (const auto& [v, w] : g.out(u)) {
            if (!allow_revisits && visited[static_cast<std::size_t>(v)]) continue;
            visited[static_cast<std::size_t>(v)] = 1;
            ws.push_back(w);
            self(self, v);
            ws.pop_back();
            visited[static_cast<std::size_t>(v)] = 0;
        }
    };
    visited[static_cast<std::size_t>(s)] = 1;
    dfs(dfs, s);
    // The empty walk at the source carries the seed; this is the state the
    // relaxation operator pins at s.
    out[static_cast<std::size_t>(s)].even_opt =
        alg.aggregate(out[static_cast<std::size_t>(s)].even_opt, alg.seed);
    return out;
}

OptResult oracle_opt(const Algebra& alg, const std::string& gamma, const Graph& g,
                     int s, int t, int max_edges, bool allow_revisits) {
    if (t < 0 || t >= g.vertex_count()) {
        throw std::invalid_argument("target vertex out of range");
    }
    return oracle_opt_all(alg, gamma, g, s, max_edges, allow_revisits)[
        static_cast<std::size_t>(t)];
}

std::vector<Elem> oracle_opt_wide(const Algebra& alg, const Graph& g, int s,
                                  int max_edges, int width) {
    if (s < 0 || s >= g.vertex_count()) {
        throw std::invalid_argument("source vertex out of range");
    }
    if (width < 2) throw std::invalid_argument("window width must be >= 2");
    std::vector<Elem> out(static_cast<std::size_t>(g.vertex_count()), alg.top);
    std::vector<Elem> ws;
    std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()), 0);
    auto dfs = [&](auto&& self, int u) -> void {
        const std::size_t k = ws.size();
        if (k > 0 && k % static_cast<std::size_t>(width) == 0) {
            auto& slot = out[static_cast<std::size_t>(u)];
            slot = alg.aggregate(slot, seeded_fold_wide(alg, alg.seed, ws, width));
        }
        if (k == static_cast<std::size_t>(max_edges)) return;
        for (const auto& [v, w] : g.out(u)) {
            if (visited[static_cast<std::size_t>(v)]) continue;
            visited[static_cast<std::size_t>(v)] = 1;
            ws.push_back(w);
            self(self, v);
            ws.pop_back();
            visited[static_cast<std::size_t>(v)] = 0;
        }
    };
    visited[static_cast<std::size_t>(s)] = 1;
    dfs(dfs, s);
    out[static_cast<std::size_t>(s)] = alg.aggregate(out[static_cast<std::size_t>(s)], alg.seed);
    return out;
}

}  // namespace tpa
