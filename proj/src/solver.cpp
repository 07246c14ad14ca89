#include "tpa/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace tpa {

bool valuation_leq(const Algebra& alg, const Valuation& f, const Valuation& g) {
    if (f.size() != g.size()) throw std::invalid_argument("valuation size mismatch");
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!leq(alg, f[i], g[i])) return false;
    }
    return true;
}

Valuation init_state(const Graph& g, int s, const Algebra& alg) {
    if (s < 0 || s >= g.vertex_count()) {
        throw std::invalid_argument("source vertex out of range");
    }
    Valuation f(static_cast<std::size_t>(g.vertex_count()), alg.top);
    f[static_cast<std::size_t>(s)] = alg.seed;
    return f;
}

namespace {

struct WindowSets {
    // windows[v]: all width-edge walks ending at v, canonical order.
    std::vector<std::vector<std::vector<int>>> windows;
    std::uint64_t total = 0;
};

WindowSets collect_windows(const Graph& g, int width) {
    WindowSets ws;
    ws.windows.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        ws.windows[static_cast<std::size_t>(v)] = enumerate_windows_into(g, v, width);
        ws.total += ws.windows[static_cast<std::size_t>(v)].size();
    }
    return ws;
}

Elem eval_window(const Graph& g, const Algebra& alg, const std::string& gamma,
                 const Valuation& f, const std::vector<int>& walk, int width) {
    if (width == 2) {
        return alg.tern(gamma, f[static_cast<std::size_t>(walk[0])],
                        *g.weight(walk[0], walk[1]), *g.weight(walk[1], walk[2]));
    }
    if (!alg.nary) {
        throw std::invalid_argument("algebra '" + alg.name +
                                    "' has no wide-window operation");
    }
    std::vector<Elem> args;
    args.reserve(static_cast<std::size_t>(width) + 1);
    args.push_back(f[static_cast<std::size_t>(walk[0])]);
    for (int i = 0; i + 1 <= width; ++i) {
        args.push_back(*g.weight(walk[static_cast<std::size_t>(i)],
                                 walk[static_cast<std::size_t>(i) + 1]));
    }
    return alg.nary(args);
}

Valuation apply_operator(const Graph& g, int s, const Algebra& alg,
                         const std::string& gamma, const Valuation& f,
                         const WindowSets& ws, int width, bool parallel) {
    Valuation next(f.size(), alg.top);
    next[static_cast<std::size_t>(s)] = alg.seed;
    auto update_vertex = [&](int v) {
        if (v == s) return;
        Elem acc = alg.top;
        for (const auto& walk : ws.windows[static_cast<std::size_t>(v)]) {
            acc = alg.aggregate(acc, eval_window(g, alg, gamma, f, walk, width));
        }
        next[static_cast<std::size_t>(v)] = acc;
    };
    const int n = g.vertex_count();
    if (!parallel || n < 64) {
        for (int v = 0; v < n; ++v) update_vertex(v);
        return next;
    }
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int v = static_cast<int>(w); v < n; v += static_cast<int>(workers)) {
                update_vertex(v);
            }
        });
    }
    for (auto& t : pool) t.join();
    return next;
}

}  // namespace

std::pair<Valuation, std::uint64_t> relax_step(const Graph& g, int s, const Algebra& alg,
                                               const std::string& gamma, const Valuation& f,
                                               int window_width, bool parallel) {
    if (f.size() != static_cast<std::size_t>(g.vertex_count())) {
        throw std::invalid_argument("valuation is not total over the graph");
    }
    auto ws = collect_windows(g, window_width);
    return {apply_operator(g, s, alg, gamma, f, ws, window_width, parallel), ws.total};
}

SolveResult solve(const Graph& g, int s, const Algebra& alg, const std::string& gamma,
                  int window_width, int max_iterations, bool parallel) {
    if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
    SolveResult res;
    auto ws = collect_windows(g, window_width);
    res.trace.snapshots.push_back(init_state(g, s, alg));
    for (int i = 1; i <= max_iterations; ++i) {
        const Valuation& cur = res.trace.snapshots.back();
        Valuation next = apply_operator(g, s, alg, gamma, cur, ws, window_width, parallel);
        if (!valuation_leq(alg, next, cur)) {
            throw std::logic_error("descending-chain invariant violated");
        }
        const bool fixed = (next == cur);
        res.trace.snapshots.push_back(std::move(next));
        res.trace.windows_examined.push_back(ws.total);
        if (fixed) {
            res.trace.stabilized = true;
            res.trace.iterations_to_fixpoint = i - 1;
            break;
        }
    }
    res.valuation = res.trace.snapshots.back();
    return res;
}

bool check_descending(const RelaxationTrace& trace, const Algebra& alg) {
    if (trace.snapshots.empty()) throw std::invalid_argument("empty trace");
    for (std::size_t i = 0; i + 1 < trace.snapshots.size(); ++i) {
        if (!valuation_leq(alg, trace.snapshots[i + 1], trace.snapshots[i])) return false;
    }
    return true;
}

AxiomReport operator_monotonicity_probe(const Graph& g, int s, const Algebra& alg,
                                        const std::string& gamma, int samples,
                                        std::uint64_t seed) {
    AxiomReport rep;
    rep.axiom = "operator-monotonicity";
    std::mt19937_64 rng(seed);
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    for (int i = 0; i < samples; ++i) {
        Valuation h(n), f(n);
        for (std::size_t v = 0; v < n; ++v) {
            h[v] = alg.sample(rng);
            f[v] = alg.aggregate(h[v], alg.sample(rng));  // f <= h by construction
        }
        Valuation rf = relax_step(g, s, alg, gamma, f).first;
        Valuation rh = relax_step(g, s, alg, gamma, h).first;
        ++rep.checked;
        for (std::size_t v = 0; v < n; ++v) {
            if (!leq(alg, rf[v], rh[v])) {
                rep.passed = false;
                rep.witness = Witness{{f[v], h[v]}, rf[v], rh[v],
                                      "operator not monotone at vertex " +
                                          std::to_string(v)};
                return rep;
            }
        }
    }
    return rep;
}

IterationBoundReport iteration_bound_report(const Graph& g, const RelaxationTrace& trace) {
    IterationBoundReport rep;
    auto order = topo_order(g);
    if (!order) return rep;  // not applicable to cyclic inputs
    rep.applicable = true;
    rep.bound_vertices = std::max(0, g.vertex_count() - 2);
    const int longest = longest_path_edges(g);
    rep.bound_halved = (longest + 1) / 2;
    rep.observed = trace.iterations_to_fixpoint;
    rep.within = rep.observed.has_value() &&
                 *rep.observed <= std::min(rep.bound_vertices, rep.bound_halved);
    return rep;
}

}  // namespace tpa
