#include "doctest.h"

#include <queue>

#include "test_helpers.hpp"
#include "tpa/instances.hpp"
#include "tpa/path_eval.hpp"
#include "tpa/solver.hpp"

using namespace tpa;
using namespace tpa::test;

namespace {

// Shortest even-length s-walk per vertex, by BFS over (vertex, parity).
std::vector<int> shortest_even_walk(const Graph& g, int s) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> dist(2, std::vector<int>(n, -1));
    std::queue<std::pair<int, int>> q;
    dist[0][s] = 0;
    q.push({s, 0});
    while (!q.empty()) {
        auto [u, p] = q.front();
        q.pop();
        for (const auto& [v, w] : g.out(u)) {
            if (dist[1 - p][v] < 0) {
                dist[1 - p][v] = dist[p][u] + 1;
                q.push({v, 1 - p});
            }
        }
    }
    return dist[0];
}

}  // namespace

TEST_CASE("init_state") {
    Algebra alg = minplus_degenerate();
    Graph p3 = load_graph(data_path("p3.json"), alg);
    auto f = init_state(p3, 0, alg);
    CHECK(f == Valuation{Elem::of(0), Elem::infinite(), Elem::infinite()});

    Graph single(1);
    CHECK(init_state(single, 0, alg) == Valuation{alg.seed});
    CHECK_THROWS_AS(init_state(p3, 9, alg), std::invalid_argument);

    Algebra tab = and_chain();
    Graph g2(3);
    CHECK(init_state(g2, 0, tab) == Valuation{tab.seed, tab.top, tab.top});
}

TEST_CASE("relax_step") {
    Algebra alg = minplus_degenerate();
    Graph p3 = load_graph(data_path("p3.json"), alg);
    auto [f1, windows] = relax_step(p3, 0, alg, kDefaultGamma, init_state(p3, 0, alg));
    CHECK(f1 == Valuation{Elem::of(0), Elem::infinite(), Elem::of(3)});
    CHECK(windows == 1);

    // no length-2 walks: one step is the identity on the init state
    Graph single_edge(2);
    single_edge.add_edge(0, 1, Elem::of(4));
    auto init = init_state(single_edge, 0, alg);
    CHECK(relax_step(single_edge, 0, alg, kDefaultGamma, init).first == init);

    Graph diamond = load_graph(data_path("diamond.json"), alg);
    auto [d1, dw] = relax_step(diamond, 0, alg, kDefaultGamma, init_state(diamond, 0, alg));
    CHECK(d1[3] == Elem::of(5));  // min(0+1+5, 0+2+3)
    CHECK(dw == 2);
}

TEST_CASE("solve on paths") {
    Algebra alg = minplus_degenerate();
    Graph p3 = load_graph(data_path("p3.json"), alg);
    auto res = solve(p3, 0, alg, kDefaultGamma, 2, 10);
    CHECK(res.valuation == Valuation{Elem::of(0), Elem::infinite(), Elem::of(3)});
    CHECK(res.trace.stabilized);
    CHECK(res.trace.iterations_to_fixpoint == 1);

    Graph p5 = load_graph(data_path("p5.json"), alg);
    auto r5 = solve(p5, 0, alg, kDefaultGamma, 2, 10);
    CHECK(r5.valuation[4] == Elem::of(10));
    CHECK(r5.valuation[2] == Elem::of(3));
    CHECK(r5.valuation[1] == alg.top);  // odd distance: unreachable by windows
    CHECK(r5.valuation[3] == alg.top);
}

TEST_CASE("solve matches the even-path oracle on random DAGs") {
    Algebra alg = minplus_degenerate();
    std::mt19937_64 rng(101);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_minplus_dag(rng, 6);
        auto res = solve(g, 0, alg, kDefaultGamma, 2, 2 * g.vertex_count());
        REQUIRE(res.trace.stabilized);
        auto oracle = oracle_opt_all(alg, kDefaultGamma, g, 0,
                                     std::max(2, g.vertex_count() - 1));
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK(res.valuation[static_cast<std::size_t>(v)] ==
                  oracle[static_cast<std::size_t>(v)].even_opt);
        }
        if (g.vertex_count() >= 3) {
            CHECK(*res.trace.iterations_to_fixpoint <= g.vertex_count() - 2);
        }
    }
}

TEST_CASE("check_descending") {
    Algebra alg = minplus_degenerate();
    Graph p5 = load_graph(data_path("p5.json"), alg);
    auto res = solve(p5, 0, alg, kDefaultGamma, 2, 10);
    CHECK(check_descending(res.trace, alg));

    RelaxationTrace one;
    one.snapshots.push_back(init_state(p5, 0, alg));
    CHECK(check_descending(one, alg));

    RelaxationTrace up;
    up.snapshots.push_back(Valuation{Elem::of(5)});
    up.snapshots.push_back(Valuation{Elem::of(9)});  // 9 > 5 under min-order
    CHECK_FALSE(check_descending(up, alg));

    RelaxationTrace none;
    CHECK_THROWS_AS(check_descending(none, alg), std::invalid_argument);
}

TEST_CASE("operator monotonicity probe") {
    Algebra alg = minplus_degenerate();
    std::mt19937_64 rng(77);
    for (int i = 0; i < 5; ++i) {
        Graph g = random_minplus_dag(rng, 6);
        auto rep = operator_monotonicity_probe(g, 0, alg, kDefaultGamma, 50, rng());
        CHECK(rep.passed);
    }
}

TEST_CASE("iteration bound report") {
    Algebra alg = minplus_degenerate();
    Graph p5 = load_graph(data_path("p5.json"), alg);
    auto res = solve(p5, 0, alg, kDefaultGamma, 2, 10);
    auto rep = iteration_bound_report(p5, res.trace);
    CHECK(rep.applicable);
    CHECK(rep.bound_vertices == 3);
    CHECK(rep.bound_halved == 2);
    REQUIRE(rep.observed.has_value());
    CHECK(*rep.observed <= 2);
    CHECK(rep.within);

    Graph edgeless = load_graph(data_path("empty.json"), alg);
    auto re = solve(edgeless, 0, alg, kDefaultGamma, 2, 10);
    CHECK(iteration_bound_report(edgeless, re.trace).observed == 0);

    Graph diamond = load_graph(data_path("diamond.json"), alg);
    auto rd = solve(diamond, 0, alg, kDefaultGamma, 2, 10);
    CHECK(rd.trace.iterations_to_fixpoint == 1);

    Graph cyc = load_graph(data_path("cycle.json"), alg);
    auto rc = solve(cyc, 0, alg, kDefaultGamma, 2, 4);
    CHECK_FALSE(iteration_bound_report(cyc, rc.trace).applicable);
}

TEST_CASE("the pinned source cuts a cycle through it") {
    // 3-cycle through the source: f(2) only depends on the pinned f(0),
    // so the iteration still reaches a fixed point.
    Algebra alg = minplus_degenerate();
    Graph cyc = load_graph(data_path("cycle.json"), alg);
    auto res = solve(cyc, 0, alg, kDefaultGamma, 2, 10);
    CHECK(res.trace.stabilized);
    CHECK(res.valuation == Valuation{Elem::of(0), Elem::of(-4), Elem::of(-2)});
}

TEST_CASE("negative cycles off the source hit the cap without stabilizing") {
    Algebra alg = minplus_degenerate();
    Graph g(4);
    g.add_edge(0, 1, Elem::of(0));
    g.add_edge(1, 2, Elem::of(-1));
    g.add_edge(2, 3, Elem::of(-1));
    g.add_edge(3, 1, Elem::of(-1));
    auto res = solve(g, 0, alg, kDefaultGamma, 2, 8);
    CHECK_FALSE(res.trace.stabilized);
    CHECK_FALSE(res.trace.iterations_to_fixpoint.has_value());
    CHECK(check_descending(res.trace, alg));
}

TEST_CASE("solve result is the least fixed point on a finite carrier") {
    Algebra alg = and_chain();
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_minplus_dag(rng, 6);  // weights reinterpreted below
        Graph gb(g.vertex_count());
        for (int u = 0; u < g.vertex_count(); ++u) {
            for (const auto& [v, w] : g.out(u)) gb.add_edge(u, v, Elem::of(w.v % 2));
        }
        const int n = gb.vertex_count();
        auto res = solve(gb, 0, alg, kDefaultGamma, 2, 2 * n);
        REQUIRE(res.trace.stabilized);
        // a fixed point:
        CHECK(relax_step(gb, 0, alg, kDefaultGamma, res.valuation).first == res.valuation);
        // below every fixed point with the seed pinned at the source:
        for (int mask = 0; mask < (1 << n); ++mask) {
            Valuation h(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) h[static_cast<std::size_t>(v)] = Elem::of((mask >> v) & 1);
            if (!(h[0] == alg.seed)) continue;
            if (relax_step(gb, 0, alg, kDefaultGamma, h).first == h) {
                CHECK(valuation_leq(alg, res.valuation, h));
            }
        }
    }
}

TEST_CASE("windows examined per iteration equals the arc count") {
    Algebra alg = minplus_degenerate();
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        Graph g = random_minplus_dag(rng, 6);
        auto res = solve(g, 0, alg, kDefaultGamma, 2, 2 * g.vertex_count());
        auto [fv, fa] = window_counts(g);
        for (auto w : res.trace.windows_examined) CHECK(w == fa);
    }
}

TEST_CASE("propagation radius: two edges per iteration") {
    Algebra alg = minplus_degenerate();
    std::mt19937_64 rng(59);
    for (int i = 0; i < 20; ++i) {
        Graph g = random_minplus_dag(rng, 6);
        auto res = solve(g, 0, alg, kDefaultGamma, 2, 2 * g.vertex_count());
        auto even = shortest_even_walk(g, 0);
        for (std::size_t step = 0; step < res.trace.snapshots.size(); ++step) {
            for (int v = 0; v < g.vertex_count(); ++v) {
                const int d = even[static_cast<std::size_t>(v)];
                if (v == 0) continue;
                if (d < 0 || d > 2 * static_cast<int>(step)) {
                    CHECK(res.trace.snapshots[step][static_cast<std::size_t>(v)] ==
                          alg.top);
                }
            }
        }
    }
}

TEST_CASE("wide windows: width-4 solve matches the wide oracle on paths") {
    Algebra alg = minplus_degenerate();
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<std::int64_t> wd(0, 9);
    for (int len : {4, 8, 9, 11}) {
        Graph g(len + 1);
        for (int u = 0; u < len; ++u) g.add_edge(u, u + 1, Elem::of(wd(rng)));
        auto res = solve(g, 0, alg, kDefaultGamma, 4, 2 * g.vertex_count());
        auto oracle = oracle_opt_wide(alg, g, 0, len, 4);
        for (int v = 0; v <= len; ++v) {
            CHECK(res.valuation[static_cast<std::size_t>(v)] ==
                  oracle[static_cast<std::size_t>(v)]);
        }
    }
}

TEST_CASE("parallel relax agrees with sequential") {
    Algebra alg = minplus_degenerate();
    std::mt19937_64 rng(3);
    Graph g(80);
    for (int u = 0; u < 80; ++u) {
        for (int v = u + 1; v < 80; ++v) {
            if (rng() % 10 == 0) g.add_edge(u, v, Elem::of(static_cast<std::int64_t>(rng() % 10)));
        }
    }
    auto seq = solve(g, 0, alg, kDefaultGamma, 2, 200, false);
    auto par = solve(g, 0, alg, kDefaultGamma, 2, 200, true);
    CHECK(seq.valuation == par.valuation);
    CHECK(seq.trace.iterations_to_fixpoint == par.trace.iterations_to_fixpoint);
}
