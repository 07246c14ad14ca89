#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpa/algebra.hpp"
#include "tpa/graph.hpp"

namespace tpa {

/// Total map from vertices to carrier values, ordered pointwise.
using Valuation = std::vector<Elem>;

bool valuation_leq(const Algebra& alg, const Valuation& f, const Valuation& g);

struct RelaxationTrace {
    std::vector<Valuation> snapshots;               // f(0), f(1), ...
    std::vector<std::uint64_t> windows_examined;    // per iteration
    bool stabilized = false;
    std::optional<int> iterations_to_fixpoint;      // nullopt: cap reached
};

/// Seed at the source, top everywhere else.
Valuation init_state(const Graph& g, int s, const Algebra& alg);

/// One application of the relaxation operator: the source keeps the seed,
/// every other vertex aggregates all width-edge windows ending there,
/// [f(u_0), w(e_1), ..., w(e_width)]. Empty window sets give top.
std::pair<Valuation, std::uint64_t> relax_step(const Graph& g, int s, const Algebra& alg,
                                               const std::string& gamma, const Valuation& f,
                                               int window_width = 2, bool parallel = false);

struct SolveResult {
    Valuation valuation;
    RelaxationTrace trace;
};

/// Kleene iteration from init_state until two consecutive valuations are
/// equal or max_iterations is hit. The descending-chain invariant is
/// asserted each step.
SolveResult solve(const Graph& g, int s, const Algebra& alg, const std::string& gamma,
                  int window_width, int max_iterations, bool parallel = false);

bool check_descending(const RelaxationTrace& trace, const Algebra& alg);

/// Samples ordered valuation pairs f <= h and verifies the operator
/// preserves the order.
AxiomReport operator_monotonicity_probe(const Graph& g, int s, const Algebra& alg,
                                        const std::string& gamma, int samples,
                                        std::uint64_t seed = 0x5eed);

struct IterationBoundReport {
    bool applicable = false;  // false for cyclic inputs
    int bound_vertices = 0;      // |V| - 2
    int bound_halved = 0;     // ceil(L/2), L = longest path edge count
    std::optional<int> observed;
    bool within = false;
};

IterationBoundReport iteration_bound_report(const Graph& g, const RelaxationTrace& trace);

}  // namespace tpa
