#pragma once

#include <span>
#include <string>
#include <vector>

#include "tpa/algebra.hpp"
#include "tpa/graph.hpp"

namespace tpa {

/// Window fold of an odd-length weight sequence (k >= 3):
///   Fold(w_1..w_k) = [Fold(w_1..w_{k-2}), w_{k-1}, w_k], base [w_1,w_2,w_3].
/// Each weight is consumed exactly once; uses (k-1)/2 ternary applications.
Elem fold_odd(const Algebra& alg, const std::string& gamma, std::span<const Elem> ws);

/// The uncorrected recursion Fold(w_1..w_k) = [Fold(w_1..w_{k-1}), w_{k-1}, w_k],
/// which consumes w_{k-1} twice. Kept for comparison only.
Elem fold_uncorrected(const Algebra& alg, const std::string& gamma,
                        std::span<const Elem> ws);

/// Left fold of an even-length sequence from a seed, two weights per step:
///   state <- [state, w_{2i+1}, w_{2i+2}]. Uses k/2 ternary applications.
Elem seeded_fold(const Algebra& alg, const std::string& gamma, Elem seed,
                 std::span<const Elem> ws);

/// Wide-window seeded fold: consumes `width` weights per step through the
/// instance's (width+1)-ary operation. Sequence length must be a positive
/// multiple of width.
Elem seeded_fold_wide(const Algebra& alg, Elem seed, std::span<const Elem> ws, int width);

/// A full ternary contraction of leaf positions: internal nodes have three
/// children covering consecutive spans, leaves appear left to right.
struct ParenNode {
    int leaf = -1;  // leaf position (0-based) when >= 0
    std::vector<ParenNode> kids;

    bool is_leaf() const { return leaf >= 0; }
};

/// All distinct admissible parenthesizations of k leaves (k odd, >= 1).
std::vector<ParenNode> enumerate_parenthesizations(int k);

Elem eval_parenthesization(const Algebra& alg, const std::string& gamma,
                           const ParenNode& tree, std::span<const Elem> ws);

/// Fold cost of a directed path given as a vertex sequence (odd edge count >= 3).
Elem path_cost(const Algebra& alg, const std::string& gamma, const Graph& g,
               std::span<const int> path);

struct OptResult {
    Elem even_opt;
    Elem odd_opt;
};

/// Brute-force path enumeration oracle. Aggregates seeded folds over
/// even-length paths and window folds over odd-length paths (k >= 3) from s
/// to t, up to max_edges edges. Simple paths by default; allow_revisits
/// enumerates bounded walks instead. even_opt at t == s includes the empty
/// walk, matching the solver's pinned source value.
OptResult oracle_opt(const Algebra& alg, const std::string& gamma, const Graph& g,
                     int s, int t, int max_edges, bool allow_revisits = false);

/// One-pass variant covering every target vertex.
std::vector<OptResult> oracle_opt_all(const Algebra& alg, const std::string& gamma,
                                      const Graph& g, int s, int max_edges,
                                      bool allow_revisits = false);

/// Wide-window oracle: aggregates seeded_fold_wide over paths whose edge
/// count is a positive multiple of width; the source gets the seed.
std::vector<Elem> oracle_opt_wide(const Algebra& alg, const Graph& g, int s,
                                  int max_edges, int width);

}  // namespace tpa
