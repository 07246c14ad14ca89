#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tpa/algebra.hpp"

namespace tpa {

/// Exhaustive search for binary operations factoring a ternary table.
struct FactorizationReport {
    std::uint64_t searched = 0;           // binary tables enumerated
    std::uint64_t associative_count = 0;  // of those, associative ones
    std::vector<std::vector<std::size_t>> witnesses;  // flat n*n tables
    bool exhaustive = false;
};

struct SeparationResult {
    AxiomReport associativity;
    FactorizationReport factorization;

    bool separated() const {
        return associativity.passed && factorization.witnesses.empty();
    }
};

/// Re-proves the {0,1} separation: the complemented-XOR ternary operation is
/// associative on all 32 quintuples and none of the 16 binary operations
/// factors it.
SeparationResult verify_separation();

/// Same check against an arbitrary finite table algebra.
SeparationResult verify_separation(const Algebra& alg, const std::string& gamma);

/// Enumerates all n^(n^2) binary tables on an n-element carrier, keeping
/// associative ones satisfying [x,y,z] = (x*y)*z on all triples.
FactorizationReport search_binary_factorization(const Algebra& alg, const std::string& gamma,
                                                std::uint64_t budget = 20000);

struct TTGSSearchReport {
    std::size_t carrier_size = 0;
    std::uint64_t semilattices_tried = 0;
    std::uint64_t ternary_ops_tried = 0;
    std::uint64_t combinations = 0;
    struct Found {
        std::vector<std::size_t> aggregate;  // flat n*n
        std::vector<std::size_t> ternary;    // flat n^3
    };
    std::vector<Found> found;  // pass all ordered axioms, factor through nothing
    bool exhaustive = false;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
};

/// Finite-model search for non-degenerate ordered instances. Size <= 2 is
/// fully exhaustive; size 3 enumerates semilattices exhaustively and samples
/// ternary tables up to the budget with a seeded generator.
TTGSSearchReport search_nondegenerate_ttgs(std::size_t carrier_size, std::uint64_t budget,
                                           std::uint64_t seed = 0);

/// All semilattice tables on an n-element carrier that have an order
/// maximum (commutative, idempotent, associative), flat row-major.
std::vector<std::vector<std::size_t>> enumerate_bounded_semilattices(std::size_t n);

}  // namespace tpa
