#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace tpa {

/// A carrier element. Exactly one representation is used per algebra:
/// finite table algebras store an index in `v` (inf is never set),
/// the min-plus instance stores an extended integer (finite or formal +inf).
/// Equality is exact; there are no floating-point carriers.
struct Elem {
    std::int64_t v = 0;
    bool inf = false;

    friend bool operator==(const Elem&, const Elem&) = default;

    static Elem of(std::int64_t x) { return Elem{x, false}; }
    static Elem infinite() { return Elem{0, true}; }
};

/// A concrete violation of an axiom: the inputs plus both evaluated sides.
struct Witness {
    std::vector<Elem> inputs;
    Elem lhs;
    Elem rhs;
    std::string detail;
};

struct AxiomReport {
    std::string axiom;
    bool passed = true;
    std::uint64_t checked = 0;
    bool exhaustive = false;
    std::optional<Witness> witness;
};

/// Raw operation tables of a finite algebra, kept for serialization.
/// Binary tables are row-major (a*n + b); ternary tables are flat n^3
/// arrays in x-major, y-middle, z-minor order.
struct TableData {
    std::size_t size = 0;
    std::vector<std::size_t> aggregate;
    std::map<std::string, std::vector<std::size_t>> ternary;
    std::size_t top = 0;
    std::size_t seed = 0;
    std::optional<std::vector<std::size_t>> factorization;
};

using BinaryFn = std::function<Elem(Elem, Elem)>;
using TernaryFn = std::function<Elem(Elem, Elem, Elem)>;
using NaryFn = std::function<Elem(std::span<const Elem>)>;
using SampleFn = std::function<Elem(std::mt19937_64&)>;

/// An algebra instance: carrier, idempotent aggregation, Gamma-indexed
/// ternary operations, distinguished top and seed. Instances are immutable
/// after construction and freely shareable across threads.
class Algebra {
public:
    std::string name;
    std::optional<TableData> table;  // present iff the carrier is finite
    BinaryFn aggregate;
    std::map<std::string, TernaryFn> ternary_ops;
    NaryFn nary;             // wide-window operation; null when unavailable
    Elem top;
    Elem seed;
    BinaryFn factorization;  // declared binary factor, null when none
    bool ordered = true;     // false: triple-system only, solver gate refuses
    SampleFn sample_fn;      // sampler for infinite carriers

    bool finite() const { return table.has_value(); }
    std::size_t size() const { return table ? table->size : 0; }
    bool in_carrier(Elem a) const;
    void require_in_carrier(Elem a) const;

    const TernaryFn& op(const std::string& gamma) const;
    Elem tern(const std::string& gamma, Elem x, Elem y, Elem z) const;

    /// All carrier elements in canonical order (finite carriers only).
    std::vector<Elem> elements() const;
    Elem sample(std::mt19937_64& rng) const;
};

/// Canonical order: a <= b iff a (+) b = a. The aggregation is the meet.
bool leq(const Algebra& alg, Elem a, Elem b);

/// Left-fold of the aggregation; the empty sequence yields top.
Elem aggregate_all(const Algebra& alg, std::span<const Elem> items);

AxiomReport check_semilattice(const Algebra& alg, std::uint64_t sample_budget = 1000);
AxiomReport check_ternary_associativity(const Algebra& alg, const std::string& gamma,
                                        std::uint64_t sample_budget = 1000);
AxiomReport check_monotonicity(const Algebra& alg, const std::string& gamma,
                               std::uint64_t sample_budget = 1000);
AxiomReport check_distributivity(const Algebra& alg, const std::string& gamma,
                                 std::uint64_t sample_budget = 1000);

/// Declared factorization consistency: [x,y,z] = (x (*) y) (*) z.
AxiomReport check_factorization_consistency(const Algebra& alg, const std::string& gamma,
                                            std::uint64_t sample_budget = 1000);

/// Builds an algebra from explicit finite tables. Validates cardinalities
/// and index ranges only; axiom checking is the caller's business.
Algebra make_table_algebra(TableData data, std::string name = "table");

/// Default gamma label used when an instance declares a single operation.
inline const std::string kDefaultGamma = "g0";

}  // namespace tpa
