#include "tpa/algebra.hpp"

#include <memory>
#include <stdexcept>

namespace tpa {

bool Algebra::in_carrier(Elem a) const {
    if (table) {
        return !a.inf && a.v >= 0 && static_cast<std::size_t>(a.v) < table->size;
    }
    return true;  // min-plus: every extended integer is a carrier element
}

void Algebra::require_in_carrier(Elem a) const {
    if (!in_carrier(a)) {
        throw std::domain_error("element outside carrier of algebra '" + name + "'");
    }
}

const TernaryFn& Algebra::op(const std::string& gamma) const {
    auto it = ternary_ops.find(gamma);
    if (it == ternary_ops.end()) {
        throw std::invalid_argument("unknown gamma label '" + gamma + "'");
    }
    return it->second;
}

Elem Algebra::tern(const std::string& gamma, Elem x, Elem y, Elem z) const {
    return op(gamma)(x, y, z);
}

std::vector<Elem> Algebra::elements() const {
    if (!table) {
        throw std::logic_error("elements() requires a finite carrier");
    }
    std::vector<Elem> out;
    out.reserve(table->size);
    for (std::size_t i = 0; i < table->size; ++i) {
        out.push_back(Elem::of(static_cast<std::int64_t>(i)));
    }
    return out;
}

Elem Algebra::sample(std::mt19937_64& rng) const {
    if (table) {
        std::uniform_int_distribution<std::size_t> d(0, table->size - 1);
        return Elem::of(static_cast<std::int64_t>(d(rng)));
    }
    return sample_fn(rng);
}

bool leq(const Algebra& alg, Elem a, Elem b) {
    alg.require_in_carrier(a);
    alg.require_in_carrier(b);
    return alg.aggregate(a, b) == a;
}

Elem aggregate_all(const Algebra& alg, std::span<const Elem> items) {
    Elem acc = alg.top;
    for (const Elem& e : items) {
        alg.require_in_carrier(e);
        acc = alg.aggregate(acc, e);
    }
    return acc;
}

namespace {

// Draws `count` elements; for finite carriers this is uniform over indices,
// for min-plus the instance sampler decides.
std::vector<Elem> draw(const Algebra& alg, std::mt19937_64& rng, std::size_t count) {
    std::vector<Elem> out(count);
    for (auto& e : out) e = alg.sample(rng);
    return out;
}

std::mt19937_64 seeded_rng() { return std::mt19937_64(0x7e51a17ull); }

}  // namespace

AxiomReport check_semilattice(const Algebra& alg, std::uint64_t sample_budget) {
    AxiomReport rep;
    rep.axiom = "semilattice";
    const auto& add = alg.aggregate;
    auto violate = [&](std::vector<Elem> in, Elem l, Elem r, const std::string& what) {
        rep.passed = false;
        rep.witness = Witness{std::move(in), l, r, what};
    };
    if (alg.finite()) {
        const auto elems = alg.elements();
        const std::size_t n = elems.size();
        if (static_cast<std::uint64_t>(n) * n * n <= sample_budget) {
            rep.exhaustive = true;
            for (Elem a : elems) {
                ++rep.checked;
                if (Elem l = add(a, a); !(l == a)) {
                    violate({a}, l, a, "idempotency");
                    return rep;
                }
            }
            for (Elem a : elems) {
                for (Elem b : elems) {
                    ++rep.checked;
                    Elem l = add(a, b), r = add(b, a);
                    if (!(l == r)) {
                        violate({a, b}, l, r, "commutativity");
                        return rep;
                    }
                }
            }
            for (Elem a : elems) {
                for (Elem b : elems) {
                    for (Elem c : elems) {
                        ++rep.checked;
                        Elem l = add(add(a, b), c), r = add(a, add(b, c));
                        if (!(l == r)) {
                            violate({a, b, c}, l, r, "associativity");
                            return rep;
                        }
                    }
                }
            }
            return rep;
        }
    }
    auto rng = seeded_rng();
    for (std::uint64_t i = 0; i < sample_budget; ++i) {
        auto t = draw(alg, rng, 3);
        Elem a = t[0], b = t[1], c = t[2];
        ++rep.checked;
        if (Elem l = add(a, a); !(l == a)) {
            violate({a}, l, a, "idempotency");
            return rep;
        }
        if (Elem l = add(a, b), r = add(b, a); !(l == r)) {
            violate({a, b}, l, r, "commutativity");
            return rep;
        }
        if (Elem l = add(add(a, b), c), r = add(a, add(b, c)); !(l == r)) {
            violate({a, b, c}, l, r, "associativity");
            return rep;
        }
    }
    return rep;
}

AxiomReport check_ternary_associativity(const Algebra& alg, const std::string& gamma,
                                        std::uint64_t sample_budget) {
    AxiomReport rep;
    rep.axiom = "ternary-associativity";
    const auto& t = alg.op(gamma);
    auto probe = [&](Elem x, Elem y, Elem z, Elem u, Elem v) -> bool {
        ++rep.checked;
        Elem a = t(t(x, y, z), u, v);
        Elem b = t(x, t(y, z, u), v);
        Elem c = t(x, y, t(z, u, v));
        if (a == b && b == c) return true;
        rep.passed = false;
        rep.witness = Witness{{x, y, z, u, v}, a, (a == b) ? c : b,
                              "three-way nesting disagreement"};
        return false;
    };
    if (alg.finite()) {
        rep.exhaustive = true;
        const auto elems = alg.elements();
        for (Elem x : elems)
            for (Elem y : elems)
                for (Elem z : elems)
                    for (Elem u : elems)
                        for (Elem v : elems)
                            if (!probe(x, y, z, u, v)) return rep;
        return rep;
    }
    auto rng = seeded_rng();
    for (std::uint64_t i = 0; i < sample_budget; ++i) {
        auto q = draw(alg, rng, 5);
        if (!probe(q[0], q[1], q[2], q[3], q[4])) return rep;
    }
    return rep;
}

AxiomReport check_monotonicity(const Algebra& alg, const std::string& gamma,
                               std::uint64_t sample_budget) {
    AxiomReport rep;
    rep.axiom = "monotonicity";
    const auto& t = alg.op(gamma);
    // Substitute b for a (a <= b) in coordinate i; the result must not drop.
    auto probe = [&](Elem a, Elem b, Elem p, Elem q) -> bool {
        const Elem lo[3][3] = {{a, p, q}, {p, a, q}, {p, q, a}};
        const Elem hi[3][3] = {{b, p, q}, {p, b, q}, {p, q, b}};
        for (int i = 0; i < 3; ++i) {
            ++rep.checked;
            Elem l = t(lo[i][0], lo[i][1], lo[i][2]);
            Elem h = t(hi[i][0], hi[i][1], hi[i][2]);
            if (!leq(alg, l, h)) {
                rep.passed = false;
                rep.witness = Witness{{a, b, p, q}, l, h,
                                      "coordinate " + std::to_string(i + 1) +
                                          " not monotone"};
                return false;
            }
        }
        return true;
    };
    if (alg.finite()) {
        rep.exhaustive = true;
        const auto elems = alg.elements();
        for (Elem a : elems)
            for (Elem b : elems) {
                if (a == b || !leq(alg, a, b)) continue;
                for (Elem p : elems)
                    for (Elem q : elems)
                        if (!probe(a, b, p, q)) return rep;
            }
        return rep;
    }
    auto rng = seeded_rng();
    for (std::uint64_t i = 0; i < sample_budget; ++i) {
        auto s = draw(alg, rng, 4);
        Elem a = s[0], b = s[1];
        if (!leq(alg, a, b)) std::swap(a, b);
        if (!probe(a, b, s[2], s[3])) return rep;
    }
    return rep;
}

AxiomReport check_distributivity(const Algebra& alg, const std::string& gamma,
                                 std::uint64_t sample_budget) {
    AxiomReport rep;
    rep.axiom = "distributivity";
    const auto& t = alg.op(gamma);
    const auto& add = alg.aggregate;
    auto probe = [&](Elem x, Elem xp, Elem y, Elem z) -> bool {
        Elem s = add(x, xp);
        const Elem lhs[3] = {t(s, y, z), t(y, s, z), t(y, z, s)};
        const Elem rhs[3] = {add(t(x, y, z), t(xp, y, z)), add(t(y, x, z), t(y, xp, z)),
                             add(t(y, z, x), t(y, z, xp))};
        for (int i = 0; i < 3; ++i) {
            ++rep.checked;
            if (!(lhs[i] == rhs[i])) {
                rep.passed = false;
                rep.witness = Witness{{x, xp, y, z}, lhs[i], rhs[i],
                                      "coordinate " + std::to_string(i + 1) +
                                          " not distributive"};
                return false;
            }
        }
        return true;
    };
    if (alg.finite()) {
        rep.exhaustive = true;
        const auto elems = alg.elements();
        for (Elem x : elems)
            for (Elem xp : elems)
                for (Elem y : elems)
                    for (Elem z : elems)
                        if (!probe(x, xp, y, z)) return rep;
        return rep;
    }
    auto rng = seeded_rng();
    for (std::uint64_t i = 0; i < sample_budget; ++i) {
        auto s = draw(alg, rng, 4);
        if (!probe(s[0], s[1], s[2], s[3])) return rep;
    }
    return rep;
}

AxiomReport check_factorization_consistency(const Algebra& alg, const std::string& gamma,
                                            std::uint64_t sample_budget) {
    AxiomReport rep;
    rep.axiom = "factorization-consistency";
    if (!alg.factorization) {
        rep.passed = true;
        return rep;
    }
    const auto& t = alg.op(gamma);
    const auto& f = alg.factorization;
    auto probe = [&](Elem x, Elem y, Elem z) -> bool {
        ++rep.checked;
        Elem l = t(x, y, z);
        Elem r = f(f(x, y), z);
        if (l == r) return true;
        rep.passed = false;
        rep.witness = Witness{{x, y, z}, l, r, "declared factorization mismatch"};
        return false;
    };
    if (alg.finite()) {
        rep.exhaustive = true;
        const auto elems = alg.elements();
        for (Elem x : elems)
            for (Elem y : elems)
                for (Elem z : elems)
                    if (!probe(x, y, z)) return rep;
        return rep;
    }
    auto rng = seeded_rng();
    for (std::uint64_t i = 0; i < sample_budget; ++i) {
        auto s = draw(alg, rng, 3);
        if (!probe(s[0], s[1], s[2])) return rep;
    }
    return rep;
}

Algebra make_table_algebra(TableData data, std::string name) {
    const std::size_t n = data.size;
    if (n == 0) throw std::invalid_argument("empty carrier");
    auto check_index = [n](std::size_t i, const char* where) {
        if (i >= n) {
            throw std::invalid_argument(std::string("index out of range in ") + where);
        }
    };
    if (data.aggregate.size() != n * n) {
        throw std::invalid_argument("aggregate table has wrong cardinality");
    }
    for (std::size_t i : data.aggregate) check_index(i, "aggregate table");
    if (data.ternary.empty()) {
        throw std::invalid_argument("at least one ternary operation is required");
    }
    for (const auto& [gamma, tab] : data.ternary) {
        if (tab.size() != n * n * n) {
            throw std::invalid_argument("ternary table '" + gamma +
                                        "' has wrong cardinality");
        }
        for (std::size_t i : tab) check_index(i, "ternary table");
    }
    check_index(data.top, "top");
    check_index(data.seed, "seed");
    if (data.factorization) {
        if (data.factorization->size() != n * n) {
            throw std::invalid_argument("factorization table has wrong cardinality");
        }
        for (std::size_t i : *data.factorization) check_index(i, "factorization table");
    }

    Algebra alg;
    alg.name = std::move(name);
    alg.top = Elem::of(static_cast<std::int64_t>(data.top));
    alg.seed = Elem::of(static_cast<std::int64_t>(data.seed));

    // The lambdas capture shared table storage; Algebra copies stay valid.
    auto agg = std::make_shared<std::vector<std::size_t>>(data.aggregate);
    alg.aggregate = [agg, n](Elem a, Elem b) {
        return Elem::of(static_cast<std::int64_t>(
            (*agg)[static_cast<std::size_t>(a.v) * n + static_cast<std::size_t>(b.v)]));
    };
    for (const auto& [gamma, tab] : data.ternary) {
        auto t = std::make_shared<std::vector<std::size_t>>(tab);
        alg.ternary_ops[gamma] = [t, n](Elem x, Elem y, Elem z) {
            return Elem::of(static_cast<std::int64_t>(
                (*t)[(static_cast<std::size_t>(x.v) * n + static_cast<std::size_t>(y.v)) * n +
                     static_cast<std::size_t>(z.v)]));
        };
    }
    if (data.factorization) {
        auto f = std::make_shared<std::vector<std::size_t>>(*data.factorization);
        alg.factorization = [f, n](Elem a, Elem b) {
            return Elem::of(static_cast<std::int64_t>(
                (*f)[static_cast<std::size_t>(a.v) * n + static_cast<std::size_t>(b.v)]));
        };
    }
    alg.table = std::move(data);
    return alg;
}

}  // namespace tpa
