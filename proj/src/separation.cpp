#include "tpa/separation.hpp"

#include <stdexcept>

#include "tpa/instances.hpp"

namespace tpa {

namespace {

using Table = std::vector<std::size_t>;

std::size_t agg_at(const Table& a, std::size_t n, std::size_t x, std::size_t y) {
    return a[x * n + y];
}

std::size_t tern_at(const Table& t, std::size_t n, std::size_t x, std::size_t y,
                    std::size_t z) {
    return t[(x * n + y) * n + z];
}

bool next_table(Table& t, std::size_t n) {
    for (std::size_t i = t.size(); i-- > 0;) {
        if (++t[i] < n) return true;
        t[i] = 0;
    }
    return false;
}

bool binary_associative(const Table& b, std::size_t n) {
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (agg_at(b, n, agg_at(b, n, x, y), z) !=
                    agg_at(b, n, x, agg_at(b, n, y, z)))
                    return false;
    return true;
}

bool factors_through(const Table& t, const Table& b, std::size_t n) {
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (tern_at(t, n, x, y, z) != agg_at(b, n, agg_at(b, n, x, y), z))
                    return false;
    return true;
}

bool ternary_associative(const Table& t, std::size_t n) {
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t v = 0; v < n; ++v) {
                        const std::size_t a =
                            tern_at(t, n, tern_at(t, n, x, y, z), u, v);
                        const std::size_t b =
                            tern_at(t, n, x, tern_at(t, n, y, z, u), v);
                        const std::size_t c =
                            tern_at(t, n, x, y, tern_at(t, n, z, u, v));
                        if (a != b || b != c) return false;
                    }
    return true;
}

// Canonical order under agg: x <= y iff x (+) y = x.
bool table_leq(const Table& agg, std::size_t n, std::size_t x, std::size_t y) {
    return agg_at(agg, n, x, y) == x;
}

bool table_monotone(const Table& t, const Table& agg, std::size_t n) {
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || !table_leq(agg, n, a, b)) continue;
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    if (!table_leq(agg, n, tern_at(t, n, a, p, q), tern_at(t, n, b, p, q)))
                        return false;
                    if (!table_leq(agg, n, tern_at(t, n, p, a, q), tern_at(t, n, p, b, q)))
                        return false;
                    if (!table_leq(agg, n, tern_at(t, n, p, q, a), tern_at(t, n, p, q, b)))
                        return false;
                }
        }
    return true;
}

bool table_distributive(const Table& t, const Table& agg, std::size_t n) {
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t xp = 0; xp < n; ++xp) {
            const std::size_t s = agg_at(agg, n, x, xp);
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    if (tern_at(t, n, s, y, z) !=
                        agg_at(agg, n, tern_at(t, n, x, y, z), tern_at(t, n, xp, y, z)))
                        return false;
                    if (tern_at(t, n, y, s, z) !=
                        agg_at(agg, n, tern_at(t, n, y, x, z), tern_at(t, n, y, xp, z)))
                        return false;
                    if (tern_at(t, n, y, z, s) !=
                        agg_at(agg, n, tern_at(t, n, y, z, x), tern_at(t, n, y, z, xp)))
                        return false;
                }
        }
    return true;
}

FactorizationReport factor_search_raw(const Table& t, std::size_t n) {
    FactorizationReport rep;
    rep.exhaustive = true;
    Table b(n * n, 0);
    do {
        ++rep.searched;
        if (!binary_associative(b, n)) continue;
        ++rep.associative_count;
        if (factors_through(t, b, n)) rep.witnesses.push_back(b);
    } while (next_table(b, n));
    return rep;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

}  // namespace

std::vector<std::vector<std::size_t>> enumerate_bounded_semilattices(std::size_t n) {
    std::vector<Table> out;
    Table b(n * n, 0);
    do {
        bool ok = true;
        for (std::size_t x = 0; ok && x < n; ++x) {
            if (agg_at(b, n, x, x) != x) ok = false;
            for (std::size_t y = 0; ok && y < n; ++y) {
                if (agg_at(b, n, x, y) != agg_at(b, n, y, x)) ok = false;
            }
        }
        if (ok && !binary_associative(b, n)) ok = false;
        if (ok) {
            // need an order maximum: some t with a (+) t = a for all a
            bool has_max = false;
            for (std::size_t t = 0; t < n && !has_max; ++t) {
                bool all = true;
                for (std::size_t a = 0; a < n; ++a) {
                    if (agg_at(b, n, a, t) != a) { all = false; break; }
                }
                has_max = all;
            }
            ok = has_max;
        }
        if (ok) out.push_back(b);
    } while (next_table(b, n));
    return out;
}

FactorizationReport search_binary_factorization(const Algebra& alg, const std::string& gamma,
                                                std::uint64_t budget) {
    if (!alg.finite()) {
        throw std::invalid_argument("factorization search needs a finite carrier");
    }
    const std::size_t n = alg.size();
    const std::uint64_t total = pow_u64(n, n * n);
    if (total > budget) {
        throw std::invalid_argument("factorization search would enumerate " +
                                    std::to_string(total) + " tables, over the budget of " +
                                    std::to_string(budget));
    }
    auto it = alg.table->ternary.find(gamma);
    if (it == alg.table->ternary.end()) {
        throw std::invalid_argument("unknown gamma label '" + gamma + "'");
    }
    return factor_search_raw(it->second, n);
}

SeparationResult verify_separation(const Algebra& alg, const std::string& gamma) {
    SeparationResult res;
    res.associativity = check_ternary_associativity(alg, gamma);
    res.factorization = search_binary_factorization(alg, gamma);
    return res;
}

SeparationResult verify_separation() {
    return verify_separation(bool_f2(), kDefaultGamma);
}

TTGSSearchReport search_nondegenerate_ttgs(std::size_t carrier_size, std::uint64_t budget,
                                           std::uint64_t seed) {
    if (carrier_size < 1 || carrier_size > 3) {
        throw std::invalid_argument("search supports carrier sizes 1..3");
    }
    TTGSSearchReport rep;
    rep.carrier_size = carrier_size;
    rep.seed = seed;
    rep.budget = budget;

    const std::size_t n = carrier_size;
    auto semis = enumerate_bounded_semilattices(n);
    rep.semilattices_tried = semis.size();

    // Candidate ternary tables: full enumeration for n <= 2, seeded samples
    // for n = 3 (3^27 tables cannot be enumerated).
    std::vector<Table> candidates;
    if (n <= 2) {
        rep.exhaustive = true;
        Table t(n * n * n, 0);
        do {
            candidates.push_back(t);
        } while (next_table(t, n));
    } else {
        rep.exhaustive = false;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> d(0, n - 1);
        candidates.reserve(budget);
        for (std::uint64_t i = 0; i < budget; ++i) {
            Table t(n * n * n);
            for (auto& cell : t) cell = d(rng);
            candidates.push_back(std::move(t));
        }
    }
    rep.ternary_ops_tried = candidates.size();
    rep.combinations = rep.semilattices_tried * rep.ternary_ops_tried;

    for (const Table& t : candidates) {
        if (!ternary_associative(t, n)) continue;  // cheapest gate first
        bool factored_checked = false;
        bool factors = false;
        for (const Table& agg : semis) {
            if (!table_monotone(t, agg, n)) continue;
            if (!table_distributive(t, agg, n)) continue;
            if (!factored_checked) {
                factors = !factor_search_raw(t, n).witnesses.empty();
                factored_checked = true;
            }
            if (!factors) rep.found.push_back({agg, t});
        }
    }
    return rep;
}

}  // namespace tpa
