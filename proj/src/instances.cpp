#include "tpa/instances.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tpa {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Elem mp_min(Elem a, Elem b) {
    if (a.inf) return b;
    if (b.inf) return a;
    return Elem::of(std::min(a.v, b.v));
}

Elem mp_add2(Elem a, Elem b) {
    if (a.inf || b.inf) return Elem::infinite();
    return Elem::of(a.v + b.v);
}

std::string witness_text(const Witness& w) {
    std::ostringstream os;
    os << w.detail << "; inputs:";
    for (const Elem& e : w.inputs) {
        if (e.inf) os << " inf";
        else os << ' ' << e.v;
    }
    os << "; lhs=" << (w.lhs.inf ? std::string("inf") : std::to_string(w.lhs.v))
       << " rhs=" << (w.rhs.inf ? std::string("inf") : std::to_string(w.rhs.v));
    return os.str();
}

}  // namespace

Algebra minplus_degenerate() {
    Algebra alg;
    alg.name = "minplus";
    alg.aggregate = mp_min;
    alg.ternary_ops[kDefaultGamma] = [](Elem x, Elem y, Elem z) {
        return mp_add2(mp_add2(x, y), z);
    };
    alg.nary = [](std::span<const Elem> xs) {
        Elem acc = Elem::of(0);
        for (const Elem& x : xs) acc = mp_add2(acc, x);
        return acc;
    };
    alg.top = Elem::infinite();
    alg.seed = Elem::of(0);
    alg.factorization = mp_add2;
    alg.sample_fn = [](std::mt19937_64& rng) {
        // Small integers with an occasional +inf so order extremes get hit.
        if (rng() % 16 == 0) return Elem::infinite();
        std::uniform_int_distribution<std::int64_t> d(-10, 20);
        return Elem::of(d(rng));
    };
    return alg;
}

Algebra bool_f2(bool use_or) {
    TableData d;
    d.size = 2;
    d.aggregate = use_or ? std::vector<std::size_t>{0, 1, 1, 1}
                         : std::vector<std::size_t>{0, 0, 0, 1};
    std::vector<std::size_t> tern(8);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y)
            for (std::size_t z = 0; z < 2; ++z)
                tern[(x * 2 + y) * 2 + z] = 1 ^ x ^ y ^ z;
    d.ternary[kDefaultGamma] = std::move(tern);
    // Order maximum: 1 under AND, 0 under OR.
    d.top = use_or ? 0 : 1;
    d.seed = 0;
    Algebra alg = make_table_algebra(std::move(d), use_or ? "boolf2-or" : "boolf2");
    alg.ordered = false;  // triple-system only
    return alg;
}

Algebra table_from_json(const json& doc, const std::string& name) {
    TableData d;
    try {
        d.size = doc.at("carrier_size").get<std::size_t>();
        for (const auto& row : doc.at("aggregate")) {
            for (const auto& cell : row) d.aggregate.push_back(cell.get<std::size_t>());
        }
        for (const auto& [gamma, flat] : doc.at("ternary").items()) {
            std::vector<std::size_t> t;
            for (const auto& cell : flat) t.push_back(cell.get<std::size_t>());
            d.ternary[gamma] = std::move(t);
        }
        d.top = doc.at("top").get<std::size_t>();
        d.seed = doc.at("seed").get<std::size_t>();
        if (doc.contains("factorization") && !doc["factorization"].is_null()) {
            std::vector<std::size_t> f;
            for (const auto& row : doc["factorization"]) {
                for (const auto& cell : row) f.push_back(cell.get<std::size_t>());
            }
            d.factorization = std::move(f);
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed algebra table: ") + e.what());
    }

    Algebra alg = make_table_algebra(std::move(d), name);

    auto lattice = check_semilattice(alg, alg.size() * alg.size() * alg.size() + 1);
    if (!lattice.passed) {
        throw std::invalid_argument("aggregate is not a semilattice: " +
                                    witness_text(*lattice.witness));
    }
    for (Elem a : alg.elements()) {
        if (!(alg.aggregate(a, alg.top) == a)) {
            throw std::invalid_argument(
                "declared top is not the order maximum: witness element " +
                std::to_string(a.v));
        }
    }
    if (alg.factorization) {
        auto fac = check_factorization_consistency(alg, alg.ternary_ops.begin()->first);
        if (!fac.passed) {
            throw std::invalid_argument("declared factorization is inconsistent: " +
                                        witness_text(*fac.witness));
        }
    }
    return alg;
}

Algebra load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open algebra table '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw std::invalid_argument("algebra table parse error: " + std::string(e.what()));
    }
    return table_from_json(doc, "table:" + path);
}

ordered_json serialize_table(const Algebra& alg) {
    if (!alg.finite()) throw std::logic_error("only finite table algebras serialize");
    const TableData& d = *alg.table;
    const std::size_t n = d.size;
    ordered_json doc;
    doc["carrier_size"] = n;
    auto square = [n](const std::vector<std::size_t>& flat) {
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < n; ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t j = 0; j < n; ++j) row.push_back(flat[i * n + j]);
            rows.push_back(std::move(row));
        }
        return rows;
    };
    doc["aggregate"] = square(d.aggregate);
    ordered_json tern;
    for (const auto& [gamma, flat] : d.ternary) tern[gamma] = flat;
    doc["ternary"] = std::move(tern);
    doc["top"] = d.top;
    doc["seed"] = d.seed;
    if (d.factorization) doc["factorization"] = square(*d.factorization);
    return doc;
}

Algebra resolve_instance(const std::string& selector) {
    if (selector == "minplus" || selector == "minplus-degenerate") {
        return minplus_degenerate();
    }
    if (selector == "boolf2" || selector == "bool-f2") return bool_f2();
    if (selector.rfind("table:", 0) == 0) return load_table(selector.substr(6));
    throw std::invalid_argument("unknown algebra selector '" + selector + "'");
}

Elem parse_weight(const Algebra& alg, const json& literal) {
    Elem e;
    if (literal.is_number_integer()) {
        e = Elem::of(literal.get<std::int64_t>());
    } else if (literal.is_string()) {
        const std::string s = literal.get<std::string>();
        if (s == "inf") {
            if (alg.finite()) {
                throw std::invalid_argument("'inf' is not a valid table carrier index");
            }
            return Elem::infinite();
        }
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid weight literal '" + s + "'");
        }
        if (pos != s.size()) {
            throw std::invalid_argument("invalid weight literal '" + s + "'");
        }
        e = Elem::of(v);
    } else {
        throw std::invalid_argument("weight literal must be an integer or string");
    }
    if (!alg.in_carrier(e)) {
        throw std::invalid_argument("weight " + std::to_string(e.v) +
                                    " outside carrier of '" + alg.name + "'");
    }
    return e;
}

ordered_json render_weight(const Algebra& alg, Elem e) {
    if (!alg.finite() && e.inf) return "inf";
    return e.v;
}

ordered_json render_state(const Algebra& alg, Elem e) {
    if (e == alg.top) return "top";
    return e.v;
}

}  // namespace tpa
