#pragma once

#include "tpa/algebra.hpp"
#include "tpa/instances.hpp"
#include "tpa/separation.hpp"
#include "tpa/solver.hpp"

#include "json.hpp"

namespace tpa {

inline nlohmann::ordered_json witness_json(const Algebra& alg, const Witness& w) {
    nlohmann::ordered_json j;
    auto inputs = nlohmann::ordered_json::array();
    for (const Elem& e : w.inputs) inputs.push_back(render_weight(alg, e));
    j["inputs"] = std::move(inputs);
    j["lhs"] = render_weight(alg, w.lhs);
    j["rhs"] = render_weight(alg, w.rhs);
    j["detail"] = w.detail;
    return j;
}

inline nlohmann::ordered_json report_json(const Algebra& alg, const AxiomReport& r) {
    nlohmann::ordered_json j;
    j["axiom"] = r.axiom;
    j["passed"] = r.passed;
    j["checked"] = r.checked;
    j["exhaustive"] = r.exhaustive;
    if (r.witness) j["witness"] = witness_json(alg, *r.witness);
    return j;
}

inline nlohmann::ordered_json factorization_json(const FactorizationReport& r) {
    nlohmann::ordered_json j;
    j["searched"] = r.searched;
    j["associative_count"] = r.associative_count;
    j["witnesses"] = r.witnesses;
    j["exhaustive"] = r.exhaustive;
    return j;
}

inline nlohmann::ordered_json ttgs_search_json(const TTGSSearchReport& r) {
    nlohmann::ordered_json j;
    j["carrier_size"] = r.carrier_size;
    j["semilattices_tried"] = r.semilattices_tried;
    j["ternary_ops_tried"] = r.ternary_ops_tried;
    j["combinations"] = r.combinations;
    j["exhaustive"] = r.exhaustive;
    j["seed"] = r.seed;
    j["budget"] = r.budget;
    auto found = nlohmann::ordered_json::array();
    for (const auto& f : r.found) {
        nlohmann::ordered_json item;
        item["aggregate"] = f.aggregate;
        item["ternary"] = f.ternary;
        found.push_back(std::move(item));
    }
    j["found"] = std::move(found);
    return j;
}

inline nlohmann::ordered_json valuation_json(const Algebra& alg, const Valuation& f) {
    auto arr = nlohmann::ordered_json::array();
    for (const Elem& e : f) arr.push_back(render_state(alg, e));
    return arr;
}

}  // namespace tpa
