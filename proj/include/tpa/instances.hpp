#pragma once

#include <string>

#include "tpa/algebra.hpp"

#include "json.hpp"

namespace tpa {

/// Min-plus over integers + formal +inf with the degenerate ternary sum.
/// Aggregation is min, top is +inf, seed is 0, factorization is +.
Algebra minplus_degenerate();

/// The {0,1} instance [x,y,z] = complement of XOR(x,y,z). Ternary associative
/// but triple-system only: shipped with AND as the default order carrier
/// (or OR when use_or is set) and flagged so the solver gate refuses it.
Algebra bool_f2(bool use_or = false);

/// Loads a finite table algebra from the JSON table format. Rejects tables
/// failing the semilattice axioms, a top that is not the order maximum, or
/// an inconsistent declared factorization.
Algebra load_table(const std::string& path);
Algebra table_from_json(const nlohmann::json& doc, const std::string& name);

/// Serializes a finite table algebra back to the table format.
nlohmann::ordered_json serialize_table(const Algebra& alg);

/// Resolves a CLI selector: "minplus", "boolf2", or "table:<path>".
Algebra resolve_instance(const std::string& selector);

/// Parses a weight literal: decimal integer or "inf" for min-plus,
/// a carrier index for table algebras.
Elem parse_weight(const Algebra& alg, const nlohmann::json& literal);

/// Renders an element as a weight literal ("inf" for the min-plus top).
nlohmann::ordered_json render_weight(const Algebra& alg, Elem e);

/// Renders a lattice state value; the top element becomes the string "top".
nlohmann::ordered_json render_state(const Algebra& alg, Elem e);

}  // namespace tpa
