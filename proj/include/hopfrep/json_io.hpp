#pragma once

#include "json.hpp"

#include "hopfrep/catalog.hpp"
#include "hopfrep/fusion.hpp"
#include "hopfrep/solver.hpp"

namespace hopfrep {

// All emitted documents carry {"schema": "hopfrep/1"}; nlohmann::json keeps
// object keys sorted, so dumps are byte-deterministic.
inline constexpr const char* kSchemaTag = "hopfrep/1";

using Json = nlohmann::json;

// {"order": N, "entries": [[literal, ...], ...]}
Json mat_to_json(const Mat& a, unsigned order);
Mat mat_from_json(const Json& doc);

// {"schema", "m", "N", "i", "lambda", "dim", "g", "h", "x", "y"}
Json rep_to_json(const Representation& rep);
Representation rep_from_json(const Json& doc);

Json violations_to_json(const std::vector<Violation>& violations);

// {"chi(0,0)": 1, ...}
Json multiset_to_json(const std::map<IrrepLabel, unsigned>& parts);

// One entry per catalog representation: label, dim, restriction, rep.
Json catalog_to_json(const InstancePtr& inst, const std::vector<CatalogEntry>& entries);

// {"status", "solutions", "classes", "certificates", "residual",
//  "free_vars", "exploratory", "notes"}; each solution carries its branch
// signature, the Burnside verdict and the full representation.
Json family_to_json(const SolutionFamily& family);

Json fusion_to_json(const FusionTable& table, const RingReport& report);
// One row per (j,k): "j,k,decomposition".
std::string fusion_to_csv(const FusionTable& table);

// Decomposition-string form "chi(0,0) + 2*rho(1)"; "0" when empty.
std::string multiset_to_string(const std::map<IrrepLabel, unsigned>& parts);

} // namespace hopfrep
