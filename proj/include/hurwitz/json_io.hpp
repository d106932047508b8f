#pragma once

#include <string>

#include <json.hpp>

#include "hurwitz/branch_datum.hpp"
#include "hurwitz/complexity.hpp"
#include "hurwitz/permutation.hpp"
#include "hurwitz/realizability.hpp"

namespace hurwitz {

using json = nlohmann::json;

// {"genus": G, "degree": D, "partitions": [[...], ...]}
json datum_to_json(const BranchDatum& datum);
// Validates on parse; throws std::invalid_argument on malformed input.
BranchDatum datum_from_json(const json& j);

// {"degree": D, "perms": [[images...], ...]} with 0-based image arrays
json tuple_to_json(const PermutationTuple& t);
PermutationTuple tuple_from_json(const json& j);

std::string status_name(Status s);

// {"status": ..., "witness": ...|null, "nodes_explored": N}
json result_to_json(const RealizabilityResult& r);

json report_to_json(const ComplexityReport& r);

}  // namespace hurwitz
