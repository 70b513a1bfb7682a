#pragma once

#include <json.hpp>

#include "psl2jac/evidence.hpp"
#include "psl2jac/families.hpp"

namespace psl2jac {

using Json = nlohmann::ordered_json;

// Every report object carries "schema": 1 and a "kind" tag naming its
// layout in schemas/report.schema.json.

Json census_to_json(uint64_t q, const CycleCensus& census);
Json evidence_to_json(const EvidenceReport& rep);
Json pipeline_to_json(const PipelineReport& rep);

// polynomial file format: JSON array of coefficient strings "num/den",
// lowest degree first
PolyQ poly_from_json(const Json& j);
PolyQ poly_from_json_file(const std::string& path);

}  // namespace psl2jac
