#pragma once

#include "lcstruct/assembly.hpp"
#include "lcstruct/cech.hpp"
#include "lcstruct/monomial.hpp"
#include "lcstruct/rational.hpp"

#include <json.hpp>

#include <string>

namespace lcstruct {

using Json = nlohmann::ordered_json;

// Ideal schema:
//   {"variables": n, "generators": [{"coefficient": "<int>", "exponents": [..]}]}
// Malformed JSON and schema violations throw Error(BadInput) with the line
// and column where known; invariant violations throw the validate() errors.
CMonomialIdeal parse_ideal(const std::string& text);
Json ideal_to_json(const CMonomialIdeal& ideal);

Json pelem_to_json(const PElem& e);
PElem pelem_from_json(const Json& j, const Int& p);

// {"i", "degree", "alpha", "locals", "bass", "flags"}; with all_spots also
// "spots" and "rational_ranks".
Json report_to_json(const StructureReport& report, bool all_spots = false);
StructureReport report_from_json(const Json& j);

Json slice_to_json(const CechSlice& slice);
// Sign-pattern label -> alpha.
Json alpha_table_to_json(const AlphaTable& table);
Json scan_to_json(const std::vector<BlockScan>& scan);

}  // namespace lcstruct
