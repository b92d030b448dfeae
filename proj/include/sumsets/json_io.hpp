#pragma once

#include <string>

#include "json.hpp"

#include "sumsets/bounds.hpp"
#include "sumsets/harness.hpp"
#include "sumsets/structure.hpp"

namespace sumsets {

// All emitters use nlohmann::ordered_json so key order is stable and parsed
// output re-serializes byte-identically.
using ojson = nlohmann::ordered_json;

ojson form_to_json(const StructureForm& form);
ojson bound_report_to_json(const BoundReport& report);

ojson witness_to_json(const WitnessRecord& record);
ojson counterexample_to_json(const CounterexampleRecord& record);

ojson campaign_spec_to_json(const CampaignSpec& spec);
CampaignSpec campaign_spec_from_json(const ojson& j);

} // namespace sumsets
