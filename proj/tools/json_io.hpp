#pragma once

#include <json.hpp>

#include "trt/oracle.hpp"
#include "trt/ramsey.hpp"
#include "trt/turan.hpp"
#include "trt/witness.hpp"

namespace trt::cli {

using nlohmann::json;

/// {"description", "order", "components": [{"clique": k} | {"degree_sequence": [...]}]}
json witness_json(const WitnessDescriptor& w);

json ex_json(const ExResult& r, bool with_graph6);
json ramsey_json(const RamseyAnswer& a, bool with_graph6);
json lemma_json(const LemmaReport& report);

}  // namespace trt::cli
