#pragma once

#include <json.hpp>

#include "povs/imaginaries.hpp"
#include "povs/measure.hpp"

namespace povs {

using Json = nlohmann::json;

// Elements are objects keyed by radicand ("0" for the rational part) with
// rational strings as values, e.g. {"0": "-1", "2": "1/2"}.
Json to_json(const ModelElement& m);
Json to_json(const QuotientElement& w);
Json to_json(const Endpoint& e);
Json to_json(const CosetSet& c);
Json to_json(const Decomposition& d);
Json to_json(const UnarySetCode& c);
Json to_json(const FunctionCode& c);
Json to_json(const MeasureValue& m, unsigned digits = 20);
Json to_json(const Assignment& sigma);
Json to_json(const BucketReport& r);

ModelElement element_from_json(const Json& j);
QuotientElement quotient_from_json(const Json& j);
Endpoint endpoint_from_json(const Json& j);
Decomposition decomposition_from_json(const Json& j);

} // namespace povs
