#pragma once

#include <string>

#include <json.hpp>

#include "pricing/hardness.hpp"
#include "pricing/market.hpp"

namespace pricing {

// All parsers throw ParseError on malformed input. Bundles are 1-based
// item-index lists in files, bitmasks in memory; W is 1-based in files.

nlohmann::json load_json_file(const std::string& path);

ProductDistribution instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const ProductDistribution& dist);

Menu menu_from_json(const nlohmann::json& j);
nlohmann::json menu_to_json(const Menu& menu);

CompInstance comp_from_json(const nlohmann::json& j);
nlohmann::json comp_to_json(const CompInstance& inst);

// Hard-instance files carry the source CompStar data and t; parameters
// and the distribution are recomputed on load and cross-checked when
// present.
HardInstance hard_from_json(const nlohmann::json& j);
nlohmann::json hard_to_json(const HardInstance& hi);

// Bundle mask <-> sorted 1-based index list.
nlohmann::json bundle_to_json(Bundle bundle);
Bundle bundle_from_json(const nlohmann::json& j, std::size_t max_items = 32);

Integer integer_from_json(const nlohmann::json& j);
nlohmann::json integer_to_json(const Integer& value);

}  // namespace pricing
