#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "trop/alignment.hpp"
#include "trop/catalog.hpp"
#include "trop/cone.hpp"
#include "trop/contraction.hpp"
#include "trop/curve.hpp"

namespace trop {

using json = nlohmann::json;

json curve_to_json(const TropicalCurve& c);
TropicalCurve curve_from_json(const json& j);

json functional_to_json(const Functional& f, const std::vector<std::string>& gens);
Functional functional_from_json(const json& j, const std::vector<std::string>& gens);

json cone_to_json(const Cone& c, const std::vector<std::string>& gens);
json fan_to_json(const Fan& f, const std::vector<std::string>& gens);
json central_fan_to_json(const CentralFan& f, const std::vector<std::string>& gens);
json smyth_to_json(const SmythGraph& g);
SmythGraph smyth_from_json(const json& j);
json catalog_to_json(const Catalog& c);
Catalog catalog_from_json(const json& j);

std::string curve_to_dot(const TropicalCurve& c);
std::string smyth_to_dot(const SmythGraph& g);

/// Byte-deterministic rendering: sorted keys, 2-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace trop
