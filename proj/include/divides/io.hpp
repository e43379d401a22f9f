#pragma once

#include <string>

#include "divides/region.hpp"
#include "divides/tracer.hpp"
#include "json.hpp"

namespace divides {

// {"stairs": [[a,b],...], "offset": [dx,dy]}; extra keys are ignored on input.
nlohmann::json region_to_json(const Region& region);
Region region_from_json(const nlohmann::json& j);  // ParseError on bad shape

nlohmann::json divide_to_json(const Divide& divide);

// Region, curve, double points and concave points as a standalone SVG file.
// Output depends only on the arguments.
std::string render_svg(const Region& region, const Divide& divide);

}  // namespace divides
