#pragma once

#include <json.hpp>

#include "halfmmp/catalog.hpp"
#include "halfmmp/finding.hpp"
#include "halfmmp/surface.hpp"

namespace halfmmp::detail {

using Json = nlohmann::ordered_json;

Json graph_json(const DivisorGraph& g);
Json state_json(const SurfaceState& s);
Json curve_json(const CurveDescriptor& c);
Json finding_json(const Finding& f);

}  // namespace halfmmp::detail
