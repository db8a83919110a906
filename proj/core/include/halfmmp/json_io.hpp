#pragma once

#include <string>

#include "halfmmp/catalog.hpp"
#include "halfmmp/cusp.hpp"
#include "halfmmp/divisor_graph.hpp"
#include "halfmmp/fibration.hpp"
#include "halfmmp/surface.hpp"

namespace halfmmp {

inline constexpr const char* kSchema = "halfmmp/1";

// Throws ParseError on malformed JSON or schema violations, and
// Error{GenusFormulaViolated} / Error{InadmissibleSequence} on invalid curves.
CurveDescriptor parse_curve(const std::string& text);
CatalogEntry parse_catalog_entry(const std::string& text);
FibrationData parse_fibration(const std::string& text);
DivisorGraph parse_graph(const std::string& text);
SurfaceState parse_state(const std::string& text);

std::string to_json(const CurveDescriptor& c);
std::string to_json(const CatalogEntry& e);
std::string to_json(const FibrationData& f);
std::string to_json(const DivisorGraph& g);
std::string to_json(const SurfaceState& s);

std::string read_file(const std::string& path);

}  // namespace halfmmp
