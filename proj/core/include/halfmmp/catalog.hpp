#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "halfmmp/cusp.hpp"
#include "halfmmp/mmp.hpp"

namespace halfmmp {

struct CatalogEntry {
  CurveDescriptor curve;
  std::string provenance;
  // Frozen regression values (rho, e_self_int, p2, tau, s, tau_star, nodes).
  std::map<std::string, long> expected;
  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

// Entries compiled into the library.
const std::vector<CatalogEntry>& bundled_catalog();
std::optional<CatalogEntry> find_bundled(const std::string& name);

// HALFMMP_CATALOG_DIR if set, else the source tree's data/catalog.
std::string default_catalog_dir();
// All *.json entries of a directory, sorted by file name. Throws ParseError.
std::vector<CatalogEntry> load_catalog_dir(const std::string& dir);

// Compares the frozen values of an entry against a computed run tree.
std::vector<Finding> check_expected(const CatalogEntry& e, const RunTree& t);

}  // namespace halfmmp
