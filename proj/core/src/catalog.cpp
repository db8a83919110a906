#include "halfmmp/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

#include "halfmmp/error.hpp"
#include "halfmmp/json_io.hpp"

#ifndef HALFMMP_DEFAULT_CATALOG_DIR
#define HALFMMP_DEFAULT_CATALOG_DIR "data/catalog"
#endif

namespace halfmmp {

namespace {

CatalogEntry entry(std::string name, int degree, std::vector<std::vector<int>> cusps, std::optional<bool> lgt,
                   std::string notes, std::string provenance, std::map<std::string, long> expected) {
  CatalogEntry e;
  e.curve.name = std::move(name);
  e.curve.degree = degree;
  for (auto& seq : cusps) e.curve.cusps.push_back({std::move(seq)});
  e.curve.metadata.log_general_type = lgt;
  e.curve.metadata.notes = std::move(notes);
  e.provenance = std::move(provenance);
  e.expected = std::move(expected);
  return e;
}

}  // namespace

const std::vector<CatalogEntry>& bundled_catalog() {
  static const std::vector<CatalogEntry> kEntries = {
      entry("cuspidal-cubic", 3, {{2}}, false, "y^2 z = x^3",
            "deg(2K + E) < 0 in the plane, so the complement is not of log general type",
            {{"rho", 4}, {"e_self_int", 3}, {"p2", 1}, {"tau", 2}, {"s", 1}, {"tau_star", 0}, {"nodes", 1}}),
      entry("tricuspidal-quartic", 4, {{2}, {2}, {2}}, true, "Steiner quartic, three A2 cusps",
            "Wakabayashi: three or more cusps force log general type",
            {{"rho", 10}, {"e_self_int", -2}, {"p2", 0}, {"tau", 6}, {"s", 3}, {"tau_star", 0}, {"nodes", 1}}),
      entry("unicuspidal-quartic", 4, {{2, 2, 2}}, true, "one A6 cusp",
            "kappa = 2 as recorded in the classification of rational cuspidal quartics; not derived here",
            {{"rho", 6}, {"e_self_int", 2}, {"p2", 0}, {"tau", 2}, {"s", 1}, {"tau_star", 0}, {"nodes", 1}}),
      entry("bicuspidal-quartic", 4, {{2, 2}, {2}}, true, "A4 and A2 cusps",
            "kappa = 2 as recorded in the classification of rational cuspidal quartics; not derived here",
            {{"rho", 8}, {"e_self_int", 0}, {"p2", 0}, {"tau", 4}, {"s", 2}, {"tau_star", 0}, {"nodes", 1}}),
      entry("e6-quartic", 4, {{3}}, false, "y^3 z = x^4",
            "binomial curve: the complement is C*-fibered, kappa = -infinity",
            {{"rho", 5}, {"e_self_int", 4}, {"p2", 0}, {"tau", 3}, {"s", 1}, {"tau_star", 1}, {"nodes", 1}}),
      entry("unicuspidal-quintic", 5, {{4}}, false, "y^4 z = x^5",
            "binomial curve: the complement is C*-fibered, kappa = -infinity",
            {{"rho", 6}, {"e_self_int", 5}, {"p2", -1}, {"tau", 4}, {"s", 1}, {"tau_star", 2}, {"nodes", 1}}),
      entry("four-cuspidal-quintic", 5, {{2, 2, 2}, {2}, {2}, {2}}, true, "A6 and three A2 cusps",
            "Fenske: the rational cuspidal quintic with four cusps; Wakabayashi gives log general type",
            {{"rho", 15}, {"e_self_int", -7}, {"p2", 0}, {"tau", 8}, {"s", 4}, {"tau_star", 0}, {"nodes", 1}}),
      entry("quintic-3-3", 5, {{3, 3}}, std::nullopt, "one cusp with multiplicity sequence (3,3)",
            "Fenske lists a unicuspidal quintic of this type; Kodaira dimension left open here",
            {{"rho", 6}, {"e_self_int", 4}, {"p2", -1}, {"tau", 3}, {"s", 1}, {"tau_star", 1}, {"nodes", 3}}),
  };
  return kEntries;
}

std::optional<CatalogEntry> find_bundled(const std::string& name) {
  for (const auto& e : bundled_catalog())
    if (e.curve.name == name) return e;
  return std::nullopt;
}

std::string default_catalog_dir() {
  if (const char* env = std::getenv("HALFMMP_CATALOG_DIR"); env && *env) return env;
  return HALFMMP_DEFAULT_CATALOG_DIR;
}

std::vector<CatalogEntry> load_catalog_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& de : fs::directory_iterator(dir, ec))
    if (de.is_regular_file() && de.path().extension() == ".json") files.push_back(de.path());
  if (ec) throw ParseError("cannot read catalog directory " + dir + ": " + ec.message(), 0, 0);
  std::sort(files.begin(), files.end());
  std::vector<CatalogEntry> out;
  for (const auto& f : files) out.push_back(parse_catalog_entry(read_file(f.string())));
  return out;
}

std::vector<Finding> check_expected(const CatalogEntry& e, const RunTree& t) {
  const RunContext& ctx = t.context;
  const std::map<std::string, Rational> got = {
      {"rho", ctx.res.log.rho()},
      {"e_self_int", ctx.res.log.graph().self_int(ctx.res.e)},
      {"p2", ctx.p2},
      {"tau", ctx.tau},
      {"s", ctx.s},
      {"tau_star", ctx.tau_star},
      {"nodes", static_cast<long>(t.nodes.size())},
  };
  std::vector<Finding> out;
  for (const auto& [key, want] : e.expected) {
    Finding f;
    f.check = "catalog.expected." + key;
    f.location = e.curve.name;
    f.relation = "=";
    f.rhs = std::to_string(want);
    f.citation = "frozen regression value";
    auto it = got.find(key);
    if (it == got.end()) {
      f.verdict = Verdict::Fail;
      f.note = "unknown key";
    } else {
      f.lhs = it->second.str();
      f.verdict = it->second == Rational(want) ? Verdict::Pass : Verdict::Fail;
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace halfmmp
