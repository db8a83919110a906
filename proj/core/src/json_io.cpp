#include "halfmmp/json_io.hpp"

#include <fstream>
#include <sstream>

#include "halfmmp/error.hpp"
#include "json_detail.hpp"

namespace halfmmp {

namespace detail {

Json graph_json(const DivisorGraph& g) {
  Json comps = Json::array();
  for (ComponentId id : g.ids()) {
    const Component& c = g.component(id);
    Json j;
    j["id"] = to_int(id);
    j["self_int"] = c.self_int;
    j["role"] = to_string(c.role);
    if (!c.label.empty()) j["label"] = c.label;
    comps.push_back(std::move(j));
  }
  Json pts = Json::array();
  for (const auto& p : g.points()) {
    Json j;
    Json ids = Json::array();
    for (ComponentId c : p.comps) ids.push_back(to_int(c));
    j["components"] = std::move(ids);
    j["contacts"] = p.contacts;
    pts.push_back(std::move(j));
  }
  Json out;
  out["components"] = std::move(comps);
  out["points"] = std::move(pts);
  return out;
}

Json state_json(const SurfaceState& s) {
  Json j;
  j["rho"] = s.rho();
  j["e"] = to_int(s.marked_e());
  j["step"] = s.step_index();
  j["graph"] = graph_json(s.graph());
  return j;
}

Json curve_json(const CurveDescriptor& c) {
  Json j;
  j["schema"] = kSchema;
  j["name"] = c.name;
  j["degree"] = c.degree;
  Json cusps = Json::array();
  for (const auto& cu : c.cusps) cusps.push_back(Json{{"multiplicity_sequence", cu.multiplicity_sequence}});
  j["cusps"] = std::move(cusps);
  if (c.metadata.log_general_type) j["log_general_type"] = *c.metadata.log_general_type;
  if (c.metadata.structural_cstst_fibration)
    j["structural_cstst_fibration"] = *c.metadata.structural_cstst_fibration;
  if (!c.metadata.notes.empty()) j["notes"] = c.metadata.notes;
  return j;
}

Json finding_json(const Finding& f) {
  Json j;
  j["check"] = f.check;
  j["location"] = f.location;
  j["verdict"] = to_string(f.verdict);
  j["lhs"] = f.lhs;
  j["relation"] = f.relation;
  j["rhs"] = f.rhs;
  j["citation"] = f.citation;
  Json in = Json::object();
  for (const auto& [k, v] : f.inputs) in[k] = v;
  j["inputs"] = std::move(in);
  if (f.advisory) j["advisory"] = true;
  if (!f.note.empty()) j["note"] = f.note;
  return j;
}

}  // namespace detail

namespace {

using detail::Json;

[[noreturn]] void fail(const std::string& what) { throw ParseError(what, 1, 1); }

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError(msg, line, col);
  }
}

void check_schema(const Json& j) {
  if (!j.is_object()) fail("top level value must be an object");
  if (j.contains("schema") && j["schema"] != kSchema)
    fail("unsupported schema '" + j["schema"].dump() + "', expected " + kSchema);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing key '") + key + "'");
  return j[key];
}

long get_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) fail(std::string("'") + key + "' must be an integer");
  return v.get<long>();
}

std::string get_string(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_string()) fail(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::optional<bool> get_opt_bool(const Json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_boolean()) fail(std::string("'") + key + "' must be a boolean");
  return j[key].get<bool>();
}

std::vector<int> get_int_array(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_array()) fail(std::string("'") + key + "' must be an array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) fail(std::string("'") + key + "' must contain integers");
    out.push_back(x.get<int>());
  }
  return out;
}

CurveDescriptor curve_from(const Json& j) {
  CurveDescriptor c;
  c.name = get_string(j, "name");
  c.degree = static_cast<int>(get_int(j, "degree"));
  const Json& cusps = require(j, "cusps");
  if (!cusps.is_array()) fail("'cusps' must be an array");
  for (const auto& cu : cusps) c.cusps.push_back({get_int_array(cu, "multiplicity_sequence")});
  c.metadata.log_general_type = get_opt_bool(j, "log_general_type");
  c.metadata.structural_cstst_fibration = get_opt_bool(j, "structural_cstst_fibration");
  if (j.contains("notes")) c.metadata.notes = get_string(j, "notes");
  return c;
}

void validate_or_throw(const CurveDescriptor& c) {
  for (const auto& f : validate_curve(c)) {
    if (f.advisory || f.verdict != Verdict::Fail) continue;
    if (f.check == "curve.admissible_sequence")
      throw Error(ErrorCode::InadmissibleSequence, f.location + ": " + f.note);
    if (f.check == "curve.genus_formula")
      throw Error(ErrorCode::GenusFormulaViolated,
                  "sum of delta invariants " + f.lhs + " != (d-1)(d-2)/2 = " + f.rhs);
    throw Error(ErrorCode::GenusFormulaViolated, f.check + ": " + f.lhs + " " + f.relation + " " + f.rhs);
  }
}

DivisorGraph graph_from(const Json& j) {
  DivisorGraph g;
  const Json& comps = require(j, "components");
  if (!comps.is_array()) fail("'components' must be an array");
  try {
    for (const auto& c : comps) {
      Component comp;
      comp.id = component_id(static_cast<int>(get_int(c, "id")));
      comp.self_int = static_cast<int>(get_int(c, "self_int"));
      comp.role = c.contains("role") ? role_from_string(get_string(c, "role")) : Role::Exceptional;
      if (c.contains("label")) comp.label = get_string(c, "label");
      g.insert_component(comp);
    }
    if (j.contains("points")) {
      for (const auto& p : j["points"]) {
        std::vector<ComponentId> ids;
        for (int v : get_int_array(p, "components")) ids.push_back(component_id(v));
        std::vector<int> contacts = p.contains("contacts") ? get_int_array(p, "contacts")
                                                           : std::vector<int>(ids.size() * (ids.size() - 1) / 2, 1);
        g.add_point(ids, contacts);
      }
    }
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  } catch (const std::out_of_range& e) {
    fail(e.what());
  }
  return g;
}

}  // namespace

CurveDescriptor parse_curve(const std::string& text) {
  Json j = parse_text(text);
  check_schema(j);
  CurveDescriptor c = curve_from(j);
  validate_or_throw(c);
  return c;
}

CatalogEntry parse_catalog_entry(const std::string& text) {
  Json j = parse_text(text);
  check_schema(j);
  CatalogEntry e;
  e.curve = curve_from(j);
  validate_or_throw(e.curve);
  if (j.contains("provenance")) e.provenance = get_string(j, "provenance");
  if (j.contains("expected")) {
    const Json& ex = j["expected"];
    if (!ex.is_object()) fail("'expected' must be an object");
    for (auto it = ex.begin(); it != ex.end(); ++it) {
      if (!it.value().is_number_integer()) fail("expected values must be integers");
      e.expected[it.key()] = it.value().get<long>();
    }
  }
  return e;
}

DivisorGraph parse_graph(const std::string& text) {
  Json j = parse_text(text);
  check_schema(j);
  return graph_from(j.contains("graph") ? j["graph"] : j);
}

SurfaceState parse_state(const std::string& text) {
  Json j = parse_text(text);
  check_schema(j);
  DivisorGraph g = graph_from(require(j, "graph"));
  const ComponentId e = component_id(static_cast<int>(get_int(j, "e")));
  if (!g.has(e)) fail("marked curve E is not a component");
  SurfaceState s(std::move(g), static_cast<int>(get_int(j, "rho")), e);
  if (j.contains("step")) s.set_step_index(static_cast<int>(get_int(j, "step")));
  return s;
}

FibrationData parse_fibration(const std::string& text) {
  Json j = parse_text(text);
  check_schema(j);
  FibrationData d;
  d.h = static_cast<int>(get_int(j, "h"));
  d.nu = static_cast<int>(get_int(j, "nu"));
  d.sigma = static_cast<int>(get_int(j, "sigma"));
  d.n = static_cast<int>(get_int(j, "n"));
  if (j.contains("cusps")) d.cusps = static_cast<int>(get_int(j, "cusps"));
  if (j.contains("open_fiber_euler")) d.open_fiber_euler = get_int_array(j, "open_fiber_euler");
  if (j.contains("fibers")) {
    for (const auto& f : j["fibers"]) {
      FiberGraph fg;
      fg.graph = graph_from(require(f, "graph"));
      fg.l_f = component_id(static_cast<int>(get_int(f, "l_f")));
      std::vector<ComponentId> h;
      if (f.contains("horizontal"))
        for (int v : get_int_array(f, "horizontal")) h.push_back(component_id(v));
      fg.horizontal = make_subdivisor(h);
      fg.l_f_in_boundary = get_opt_bool(f, "l_f_in_boundary").value_or(false);
      d.fibers.push_back(std::move(fg));
    }
  }
  return d;
}

std::string to_json(const CurveDescriptor& c) { return detail::curve_json(c).dump(2) + "\n"; }

std::string to_json(const CatalogEntry& e) {
  Json j = detail::curve_json(e.curve);
  if (!e.provenance.empty()) j["provenance"] = e.provenance;
  if (!e.expected.empty()) {
    Json ex = Json::object();
    for (const auto& [k, v] : e.expected) ex[k] = v;
    j["expected"] = std::move(ex);
  }
  return j.dump(2) + "\n";
}

std::string to_json(const FibrationData& d) {
  Json j;
  j["schema"] = kSchema;
  j["h"] = d.h;
  j["nu"] = d.nu;
  j["sigma"] = d.sigma;
  j["n"] = d.n;
  if (d.cusps) j["cusps"] = *d.cusps;
  j["open_fiber_euler"] = d.open_fiber_euler;
  Json fibers = Json::array();
  for (const auto& f : d.fibers) {
    Json x;
    x["graph"] = detail::graph_json(f.graph);
    x["l_f"] = to_int(f.l_f);
    Json h = Json::array();
    for (ComponentId c : f.horizontal) h.push_back(to_int(c));
    x["horizontal"] = std::move(h);
    x["l_f_in_boundary"] = f.l_f_in_boundary;
    fibers.push_back(std::move(x));
  }
  j["fibers"] = std::move(fibers);
  return j.dump(2) + "\n";
}

std::string to_json(const DivisorGraph& g) {
  Json j;
  j["schema"] = kSchema;
  Json body = detail::graph_json(g);
  j["components"] = body["components"];
  j["points"] = body["points"];
  return j.dump(2) + "\n";
}

std::string to_json(const SurfaceState& s) {
  Json j;
  j["schema"] = kSchema;
  const Json body = detail::state_json(s);
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace halfmmp
