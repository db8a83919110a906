#include "halfmmp/report.hpp"

#include <iomanip>
#include <sstream>

#include "halfmmp/error.hpp"
#include "halfmmp/json_io.hpp"
#include "json_detail.hpp"

namespace halfmmp {

using detail::Json;

std::string to_dot(const DivisorGraph& g, const Subdivisor& comps, const std::string& name) {
  const Subdivisor vs = comps.empty() ? make_subdivisor(g.ids()) : comps;
  std::ostringstream os;
  os << "graph " << std::quoted(name) << " {\n";
  for (ComponentId c : vs) {
    const Component& comp = g.component(c);
    os << "  v" << to_int(c) << " [label=\"" << to_int(c) << ":" << comp.self_int << "\"";
    if (comp.role == Role::E) os << ", shape=box";
    if (comp.role == Role::Auxiliary) os << ", style=dashed";
    os << "];\n";
  }
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const int k = g.intersection(vs[i], vs[j]);
      if (k == 0) continue;
      os << "  v" << to_int(vs[i]) << " -- v" << to_int(vs[j]);
      if (k >= 2) os << " [label=\"" << k << "\", penwidth=2]";
      os << ";\n";
    }
  os << "}\n";
  return os.str();
}

namespace {

Json context_json(const RunContext& ctx) {
  const SurfaceState& x = ctx.res.log;
  const SurfaceState& x0 = ctx.res.weak;
  Json j;
  j["rho"] = x.rho();
  j["boundary_components"] = x.boundary().size();
  j["e_self_int"] = x.graph().self_int(ctx.res.e);
  j["weak_rho"] = x0.rho();
  j["weak_e_self_int"] = x0.graph().self_int(x0.marked_e());
  j["p2"] = ctx.p2.str();
  j["c"] = ctx.c;
  j["c0"] = ctx.c0;
  j["c1"] = ctx.c1;
  j["c0_ordinary"] = ctx.c0p;
  j["tau"] = ctx.tau;
  j["s"] = ctx.s;
  j["tau_star"] = ctx.tau_star;
  Json cusps = Json::array();
  for (const auto& r : ctx.res.cusps) {
    Json c;
    c["multiplicity_sequence"] = r.cusp.multiplicity_sequence;
    c["blowup_multiplicities"] = r.multiplicities;
    c["weak_blowups"] = r.weak_blowups;
    c["tau"] = r.tau;
    c["s"] = r.s;
    c["tau_star"] = r.tau_star;
    std::vector<int> chain;
    for (ComponentId id : r.order) chain.push_back(-r.q.self_int(id));
    c["exceptional_weights"] = chain;
    cusps.push_back(std::move(c));
  }
  j["cusps"] = std::move(cusps);
  return j;
}

Json ids_json(const std::vector<ComponentId>& v) {
  Json a = Json::array();
  for (ComponentId c : v) a.push_back(to_int(c));
  return a;
}

Json node_json(const RunNode& n, const ReportOptions& opts) {
  Json j;
  j["path"] = n.path;
  j["parent"] = n.parent;
  j["class"] = to_string(n.cls);
  j["n"] = n.counters.n;
  j["n0"] = n.counters.n0;
  j["n1"] = n.counters.n1;
  if (n.site) {
    j["site"] = Json{{"V", to_int(n.site->v)},
                     {"W", to_int(n.site->w)},
                     {"meets_E", n.site->meets_e},
                     {"V_is_tip_of_D", n.site->v_is_tip_of_d}};
    if (n.step_type) j["step_type"] = to_string(*n.step_type);
    if (n.minor_exception) j["minor_exception"] = true;
    j["contracted"] = ids_json(n.contracted);
  }
  if (!n.infeasible_reasons.empty()) j["infeasible_reasons"] = n.infeasible_reasons;
  if (n.analysis) {
    const auto& a = *n.analysis;
    j["counters"] = Json{{"upsilon", n.counters.upsilon},
                         {"upsilon0", n.counters.upsilon0},
                         {"eta", n.counters.eta},
                         {"b0_delta", n.counters.b0_delta},
                         {"b0_delta_plus", n.counters.b0_delta_plus},
                         {"b0_delta_minus", n.counters.b0_delta_minus}};
    j["upsilon"] = ids_json(a.upsilon);
    j["delta"] = ids_json(a.delta_support());
    j["d_flat"] = a.d_flat.str();
  }
  if (n.model) {
    const auto& m = *n.model;
    Json mj;
    mj["rho_y"] = m.rho_y;
    mj["boundary_count"] = m.boundary_count;
    mj["nef_status"] = m.nef_status();
    if (m.not_nef_witness) {
      mj["witness"] = to_int(*m.not_nef_witness);
      mj["witness_value"] = m.witness_value.str();
    }
    mj["square"] = m.square_flat.str();
    mj["discrepancy_convention"] = "K + (D - C)/2 = alpha^*(K_Y + D_Y/2) + sum a_U U";
    Json d = Json::object();
    for (ComponentId c : m.contracted) d[std::to_string(to_int(c))] = m.discrepancies.coeff(c).str();
    mj["discrepancies"] = std::move(d);
    j["minimal_model"] = std::move(mj);
  }
  j["sites"] = n.sites.size();
  j["children"] = n.children;
  if (opts.emit_states) j["state"] = detail::state_json(n.state);
  return j;
}

Json tree_json(const RunTree& t, const ReportOptions& opts) {
  Json j;
  std::map<std::string, int> classes;
  for (const auto& n : t.nodes)
    if (n.children.empty()) classes[to_string(n.cls)]++;
  Json cj = Json::object();
  for (const auto& [k, v] : classes) cj[k] = v;
  int not_nef = 0;
  for (const auto& n : t.nodes) not_nef += n.cls == NodeClass::NotNefCertificate;
  j["nodes"] = t.nodes.size();
  j["branch_count"] = t.branch_count();
  j["max_n"] = t.max_n();
  j["leaf_classes"] = std::move(cj);
  j["not_nef_certificates"] = not_nef;
  Json nodes = Json::array();
  for (const auto& n : t.nodes)
    if (opts.all_branches || n.parent < 0 || n.candidate_terminal()) nodes.push_back(node_json(n, opts));
  j["tree"] = std::move(nodes);
  return j;
}

Json counts_json(const std::vector<Finding>& fs) {
  int p = 0, f = 0, i = 0;
  for (const auto& x : fs) {
    if (x.verdict == Verdict::Pass) ++p;
    else if (x.verdict == Verdict::Fail) (x.advisory ? i : f)++;
    else ++i;
  }
  return Json{{"pass", p}, {"fail", f}, {"inapplicable_or_advisory", i}};
}

}  // namespace

std::string resolution_json(const RunContext& ctx) {
  Json j;
  j["schema"] = kSchema;
  j["curve"] = detail::curve_json(ctx.curve);
  j["resolution"] = context_json(ctx);
  return j.dump(2) + "\n";
}

std::string run_tree_json(const RunTree& t, const ReportOptions& opts) {
  Json j;
  j["schema"] = kSchema;
  j["curve"] = detail::curve_json(t.context.curve);
  j["resolution"] = context_json(t.context);
  j["run"] = tree_json(t, opts);
  return j.dump(2) + "\n";
}

std::string verify_report_json(const std::vector<CurveReport>& reports, const ReportOptions& opts) {
  Json j;
  j["schema"] = kSchema;
  Json curves = Json::array();
  std::vector<Finding> all;
  for (const auto& r : reports) {
    Json c;
    c["curve"] = detail::curve_json(r.tree.context.curve);
    c["resolution"] = context_json(r.tree.context);
    c["run"] = tree_json(r.tree, opts);
    c["summary"] = counts_json(r.findings);
    if (opts.findings) {
      Json fs = Json::array();
      for (const auto& f : r.findings) fs.push_back(detail::finding_json(f));
      c["findings"] = std::move(fs);
    }
    curves.push_back(std::move(c));
    all.insert(all.end(), r.findings.begin(), r.findings.end());
  }
  j["curves"] = std::move(curves);
  j["summary"] = counts_json(all);
  j["result"] = any_failure(all) ? "fail" : "pass";
  return j.dump(2) + "\n";
}

std::string verify_report_text(const std::vector<CurveReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    const RunTree& t = r.tree;
    const RunNode& root = t.nodes.front();
    int p = 0, f = 0, i = 0;
    for (const auto& x : r.findings) {
      if (x.verdict == Verdict::Pass) ++p;
      else if (x.verdict == Verdict::Fail && !x.advisory) ++f;
      else ++i;
    }
    os << t.context.curve.name << ": rho(X) = " << t.context.res.log.rho()
       << ", E^2 = " << t.context.res.log.graph().self_int(t.context.res.e) << ", p2 = " << t.context.p2
       << ", c = " << t.context.c << "\n";
    os << "  run: " << t.nodes.size() << " nodes, " << t.branch_count() << " branches, max n = " << t.max_n()
       << ", root " << to_string(root.cls);
    if (root.model) os << ", rho_Y = " << root.model->rho_y << " (" << root.model->nef_status() << ")";
    os << "\n";
    os << "  findings: " << p << " pass, " << f << " fail, " << i << " inapplicable/advisory\n";
    for (const auto& x : r.findings)
      if (x.verdict == Verdict::Fail)
        os << "  " << (x.advisory ? "ADVISORY " : "FAIL ") << x.check << " at " << x.location << ": " << x.lhs << " "
           << x.relation << " " << x.rhs << "  [" << x.citation << "]\n";
  }
  return os.str();
}

std::string findings_report_json(const std::string& subject, const std::vector<Finding>& fs) {
  Json j;
  j["schema"] = kSchema;
  j["subject"] = subject;
  j["summary"] = counts_json(fs);
  Json a = Json::array();
  for (const auto& f : fs) a.push_back(detail::finding_json(f));
  j["findings"] = std::move(a);
  j["result"] = any_failure(fs) ? "fail" : "pass";
  return j.dump(2) + "\n";
}

std::string findings_jsonl(const std::vector<Finding>& fs) {
  std::string out;
  for (const auto& f : fs) out += detail::finding_json(f).dump() + "\n";
  return out;
}

std::string graph_stats_json(const DivisorGraph& g, const Subdivisor& b) {
  Json j;
  j["schema"] = kSchema;
  j["components"] = b.size();
  j["snc"] = is_snc(g, b);
  j["connected"] = is_connected(g, b);
  const Subdivisor cr = core(g, b);
  j["core_components"] = cr.size();
  j["core"] = ids_json(cr);
  const AbstractGraph cg = core_graph(g, b);
  j["core_graph_vertices"] = cg.vertices.size();
  j["core_graph_edges"] = cg.edges.size();
  try {
    const AbstractGraph en = en_diagram(g, b);
    j["en_vertices"] = en.vertices.size();
    j["en_edges"] = en.edges.size();
    j["en_caterpillar"] = is_caterpillar(en);
  } catch (const Error& e) {
    j["en_error"] = e.what();
  }
  return j.dump(2) + "\n";
}

}  // namespace halfmmp
