#include "mutations.hpp"

#include <algorithm>

#include "halfmmp/catalog.hpp"
#include "halfmmp/fibration.hpp"
#include "halfmmp/verifier.hpp"

namespace halfmmp::testing {

const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids = {
      "curve.degree", "curve.genus_formula", "curve.admissible_sequence", "curve.cubic_log_general_type",
      "resolution.q_homology_plane", "resolution.rho_tau", "resolution.weak_to_log", "resolution.upsilon_root",
      "resolution.upsilon0_root", "resolution.tau_star",
      "main.cusp_count", "main.core_count", "main.core_graph",
      "id.count", "id.n_plus_p2", "id.n_plus_p2_equality", "id.k_dot_log", "id.e_dot_log", "id.rest_dot_e",
      "id.genus", "id.rho_prime", "id.genus_prime", "id.count_prime", "id.kd_prime",
      "square.formula",
      "bound.bmy", "bound.c_plus_n", "bound.b0_delta0", "bound.site_growth", "bound.rho_prime",
      "bound.count_prime", "bound.kd_prime", "bound.p2_c0p", "bound.cusps", "bound.rho_detailed",
      "bound.rho_sites",
      "main.rho", "main.count", "main.kd", "main.self_int", "main.self_int_upper", "main.rho_simple",
      "main.cusps_refined", "main.del_pezzo_boundary", "main.del_pezzo_boundary_max",
      "model.boundary_rank", "model.pullback_flat", "model.square",
      "discrepancy",
      "step.site_sign", "step.pullback_log_canonical",
      "fibration.nu", "fibration.sigma", "fibration.suzuki", "fibration.open_fiber_count",
      "fibration.fiber_shape", "fibration.fiber_degree", "fibration.fiber_open_part", "fibration.cusps",
  };
  return ids;
}

bool complete_certificate(const Finding& f) {
  return !f.check.empty() && !f.location.empty() && !f.lhs.empty() && !f.relation.empty() &&
         !f.citation.empty() && (!f.rhs.empty() || !f.note.empty());
}

bool has_certified_failure(const std::vector<Finding>& fs, const std::string& check) {
  return std::any_of(fs.begin(), fs.end(), [&](const Finding& f) {
    return f.check == check && f.verdict == Verdict::Fail && complete_certificate(f);
  });
}

namespace {

struct Base {
  RunContext ctx;
  RunTree tree;
  CurveFacts cf;
  NodeFacts nf;
};

// Facts of a curve on which every check passes.
const Base& base() {
  static const Base b = [] {
    Base x;
    x.tree = run(find_bundled("tricuspidal-quartic")->curve);
    x.ctx = x.tree.context;
    x.cf = curve_facts(x.ctx);
    x.nf = node_facts(x.ctx, x.tree.nodes.front());
    return x;
  }();
  return b;
}

using CurveMut = std::function<void(CurveFacts&)>;
using NodeMut = std::function<void(CurveFacts&, NodeFacts&)>;

std::vector<Finding> all_node_checks(const CurveFacts& cf, const NodeFacts& nf) {
  std::vector<Finding> out;
  for (auto v : {check_identities(cf, nf), check_square_formula(cf, nf), check_bounds(cf, nf),
                 check_main_theorems(cf, nf), check_model(cf, nf), check_discrepancies(nf.path, nf.discrepancies)})
    out.insert(out.end(), v.begin(), v.end());
  return out;
}

MutationCase curve_case(std::string id, std::string what, CurveMut m) {
  return {std::move(id), std::move(what), [m] {
            CurveFacts cf = base().cf;
            m(cf);
            auto out = check_resolution(cf);
            auto more = check_curve_theorems(cf);
            out.insert(out.end(), more.begin(), more.end());
            return out;
          }};
}

MutationCase node_case(std::string id, std::string what, NodeMut m) {
  return {std::move(id), std::move(what), [m] {
            CurveFacts cf = base().cf;
            NodeFacts nf = base().nf;
            m(cf, nf);
            return all_node_checks(cf, nf);
          }};
}

MutationCase descriptor_case(std::string id, std::string what, CurveDescriptor c) {
  return {std::move(id), std::move(what), [c] { return validate_curve(c); }};
}

CurveDescriptor curve(int d, std::vector<std::vector<int>> seqs, std::optional<bool> lgt = {}) {
  CurveDescriptor c;
  c.name = "mutant";
  c.degree = d;
  for (auto& s : seqs) c.cusps.push_back({std::move(s)});
  c.metadata.log_general_type = lgt;
  return c;
}

MutationCase fibration_case(std::string id, std::string what, std::function<void(FibrationData&)> m) {
  return {std::move(id), std::move(what), [m] {
            FibrationData d = generate_fibration(2, 1);
            m(d);
            return check_fibration(d);
          }};
}

// A (-4)-curve meeting three boundary curves: a = -(2 + 3/2)/4 = -7/8.
std::vector<Finding> discrepancy_case() {
  DivisorGraph g;
  ComponentId e = g.add_component(1, Role::E, "E");
  ComponentId c = g.add_component(-4, Role::Exceptional, "C");
  ComponentId b1 = g.add_component(-1, Role::Exceptional, "B1");
  ComponentId b2 = g.add_component(-1, Role::Exceptional, "B2");
  g.connect(c, e);
  g.connect(c, b1);
  g.connect(c, b2);
  SurfaceState s(g, 4, e);
  QDivisor dmc = QDivisor::reduced(s.boundary());
  dmc.set(c, 0);
  const DivisorClass num = DivisorClass::canonical() + Rational(1, 2) * DivisorClass::of(dmc);
  const NegdefContraction k = contract_negdef(s, {c}, num);
  MinimalModel m;
  m.contracted = {c};
  m.discrepancies = k.discrepancies;
  return check_discrepancies("hand-built", s.graph(), m);
}

const RunNode& quintic_root() {
  static const RunTree t = run(find_bundled("quintic-3-3")->curve);
  return t.nodes.front();
}

std::vector<Finding> site_sign_case() {
  const RunNode& root = quintic_root();
  // E is not in Delta^-, so Bk'(E) = 0 and the site sign cannot be negative.
  const ComponentId e = root.state.marked_e();
  PeelingSite site = root.sites.front();
  site.v = e;
  site.w = root.sites.front().v;
  return apply_step(root.state, *root.analysis, site, root.state).findings;
}

std::vector<Finding> pullback_case() {
  const RunNode& root = quintic_root();
  // A (-1)-tip on E is contracted without being log crepant.
  SurfaceState s = root.state;
  ComponentId t = s.mutable_graph().add_component(-1, Role::Exceptional, "T");
  s.mutable_graph().connect(t, s.marked_e());
  s.set_rho(s.rho() + 1);
  return apply_step(s, *root.analysis, root.sites.front(), root.state).findings;
}

FiberGraph fiber_212() {
  FiberGraph f;
  DivisorGraph& g = f.graph;
  ComponentId t1 = g.add_component(-2, Role::Exceptional, "T1");
  f.l_f = g.add_component(-1, Role::Auxiliary, "L_f");
  ComponentId t2 = g.add_component(-2, Role::Exceptional, "T2");
  ComponentId h = g.add_component(-1, Role::Exceptional, "H");
  g.connect(t1, f.l_f);
  g.connect(f.l_f, t2);
  g.connect(h, t1);
  f.horizontal = {h};
  return f;
}

}  // namespace

const std::vector<MutationCase>& mutation_cases() {
  static const std::vector<MutationCase> cases = [] {
    std::vector<MutationCase> v;
    v.push_back(descriptor_case("curve.degree", "degree 2", curve(2, {})));
    v.push_back(descriptor_case("curve.genus_formula", "quartic with (2),(2)", curve(4, {{2}, {2}})));
    v.push_back(descriptor_case("curve.admissible_sequence", "quintic with (3,2,2,2)", curve(5, {{3, 2, 2, 2}})));
    v.push_back(descriptor_case("curve.cubic_log_general_type", "cubic flagged log general type", curve(3, {{2}}, true)));

    v.push_back(curve_case("resolution.q_homology_plane", "#D one too large", [](CurveFacts& c) { c.count_log++; }));
    v.push_back(curve_case("resolution.rho_tau", "rho(X_0) off by one", [](CurveFacts& c) { c.rho_weak++; }));
    v.push_back(curve_case("resolution.weak_to_log", "weak resolution does not resolve to log",
                           [](CurveFacts& c) { c.weak_resolves_to_log = false; }));
    v.push_back(curve_case("resolution.upsilon_root", "extra Upsilon curve", [](CurveFacts& c) { c.upsilon_root++; }));
    v.push_back(curve_case("resolution.upsilon0_root", "extra upsilon_0", [](CurveFacts& c) { c.upsilon0_root++; }));
    v.push_back(curve_case("resolution.tau_star", "negative tau*", [](CurveFacts& c) { c.tau_star = -1; }));
    v.push_back(curve_case("main.cusp_count", "seven cusps", [](CurveFacts& c) { c.c = 7; }));
    v.push_back(curve_case("main.core_count", "core of 21 curves", [](CurveFacts& c) { c.core_count = 21; }));
    v.push_back(curve_case("main.core_graph", "core graph of 32 vertices", [](CurveFacts& c) { c.core_graph_vertices = 32; }));

    v.push_back(node_case("id.count", "#D_n off", [](CurveFacts&, NodeFacts& n) { n.count_n++; }));
    v.push_back(node_case("id.n_plus_p2", "p2 = 6", [](CurveFacts& c, NodeFacts&) { c.p2 = 6; }));
    v.push_back(node_case("id.n_plus_p2_equality", "p2 = 5 with n = 0", [](CurveFacts& c, NodeFacts&) { c.p2 = 5; }));
    v.push_back(node_case("id.k_dot_log", "K_n.(K_n+D_n) off", [](CurveFacts&, NodeFacts& n) { n.k_dot_log += 1; }));
    v.push_back(node_case("id.e_dot_log", "E_n.(K_n+D_n) off", [](CurveFacts&, NodeFacts& n) { n.e_dot_log += 1; }));
    v.push_back(node_case("id.rest_dot_e", "(D_n-E_n).E_n off", [](CurveFacts&, NodeFacts& n) { n.rest_dot_e += 1; }));
    v.push_back(node_case("id.genus", "p_a(D_n) off", [](CurveFacts&, NodeFacts& n) { n.pa_dn++; }));
    v.push_back(node_case("id.rho_prime", "rho(X_n') off", [](CurveFacts&, NodeFacts& n) { n.rho_prime++; }));
    v.push_back(node_case("id.genus_prime", "p_a(D') off", [](CurveFacts&, NodeFacts& n) { n.pa_prime++; }));
    v.push_back(node_case("id.count_prime", "#D' off", [](CurveFacts&, NodeFacts& n) { n.count_prime++; }));
    v.push_back(node_case("id.kd_prime", "K'.D' off", [](CurveFacts&, NodeFacts& n) { n.kd_prime += 1; }));
    v.push_back(node_case("square.formula", "(2K+D_flat)^2 off", [](CurveFacts&, NodeFacts& n) { n.square_lhs += 1; }));

    v.push_back(node_case("bound.bmy", "inductance 6", [](CurveFacts&, NodeFacts& n) { n.ind_prime = Rational(6); }));
    v.push_back(node_case("bound.c_plus_n", "ten cusps", [](CurveFacts& c, NodeFacts&) { c.c = 10; }));
    v.push_back(node_case("bound.b0_delta0", "eleven (-2)-twigs", [](CurveFacts& c, NodeFacts&) { c.b0_delta0_prime = 11; }));
    v.push_back(node_case("bound.site_growth", "b0(Delta_n') above b0(Delta_0')",
                          [](CurveFacts&, NodeFacts& n) { n.b0_delta_prime = 100; }));
    v.push_back(node_case("bound.rho_prime", "rho(X') = 100", [](CurveFacts&, NodeFacts& n) { n.rho_prime = 100; }));
    v.push_back(node_case("bound.count_prime", "#D' = 100", [](CurveFacts&, NodeFacts& n) { n.count_prime = 100; }));
    v.push_back(node_case("bound.kd_prime", "K'.D' = 100", [](CurveFacts&, NodeFacts& n) { n.kd_prime = 100; }));
    v.push_back(node_case("bound.p2_c0p", "p2 = 5", [](CurveFacts& c, NodeFacts&) { c.p2 = 5; }));
    v.push_back(node_case("bound.cusps", "seven cusps", [](CurveFacts& c, NodeFacts&) { c.c = 7; }));
    v.push_back(node_case("bound.rho_detailed", "rho(X') = 100", [](CurveFacts&, NodeFacts& n) { n.rho_prime = 100; }));
    v.push_back(node_case("bound.rho_sites", "rho(X') = 100", [](CurveFacts&, NodeFacts& n) { n.rho_prime = 100; }));

    v.push_back(node_case("main.rho", "rho(X') = 22 on a del Pezzo branch", [](CurveFacts&, NodeFacts& n) { n.rho_prime = 22; }));
    v.push_back(node_case("main.count", "#D' = 22 on a del Pezzo branch", [](CurveFacts&, NodeFacts& n) { n.count_prime = 22; }));
    v.push_back(node_case("main.kd", "K'.D' = 16 on a del Pezzo branch", [](CurveFacts&, NodeFacts& n) { n.kd_prime = 16; }));
    v.push_back(node_case("main.self_int", "a (-4)-curve with kappa = -inf",
                          [](CurveFacts&, NodeFacts& n) { n.min_self_int_prime = -4; }));
    v.push_back(node_case("main.self_int_upper", "a (+7)-curve with kappa >= 0", [](CurveFacts&, NodeFacts& n) {
      n.not_nef_witness = false;
      n.snc_minimal = true;
      n.max_self_int_prime = 7;
    }));
    v.push_back(node_case("main.rho_simple", "rho(X') = 100", [](CurveFacts&, NodeFacts& n) { n.rho_prime = 100; }));
    v.push_back(node_case("main.cusps_refined", "seven cusps", [](CurveFacts& c, NodeFacts&) { c.c = 7; }));
    v.push_back(node_case("main.del_pezzo_boundary", "two boundary curves at n = 0",
                          [](CurveFacts&, NodeFacts& n) { n.boundary_count = 2; }));
    v.push_back(node_case("main.del_pezzo_boundary_max", "seven boundary curves",
                          [](CurveFacts&, NodeFacts& n) { n.boundary_count = 7; }));
    v.push_back(node_case("model.boundary_rank", "#D_Y - rho(Y) != n", [](CurveFacts&, NodeFacts& n) { n.boundary_count = 2; }));
    v.push_back(node_case("model.pullback_flat", "pullback differs from K + D_flat/2",
                          [](CurveFacts&, NodeFacts& n) { n.pullback_matches_flat = false; }));
    v.push_back(node_case("model.square", "squares differ", [](CurveFacts&, NodeFacts& n) { n.square_flat += 1; }));

    v.push_back({"discrepancy", "(-4)-curve meeting three boundary curves", discrepancy_case});
    v.push_back({"step.site_sign", "site with V = E", site_sign_case});
    v.push_back({"step.pullback_log_canonical", "non-crepant (-1)-tip", pullback_case});

    v.push_back(fibration_case("fibration.nu", "nu off", [](FibrationData& d) { d.nu++; }));
    v.push_back(fibration_case("fibration.sigma", "sigma off", [](FibrationData& d) { d.sigma++; }));
    v.push_back(fibration_case("fibration.suzuki", "extra open fiber Euler number",
                               [](FibrationData& d) { d.open_fiber_euler.push_back(0); }));
    v.push_back(fibration_case("fibration.open_fiber_count", "missing singular fiber",
                               [](FibrationData& d) { d.open_fiber_euler.pop_back(); }));
    v.push_back(fibration_case("fibration.fiber_shape", "[2,1,2] fiber", [](FibrationData& d) { d.fibers[0] = fiber_212(); }));
    v.push_back(fibration_case("fibration.fiber_degree", "horizontal curve on the second end", [](FibrationData& d) {
      FiberGraph& f = d.fibers[0];
      ComponentId h = f.graph.add_component(-1, Role::Exceptional, "H3");
      f.graph.connect(h, component_id(2));
      f.horizontal = make_subdivisor({f.horizontal[0], f.horizontal[1], h});
    }));
    v.push_back(fibration_case("fibration.fiber_open_part", "L_f meets the boundary three times", [](FibrationData& d) {
      FiberGraph& f = d.fibers[0];
      ComponentId h = f.graph.add_component(-1, Role::Exceptional, "H3");
      f.graph.connect(h, f.l_f);
      f.horizontal = make_subdivisor({f.horizontal[0], f.horizontal[1], h});
    }));
    v.push_back(fibration_case("fibration.cusps", "four cusps", [](FibrationData& d) { d.cusps = 4; }));
    return v;
  }();
  return cases;
}

}  // namespace halfmmp::testing
