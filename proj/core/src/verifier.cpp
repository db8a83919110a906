#include "halfmmp/verifier.hpp"

#include <algorithm>

#include "halfmmp/error.hpp"
#include "halfmmp/lattice.hpp"
#include "halfmmp/parallel.hpp"

namespace halfmmp {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

bool any_failure(const std::vector<Finding>& fs) {
  return std::any_of(fs.begin(), fs.end(), [](const Finding& f) { return !f.advisory && f.verdict == Verdict::Fail; });
}

namespace {

using Inputs = std::map<std::string, std::string>;

std::string s(const Rational& r) { return r.str(); }
std::string s(long v) { return std::to_string(v); }
std::string s(bool b) { return b ? "true" : "false"; }

bool holds(const Rational& l, const std::string& op, const Rational& r) {
  if (op == "=") return l == r;
  if (op == "<=") return l <= r;
  if (op == "<") return l < r;
  if (op == ">=") return l >= r;
  if (op == ">") return l > r;
  return false;
}

Finding relation(std::string check, std::string loc, const Rational& lhs, std::string op, const Rational& rhs,
                 std::string citation, Inputs inputs) {
  Finding f;
  f.check = std::move(check);
  f.location = std::move(loc);
  f.lhs = lhs.str();
  f.relation = op;
  f.rhs = rhs.str();
  f.verdict = holds(lhs, op, rhs) ? Verdict::Pass : Verdict::Fail;
  f.citation = std::move(citation);
  f.inputs = std::move(inputs);
  return f;
}

Finding predicate(std::string check, std::string loc, bool ok, std::string what, std::string citation,
                  Inputs inputs) {
  Finding f;
  f.check = std::move(check);
  f.location = std::move(loc);
  f.lhs = std::move(what);
  f.relation = "holds";
  f.rhs = ok ? "true" : "false";
  f.verdict = ok ? Verdict::Pass : Verdict::Fail;
  f.citation = std::move(citation);
  f.inputs = std::move(inputs);
  return f;
}

Finding inapplicable(std::string check, std::string loc, std::string citation, std::string note) {
  Finding f;
  f.check = std::move(check);
  f.location = std::move(loc);
  f.verdict = Verdict::Inapplicable;
  f.citation = std::move(citation);
  f.note = std::move(note);
  return f;
}

std::string where(const CurveFacts& cf, const NodeFacts& nf) { return cf.name + ":" + nf.path; }

const char* kStrictNote = "strict: the minimal model is a rank 1 log del Pezzo surface";

}  // namespace

CurveFacts curve_facts(const RunContext& ctx) {
  CurveFacts cf;
  cf.name = ctx.curve.name;
  cf.log_general_type = ctx.curve.metadata.log_general_type;
  cf.structural_cstst = ctx.curve.metadata.structural_cstst_fibration;
  cf.p2 = ctx.p2;
  cf.c = ctx.c;
  cf.c0 = ctx.c0;
  cf.c1 = ctx.c1;
  cf.c0p = ctx.c0p;
  cf.tau = ctx.tau;
  cf.s = ctx.s;
  cf.tau_star = ctx.tau_star;
  const SurfaceState& x = ctx.res.log;
  const Subdivisor d = x.boundary();
  cf.rho_log = x.rho();
  cf.count_log = static_cast<int>(d.size());
  cf.rho_weak = ctx.res.weak.rho();
  try {
    cf.weak_resolves_to_log = isomorphic(resolve_non_snc(ctx.res.weak), x);
  } catch (const Error&) {
    cf.weak_resolves_to_log = false;
  }
  cf.upsilon_root = ctx.upsilon_root;
  cf.upsilon0_root = ctx.upsilon0_root;
  cf.b0_delta0_prime = minus_two_twigs(x.graph(), d).size();
  cf.core_count = core(x.graph(), d).size();
  cf.core_graph_vertices = core_graph(x.graph(), d).vertices.size();
  return cf;
}

NodeFacts node_facts(const RunContext& ctx, const RunNode& node) {
  (void)ctx;
  NodeFacts nf;
  nf.path = node.path;
  nf.candidate_terminal = node.candidate_terminal();
  nf.n = node.counters.n;
  nf.n0 = node.counters.n0;
  nf.n1 = node.counters.n1;
  const SurfaceState& st = node.state;
  const DivisorGraph& g = st.graph();
  const Subdivisor d = st.boundary();
  const ComponentId e = st.marked_e();
  nf.rho_n = st.rho();
  nf.count_n = static_cast<int>(d.size());
  const DivisorClass k = DivisorClass::canonical();
  const DivisorClass log = k + st.boundary_class();
  QDivisor eq;
  eq.set(e, 1);
  const DivisorClass ec = DivisorClass::of(eq);
  nf.k_dot_log = st.dot(k, log);
  nf.e_dot_log = st.dot(ec, log);
  nf.rest_dot_e = st.dot(DivisorClass::of(QDivisor::reduced(set_minus(d, Subdivisor{e}))), ec);
  nf.pa_dn = arithmetic_genus(g, d);
  nf.dn_has_tips = std::any_of(d.begin(), d.end(), [&](ComponentId c) { return beta(g, c, d) <= 1; });
  if (node.analysis) {
    const BoundaryAnalysis& a = *node.analysis;
    const DivisorClass twice = Rational(2) * k + DivisorClass::of(a.d_flat);
    nf.square_lhs = st.dot(twice, twice);
    for (const auto& tw : a.delta_minus) nf.delta_minus += delta(g, tw);
    nf.upsilon_n = static_cast<int>(a.upsilon.size());
    nf.upsilon0_n = static_cast<int>(a.upsilon0.size());
  }
  const AlmostMinimal am = almost_minimal(st);
  const DivisorGraph& gp = am.state.graph();
  const Subdivisor dp = am.state.boundary();
  nf.rho_prime = am.state.rho();
  nf.count_prime = static_cast<int>(dp.size());
  nf.kd_prime = am.state.dot(k, am.state.boundary_class());
  nf.pa_prime = arithmetic_genus(gp, dp);
  nf.b0_delta_prime = minus_two_twigs(gp, dp).size();
  nf.snc_minimal = am.snc_minimal;
  // ind over the admissible (negative definite) maximal twigs; undefined on a chain.
  if (!as_chain(gp, dp)) {
    Rational ind;
    for (const auto& tw : boundary_twigs(gp, dp))
      if (is_negative_definite(gp.intersection_matrix(tw.support()))) ind += inductance(gp, tw);
    nf.ind_prime = ind;
  }
  nf.min_self_int_prime = nf.max_self_int_prime = dp.empty() ? 0 : gp.self_int(dp.front());
  for (ComponentId c : dp) {
    nf.min_self_int_prime = std::min(nf.min_self_int_prime, gp.self_int(c));
    nf.max_self_int_prime = std::max(nf.max_self_int_prime, gp.self_int(c));
  }
  if (node.model) {
    const MinimalModel& m = *node.model;
    nf.has_model = true;
    nf.rho_y = m.rho_y;
    nf.boundary_count = m.boundary_count;
    nf.not_nef_witness = m.not_nef_witness.has_value();
    nf.square_pullback = m.square_pullback;
    nf.square_flat = m.square_flat;
    nf.pullback_matches_flat = m.pullback_matches_flat;
    for (const auto& [c, v] : m.discrepancies.terms()) {
      const std::string& lbl = g.component(c).label;
      nf.discrepancies.emplace_back(lbl.empty() ? "C" + std::to_string(to_int(c)) : lbl, v);
    }
    for (ComponentId c : m.contracted)
      if (m.discrepancies.coeff(c).sign() == 0) {
        const std::string& lbl = g.component(c).label;
        nf.discrepancies.emplace_back(lbl.empty() ? "C" + std::to_string(to_int(c)) : lbl, Rational(0));
      }
    std::sort(nf.discrepancies.begin(), nf.discrepancies.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return nf;
}

bool gate_log_general_type(const CurveFacts& cf) { return cf.log_general_type.value_or(false); }

std::optional<bool> no_structural_cstst(const CurveFacts& cf, const NodeFacts& nf) {
  if (nf.has_model && nf.rho_y != 2) return true;
  if (cf.structural_cstst) return !*cf.structural_cstst;
  return std::nullopt;
}

std::vector<Finding> check_resolution(const CurveFacts& cf) {
  std::vector<Finding> out;
  const std::string loc = cf.name + ":resolution";
  out.push_back(relation("resolution.q_homology_plane", loc, cf.count_log, "=", cf.rho_log, "#D = rho(X)",
                         {{"#D", s(long{cf.count_log})}, {"rho(X)", s(long{cf.rho_log})}}));
  out.push_back(relation("resolution.rho_tau", loc, cf.rho_log, "=", cf.rho_weak + cf.tau, "rho(X) = rho(X_0) + tau",
                         {{"rho(X)", s(long{cf.rho_log})}, {"rho(X_0)", s(long{cf.rho_weak})}, {"tau", s(long{cf.tau})}}));
  out.push_back(predicate("resolution.weak_to_log", loc, cf.weak_resolves_to_log,
                          "resolving the non-snc points of D_0 gives D up to isomorphism",
                          "psi_0: (X, D) -> (X_0, D_0) is the minimal log resolution of the tangency points", {}));
  out.push_back(relation("resolution.upsilon_root", loc, cf.upsilon_root, "=", cf.c0, "#Upsilon_0 = c_0",
                         {{"#Upsilon_0", s(long{cf.upsilon_root})}, {"c_0", s(long{cf.c0})}}));
  out.push_back(relation("resolution.upsilon0_root", loc, cf.upsilon0_root, "=", cf.c0p, "upsilon_0 = c_0'",
                         {{"upsilon_0", s(long{cf.upsilon0_root})}, {"c_0'", s(long{cf.c0p})}}));
  out.push_back(relation("resolution.tau_star", loc, cf.tau_star, ">=", 0, "tau* = sum(tau_j - s_j - 1) >= 0",
                         {{"tau", s(long{cf.tau})}, {"s", s(long{cf.s})}, {"c", s(long{cf.c})}}));
  return out;
}

std::vector<Finding> check_curve_theorems(const CurveFacts& cf) {
  std::vector<Finding> out;
  const std::string loc = cf.name + ":curve";
  out.push_back(relation("main.cusp_count", loc, cf.c, "<=", 6, "a rational cuspidal plane curve has c <= 6 cusps",
                         {{"c", s(long{cf.c})}}));
  const char* core_cite = "#core(D) <= 20";
  const char* graph_cite = "core graph of D has at most 31 vertices";
  if (!gate_log_general_type(cf)) {
    out.push_back(inapplicable("main.core_count", loc, core_cite, "requires log general type"));
    out.push_back(inapplicable("main.core_graph", loc, graph_cite, "requires log general type"));
    return out;
  }
  out.push_back(relation("main.core_count", loc, static_cast<long>(cf.core_count), "<=", 20, core_cite,
                         {{"#core(D)", s(static_cast<long>(cf.core_count))}}));
  out.push_back(relation("main.core_graph", loc, static_cast<long>(cf.core_graph_vertices), "<=", 31, graph_cite,
                         {{"vertices", s(static_cast<long>(cf.core_graph_vertices))}}));
  return out;
}

std::vector<Finding> check_identities(const CurveFacts& cf, const NodeFacts& nf) {
  std::vector<Finding> out;
  const std::string loc = where(cf, nf);
  const Inputs base = {{"p2", s(cf.p2)}, {"c", s(long{cf.c})}, {"tau*", s(long{cf.tau_star})},
                       {"n", s(long{nf.n})}, {"n1", s(long{nf.n1})}};
  auto with = [&](Inputs extra) {
    Inputs m = base;
    m.insert(extra.begin(), extra.end());
    return m;
  };
  out.push_back(relation("id.count", loc, nf.count_n, "=", nf.rho_n + nf.n, "#D_n = rho(X_n) + n",
                         with({{"#D_n", s(long{nf.count_n})}, {"rho(X_n)", s(long{nf.rho_n})}})));
  if (gate_log_general_type(cf)) {
    const Rational lhs = cf.p2 + nf.n;
    out.push_back(relation("id.n_plus_p2", loc, lhs, "<=", 5, "n + p2 <= 5", base));
    const bool eq = lhs == 5;
    const bool rider = !eq || (nf.n != 0 && cf.s == 0 && !nf.dn_has_tips);
    out.push_back(predicate("id.n_plus_p2_equality", loc, rider,
                            eq ? "n + p2 = 5 implies n != 0, s = 0 and D_n has no tips" : "n + p2 < 5",
                            "if n + p2 = 5 then n != 0, s = 0 and D_n has no tips",
                            with({{"s", s(long{cf.s})}, {"D_n has tips", s(nf.dn_has_tips)}})));
  } else {
    out.push_back(inapplicable("id.n_plus_p2", loc, "n + p2 <= 5", "requires log general type"));
  }
  out.push_back(relation("id.k_dot_log", loc, nf.k_dot_log, "=", cf.p2 - cf.c - cf.tau_star - nf.n,
                         "K_n.(K_n + D_n) = p2 - c - tau* - n", base));
  out.push_back(relation("id.e_dot_log", loc, nf.e_dot_log, "=", Rational(2 * cf.c - 2 + cf.tau_star + nf.n1),
                         "E_n.(K_n + D_n) = 2c - 2 + tau* + n1", base));
  out.push_back(relation("id.rest_dot_e", loc, nf.rest_dot_e, "=", Rational(2 * cf.c + nf.n1 + cf.tau_star),
                         "(D_n - E_n).E_n = 2c + n1 + tau*", base));
  out.push_back(relation("id.genus", loc, nf.pa_dn, "=", nf.n + cf.tau_star + cf.c, "p_a(D_n) = n + tau* + c", base));
  out.push_back(relation("id.rho_prime", loc, nf.rho_prime, "=", nf.rho_n + cf.tau, "rho(X_n') = rho(X_n) + tau",
                         with({{"rho(X_n')", s(long{nf.rho_prime})}, {"rho(X_n)", s(long{nf.rho_n})},
                               {"tau", s(long{cf.tau})}})));
  out.push_back(relation("id.genus_prime", loc, nf.pa_prime, "=", nf.n, "p_a(D') = n", base));
  out.push_back(relation("id.count_prime", loc, nf.count_prime, "=", nf.rho_prime + nf.n, "#D' = rho(X') + n",
                         with({{"#D'", s(long{nf.count_prime})}, {"rho(X')", s(long{nf.rho_prime})}})));
  out.push_back(relation("id.kd_prime", loc, nf.kd_prime, "=", cf.p2 + nf.rho_prime - nf.n - 10,
                         "K'.D' = p2 + rho(X') - n - 10",
                         with({{"K'.D'", s(nf.kd_prime)}, {"rho(X')", s(long{nf.rho_prime})}})));
  return out;
}

std::vector<Finding> check_square_formula(const CurveFacts& cf, const NodeFacts& nf) {
  const Rational lhs = nf.square_lhs + nf.delta_minus;
  const Rational rhs =
      Rational(3) * cf.p2 + 8 + static_cast<long>(nf.b0_delta_prime) + nf.upsilon0_n - nf.rho_prime - nf.n;
  return {relation("square.formula", where(cf, nf), lhs, "=", rhs,
                   "(2K_n + D_n^flat)^2 + delta(Delta_n^-) = 3p2 + 8 + b0(Delta_n') + #Upsilon_n^0 - rho(X_n') - n",
                   {{"(2K_n+D_n^flat)^2", s(nf.square_lhs)},
                    {"delta(Delta_n^-)", s(nf.delta_minus)},
                    {"p2", s(cf.p2)},
                    {"b0(Delta_n')", s(static_cast<long>(nf.b0_delta_prime))},
                    {"#Upsilon_n^0", s(long{nf.upsilon0_n})},
                    {"rho(X_n')", s(long{nf.rho_prime})},
                    {"n", s(long{nf.n})}})};
}

std::vector<Finding> check_bounds(const CurveFacts& cf, const NodeFacts& nf) {
  std::vector<Finding> out;
  if (!nf.candidate_terminal) return out;
  const std::string loc = where(cf, nf);
  struct Bound {
    const char* id;
    const char* cite;
    bool needs_no_cstst;
  };
  static const Bound kBounds[] = {
      {"bound.bmy", "p2 + n + ind(D~) <= 5", false},
      {"bound.c_plus_n", "c + 2p2 + max(0, n - 1) <= 9", false},
      {"bound.b0_delta0", "b0(Delta_0') <= 10 - 2p2 - 2c_0'/3", false},
      {"bound.site_growth", "b0(Delta_n') + (upsilon_n - upsilon_0) <= b0(Delta_0')", false},
      {"bound.rho_prime", "rho(X_n') <= p2 + 18 - n + c_0'/3", true},
      {"bound.count_prime", "#D_n' <= p2 + 18 + c_0'/3", true},
      {"bound.kd_prime", "K_n'.D_n' <= 2p2 + 8 - 2n + c_0'/3", true},
      {"bound.p2_c0p", "p2 + c_0'/3 <= 4", true},
      {"bound.cusps", "3c <= p2 + 17 + c_0'/3", true},
      {"bound.rho_detailed", "rho(X') <= 3p2 + 8 - n + b0(Delta_0') + c_0'", true},
      {"bound.rho_sites", "rho(X_n') <= 3p2 + 8 - n + b0(Delta_n') + upsilon_n - delta(Delta_n^-)", true},
  };
  const bool lgt = gate_log_general_type(cf);
  const auto noc = no_structural_cstst(cf, nf);
  const bool strict = nf.del_pezzo();
  const std::string le = strict ? "<" : "<=";
  const Rational third = Rational(cf.c0p) / 3;
  const long b00 = static_cast<long>(cf.b0_delta0_prime);
  const long b0n = static_cast<long>(nf.b0_delta_prime);
  const Inputs base = {{"p2", s(cf.p2)}, {"n", s(long{nf.n})}, {"c", s(long{cf.c})}, {"c_0'", s(long{cf.c0p})}};
  auto with = [&](Inputs extra) {
    Inputs m = base;
    m.insert(extra.begin(), extra.end());
    return m;
  };
  for (const Bound& b : kBounds) {
    const std::string id = b.id;
    if (!lgt) {
      out.push_back(inapplicable(id, loc, b.cite, "requires log general type"));
      continue;
    }
    if (b.needs_no_cstst && !noc.value_or(false)) {
      out.push_back(inapplicable(id, loc, b.cite,
                                 noc ? "the complement has a structural C**-fibration"
                                     : "structural C**-fibration unknown for a rank 2 model"));
      continue;
    }
    Finding f;
    if (id == "bound.bmy") {
      if (!nf.snc_minimal) {
        out.push_back(inapplicable(id, loc, b.cite, "D_n' is not snc-minimal"));
        continue;
      }
      if (!nf.ind_prime) {
        out.push_back(inapplicable(id, loc, b.cite, "ind(D_n') undefined: D_n' is a chain"));
        continue;
      }
      f = relation(id, loc, cf.p2 + nf.n + *nf.ind_prime, "<=", 5, b.cite, with({{"ind(D_n')", s(*nf.ind_prime)}}));
    } else if (id == "bound.c_plus_n") {
      f = relation(id, loc, Rational(cf.c) + Rational(2) * cf.p2 + std::max(0, nf.n - 1), "<=", 9, b.cite, base);
    } else if (id == "bound.b0_delta0") {
      f = relation(id, loc, b00, "<=", Rational(10) - Rational(2) * cf.p2 - Rational(2) * third, b.cite,
                   with({{"b0(Delta_0')", s(b00)}}));
    } else if (id == "bound.site_growth") {
      f = relation(id, loc, Rational(b0n) + (nf.upsilon0_n - cf.upsilon0_root), "<=", b00, b.cite,
                   with({{"b0(Delta_n')", s(b0n)}, {"b0(Delta_0')", s(b00)}, {"upsilon_n", s(long{nf.upsilon0_n})},
                         {"upsilon_0", s(long{cf.upsilon0_root})}}));
    } else if (id == "bound.rho_prime") {
      f = relation(id, loc, nf.rho_prime, le, cf.p2 + 18 - nf.n + third, b.cite,
                   with({{"rho(X_n')", s(long{nf.rho_prime})}}));
    } else if (id == "bound.count_prime") {
      f = relation(id, loc, nf.count_prime, le, cf.p2 + 18 + third, b.cite, with({{"#D_n'", s(long{nf.count_prime})}}));
    } else if (id == "bound.kd_prime") {
      f = relation(id, loc, nf.kd_prime, le, Rational(2) * cf.p2 + 8 - 2 * nf.n + third, b.cite,
                   with({{"K_n'.D_n'", s(nf.kd_prime)}}));
    } else if (id == "bound.p2_c0p") {
      f = relation(id, loc, cf.p2 + third, "<=", 4, b.cite, base);
    } else if (id == "bound.cusps") {
      f = relation(id, loc, 3 * cf.c, "<=", cf.p2 + 17 + third, b.cite, base);
    } else if (id == "bound.rho_detailed") {
      f = relation(id, loc, nf.rho_prime, le, Rational(3) * cf.p2 + 8 - nf.n + b00 + cf.c0p, b.cite,
                   with({{"rho(X')", s(long{nf.rho_prime})}, {"b0(Delta_0')", s(b00)}}));
    } else {
      f = relation(id, loc, nf.rho_prime, le,
                   Rational(3) * cf.p2 + 8 - nf.n + b0n + nf.upsilon0_n - nf.delta_minus, b.cite,
                   with({{"rho(X_n')", s(long{nf.rho_prime})}, {"b0(Delta_n')", s(b0n)},
                         {"upsilon_n", s(long{nf.upsilon0_n})}, {"delta(Delta_n^-)", s(nf.delta_minus)}}));
    }
    if (f.relation == "<") f.note = kStrictNote;
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Finding> check_main_theorems(const CurveFacts& cf, const NodeFacts& nf) {
  std::vector<Finding> out;
  if (!nf.candidate_terminal) return out;
  const std::string loc = where(cf, nf);
  const bool lgt = gate_log_general_type(cf);
  const auto noc = no_structural_cstst(cf, nf);
  const Inputs base = {{"p2", s(cf.p2)}, {"n", s(long{nf.n})}, {"rho(X')", s(long{nf.rho_prime})},
                       {"#D'", s(long{nf.count_prime})}, {"K'.D'", s(nf.kd_prime)}};
  auto gated = [&](const char* id, const char* cite, bool need_noc) -> bool {
    if (!lgt) {
      out.push_back(inapplicable(id, loc, cite, "requires log general type"));
      return false;
    }
    if (need_noc && !noc.value_or(false)) {
      out.push_back(inapplicable(id, loc, cite,
                                 noc ? "the complement has a structural C**-fibration"
                                     : "structural C**-fibration unknown for a rank 2 model"));
      return false;
    }
    return true;
  };
  const bool minus_inf = nf.kappa_minus_infinity();
  const std::string le = minus_inf ? "<" : "<=";
  if (gated("main.rho", "rho(X') <= 22, strict if kappa_1/2 = -inf", true))
    out.push_back(relation("main.rho", loc, nf.rho_prime, le, 22, "rho(X') <= 22, strict if kappa_1/2 = -inf", base));
  if (gated("main.count", "#D' <= 22, strict if kappa_1/2 = -inf", true))
    out.push_back(relation("main.count", loc, nf.count_prime, le, 22, "#D' <= 22, strict if kappa_1/2 = -inf", base));
  if (gated("main.kd", "K'.D' <= 16, strict if kappa_1/2 = -inf", true))
    out.push_back(relation("main.kd", loc, nf.kd_prime, le, 16, "K'.D' <= 16, strict if kappa_1/2 = -inf", base));
  if (gated("main.self_int", "self-intersections of D' are >= -3 if kappa_1/2 = -inf, in [-40, 6] otherwise", true)) {
    const Inputs si = {{"min C^2", s(long{nf.min_self_int_prime})},
                       {"max C^2", s(long{nf.max_self_int_prime})},
                       {"kappa_1/2 = -inf certified", s(minus_inf)}};
    if (minus_inf) {
      out.push_back(relation("main.self_int", loc, nf.min_self_int_prime, ">=", -3,
                             "self-intersections of D' are >= -3 if kappa_1/2 = -inf", si));
    } else {
      out.push_back(relation("main.self_int", loc, nf.min_self_int_prime, ">=", -40,
                             "self-intersections of D' are >= -40 if kappa_1/2 >= 0", si));
      out.push_back(relation("main.self_int_upper", loc, nf.max_self_int_prime, "<=", 6,
                             "self-intersections of D' are <= 6 if kappa_1/2 >= 0", si));
    }
  }
  if (gated("main.rho_simple", "rho(X') <= p2 + 19 - n", true))
    out.push_back(relation("main.rho_simple", loc, nf.rho_prime, "<=", cf.p2 + 19 - nf.n, "rho(X') <= p2 + 19 - n", base));
  if (gated("main.cusps_refined", "c + max(0, 2p2 + n - 4, 2p2 - 3) <= 6", false)) {
    const Rational m = std::max({Rational(0), Rational(2) * cf.p2 + nf.n - 4, Rational(2) * cf.p2 - 3});
    out.push_back(relation("main.cusps_refined", loc, m + cf.c, "<=", 6, "c + max(0, 2p2 + n - 4, 2p2 - 3) <= 6",
                           {{"c", s(long{cf.c})}, {"p2", s(cf.p2)}, {"n", s(long{nf.n})}}));
  }
  if (lgt && nf.del_pezzo()) {
    out.push_back(relation("main.del_pezzo_boundary", loc, nf.boundary_count, "=", nf.n + 1,
                           "a rank 1 log del Pezzo minimal model has n + 1 <= 6 boundary components",
                           {{"#D_Y", s(long{nf.boundary_count})}, {"n", s(long{nf.n})}}));
    out.push_back(relation("main.del_pezzo_boundary_max", loc, nf.boundary_count, "<=", 6,
                           "a rank 1 log del Pezzo minimal model has n + 1 <= 6 boundary components",
                           {{"#D_Y", s(long{nf.boundary_count})}}));
  }
  return out;
}

std::vector<Finding> check_model(const CurveFacts& cf, const NodeFacts& nf) {
  std::vector<Finding> out;
  if (!nf.has_model) return out;
  const std::string loc = where(cf, nf);
  out.push_back(relation("model.boundary_rank", loc, nf.boundary_count - nf.rho_y, "=", nf.n, "#D_Y - rho(Y) = n",
                         {{"#D_Y", s(long{nf.boundary_count})}, {"rho(Y)", s(long{nf.rho_y})}, {"n", s(long{nf.n})}}));
  out.push_back(predicate("model.pullback_flat", loc, nf.pullback_matches_flat,
                          "pullback of K_Y + D_Y/2 equals K_n + D_n^flat/2",
                          "alpha^*(K_Y + D_Y/2) = K_n + D_n^flat/2", {}));
  out.push_back(relation("model.square", loc, nf.square_pullback, "=", nf.square_flat,
                         "(K_Y + D_Y/2)^2 = (K_n + D_n^flat/2)^2",
                         {{"through the solve", s(nf.square_pullback)}, {"through the bark", s(nf.square_flat)}}));
  return out;
}

std::vector<Finding> check_discrepancies(const std::string& location,
                                         const std::vector<std::pair<std::string, Rational>>& a) {
  std::vector<Finding> out;
  for (const auto& [label, v] : a)
    out.push_back(relation("discrepancy", location + ":" + label, v, ">=", Rational(-1, 2),
                           "discrepancies of (Y, D_Y/2) are >= -1/2; K + (D - C)/2 = alpha^*(K_Y + D_Y/2) + sum a_U U",
                           {{"a_U", s(v)}, {"U", label}}));
  return out;
}

std::vector<Finding> check_discrepancies(const std::string& location, const DivisorGraph& g, const MinimalModel& m) {
  std::vector<std::pair<std::string, Rational>> a;
  for (ComponentId c : m.contracted) {
    const std::string& lbl = g.component(c).label;
    a.emplace_back(lbl.empty() ? "C" + std::to_string(to_int(c)) : lbl, m.discrepancies.coeff(c));
  }
  return check_discrepancies(location, a);
}

const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> g = {"curve",  "resolution", "identities", "square", "bounds",
                                             "main",   "model",      "discrepancies", "steps"};
  return g;
}

std::vector<Finding> verify_tree(const RunTree& tree, const std::set<std::string>& groups) {
  for (const auto& gname : groups)
    if (std::find(check_groups().begin(), check_groups().end(), gname) == check_groups().end())
      throw Error(ErrorCode::ParseError, "unknown check group '" + gname + "'");
  auto on = [&](const char* gname) { return groups.empty() || groups.count(gname) > 0; };
  std::vector<Finding> out;
  if (on("curve")) {
    auto v = validate_curve(tree.context.curve);
    out.insert(out.end(), v.begin(), v.end());
  }
  const CurveFacts cf = curve_facts(tree.context);
  if (on("resolution")) {
    auto v = check_resolution(cf);
    out.insert(out.end(), v.begin(), v.end());
  }
  if (on("main")) {
    auto v = check_curve_theorems(cf);
    out.insert(out.end(), v.begin(), v.end());
  }
  auto per_node = [&](std::size_t i) {
    const RunNode& node = tree.nodes[i];
    std::vector<Finding> fs;
    if (on("steps"))
      for (Finding f : node.step_findings) {
        f.location = cf.name + ":" + node.path;
        fs.push_back(std::move(f));
      }
    if (node.cls == NodeClass::Infeasible) return fs;
    const NodeFacts nf = node_facts(tree.context, node);
    auto add = [&](std::vector<Finding> v) { fs.insert(fs.end(), v.begin(), v.end()); };
    if (on("identities")) add(check_identities(cf, nf));
    if (on("square")) add(check_square_formula(cf, nf));
    if (on("bounds")) add(check_bounds(cf, nf));
    if (on("main")) add(check_main_theorems(cf, nf));
    if (on("model")) add(check_model(cf, nf));
    if (on("discrepancies")) add(check_discrepancies(where(cf, nf), nf.discrepancies));
    return fs;
  };
  auto parts = parallel_map(tree.nodes.size(), per_node);
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

CurveReport verify_curve(const CurveDescriptor& curve, const VerifyOptions& opts) {
  CurveReport r;
  r.tree = run(curve, opts.run);
  r.findings = verify_tree(r.tree, opts.groups);
  return r;
}

}  // namespace halfmmp
