#include "halfmmp/mmp.hpp"

#include <algorithm>
#include <set>

#include "halfmmp/error.hpp"
#include "halfmmp/parallel.hpp"

namespace halfmmp {

namespace {

Subdivisor union_of(const std::vector<Twig>& ts) {
  Subdivisor s;
  for (const auto& t : ts) s = set_union(s, t.support());
  return s;
}

int meet(const DivisorGraph& g, ComponentId c, const Subdivisor& s) {
  int k = 0;
  for (ComponentId o : s)
    if (o != c) k += g.intersection(c, o);
  return k;
}

int meet(const DivisorGraph& g, const Subdivisor& a, const Subdivisor& b) {
  int k = 0;
  for (ComponentId x : a) k += meet(g, x, b);
  return k;
}

DivisorClass curve_class(ComponentId c) {
  QDivisor q;
  q.set(c, 1);
  return DivisorClass::of(q);
}

std::string id_str(ComponentId c) { return "C" + std::to_string(to_int(c)); }

}  // namespace

Subdivisor BoundaryAnalysis::delta_support() const { return union_of(delta); }
Subdivisor BoundaryAnalysis::delta_plus_support() const { return union_of(delta_plus); }
Subdivisor BoundaryAnalysis::delta_minus_support() const { return union_of(delta_minus); }
Subdivisor BoundaryAnalysis::contracted() const { return set_union(upsilon, delta_support()); }

BoundaryAnalysis analyze_boundary(const SurfaceState& s) {
  const DivisorGraph& g = s.graph();
  BoundaryAnalysis a;
  a.boundary = s.boundary();
  const Subdivisor& d = a.boundary;
  a.delta = minus_two_twigs(g, d);
  const Subdivisor dsup = a.delta_support();
  for (ComponentId l : d) {
    if (g.self_int(l) != -1) continue;
    const int b = beta(g, l, d);
    if ((b == 3 && meet(g, l, dsup) == 1) || (b == 2 && g.neighbours(l, d).size() == 1)) a.upsilon.push_back(l);
  }
  for (const auto& tw : a.delta) {
    if (meet(g, tw.support(), a.upsilon) > 0)
      a.delta_plus.push_back(tw);
    else
      a.delta_minus.push_back(tw);
  }
  const Subdivisor plus = a.delta_plus_support();
  for (ComponentId u : a.upsilon)
    if (meet(g, u, plus) == 0) a.upsilon0.push_back(u);
  for (const auto& tw : a.delta_minus) a.bk_prime += bark_of_twig(g, d, tw);
  a.d_flat = QDivisor::reduced(d) - QDivisor::reduced(a.upsilon) - QDivisor::reduced(plus) - a.bk_prime;
  return a;
}

std::string to_string(const PeelingSite& p) {
  return "V" + std::to_string(to_int(p.v)) + "-W" + std::to_string(to_int(p.w));
}

std::vector<PeelingSite> enumerate_peeling_sites(const SurfaceState& s, const BoundaryAnalysis& a) {
  const DivisorGraph& g = s.graph();
  std::vector<PeelingSite> out;
  const Subdivisor allowed = set_minus(set_minus(a.boundary, a.delta_support()), a.upsilon);
  for (const auto& tw : a.delta_minus) {
    Subdivisor tips = make_subdivisor({tw.chain.front(), tw.chain.back()});
    for (ComponentId v : tips)
      for (ComponentId w : allowed) {
        PeelingSite p;
        p.v = v;
        p.w = w;
        p.meets_e = w == s.marked_e();
        p.v_is_tip_of_d = beta(g, v, a.boundary) <= 1;
        out.push_back(p);
      }
  }
  std::sort(out.begin(), out.end(), [](const PeelingSite& x, const PeelingSite& y) {
    return std::make_pair(x.v, x.w) < std::make_pair(y.v, y.w);
  });
  return out;
}

std::optional<std::string> hodge_violation(const SurfaceState& s) {
  const DivisorGraph& g = s.graph();
  const auto ids = g.ids();
  const std::size_t n = ids.size();
  SymMatrix m(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m.set(i, j, g.intersection(ids[i], ids[j]));
    m.set(i, n, -2 - g.self_int(ids[i]));
  }
  m.set(n, n, canonical_square(s.rho()));
  const Inertia in = inertia(m);
  if (in.positive > 1)
    return "intersection form of the curves and K has " + std::to_string(in.positive) + " positive directions";
  if (in.positive + in.negative > static_cast<std::size_t>(s.rho()))
    return "curves and K span rank " + std::to_string(in.positive + in.negative) + " > rho = " + std::to_string(s.rho());
  return std::nullopt;
}

std::vector<std::string> structural_violations(const SurfaceState& s, const BoundaryAnalysis& a) {
  std::vector<std::string> v;
  const DivisorGraph& g = s.graph();
  const Subdivisor& d = a.boundary;
  const ComponentId e = s.marked_e();
  if (!g.has(e) || g.component(e).role != Role::E) v.push_back("P4: marked curve E is missing");
  if (!is_connected(g, d)) v.push_back("boundary is disconnected");
  const auto sp = classify_special(g, d);
  if (!sp.semi_ordinary_endings.empty()) v.push_back("P2: boundary has a semi-ordinary ending");
  if (!sp.superfluous_minus_one.empty())
    v.push_back("P2: superfluous (-1)-curve " + id_str(sp.superfluous_minus_one.front()));
  if (!is_snc(g, set_minus(d, Subdivisor{e}))) v.push_back("P3: D - E is not snc");
  if (is_snc(g, d)) v.push_back("P5: D is snc");
  if (!is_connected(g, set_minus(set_minus(d, a.delta_support()), a.upsilon)))
    v.push_back("P6: D - Delta - Upsilon is disconnected");
  for (std::size_t i = 0; i < a.upsilon.size(); ++i) {
    for (std::size_t j = i + 1; j < a.upsilon.size(); ++j)
      if (g.intersection(a.upsilon[i], a.upsilon[j]) != 0) v.push_back("P7: components of Upsilon meet");
    int k = 0;
    for (ComponentId c : a.delta_support()) k += g.intersection(a.upsilon[i], c) > 0;
    if (k > 1) v.push_back("P7: " + id_str(a.upsilon[i]) + " meets two components of Delta");
  }
  if (static_cast<int>(d.size()) != s.rho() + s.step_index())
    v.push_back("#D = " + std::to_string(d.size()) + " != rho + i = " + std::to_string(s.rho() + s.step_index()));
  if (!is_negative_definite(g.intersection_matrix(a.contracted())))
    v.push_back("Upsilon + Delta is not negative definite");
  if (auto h = hodge_violation(s)) v.push_back("Hodge index: " + *h);
  return v;
}

std::string to_string(StepType t) { return t == StepType::I ? "I" : "II"; }

StepResult apply_step(const SurfaceState& s, const BoundaryAnalysis& a, const PeelingSite& site,
                      const SurfaceState& root) {
  StepResult r;
  r.with_a = s;
  DivisorGraph& g = r.with_a.mutable_graph();
  r.a = g.add_component(-1, Role::Auxiliary, "A" + std::to_string(s.step_index()));
  g.connect(r.a, site.v);
  g.connect(r.a, site.w);
  const std::string loc = "step " + std::to_string(s.step_index()) + " " + to_string(site);

  {
    // (2K + D_flat).A two ways: evaluated on the graph, and as -Bk'(V).
    DivisorClass twice_flat = Rational(2) * DivisorClass::canonical() + DivisorClass::of(a.d_flat);
    Rational direct = r.with_a.dot(twice_flat, curve_class(r.a));
    Rational formula = -a.bk_prime.coeff(site.v);
    Finding f;
    f.check = "step.site_sign";
    f.location = loc;
    f.lhs = direct.str();
    f.relation = "= -Bk'(V) <";
    f.rhs = formula.str();
    f.citation = "(2K + D_flat).A = -A.Bk'(Delta^-) < 0";
    f.verdict = direct == formula && direct.sign() < 0 ? Verdict::Pass : Verdict::Fail;
    f.inputs["V"] = id_str(site.v);
    f.inputs["W"] = id_str(site.w);
    r.findings.push_back(f);
  }

  SurfaceState next = blow_down(r.with_a, r.a);
  r.contracted.push_back(r.a);
  auto sc = contract_superfluous(next);
  next = std::move(sc.state);
  r.contracted.insert(r.contracted.end(), sc.contracted.begin(), sc.contracted.end());
  next.set_step_index(s.step_index() + 1);
  r.next = next;
  auto was_contracted = [&](ComponentId c) {
    return std::find(r.contracted.begin(), r.contracted.end(), c) != r.contracted.end();
  };
  r.type = was_contracted(site.v) && was_contracted(site.w) ? StepType::II : StepType::I;

  {
    // psi^*(K' + D') = K + D + A, tested on every curve of X_i.
    DivisorClass top = DivisorClass::canonical() + DivisorClass::of(QDivisor::reduced(next.boundary()));
    DivisorClass pb = pullback(r.with_a, next, top);
    QDivisor da = QDivisor::reduced(s.boundary());
    da.set(r.a, 1);
    DivisorClass expect = DivisorClass::canonical() + DivisorClass::of(da);
    Finding f;
    f.check = "step.pullback_log_canonical";
    f.location = loc;
    f.relation = "=";
    f.citation = "psi^*(K_{i+1} + D_{i+1}) = K_i + D_i + A_i";
    f.verdict = Verdict::Pass;
    for (ComponentId c : r.with_a.graph().ids()) {
      Rational lhs = r.with_a.dot(pb, curve_class(c)), rhs = r.with_a.dot(expect, curve_class(c));
      if (lhs != rhs) {
        f.verdict = Verdict::Fail;
        f.lhs = lhs.str();
        f.rhs = rhs.str();
        f.inputs["against"] = id_str(c);
        break;
      }
    }
    if (f.verdict == Verdict::Pass) f.lhs = f.rhs = "equal on " + std::to_string(r.with_a.graph().component_count()) + " curves";
    r.findings.push_back(f);
  }

  // Step laws. A failure means the site is not geometric.
  BoundaryAnalysis an;
  try {
    an = analyze_boundary(next);
  } catch (const Error& e) {
    r.violations.push_back(std::string("analysis failed: ") + e.what());
    return r;
  }
  const DivisorGraph& ng = next.graph();
  for (ComponentId u : a.upsilon)
    if (!was_contracted(u) && !contains(an.upsilon, u))
      r.violations.push_back("(iii): image of " + id_str(u) + " left Upsilon");
  const long db0 = static_cast<long>(an.delta.size()) - static_cast<long>(a.delta.size());
  const long dplus = static_cast<long>(an.delta_plus.size()) - static_cast<long>(a.delta_plus.size());
  const long dups = static_cast<long>(an.upsilon.size()) - static_cast<long>(a.upsilon.size());
  if (!site.v_is_tip_of_d) {
    if (r.contracted.size() != 1) r.violations.push_back("(iv): contracted more than A");
    if (db0 != 0) r.violations.push_back("(iv): b0(Delta) changed");
    if (dplus != 1 || dups != 1) r.violations.push_back("(iv): b0(Delta+) and #Upsilon must grow by 1");
  } else {
    const Twig* dv = nullptr;
    for (const auto& tw : a.delta_minus)
      if (contains(tw.support(), site.v)) dv = &tw;
    if (db0 != -1) r.violations.push_back("(v): b0(Delta) must drop by 1");
    if (!(dplus <= dups && (dups == 0 || dups == 1))) r.violations.push_back("(v): b0(Delta+) / #Upsilon deltas");
    if (dv) {
      const Subdivisor dvs = dv->support();
      r.minor_exception = meet(s.graph(), site.w, dvs) > 0;
      std::size_t got = 0;
      for (ComponentId c : dvs) got += was_contracted(c);
      if (r.minor_exception) {
        if (got + 1 != dvs.size()) r.violations.push_back("(v): exception must keep one component of Delta_V");
        if (dplus != 0 || dups != 1) r.violations.push_back("(v): exception deltas");
      } else if (got != dvs.size()) {
        r.violations.push_back("(v): Delta_V not contracted");
      }
    }
  }
  const Subdivisor ndelta = an.delta_support();
  for (ComponentId u : set_minus(an.boundary, ndelta))
    if (meet(ng, u, ndelta) > 1) r.violations.push_back("(vi): " + id_str(u) + " meets Delta twice");
  const ComponentId e = next.marked_e();
  for (ComponentId u : set_minus(root.boundary(), Subdivisor{root.marked_e()}))
    if (ng.has(u) && ng.intersection(u, e) > root.graph().intersection(u, root.marked_e()) + 1)
      r.violations.push_back("(vii): " + id_str(u) + " gained more than one point of contact with E");
  return r;
}

MinimalModel minimal_model(const SurfaceState& s, const BoundaryAnalysis& a) {
  MinimalModel m;
  m.contracted = a.contracted();
  const Subdivisor kept = set_minus(a.boundary, m.contracted);
  DivisorClass numerator = DivisorClass::canonical() + DivisorClass::of(QDivisor::reduced(kept) * Rational(1, 2));
  if (m.contracted.empty()) {
    m.pulled_back = numerator;
  } else {
    auto c = contract_negdef(s, m.contracted, numerator);
    m.pulled_back = c.pulled_back;
    m.discrepancies = c.discrepancies;
  }
  m.rho_y = s.rho() - static_cast<int>(m.contracted.size());
  m.boundary_count = static_cast<int>(kept.size());
  DivisorClass flat = DivisorClass::canonical() + DivisorClass::of(a.d_flat * Rational(1, 2));
  m.pullback_matches_flat = m.pulled_back == flat;
  m.square_pullback = s.dot(m.pulled_back, m.pulled_back);
  m.square_flat = s.dot(flat, flat);
  for (ComponentId b : kept) {
    Rational v = s.dot(flat, curve_class(b));
    if (v.sign() < 0) {
      m.not_nef_witness = b;
      m.witness_value = v;
      break;
    }
  }
  return m;
}

AlmostMinimal almost_minimal(const SurfaceState& s) {
  AlmostMinimal am;
  am.state = resolve_non_snc(s);
  const Subdivisor d = am.state.boundary();
  for (ComponentId c : d)
    if (is_superfluous(am.state.graph(), c, d)) {
      am.snc_minimal = false;
      am.superfluous = c;
      break;
    }
  return am;
}

std::string to_string(NodeClass c) {
  switch (c) {
    case NodeClass::Internal: return "internal";
    case NodeClass::NoSites: return "no_sites";
    case NodeClass::DepthCapped: return "depth_capped";
    case NodeClass::NotNefCertificate: return "not_nef_certificate";
    case NodeClass::Indeterminate: return "indeterminate";
    case NodeClass::Infeasible: return "infeasible";
  }
  return "?";
}

bool RunNode::candidate_terminal() const {
  if (cls == NodeClass::Infeasible) return false;
  if (cls != NodeClass::Internal) return true;
  // A rank-2 model may be a Mori fibre space even with a witness.
  return model && (!model->not_nef_witness || model->rho_y == 2);
}

std::size_t RunTree::branch_count() const {
  std::size_t k = 0;
  for (const auto& n : nodes) k += n.children.empty();
  return k;
}

int RunTree::max_n() const {
  int m = 0;
  for (const auto& n : nodes)
    if (n.cls != NodeClass::Infeasible) m = std::max(m, n.counters.n);
  return m;
}

RunContext make_context(const CurveDescriptor& curve) {
  RunContext ctx;
  ctx.curve = curve;
  ctx.res = build_resolutions(curve);
  const SurfaceState& x = ctx.res.log;
  DivisorClass k = DivisorClass::canonical();
  ctx.p2 = x.dot(k, k + x.boundary_class());
  ctx.c = static_cast<int>(curve.cusps.size());
  for (const auto& cu : curve.cusps) {
    ctx.c0 += cu.semi_ordinary();
    ctx.c0p += cu.ordinary();
  }
  ctx.c1 = ctx.c - ctx.c0;
  for (const auto& rep : ctx.res.cusps) {
    ctx.tau += rep.tau;
    ctx.s += rep.s;
    ctx.tau_star += rep.tau_star;
  }
  try {
    auto a = analyze_boundary(ctx.res.weak);
    ctx.upsilon_root = static_cast<int>(a.upsilon.size());
    ctx.upsilon0_root = static_cast<int>(a.upsilon0.size());
  } catch (const Error&) {
  }
  return ctx;
}

namespace {

void evaluate(RunNode& node, const RunContext& ctx, const RunOptions& opts) {
  try {
    node.analysis = analyze_boundary(node.state);
  } catch (const Error& e) {
    node.cls = NodeClass::Infeasible;
    node.infeasible_reasons.push_back(std::string("analysis failed: ") + e.what());
    return;
  }
  const BoundaryAnalysis& a = *node.analysis;
  auto v = structural_violations(node.state, a);
  node.infeasible_reasons.insert(node.infeasible_reasons.end(), v.begin(), v.end());
  if (!node.infeasible_reasons.empty()) {
    node.cls = NodeClass::Infeasible;
    return;
  }
  node.counters.upsilon = static_cast<int>(a.upsilon.size());
  node.counters.upsilon0 = static_cast<int>(a.upsilon0.size());
  node.counters.eta = node.counters.upsilon - ctx.upsilon_root;
  node.counters.b0_delta = a.delta.size();
  node.counters.b0_delta_plus = a.delta_plus.size();
  node.counters.b0_delta_minus = a.delta_minus.size();
  try {
    node.model = minimal_model(node.state, a);
  } catch (const Error& e) {
    node.cls = NodeClass::Infeasible;
    node.infeasible_reasons.push_back(std::string("minimal model: ") + e.what());
    return;
  }
  const bool witness = node.model->not_nef_witness.has_value();
  if (witness && node.model->rho_y == 1) {
    node.cls = NodeClass::NotNefCertificate;
    return;
  }
  node.sites = enumerate_peeling_sites(node.state, a);
  if (node.sites.empty()) {
    node.cls = witness ? NodeClass::NoSites : NodeClass::Indeterminate;
    return;
  }
  if (node.counters.n >= opts.max_depth) {
    node.cls = NodeClass::DepthCapped;
    return;
  }
  node.cls = NodeClass::Internal;
}

RunNode child_of(const RunNode& parent, const PeelingSite& site, const SurfaceState& root) {
  RunNode child;
  child.path = parent.path + "/" + to_string(site);
  child.site = site;
  child.counters.n = parent.counters.n + 1;
  child.counters.n0 = parent.counters.n0 + (site.meets_e ? 0 : 1);
  child.counters.n1 = parent.counters.n1 + (site.meets_e ? 1 : 0);
  try {
    StepResult st = apply_step(parent.state, *parent.analysis, site, root);
    child.state = std::move(st.next);
    child.step_type = st.type;
    child.minor_exception = st.minor_exception;
    child.contracted = st.contracted;
    child.step_findings = std::move(st.findings);
    if (!st.violations.empty()) {
      child.cls = NodeClass::Infeasible;
      child.infeasible_reasons = std::move(st.violations);
    }
  } catch (const Error& e) {
    child.state = parent.state;
    child.cls = NodeClass::Infeasible;
    child.infeasible_reasons.push_back(std::string("step failed: ") + e.what());
  }
  return child;
}

std::vector<RunNode> grow(RunNode node, const RunContext& ctx, const RunOptions& opts, bool fan_out) {
  if (node.cls != NodeClass::Infeasible) evaluate(node, ctx, opts);
  std::vector<RunNode> out;
  if (node.cls != NodeClass::Internal) {
    out.push_back(std::move(node));
    return out;
  }
  const SurfaceState& root = ctx.res.weak;
  auto build = [&](std::size_t i) { return grow(child_of(node, node.sites[i], root), ctx, opts, false); };
  std::vector<std::vector<RunNode>> subtrees;
  if (fan_out && opts.parallel) {
    subtrees = parallel_map(node.sites.size(), build);
  } else {
    for (std::size_t i = 0; i < node.sites.size(); ++i) subtrees.push_back(build(i));
  }
  out.push_back(std::move(node));
  for (auto& sub : subtrees) {
    const int offset = static_cast<int>(out.size());
    out[0].children.push_back(offset);
    for (auto& n : sub) {
      n.parent = n.parent < 0 ? 0 : n.parent + offset;
      for (int& ch : n.children) ch += offset;
      out.push_back(std::move(n));
    }
  }
  return out;
}

}  // namespace

RunTree run(const CurveDescriptor& curve, const RunOptions& opts) {
  RunTree t;
  t.context = make_context(curve);
  RunNode root;
  root.path = "root";
  root.state = t.context.res.weak;
  t.nodes = grow(std::move(root), t.context, opts, true);
  return t;
}

}  // namespace halfmmp
