#include "halfmmp/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "halfmmp/error.hpp"
#include "halfmmp/invariants.hpp"

namespace halfmmp {

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::BlowupOuter: return "blowup_outer";
    case MoveKind::BlowupInner: return "blowup_inner";
    case MoveKind::BlowupFree: return "blowup_free";
    case MoveKind::Blowdown: return "blowdown";
  }
  return "?";
}

Subdivisor SurfaceState::boundary() const {
  Subdivisor r;
  for (ComponentId c : graph_.ids())
    if (graph_.component(c).role != Role::Auxiliary) r.push_back(c);
  return r;
}

Subdivisor SurfaceState::aux() const {
  Subdivisor r;
  for (ComponentId c : graph_.ids())
    if (graph_.component(c).role == Role::Auxiliary) r.push_back(c);
  return r;
}

namespace {

bool in_boundary(const DivisorGraph& g, ComponentId c) { return g.component(c).role != Role::Auxiliary; }

}  // namespace

SurfaceState blow_up(const SurfaceState& s, const Center& center, const std::string& label) {
  SurfaceState out = s;
  DivisorGraph& g = out.mutable_graph();
  std::vector<ComponentId> branches;
  IntersectionPoint p;
  switch (center.kind) {
    case Center::Kind::Point:
      if (center.point >= g.points().size()) throw Error(ErrorCode::InvalidCenter, "no point with that index");
      p = g.points()[center.point];
      branches = p.comps;
      break;
    case Center::Kind::OnComponent:
      if (!g.has(center.component)) throw Error(ErrorCode::InvalidCenter, "no such component");
      branches = {center.component};
      break;
    case Center::Kind::Free:
      break;
  }
  Subdivisor on_d;
  for (ComponentId b : branches)
    if (in_boundary(g, b)) on_d.push_back(b);

  BirationalMove mv;
  mv.kind = on_d.empty() ? MoveKind::BlowupFree : (on_d.size() == 1 ? MoveKind::BlowupOuter : MoveKind::BlowupInner);
  mv.center_components = on_d;
  mv.pullback_multiplicity = on_d.empty() ? 0 : static_cast<int>(on_d.size()) - 1;

  ComponentId x = g.add_component(-1, on_d.empty() ? Role::Auxiliary : Role::Exceptional, label);
  mv.curve = x;
  for (ComponentId b : branches) {
    g.set_self_int(b, g.self_int(b) - 1);
    mv.exceptional_meets.emplace_back(b, 1);
  }

  if (center.kind == Center::Kind::Point) {
    g.remove_point(center.point);
    // Branches sharing a tangent direction stay together on the new curve.
    const std::size_t n = p.comps.size();
    std::vector<int> cls(n, -1);
    int ncls = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (cls[i] >= 0) continue;
      cls[i] = ncls;
      for (std::size_t j = i + 1; j < n; ++j)
        if (cls[j] < 0 && p.contacts[IntersectionPoint::pair_index(i, j, n)] >= 2) cls[j] = ncls;
      ++ncls;
    }
    for (int k = 0; k < ncls; ++k) {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < n; ++i)
        if (cls[i] == k) members.push_back(i);
      std::vector<ComponentId> comps;
      for (std::size_t i : members) comps.push_back(p.comps[i]);
      comps.push_back(x);
      std::vector<int> ordered;
      const std::size_t m = comps.size();
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
          if (b == m - 1)
            ordered.push_back(1);
          else
            ordered.push_back(p.contacts[IntersectionPoint::pair_index(members[a], members[b], n)] - 1);
        }
      g.add_point(comps, ordered);
    }
  } else if (center.kind == Center::Kind::OnComponent) {
    g.connect(center.component, x, 1);
  }
  out.set_rho(s.rho() + 1);
  out.append(std::move(mv));
  return out;
}

SurfaceState blow_down(const SurfaceState& s, ComponentId x) {
  const DivisorGraph& g0 = s.graph();
  if (!g0.has(x)) throw Error(ErrorCode::InvalidCenter, "no component " + std::to_string(to_int(x)));
  if (g0.self_int(x) != -1)
    throw Error(ErrorCode::NotMinusOne, "C" + std::to_string(to_int(x)) + " has self-intersection " +
                                            std::to_string(g0.self_int(x)));
  if (x == s.marked_e()) throw Error(ErrorCode::InvalidCenter, "refusing to contract the marked curve E");

  struct Branch {
    ComponentId c;
    std::size_t point;  // which point of x it came from
  };
  std::vector<Branch> branches;
  std::vector<std::size_t> xpts = g0.points_on(x);
  std::set<ComponentId> seen;
  for (std::size_t k = 0; k < xpts.size(); ++k) {
    const auto& p = g0.points()[xpts[k]];
    for (ComponentId c : p.comps) {
      if (c == x) continue;
      if (p.contact(c, x) != 1)
        throw Error(ErrorCode::WouldCreateUnrepresentable,
                    "C" + std::to_string(to_int(c)) + " is tangent to the contracted curve");
      if (!seen.insert(c).second)
        throw Error(ErrorCode::WouldCreateUnrepresentable,
                    "C" + std::to_string(to_int(c)) + " meets the contracted curve twice");
      branches.push_back({c, k});
    }
  }
  std::sort(branches.begin(), branches.end(), [](const Branch& a, const Branch& b) { return a.c < b.c; });

  const std::size_t n = branches.size();
  std::vector<int> contacts;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (branches[i].point == branches[j].point)
        contacts.push_back(g0.points()[xpts[branches[i].point]].contact(branches[i].c, branches[j].c) + 1);
      else
        contacts.push_back(1);
    }
  // Reject three or more mutually tangent branches.
  for (std::size_t i = 0; i < n; ++i) {
    int tangent = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && contacts[IntersectionPoint::pair_index(i, j, n)] >= 2) ++tangent;
    if (tangent >= 3)
      throw Error(ErrorCode::WouldCreateUnrepresentable, "contraction makes three or more branches mutually tangent");
  }

  SurfaceState out = s;
  DivisorGraph& g = out.mutable_graph();
  BirationalMove mv;
  mv.kind = MoveKind::Blowdown;
  mv.curve = x;
  for (const auto& b : branches) {
    mv.exceptional_meets.emplace_back(b.c, 1);
    if (in_boundary(g0, b.c)) mv.center_components.push_back(b.c);
  }
  mv.pullback_multiplicity = mv.center_components.empty() ? 0 : static_cast<int>(mv.center_components.size()) - 1;
  // remove all points on x, then x itself
  for (auto it = xpts.rbegin(); it != xpts.rend(); ++it) g.remove_point(*it);
  g.remove_component(x);
  for (const auto& b : branches) g.set_self_int(b.c, g.self_int(b.c) + 1);
  if (n >= 2) {
    std::vector<ComponentId> comps;
    for (const auto& b : branches) comps.push_back(b.c);
    g.add_point(comps, contacts);
  }
  out.set_rho(s.rho() - 1);
  out.append(std::move(mv));
  return out;
}

DivisorClass pullback_through(const BirationalMove& m, const DivisorClass& z) {
  // sigma^* K = K_big - X, sigma^* C = C + (C.X) X
  DivisorClass r = z;
  Rational xcoef = -z.k;
  for (const auto& [c, mult] : m.exceptional_meets) xcoef += z.d.coeff(c) * mult;
  r.d.set(m.curve, z.d.coeff(m.curve) + xcoef);
  return r;
}

DivisorClass pullback(const SurfaceState& from, const SurfaceState& to, const DivisorClass& z) {
  const auto& hf = from.history();
  const auto& ht = to.history();
  if (ht.size() < hf.size()) throw Error(ErrorCode::NotRelated, "target history is shorter than source history");
  for (std::size_t i = 0; i < hf.size(); ++i)
    if (ht[i].curve != hf[i].curve || ht[i].kind != hf[i].kind)
      throw Error(ErrorCode::NotRelated, "histories diverge at move " + std::to_string(i));
  std::vector<const BirationalMove*> moves;
  for (std::size_t i = hf.size(); i < ht.size(); ++i) moves.push_back(&ht[i]);
  if (moves.empty()) return z;
  bool downs = std::all_of(moves.begin(), moves.end(), [](auto* m) { return m->kind == MoveKind::Blowdown; });
  bool ups = std::none_of(moves.begin(), moves.end(), [](auto* m) { return m->kind == MoveKind::Blowdown; });
  if (!downs && !ups) throw Error(ErrorCode::NotRelated, "mixed blowups and blowdowns");
  DivisorClass r = z;
  if (downs) {
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) r = pullback_through(**it, r);
  } else {
    for (auto* m : moves) r = pullback_through(*m, r);
  }
  return r;
}

NegdefContraction contract_negdef(const SurfaceState& s, const Subdivisor& c, const DivisorClass& numerator) {
  NegdefContraction out;
  out.contracted = make_subdivisor(c);
  const DivisorGraph& g = s.graph();
  SymMatrix m = g.intersection_matrix(out.contracted);
  if (!is_negative_definite(m)) throw Error(ErrorCode::NotNegativeDefinite, "contracted divisor is not negative definite");
  std::vector<Rational> rhs;
  for (ComponentId u : out.contracted) rhs.push_back(-dot(g, numerator, u));
  auto p = solve(m, rhs);
  out.pulled_back = numerator;
  for (std::size_t i = 0; i < out.contracted.size(); ++i) {
    out.pullback_coeffs.set(out.contracted[i], p[i]);
    out.discrepancies.set(out.contracted[i], -p[i]);
    out.pulled_back.d.add(out.contracted[i], p[i]);
  }
  return out;
}

SurfaceState resolve_non_snc(const SurfaceState& s) {
  SurfaceState cur = s;
  for (int guard = 0;; ++guard) {
    if (guard > 10000) throw Error(ErrorCode::UnsupportedConfiguration, "resolution does not terminate");
    const Subdivisor d = cur.boundary();
    auto bad = non_snc_points(cur.graph(), d);
    if (bad.empty()) return cur;
    std::size_t best = bad[0];
    auto key = [&](std::size_t idx) {
      const auto& p = cur.graph().points()[idx];
      return std::make_pair(-p.max_contact(), to_int(p.comps.front()));
    };
    for (std::size_t idx : bad)
      if (key(idx) < key(best)) best = idx;
    const auto& p = cur.graph().points()[best];
    for (ComponentId c : p.comps)
      if (!contains(d, c)) throw Error(ErrorCode::UnsupportedConfiguration, "non-snc point meets a curve off the boundary");
    int tangent_pairs = 0;
    for (int v : p.contacts) tangent_pairs += v >= 2;
    if (p.comps.size() > 3 || tangent_pairs > 1)
      throw Error(ErrorCode::UnsupportedConfiguration, "non-snc point with " + std::to_string(p.comps.size()) +
                                                           " branches and " + std::to_string(tangent_pairs) +
                                                           " tangent pairs");
    cur = blow_up(cur, Center::at_point(best));
  }
}

SuperfluousContraction contract_superfluous(const SurfaceState& s) {
  SuperfluousContraction out{s, {}};
  while (true) {
    const Subdivisor d = out.state.boundary();
    std::optional<ComponentId> pick;
    for (ComponentId c : d)
      if (c != out.state.marked_e() && is_superfluous(out.state.graph(), c, d)) {
        pick = c;
        break;
      }
    if (!pick) return out;
    out.state = blow_down(out.state, *pick);
    out.contracted.push_back(*pick);
  }
}

}  // namespace halfmmp
