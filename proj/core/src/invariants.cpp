#include "halfmmp/invariants.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "halfmmp/error.hpp"

namespace halfmmp {

int beta(const DivisorGraph& g, const Subdivisor& r, const Subdivisor& t) {
  const Subdivisor rest = set_minus(t, r);
  int s = 0;
  for (ComponentId a : r)
    for (ComponentId b : rest) s += g.intersection(a, b);
  return s;
}

int beta(const DivisorGraph& g, ComponentId c, const Subdivisor& t) { return beta(g, Subdivisor{c}, t); }

namespace {

// Branch indices of p lying in t.
std::vector<std::size_t> restricted(const IntersectionPoint& p, const Subdivisor& t) {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < p.comps.size(); ++i)
    if (contains(t, p.comps[i])) r.push_back(i);
  return r;
}

bool restricted_snc(const IntersectionPoint& p, const Subdivisor& t, std::size_t* branches = nullptr) {
  auto r = restricted(p, t);
  if (branches) *branches = r.size();
  if (r.size() < 2) return true;
  if (r.size() > 2) return false;
  return p.contacts[IntersectionPoint::pair_index(r[0], r[1], p.comps.size())] == 1;
}

// Every point of t through c is a plain transversal crossing of two branches.
bool chain_like(const DivisorGraph& g, ComponentId c, const Subdivisor& t) {
  if (beta(g, c, t) > 2) return false;
  for (std::size_t idx : g.points_on(c))
    if (!restricted_snc(g.points()[idx], t)) return false;
  return true;
}

std::vector<ComponentId> neighbours_except(const DivisorGraph& g, ComponentId c, const Subdivisor& t,
                                           std::optional<ComponentId> prev) {
  std::vector<ComponentId> out;
  for (ComponentId n : g.neighbours(c, t))
    if (!prev || n != *prev) out.push_back(n);
  return out;
}

using Multigraph = std::map<ComponentId, std::multiset<ComponentId>>;

Multigraph to_multigraph(const DivisorGraph& g, const Subdivisor& b) {
  Multigraph m;
  for (ComponentId c : b) m[c];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      int k = g.intersection(b[i], b[j]);
      for (int e = 0; e < k; ++e) {
        m[b[i]].insert(b[j]);
        m[b[j]].insert(b[i]);
      }
    }
  return m;
}

template <class Pred>
void contract_degree_two(Multigraph& m, Pred contractible) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [v, nb] : m) {
      if (nb.size() != 2 || !contractible(v)) continue;
      ComponentId a = *nb.begin(), b = *std::next(nb.begin());
      if (a == v || b == v || a == b) continue;
      m[a].erase(m[a].find(v));
      m[b].erase(m[b].find(v));
      m[a].insert(b);
      m[b].insert(a);
      m.erase(v);
      changed = true;
      break;
    }
  }
}

AbstractGraph from_multigraph(const Multigraph& m) {
  AbstractGraph out;
  std::map<ComponentId, std::size_t> index;
  for (const auto& [v, nb] : m) {
    index[v] = out.vertices.size();
    out.vertices.push_back(v);
  }
  for (const auto& [v, nb] : m)
    for (ComponentId w : nb)
      if (v < w) out.edges.emplace_back(index[v], index[w]);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace

std::vector<std::size_t> non_snc_points(const DivisorGraph& g, const Subdivisor& t) {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < g.points().size(); ++i)
    if (!restricted_snc(g.points()[i], t)) r.push_back(i);
  return r;
}

bool is_snc(const DivisorGraph& g, const Subdivisor& t) { return non_snc_points(g, t).empty(); }

std::vector<Subdivisor> connected_components(const DivisorGraph& g, const Subdivisor& t) {
  std::vector<Subdivisor> out;
  std::set<ComponentId> seen;
  for (ComponentId start : t) {
    if (seen.count(start)) continue;
    std::vector<ComponentId> comp;
    std::deque<ComponentId> q{start};
    seen.insert(start);
    while (!q.empty()) {
      ComponentId c = q.front();
      q.pop_front();
      comp.push_back(c);
      for (ComponentId n : g.neighbours(c, t))
        if (seen.insert(n).second) q.push_back(n);
    }
    out.push_back(make_subdivisor(std::move(comp)));
  }
  return out;
}

bool is_connected(const DivisorGraph& g, const Subdivisor& t) { return connected_components(g, t).size() <= 1; }

bool is_tree(const DivisorGraph& g, const Subdivisor& t) {
  if (!is_connected(g, t)) return false;
  long edges = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) edges += g.intersection(t[i], t[j]);
  return edges + 1 == static_cast<long>(t.size());
}

std::optional<std::vector<ComponentId>> as_chain(const DivisorGraph& g, const Subdivisor& t) {
  if (t.empty() || !is_tree(g, t) || !is_snc(g, t)) return std::nullopt;
  if (t.size() == 1) return std::vector<ComponentId>{t[0]};
  std::optional<ComponentId> tip;
  for (ComponentId c : t) {
    int b = beta(g, c, t);
    if (b > 2) return std::nullopt;
    if (b == 1 && !tip) tip = c;
  }
  std::vector<ComponentId> chain{*tip};
  std::optional<ComponentId> prev;
  ComponentId cur = *tip;
  while (true) {
    auto nx = neighbours_except(g, cur, t, prev);
    if (nx.empty()) break;
    prev = cur;
    cur = nx[0];
    chain.push_back(cur);
  }
  return chain;
}

std::vector<Twig> boundary_twigs(const DivisorGraph& g, const Subdivisor& t) {
  std::vector<Twig> out;
  if (t.size() == 1) {
    out.push_back(Twig{{t[0]}, std::nullopt});
    return out;
  }
  for (ComponentId tip : t) {
    if (beta(g, tip, t) != 1 || !chain_like(g, tip, t)) continue;
    Twig tw;
    tw.chain.push_back(tip);
    std::optional<ComponentId> prev;
    ComponentId cur = tip;
    while (true) {
      auto nx = neighbours_except(g, cur, t, prev);
      if (nx.empty()) break;
      ComponentId n = nx[0];
      int bn = beta(g, n, t);
      if (chain_like(g, n, t) && (bn == 2 || bn == 1) &&
          std::find(tw.chain.begin(), tw.chain.end(), n) == tw.chain.end()) {
        tw.chain.push_back(n);
        prev = cur;
        cur = n;
        if (bn == 1) break;  // reached the far tip: t is a chain
        continue;
      }
      tw.attached = n;
      break;
    }
    out.push_back(std::move(tw));
  }
  return out;
}

std::vector<Twig> maximal_twigs(const DivisorGraph& g, const Subdivisor& t) {
  auto bad = non_snc_points(g, t);
  if (!bad.empty()) throw Error(ErrorCode::NotSnc, "divisor has " + std::to_string(bad.size()) + " non-snc point(s)");
  return boundary_twigs(g, t);
}

std::vector<Twig> minus_two_twigs(const DivisorGraph& g, const std::vector<Twig>& twigs) {
  std::vector<Twig> out;
  std::set<Subdivisor> seen;
  for (const auto& tw : twigs) {
    Twig p;
    std::size_t k = 0;
    while (k < tw.chain.size() && g.self_int(tw.chain[k]) == -2) p.chain.push_back(tw.chain[k++]);
    if (p.chain.empty()) continue;
    p.attached = k < tw.chain.size() ? std::optional<ComponentId>(tw.chain[k]) : tw.attached;
    if (seen.insert(p.support()).second) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Twig> minus_two_twigs(const DivisorGraph& g, const Subdivisor& t) {
  return minus_two_twigs(g, boundary_twigs(g, t));
}

Rational discriminant(const DivisorGraph& g, const Subdivisor& t) {
  return det(g.intersection_matrix(make_subdivisor(t)).negated());
}

namespace {
void require_negative_definite(const DivisorGraph& g, const Twig& r) {
  if (!is_negative_definite(g.intersection_matrix(r.support())))
    throw Error(ErrorCode::NotNegativeDefinite, "twig starting at C" + std::to_string(to_int(r.chain.at(0))) +
                                                    " is not negative definite");
}
}  // namespace

Rational inductance(const DivisorGraph& g, const Twig& r) {
  require_negative_definite(g, r);
  std::vector<ComponentId> rest(r.chain.begin() + 1, r.chain.end());
  return discriminant(g, rest) / discriminant(g, r.chain);
}

Rational delta(const DivisorGraph& g, const Twig& r) {
  require_negative_definite(g, r);
  return Rational(1) / discriminant(g, r.chain);
}

Rational inductance(const DivisorGraph& g, const Subdivisor& t) {
  if (as_chain(g, t)) throw Error(ErrorCode::AmbiguousTwigs, "divisor is a chain; its twigs are ambiguous");
  Rational s;
  for (const auto& tw : boundary_twigs(g, t)) s += inductance(g, tw);
  return s;
}

QDivisor bark_of_twig(const DivisorGraph& g, const Subdivisor& t, const Twig& r) {
  require_negative_definite(g, r);
  const Subdivisor s = r.support();
  std::vector<Rational> b;
  for (ComponentId c : s) b.emplace_back(beta(g, c, t) - 2);
  auto x = solve(g.intersection_matrix(s), b);
  QDivisor q;
  for (std::size_t i = 0; i < s.size(); ++i) q.set(s[i], x[i]);
  return q;
}

QDivisor bark(const DivisorGraph& g, const Subdivisor& t) {
  if (!is_connected(g, t)) throw std::invalid_argument("bark: divisor is not connected");
  auto twigs = maximal_twigs(g, t);
  if (as_chain(g, t)) throw Error(ErrorCode::AmbiguousTwigs, "divisor is a chain; its twigs are ambiguous");
  QDivisor q;
  for (const auto& tw : twigs) q += bark_of_twig(g, t, tw);
  return q;
}

long arithmetic_genus(const DivisorGraph& g, const Subdivisor& t) {
  QDivisor tt = QDivisor::reduced(t);
  Rational twice = canonical_dot(g, tt) + dot(g, tt, tt);
  Rational pa = twice / 2 + 1;
  return pa.to_long();
}

bool is_superfluous(const DivisorGraph& g, ComponentId c, const Subdivisor& t) {
  if (!contains(t, c) || g.self_int(c) != -1) return false;
  std::vector<ComponentId> others;
  for (std::size_t idx : g.points_on(c)) {
    const auto& p = g.points()[idx];
    std::size_t branches = 0;
    if (!restricted_snc(p, t, &branches)) return false;
    if (branches < 2) continue;
    for (ComponentId o : p.comps)
      if (o != c && contains(t, o)) others.push_back(o);
  }
  if (others.size() > 2) return false;
  return make_subdivisor(others).size() == others.size();
}

namespace {

// [2,1,3,(2)_{m-1}] hanging off the rest of t through l only.
std::optional<std::vector<ComponentId>> semi_ordinary_at(const DivisorGraph& g, ComponentId l, const Subdivisor& t) {
  if (g.self_int(l) != -1 || beta(g, l, t) != 3 || !std::all_of(g.points_on(l).begin(), g.points_on(l).end(), [&](std::size_t i) {
        return restricted_snc(g.points()[i], t);
      }))
    return std::nullopt;
  auto nb = g.neighbours(l, t);
  if (nb.size() != 3) return std::nullopt;
  for (ComponentId a : nb) {
    if (g.self_int(a) != -2 || beta(g, a, t) != 1) continue;
    for (ComponentId b : nb) {
      if (b == a || g.self_int(b) != -3 || !chain_like(g, b, t)) continue;
      std::vector<ComponentId> tail{b};
      std::optional<ComponentId> prev = l;
      ComponentId cur = b;
      bool ok = true;
      while (beta(g, cur, t) == 2) {
        auto nx = neighbours_except(g, cur, t, prev);
        if (nx.size() != 1) { ok = false; break; }
        ComponentId n = nx[0];
        if (g.self_int(n) != -2 || !chain_like(g, n, t) || n == l || n == a) { ok = false; break; }
        tail.push_back(n);
        prev = cur;
        cur = n;
      }
      if (!ok || beta(g, cur, t) != 1) continue;
      std::vector<ComponentId> out{a, l};
      out.insert(out.end(), tail.begin(), tail.end());
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace

SpecialComponents classify_special(const DivisorGraph& g, const Subdivisor& t) {
  SpecialComponents s;
  for (ComponentId c : t) {
    if (is_superfluous(g, c, t)) s.superfluous_minus_one.push_back(c);
    if (auto e = semi_ordinary_at(g, c, t)) s.semi_ordinary_endings.push_back(*e);
  }
  s.minus_two_twigs = minus_two_twigs(g, t);
  return s;
}

std::vector<std::size_t> AbstractGraph::degrees() const {
  std::vector<std::size_t> d(vertices.size());
  for (auto [a, b] : edges) {
    d[a]++;
    d[b]++;
  }
  return d;
}

AbstractGraph dual_graph(const DivisorGraph& g, const Subdivisor& b) { return from_multigraph(to_multigraph(g, b)); }

Subdivisor core(const DivisorGraph& g, const Subdivisor& b) {
  Subdivisor in_twigs;
  for (const auto& tw : boundary_twigs(g, b)) in_twigs = set_union(in_twigs, tw.support());
  return set_minus(b, in_twigs);
}

AbstractGraph core_graph(const DivisorGraph& g, const Subdivisor& b) {
  Subdivisor in_twigs;
  for (const auto& tw : boundary_twigs(g, b)) in_twigs = set_union(in_twigs, tw.support());
  auto m = to_multigraph(g, b);
  contract_degree_two(m, [&](ComponentId v) { return contains(in_twigs, v); });
  return from_multigraph(m);
}

AbstractGraph en_diagram(const DivisorGraph& g, const Subdivisor& b) {
  if (!is_tree(g, b)) throw Error(ErrorCode::NotTree, "EN diagram needs a tree");
  auto m = to_multigraph(g, b);
  contract_degree_two(m, [](ComponentId) { return true; });
  return from_multigraph(m);
}

bool is_caterpillar(const AbstractGraph& tree) {
  if (tree.edges.size() + 1 != tree.vertices.size() && !tree.vertices.empty()) return false;
  auto deg = tree.degrees();
  std::vector<std::size_t> inner_deg(tree.vertices.size());
  for (auto [a, b] : tree.edges)
    if (deg[a] > 1 && deg[b] > 1) {
      inner_deg[a]++;
      inner_deg[b]++;
    }
  for (std::size_t v = 0; v < tree.vertices.size(); ++v)
    if (deg[v] > 1 && inner_deg[v] > 2) return false;
  return true;
}

}  // namespace halfmmp
