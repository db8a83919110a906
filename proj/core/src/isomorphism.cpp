#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "halfmmp/surface.hpp"

namespace halfmmp {

namespace {

// Multiset of contact lists at the points through c, as an invariant colour seed.
std::vector<std::vector<int>> point_signature(const DivisorGraph& g, ComponentId c) {
  std::vector<std::vector<int>> sig;
  for (std::size_t idx : g.points_on(c)) {
    const auto& p = g.points()[idx];
    std::vector<int> row;
    row.push_back(static_cast<int>(p.comps.size()));
    for (ComponentId o : p.comps)
      if (o != c) row.push_back(p.contact(c, o));
    std::sort(row.begin() + 1, row.end());
    sig.push_back(std::move(row));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

// One colour-refinement round shared by both graphs so colours stay comparable.
bool refine_pair(const DivisorGraph& ga, const DivisorGraph& gb, std::map<ComponentId, int>& ca,
                 std::map<ComponentId, int>& cb) {
  using Key = std::pair<int, std::vector<std::pair<int, int>>>;
  auto key_of = [](const DivisorGraph& g, const std::map<ComponentId, int>& col, ComponentId c) {
    std::vector<std::pair<int, int>> nb;
    for (ComponentId o : g.ids())
      if (o != c) {
        int m = g.intersection(c, o);
        if (m) nb.emplace_back(col.at(o), m);
      }
    std::sort(nb.begin(), nb.end());
    return Key{col.at(c), nb};
  };
  std::map<ComponentId, Key> ka, kb;
  std::set<Key> distinct;
  for (ComponentId c : ga.ids()) distinct.insert(ka[c] = key_of(ga, ca, c));
  for (ComponentId c : gb.ids()) distinct.insert(kb[c] = key_of(gb, cb, c));
  std::size_t before = 0;
  {
    std::set<int> s;
    for (auto& [c, v] : ca) s.insert(v);
    for (auto& [c, v] : cb) s.insert(v);
    before = s.size();
  }
  for (auto& [c, k] : ka) ca[c] = static_cast<int>(std::distance(distinct.begin(), distinct.find(k)));
  for (auto& [c, k] : kb) cb[c] = static_cast<int>(std::distance(distinct.begin(), distinct.find(k)));
  return distinct.size() != before;
}

std::vector<std::pair<std::vector<ComponentId>, std::vector<int>>> mapped_points(
    const DivisorGraph& g, const std::map<ComponentId, ComponentId>* f) {
  std::vector<std::pair<std::vector<ComponentId>, std::vector<int>>> out;
  for (const auto& p : g.points()) {
    std::vector<ComponentId> comps = p.comps;
    if (f)
      for (auto& c : comps) c = f->at(c);
    std::vector<std::size_t> order(comps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return comps[a] < comps[b]; });
    std::vector<ComponentId> sc;
    std::vector<int> contacts;
    for (std::size_t i : order) sc.push_back(comps[i]);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = i + 1; j < order.size(); ++j)
        contacts.push_back(p.contacts[IntersectionPoint::pair_index(order[i], order[j], comps.size())]);
    out.emplace_back(std::move(sc), std::move(contacts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Matcher {
  const DivisorGraph& a;
  const DivisorGraph& b;
  std::vector<ComponentId> va;
  std::map<ComponentId, int> ca, cb;
  std::map<ComponentId, ComponentId> f;
  std::set<ComponentId> used;

  bool go(std::size_t k) {
    if (k == va.size()) return mapped_points(a, &f) == mapped_points(b, nullptr);
    ComponentId x = va[k];
    for (ComponentId y : b.ids()) {
      if (used.count(y) || cb.at(y) != ca.at(x)) continue;
      bool ok = true;
      for (const auto& [px, py] : f)
        if (a.intersection(x, px) != b.intersection(y, py)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      f[x] = y;
      used.insert(y);
      if (go(k + 1)) return true;
      f.erase(x);
      used.erase(y);
    }
    return false;
  }
};

}  // namespace

std::optional<std::map<ComponentId, ComponentId>> find_isomorphism(const DivisorGraph& a, const DivisorGraph& b) {
  if (a.component_count() != b.component_count() || a.points().size() != b.points().size()) return std::nullopt;
  Matcher m{a, b, a.ids(), {}, {}, {}, {}};
  // Seeds are ranked on the union so equal seeds get equal colours.
  {
    using Seed = std::tuple<int, int, std::vector<std::vector<int>>>;
    auto seed = [](const DivisorGraph& g, ComponentId c) {
      return Seed{static_cast<int>(g.component(c).role), g.self_int(c), point_signature(g, c)};
    };
    std::set<Seed> distinct;
    std::map<ComponentId, Seed> xa, xb;
    for (ComponentId c : a.ids()) distinct.insert(xa[c] = seed(a, c));
    for (ComponentId c : b.ids()) distinct.insert(xb[c] = seed(b, c));
    for (auto& [c, s] : xa) m.ca[c] = static_cast<int>(std::distance(distinct.begin(), distinct.find(s)));
    for (auto& [c, s] : xb) m.cb[c] = static_cast<int>(std::distance(distinct.begin(), distinct.find(s)));
  }
  for (std::size_t round = 0; round < a.component_count() + 1; ++round)
    if (!refine_pair(a, b, m.ca, m.cb)) break;
  std::map<int, int> hist;
  for (auto& [c, v] : m.ca) ++hist[v];
  for (auto& [c, v] : m.cb) --hist[v];
  for (auto& [v, n] : hist)
    if (n != 0) return std::nullopt;
  std::map<int, int> class_size;
  for (auto& [c, v] : m.ca) ++class_size[v];
  // Smallest colour classes first.
  std::stable_sort(m.va.begin(), m.va.end(), [&](ComponentId x, ComponentId y) {
    return std::make_pair(class_size[m.ca[x]], m.ca[x]) < std::make_pair(class_size[m.ca[y]], m.ca[y]);
  });
  if (!m.go(0)) return std::nullopt;
  return m.f;
}

bool isomorphic(const DivisorGraph& a, const DivisorGraph& b) { return find_isomorphism(a, b).has_value(); }

bool isomorphic(const SurfaceState& a, const SurfaceState& b) {
  if (a.rho() != b.rho()) return false;
  auto f = find_isomorphism(a.graph(), b.graph());
  if (!f) return false;
  // Roles already pin E when it is the only E-role curve; check explicitly anyway.
  auto it = f->find(a.marked_e());
  if (it == f->end()) return !b.graph().has(b.marked_e());
  return it->second == b.marked_e();
}

}  // namespace halfmmp
