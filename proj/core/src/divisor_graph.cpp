#include "halfmmp/divisor_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "halfmmp/error.hpp"

namespace halfmmp {

std::string to_string(Role r) {
  switch (r) {
    case Role::E: return "E";
    case Role::Exceptional: return "exceptional";
    case Role::Auxiliary: return "auxiliary";
  }
  return "?";
}

Role role_from_string(const std::string& s) {
  if (s == "E") return Role::E;
  if (s == "exceptional") return Role::Exceptional;
  if (s == "auxiliary") return Role::Auxiliary;
  throw std::invalid_argument("unknown component role '" + s + "'");
}

std::size_t IntersectionPoint::pair_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  // offset of row i in the strictly upper triangle
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::optional<std::size_t> IntersectionPoint::index_of(ComponentId c) const {
  auto it = std::lower_bound(comps.begin(), comps.end(), c);
  if (it == comps.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - comps.begin());
}

int IntersectionPoint::contact(ComponentId a, ComponentId b) const {
  auto ia = index_of(a), ib = index_of(b);
  if (!ia || !ib || *ia == *ib) return 0;
  return contacts[pair_index(*ia, *ib, comps.size())];
}

int IntersectionPoint::max_contact() const {
  return contacts.empty() ? 0 : *std::max_element(contacts.begin(), contacts.end());
}

Subdivisor make_subdivisor(std::vector<ComponentId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool contains(const Subdivisor& s, ComponentId c) { return std::binary_search(s.begin(), s.end(), c); }

Subdivisor set_union(const Subdivisor& a, const Subdivisor& b) {
  Subdivisor r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

Subdivisor set_minus(const Subdivisor& a, const Subdivisor& b) {
  Subdivisor r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

Subdivisor set_intersection(const Subdivisor& a, const Subdivisor& b) {
  Subdivisor r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

ComponentId DivisorGraph::add_component(int self_int, Role role, std::string label) {
  Component c;
  c.id = component_id(next_id_++);
  c.self_int = self_int;
  c.role = role;
  c.label = std::move(label);
  comps_.emplace(c.id, c);
  return c.id;
}

void DivisorGraph::insert_component(const Component& c) {
  if (has(c.id)) throw std::invalid_argument("duplicate component id " + std::to_string(to_int(c.id)));
  if (to_int(c.id) < 0) throw std::invalid_argument("negative component id");
  comps_.emplace(c.id, c);
  next_id_ = std::max(next_id_, to_int(c.id) + 1);
}

void DivisorGraph::remove_component(ComponentId c) {
  if (!comps_.erase(c)) throw std::out_of_range("no component " + std::to_string(to_int(c)));
  std::vector<IntersectionPoint> kept;
  for (auto& p : points_) {
    auto idx = p.index_of(c);
    if (!idx) {
      kept.push_back(std::move(p));
      continue;
    }
    if (p.comps.size() <= 2) continue;
    IntersectionPoint q;
    const std::size_t n = p.comps.size();
    for (std::size_t i = 0; i < n; ++i)
      if (i != *idx) q.comps.push_back(p.comps[i]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (i != *idx && j != *idx) q.contacts.push_back(p.contacts[IntersectionPoint::pair_index(i, j, n)]);
    kept.push_back(std::move(q));
  }
  points_ = std::move(kept);
}

void DivisorGraph::set_self_int(ComponentId c, int v) {
  auto it = comps_.find(c);
  if (it == comps_.end()) throw std::out_of_range("no component " + std::to_string(to_int(c)));
  it->second.self_int = v;
}

void DivisorGraph::set_label(ComponentId c, std::string label) {
  auto it = comps_.find(c);
  if (it == comps_.end()) throw std::out_of_range("no component " + std::to_string(to_int(c)));
  it->second.label = std::move(label);
}

void DivisorGraph::check_point(const IntersectionPoint& p) const {
  const std::size_t n = p.comps.size();
  if (n < 2) throw std::invalid_argument("intersection point needs two components");
  if (p.contacts.size() != n * (n - 1) / 2) throw std::invalid_argument("contact list has wrong length");
  for (std::size_t i = 0; i < n; ++i) {
    if (!has(p.comps[i])) throw std::out_of_range("point refers to missing component");
    if (i > 0 && !(p.comps[i - 1] < p.comps[i])) throw std::invalid_argument("repeated component at a point");
  }
  for (int c : p.contacts)
    if (c < 1) throw std::invalid_argument("contact order must be >= 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        int a = p.contacts[IntersectionPoint::pair_index(i, j, n)];
        int b = p.contacts[IntersectionPoint::pair_index(i, k, n)];
        int c = p.contacts[IntersectionPoint::pair_index(j, k, n)];
        int lo = std::min({a, b, c});
        int cnt = (a == lo) + (b == lo) + (c == lo);
        if (cnt < 2) throw std::invalid_argument("contact orders at a point are not ultrametric");
      }
}

std::size_t DivisorGraph::add_point(std::vector<ComponentId> comps, std::vector<int> contacts) {
  // Sort ids and permute the pairwise contacts accordingly.
  const std::size_t n = comps.size();
  if (contacts.size() != n * (n - 1) / 2) throw std::invalid_argument("contact list has wrong length");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return comps[a] < comps[b]; });
  IntersectionPoint p;
  for (std::size_t i = 0; i < n; ++i) p.comps.push_back(comps[order[i]]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      p.contacts.push_back(contacts[IntersectionPoint::pair_index(order[i], order[j], n)]);
  check_point(p);
  points_.push_back(std::move(p));
  return points_.size() - 1;
}

std::size_t DivisorGraph::add_point_transversal(std::vector<ComponentId> comps) {
  std::vector<int> contacts(comps.size() * (comps.size() - 1) / 2, 1);
  return add_point(std::move(comps), std::move(contacts));
}

std::size_t DivisorGraph::connect(ComponentId a, ComponentId b, int contact) {
  return add_point({a, b}, {contact});
}

void DivisorGraph::remove_point(std::size_t idx) {
  if (idx >= points_.size()) throw std::out_of_range("no such point");
  points_.erase(points_.begin() + static_cast<std::ptrdiff_t>(idx));
}

const Component& DivisorGraph::component(ComponentId c) const {
  auto it = comps_.find(c);
  if (it == comps_.end()) throw std::out_of_range("no component " + std::to_string(to_int(c)));
  return it->second;
}

std::vector<ComponentId> DivisorGraph::ids() const {
  std::vector<ComponentId> r;
  r.reserve(comps_.size());
  for (const auto& [id, c] : comps_) r.push_back(id);
  return r;
}

std::vector<std::size_t> DivisorGraph::points_on(ComponentId c) const {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i].contains(c)) r.push_back(i);
  return r;
}

int DivisorGraph::intersection(ComponentId a, ComponentId b) const {
  if (a == b) return self_int(a);
  int s = 0;
  for (const auto& p : points_) s += p.contact(a, b);
  return s;
}

SymMatrix DivisorGraph::intersection_matrix(const Subdivisor& s) const {
  SymMatrix m(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    m.set(i, i, self_int(s[i]));
    for (std::size_t j = i + 1; j < s.size(); ++j) m.set(i, j, intersection(s[i], s[j]));
  }
  return m;
}

std::vector<ComponentId> DivisorGraph::neighbours(ComponentId c, const Subdivisor& s) const {
  std::vector<ComponentId> r;
  for (const auto& p : points_) {
    if (!p.contains(c)) continue;
    for (ComponentId o : p.comps)
      if (o != c && halfmmp::contains(s, o)) r.push_back(o);
  }
  return make_subdivisor(std::move(r));
}

QDivisor QDivisor::reduced(const Subdivisor& s) {
  QDivisor q;
  for (ComponentId c : s) q.set(c, 1);
  return q;
}

Rational QDivisor::coeff(ComponentId c) const {
  auto it = coeffs_.find(c);
  return it == coeffs_.end() ? Rational() : it->second;
}

void QDivisor::set(ComponentId c, const Rational& v) {
  if (v.is_zero())
    coeffs_.erase(c);
  else
    coeffs_[c] = v;
}

void QDivisor::add(ComponentId c, const Rational& v) { set(c, coeff(c) + v); }

Subdivisor QDivisor::support() const {
  Subdivisor r;
  for (const auto& [c, v] : coeffs_) r.push_back(c);
  return r;
}

QDivisor& QDivisor::operator+=(const QDivisor& o) {
  for (const auto& [c, v] : o.coeffs_) add(c, v);
  return *this;
}

QDivisor& QDivisor::operator-=(const QDivisor& o) {
  for (const auto& [c, v] : o.coeffs_) add(c, -v);
  return *this;
}

QDivisor& QDivisor::operator*=(const Rational& r) {
  if (r.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [c, v] : coeffs_) v *= r;
  return *this;
}

std::string QDivisor::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, v] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << v << "*C" << to_int(c);
  }
  return os.str();
}

Rational dot(const DivisorGraph& g, const QDivisor& a, ComponentId c) {
  Rational s;
  for (const auto& [x, v] : a.terms()) s += v * g.intersection(x, c);
  return s;
}

Rational dot(const DivisorGraph& g, const QDivisor& a, const QDivisor& b) {
  Rational s;
  for (const auto& [y, w] : b.terms()) s += w * dot(g, a, y);
  return s;
}

Rational canonical_dot(const DivisorGraph& g, const QDivisor& z) {
  Rational s;
  for (const auto& [c, v] : z.terms()) s += v * (-2 - g.self_int(c));
  return s;
}

Rational dot(const DivisorGraph& g, int rho, const DivisorClass& a, const DivisorClass& b) {
  return a.k * b.k * canonical_square(rho) + a.k * canonical_dot(g, b.d) + b.k * canonical_dot(g, a.d) +
         dot(g, a.d, b.d);
}

Rational dot(const DivisorGraph& g, const DivisorClass& a, ComponentId c) {
  return a.k * (-2 - g.self_int(c)) + dot(g, a.d, c);
}

}  // namespace halfmmp
