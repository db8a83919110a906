#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "halfmmp/lattice.hpp"
#include "halfmmp/rational.hpp"

namespace halfmmp {

enum class ComponentId : std::int32_t {};
inline int to_int(ComponentId c) { return static_cast<int>(c); }
inline ComponentId component_id(int v) { return static_cast<ComponentId>(v); }

enum class Role { E, Exceptional, Auxiliary };
std::string to_string(Role r);
Role role_from_string(const std::string& s);

// A smooth rational curve on the ambient surface.
struct Component {
  ComponentId id{};
  int self_int = 0;
  Role role = Role::Exceptional;
  std::string label;
  int genus = 0;  // always 0 here
  friend bool operator==(const Component&, const Component&) = default;
};

// A point shared by >= 2 smooth branches. Every pair of branches through the
// point has a contact order >= 1 (1 = transversal). Contacts of smooth
// branches are ultrametric: for any three, the two smallest are equal.
struct IntersectionPoint {
  std::vector<ComponentId> comps;  // strictly increasing
  std::vector<int> contacts;       // pairs (0,1),(0,2),..,(1,2),.. in row order

  static std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);
  std::optional<std::size_t> index_of(ComponentId c) const;
  bool contains(ComponentId c) const { return index_of(c).has_value(); }
  // 0 when a or b does not pass through the point.
  int contact(ComponentId a, ComponentId b) const;
  int max_contact() const;
  bool is_snc() const { return comps.size() == 2 && contacts[0] == 1; }

  friend bool operator==(const IntersectionPoint&, const IntersectionPoint&) = default;
};

using Subdivisor = std::vector<ComponentId>;  // sorted, no repeats

Subdivisor make_subdivisor(std::vector<ComponentId> ids);
bool contains(const Subdivisor& s, ComponentId c);
Subdivisor set_union(const Subdivisor& a, const Subdivisor& b);
Subdivisor set_minus(const Subdivisor& a, const Subdivisor& b);
Subdivisor set_intersection(const Subdivisor& a, const Subdivisor& b);

class DivisorGraph {
 public:
  ComponentId add_component(int self_int, Role role, std::string label = {});
  // For deserialization; the id must be unused.
  void insert_component(const Component& c);
  void remove_component(ComponentId c);
  void set_self_int(ComponentId c, int v);
  void set_label(ComponentId c, std::string label);

  // contacts as for IntersectionPoint, in the order of the sorted ids.
  std::size_t add_point(std::vector<ComponentId> comps, std::vector<int> contacts);
  std::size_t add_point_transversal(std::vector<ComponentId> comps);
  std::size_t connect(ComponentId a, ComponentId b, int contact = 1);
  void remove_point(std::size_t idx);

  bool has(ComponentId c) const { return comps_.count(c) != 0; }
  const Component& component(ComponentId c) const;
  int self_int(ComponentId c) const { return component(c).self_int; }
  std::vector<ComponentId> ids() const;
  std::size_t component_count() const { return comps_.size(); }
  const std::vector<IntersectionPoint>& points() const { return points_; }
  std::vector<std::size_t> points_on(ComponentId c) const;
  int next_id() const { return next_id_; }

  // Total intersection number; self-intersection if a == b.
  int intersection(ComponentId a, ComponentId b) const;
  SymMatrix intersection_matrix(const Subdivisor& s) const;
  // Components of s meeting c (c excluded), ascending.
  std::vector<ComponentId> neighbours(ComponentId c, const Subdivisor& s) const;

  friend bool operator==(const DivisorGraph&, const DivisorGraph&) = default;

 private:
  void check_point(const IntersectionPoint& p) const;

  std::map<ComponentId, Component> comps_;
  std::vector<IntersectionPoint> points_;
  int next_id_ = 0;
};

// Map component -> coefficient. Zero coefficients are never stored.
class QDivisor {
 public:
  QDivisor() = default;
  static QDivisor reduced(const Subdivisor& s);

  Rational coeff(ComponentId c) const;
  void set(ComponentId c, const Rational& v);
  void add(ComponentId c, const Rational& v);
  const std::map<ComponentId, Rational>& terms() const { return coeffs_; }
  Subdivisor support() const;
  bool is_zero() const { return coeffs_.empty(); }

  QDivisor& operator+=(const QDivisor& o);
  QDivisor& operator-=(const QDivisor& o);
  QDivisor& operator*=(const Rational& r);
  friend QDivisor operator+(QDivisor a, const QDivisor& b) { return a += b; }
  friend QDivisor operator-(QDivisor a, const QDivisor& b) { return a -= b; }
  friend QDivisor operator*(QDivisor a, const Rational& r) { return a *= r; }
  friend QDivisor operator*(const Rational& r, QDivisor a) { return a *= r; }
  friend bool operator==(const QDivisor&, const QDivisor&) = default;

  std::string str() const;

 private:
  std::map<ComponentId, Rational> coeffs_;
};

// k*K + d for the canonical class K of the ambient surface.
struct DivisorClass {
  Rational k;
  QDivisor d;

  static DivisorClass canonical() { return {1, {}}; }
  static DivisorClass of(QDivisor q) { return {0, std::move(q)}; }
  DivisorClass& operator+=(const DivisorClass& o) { k += o.k; d += o.d; return *this; }
  DivisorClass& operator-=(const DivisorClass& o) { k -= o.k; d -= o.d; return *this; }
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& r, DivisorClass a) { a.k *= r; a.d *= r; return a; }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

Rational dot(const DivisorGraph& g, const QDivisor& a, const QDivisor& b);
Rational dot(const DivisorGraph& g, const QDivisor& a, ComponentId c);
// K.Z by adjunction on smooth rational curves: K.C = -2 - C^2.
Rational canonical_dot(const DivisorGraph& g, const QDivisor& z);
// Noether on a smooth rational surface.
inline Rational canonical_square(int rho) { return Rational(10 - rho); }
Rational dot(const DivisorGraph& g, int rho, const DivisorClass& a, const DivisorClass& b);
Rational dot(const DivisorGraph& g, const DivisorClass& a, ComponentId c);

}  // namespace halfmmp
