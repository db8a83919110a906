#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "halfmmp/divisor_graph.hpp"

namespace halfmmp {

enum class MoveKind { BlowupOuter, BlowupInner, BlowupFree, Blowdown };
std::string to_string(MoveKind k);

struct Center {
  enum class Kind { Point, OnComponent, Free };
  Kind kind = Kind::Free;
  std::size_t point = 0;   // index into graph().points() for Kind::Point
  ComponentId component{};  // for Kind::OnComponent

  static Center at_point(std::size_t idx) { return {Kind::Point, idx, {}}; }
  static Center on(ComponentId c) { return {Kind::OnComponent, 0, c}; }
  static Center free() { return {}; }
};

struct BirationalMove {
  MoveKind kind = MoveKind::Blowdown;
  // The (-1)-curve created (blowup) or removed (blowdown).
  ComponentId curve{};
  // Boundary branches through the center, ascending.
  std::vector<ComponentId> center_components;
  // mult_p(D) - 1 for the reduced boundary before the blowup (1 = inner, 0 = outer).
  int pullback_multiplicity = 0;
  // On the larger surface: C.X for every component C != X meeting X.
  std::vector<std::pair<ComponentId, int>> exceptional_meets;
};

// A smooth projective rational surface carrying the divisor graph. Components
// with Role::Auxiliary lie outside the boundary.
class SurfaceState {
 public:
  SurfaceState() = default;
  SurfaceState(DivisorGraph g, int rho, ComponentId e) : graph_(std::move(g)), rho_(rho), marked_e_(e) {}

  const DivisorGraph& graph() const { return graph_; }
  DivisorGraph& mutable_graph() { return graph_; }
  int rho() const { return rho_; }
  int step_index() const { return step_index_; }
  ComponentId marked_e() const { return marked_e_; }
  const std::vector<BirationalMove>& history() const { return history_; }

  Subdivisor boundary() const;
  Subdivisor aux() const;

  void set_step_index(int i) { step_index_ = i; }
  void set_rho(int r) { rho_ = r; }
  void append(BirationalMove m) { history_.push_back(std::move(m)); }
  void clear_history() { history_.clear(); }

  Rational k_squared() const { return canonical_square(rho_); }
  Rational dot(const DivisorClass& a, const DivisorClass& b) const { return halfmmp::dot(graph_, rho_, a, b); }
  DivisorClass boundary_class() const { return DivisorClass::of(QDivisor::reduced(boundary())); }

 private:
  DivisorGraph graph_;
  int rho_ = 1;
  int step_index_ = 0;
  ComponentId marked_e_{};
  std::vector<BirationalMove> history_;
};

SurfaceState blow_up(const SurfaceState& s, const Center& center, const std::string& label = {});
SurfaceState blow_down(const SurfaceState& s, ComponentId c);

// Total transform of z between two states linked by the moves recorded after
// the shorter history. Blowdowns pull back from to -> from, blowups from -> to.
DivisorClass pullback(const SurfaceState& from, const SurfaceState& to, const DivisorClass& z);
// Pull back through a single move, z living on the smaller surface.
DivisorClass pullback_through(const BirationalMove& m, const DivisorClass& z);

struct NegdefContraction {
  Subdivisor contracted;
  QDivisor pullback_coeffs;  // p_U: pullback = numerator + sum p_U U
  QDivisor discrepancies;    // a_U = -p_U
  DivisorClass pulled_back;
};
// Throws Error{NotNegativeDefinite}.
NegdefContraction contract_negdef(const SurfaceState& s, const Subdivisor& c, const DivisorClass& numerator);

// Blows up non-snc points of the boundary, highest contact first, ties by
// lowest component id. Throws Error{UnsupportedConfiguration}.
SurfaceState resolve_non_snc(const SurfaceState& s);

struct SuperfluousContraction {
  SurfaceState state;
  std::vector<ComponentId> contracted;
};
// Contracts superfluous (-1)-curves of the boundary, lowest id first, until none remain.
SuperfluousContraction contract_superfluous(const SurfaceState& s);

std::optional<std::map<ComponentId, ComponentId>> find_isomorphism(const DivisorGraph& a, const DivisorGraph& b);
bool isomorphic(const DivisorGraph& a, const DivisorGraph& b);
// Equal rho, isomorphic graphs with the marked curves matched.
bool isomorphic(const SurfaceState& a, const SurfaceState& b);

}  // namespace halfmmp
