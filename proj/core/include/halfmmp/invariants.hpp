#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "halfmmp/divisor_graph.hpp"

namespace halfmmp {

// A twig read from its tip: chain[0] is the tip.
struct Twig {
  std::vector<ComponentId> chain;
  std::optional<ComponentId> attached;  // component of T - twig meeting the last element

  Subdivisor support() const { return make_subdivisor(chain); }
  friend bool operator==(const Twig&, const Twig&) = default;
};

int beta(const DivisorGraph& g, const Subdivisor& r, const Subdivisor& t);
int beta(const DivisorGraph& g, ComponentId c, const Subdivisor& t);

// Points of g that are not snc once restricted to branches in t.
std::vector<std::size_t> non_snc_points(const DivisorGraph& g, const Subdivisor& t);
bool is_snc(const DivisorGraph& g, const Subdivisor& t);
std::vector<Subdivisor> connected_components(const DivisorGraph& g, const Subdivisor& t);
bool is_connected(const DivisorGraph& g, const Subdivisor& t);
// Dual graph of t is a tree (multi-edges count as cycles); t must be connected.
bool is_tree(const DivisorGraph& g, const Subdivisor& t);
// Connected snc tree with all branching numbers <= 2. Returned tip-first.
std::optional<std::vector<ComponentId>> as_chain(const DivisorGraph& g, const Subdivisor& t);

// Maximal rational twigs of a connected snc t. If t is itself a chain the two
// reads from either tip are returned (one read for a single component).
std::vector<Twig> maximal_twigs(const DivisorGraph& g, const Subdivisor& t);
// Same walk, for boundaries that may be non-snc away from the twigs: a twig
// only passes through snc points of t.
std::vector<Twig> boundary_twigs(const DivisorGraph& g, const Subdivisor& t);
// (-2) prefixes of maximal twigs, deduplicated by support.
std::vector<Twig> minus_two_twigs(const DivisorGraph& g, const Subdivisor& t);
std::vector<Twig> minus_two_twigs(const DivisorGraph& g, const std::vector<Twig>& twigs);

// det(-Q(t)); integer valued; d(empty) = 1. Order of t is irrelevant.
Rational discriminant(const DivisorGraph& g, const std::vector<ComponentId>& t);
Rational inductance(const DivisorGraph& g, const Twig& r);
Rational delta(const DivisorGraph& g, const Twig& r);
// Sum over the maximal twigs of t (t must not be a chain).
Rational inductance(const DivisorGraph& g, const Subdivisor& t);

// Bk_T R: Bk.R0 = beta_T(R0) - 2 on every component R0 of r.
QDivisor bark_of_twig(const DivisorGraph& g, const Subdivisor& t, const Twig& r);
QDivisor bark(const DivisorGraph& g, const Subdivisor& t);

long arithmetic_genus(const DivisorGraph& g, const Subdivisor& t);

// A (-1)-curve of t meeting at most two other components of t, each once and
// transversally at snc points.
bool is_superfluous(const DivisorGraph& g, ComponentId c, const Subdivisor& t);

struct SpecialComponents {
  Subdivisor superfluous_minus_one;
  std::vector<std::vector<ComponentId>> semi_ordinary_endings;  // [2,1,3,(2)_{m-1}] in that order
  std::vector<Twig> minus_two_twigs;
};
SpecialComponents classify_special(const DivisorGraph& g, const Subdivisor& t);

struct AbstractGraph {
  std::vector<ComponentId> vertices;               // ascending ids of kept components
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // indices into vertices, i < j

  std::vector<std::size_t> degrees() const;
  friend bool operator==(const AbstractGraph&, const AbstractGraph&) = default;
};

AbstractGraph dual_graph(const DivisorGraph& g, const Subdivisor& b);
Subdivisor core(const DivisorGraph& g, const Subdivisor& b);
AbstractGraph core_graph(const DivisorGraph& g, const Subdivisor& b);
// Throws Error{NotTree}.
AbstractGraph en_diagram(const DivisorGraph& g, const Subdivisor& b);
// Tree whose non-leaf vertices form a path.
bool is_caterpillar(const AbstractGraph& tree);

}  // namespace halfmmp
