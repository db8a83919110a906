#pragma once

#include <optional>
#include <string>
#include <vector>

#include "halfmmp/cusp.hpp"
#include "halfmmp/finding.hpp"
#include "halfmmp/invariants.hpp"
#include "halfmmp/surface.hpp"

namespace halfmmp {

struct BoundaryAnalysis {
  Subdivisor boundary;
  std::vector<Twig> delta;  // maximal (-2)-twigs
  Subdivisor upsilon;
  std::vector<Twig> delta_plus;
  std::vector<Twig> delta_minus;
  Subdivisor upsilon0;  // components of upsilon missing delta_plus
  QDivisor bk_prime;    // bark of delta_minus computed in the boundary
  QDivisor d_flat;

  Subdivisor delta_support() const;
  Subdivisor delta_plus_support() const;
  Subdivisor delta_minus_support() const;
  // upsilon + delta, the curves contracted to reach the minimal model.
  Subdivisor contracted() const;
};

BoundaryAnalysis analyze_boundary(const SurfaceState& s);

struct PeelingSite {
  ComponentId v{};
  ComponentId w{};
  bool meets_e = false;
  bool v_is_tip_of_d = false;
  friend bool operator==(const PeelingSite&, const PeelingSite&) = default;
};
std::string to_string(const PeelingSite& p);

std::vector<PeelingSite> enumerate_peeling_sites(const SurfaceState& s, const BoundaryAnalysis& a);

// Structural properties that every state of a geometric run has. Returns a
// description of each violated one (empty = feasible).
std::vector<std::string> structural_violations(const SurfaceState& s, const BoundaryAnalysis& a);
// Gram matrix of all curves and K has at most one positive eigenvalue and rank <= rho.
std::optional<std::string> hodge_violation(const SurfaceState& s);

enum class StepType { I, II };
std::string to_string(StepType t);

struct StepResult {
  SurfaceState with_a;  // X_i with A inserted as an auxiliary curve
  SurfaceState next;    // X_{i+1}
  ComponentId a{};
  std::vector<ComponentId> contracted;  // A first, then superfluous curves in order
  StepType type = StepType::I;
  bool minor_exception = false;
  std::vector<Finding> findings;        // calculus identities (pullback, site sign)
  std::vector<std::string> violations;  // step laws that fail: the branch is infeasible
};

// root is (X_0, D_0) of the run, used by the E-contact law.
StepResult apply_step(const SurfaceState& s, const BoundaryAnalysis& a, const PeelingSite& site,
                      const SurfaceState& root);

struct MinimalModel {
  int rho_y = 0;
  int boundary_count = 0;
  Subdivisor contracted;
  QDivisor discrepancies;  // a_U
  DivisorClass pulled_back;
  Rational square_pullback;  // (K_Y + D_Y/2)^2 through the solve
  Rational square_flat;      // (K + D_flat/2)^2 through the bark
  bool pullback_matches_flat = false;
  std::optional<ComponentId> not_nef_witness;
  Rational witness_value;  // (K + D_flat/2).witness
  std::string nef_status() const { return not_nef_witness ? "not_nef" : "candidate_nef_or_fiber"; }
};

MinimalModel minimal_model(const SurfaceState& s, const BoundaryAnalysis& a);

struct AlmostMinimal {
  SurfaceState state;
  bool snc_minimal = true;
  std::optional<ComponentId> superfluous;
};
AlmostMinimal almost_minimal(const SurfaceState& s);

enum class NodeClass { Internal, NoSites, DepthCapped, NotNefCertificate, Indeterminate, Infeasible };
std::string to_string(NodeClass c);

// Per-state counters, recomputed from the state itself.
struct StateCounters {
  int n = 0;
  int n0 = 0;
  int n1 = 0;
  int upsilon = 0;
  int upsilon0 = 0;
  int eta = 0;
  std::size_t b0_delta = 0;
  std::size_t b0_delta_plus = 0;
  std::size_t b0_delta_minus = 0;
};

struct RunContext {
  CurveDescriptor curve;
  Resolutions res;
  Rational p2;  // K.(K+D) on the log resolution
  int c = 0;
  int c0 = 0;   // semi-ordinary cusps
  int c1 = 0;
  int c0p = 0;  // ordinary cusps
  int tau = 0;
  int s = 0;
  int tau_star = 0;
  int upsilon_root = 0;
  int upsilon0_root = 0;
};

RunContext make_context(const CurveDescriptor& curve);

struct RunNode {
  int parent = -1;
  std::string path;
  std::optional<PeelingSite> site;
  std::optional<StepType> step_type;
  bool minor_exception = false;
  std::vector<ComponentId> contracted;
  SurfaceState state;
  std::optional<BoundaryAnalysis> analysis;
  std::optional<MinimalModel> model;
  StateCounters counters;
  std::vector<PeelingSite> sites;
  std::vector<int> children;
  NodeClass cls = NodeClass::Internal;
  std::vector<std::string> infeasible_reasons;
  std::vector<Finding> step_findings;

  // Leaves and internal nodes that may still be the end of the geometric run.
  bool candidate_terminal() const;
};

struct RunOptions {
  int max_depth = 5;
  bool parallel = true;
};

struct RunTree {
  RunContext context;
  std::vector<RunNode> nodes;  // nodes[0] is the root; children in site order

  std::size_t branch_count() const;
  int max_n() const;
};

RunTree run(const CurveDescriptor& curve, const RunOptions& opts = {});

}  // namespace halfmmp
