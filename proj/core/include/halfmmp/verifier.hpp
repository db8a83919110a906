#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "halfmmp/finding.hpp"
#include "halfmmp/mmp.hpp"

namespace halfmmp {

// Values that depend only on the curve and its log resolution (X, D).
struct CurveFacts {
  std::string name;
  std::optional<bool> log_general_type;
  std::optional<bool> structural_cstst;
  Rational p2;
  int c = 0, c0 = 0, c1 = 0, c0p = 0;
  int tau = 0, s = 0, tau_star = 0;
  int rho_log = 0;        // rho(X)
  int count_log = 0;      // #D
  int rho_weak = 0;       // rho(X_0)
  bool weak_resolves_to_log = false;
  int upsilon_root = 0;   // #Upsilon_0
  int upsilon0_root = 0;  // upsilon_0
  std::size_t b0_delta0_prime = 0;  // maximal (-2)-twigs of D
  std::size_t core_count = 0;
  std::size_t core_graph_vertices = 0;
};

// Values read off one state of the run tree and its almost minimal model.
struct NodeFacts {
  std::string path;
  bool candidate_terminal = false;
  int n = 0, n0 = 0, n1 = 0;
  int rho_n = 0;
  int count_n = 0;
  Rational k_dot_log;   // K_n.(K_n + D_n)
  Rational e_dot_log;   // E_n.(K_n + D_n)
  Rational rest_dot_e;  // (D_n - E_n).E_n
  long pa_dn = 0;
  bool dn_has_tips = false;
  Rational square_lhs;  // (2K_n + D_n^flat)^2
  Rational delta_minus;  // delta(Delta_n^-)
  int upsilon_n = 0;
  int upsilon0_n = 0;
  // almost minimal model (X_n', D_n')
  int rho_prime = 0;
  int count_prime = 0;
  Rational kd_prime;  // K'.D'
  long pa_prime = 0;
  std::size_t b0_delta_prime = 0;
  bool snc_minimal = true;
  std::optional<Rational> ind_prime;
  int min_self_int_prime = 0;
  int max_self_int_prime = 0;
  // minimal model
  bool has_model = false;
  int rho_y = 0;
  int boundary_count = 0;
  bool not_nef_witness = false;
  Rational square_pullback, square_flat;
  bool pullback_matches_flat = false;
  std::vector<std::pair<std::string, Rational>> discrepancies;

  // Anti-ample rank-1 minimal model.
  bool del_pezzo() const { return has_model && not_nef_witness && rho_y == 1; }
  // kappa_{1/2} = -infinity is certified on this branch.
  bool kappa_minus_infinity() const { return (has_model && not_nef_witness) || !snc_minimal; }
};

CurveFacts curve_facts(const RunContext& ctx);
NodeFacts node_facts(const RunContext& ctx, const RunNode& node);

// Hypothesis gates. Absent metadata makes the dependent checks inapplicable.
bool gate_log_general_type(const CurveFacts& cf);
// No structural C**-fibration: such a fibration forces rho(Y) = 2, otherwise metadata decides.
std::optional<bool> no_structural_cstst(const CurveFacts& cf, const NodeFacts& nf);

std::vector<Finding> check_resolution(const CurveFacts& cf);
// Curve level statements on the number of cusps and the core of D.
std::vector<Finding> check_curve_theorems(const CurveFacts& cf);
std::vector<Finding> check_identities(const CurveFacts& cf, const NodeFacts& nf);
std::vector<Finding> check_square_formula(const CurveFacts& cf, const NodeFacts& nf);
std::vector<Finding> check_bounds(const CurveFacts& cf, const NodeFacts& nf);
std::vector<Finding> check_main_theorems(const CurveFacts& cf, const NodeFacts& nf);
std::vector<Finding> check_model(const CurveFacts& cf, const NodeFacts& nf);
std::vector<Finding> check_discrepancies(const std::string& location,
                                         const std::vector<std::pair<std::string, Rational>>& a);
std::vector<Finding> check_discrepancies(const std::string& location, const DivisorGraph& g, const MinimalModel& m);

// Check groups accepted by verify; an empty selection means all of them.
const std::vector<std::string>& check_groups();

struct VerifyOptions {
  std::set<std::string> groups;
  RunOptions run;
};

struct CurveReport {
  RunTree tree;
  std::vector<Finding> findings;
};

CurveReport verify_curve(const CurveDescriptor& curve, const VerifyOptions& opts = {});

// Findings of a finished tree, in node order.
std::vector<Finding> verify_tree(const RunTree& tree, const std::set<std::string>& groups = {});

}  // namespace halfmmp
