#pragma once

#include <optional>
#include <string>
#include <vector>

#include "halfmmp/finding.hpp"
#include "halfmmp/surface.hpp"

namespace halfmmp {

struct CuspDescriptor {
  std::vector<int> multiplicity_sequence;  // non-increasing, entries >= 2

  long delta_invariant() const;
  bool semi_ordinary() const;  // (2,...,2)
  bool ordinary() const;       // (2)
  friend bool operator==(const CuspDescriptor&, const CuspDescriptor&) = default;
};

struct CurveMetadata {
  std::optional<bool> log_general_type;
  // Whether the complement carries a structural C**-fibration. Absent = unknown.
  std::optional<bool> structural_cstst_fibration;
  std::string notes;
  friend bool operator==(const CurveMetadata&, const CurveMetadata&) = default;
};

struct CurveDescriptor {
  std::string name;
  int degree = 0;
  std::vector<CuspDescriptor> cusps;
  CurveMetadata metadata;
  friend bool operator==(const CurveDescriptor&, const CurveDescriptor&) = default;
};

struct CuspResolutionReport {
  CuspDescriptor cusp;
  // Multiplicities of the blown up points, trailing 1s of the log stage included.
  std::vector<int> multiplicities;
  // proximate[j] lists the earlier points p_j is proximate to (0-based).
  std::vector<std::vector<int>> proximate;
  DivisorGraph q;                  // exceptional curves of the minimal log resolution
  std::vector<ComponentId> order;  // components of q in blowup order
  ComponentId l{};                 // the unique (-1)-curve; E meets it transversally
  int weak_blowups = 0;            // blowups needed for the weak resolution
  int tau = 0;
  int s = 0;
  int tau_star = 0;
  long self_int_drop = 0;  // sum of squared multiplicities
};

// Throws Error{InadmissibleSequence}.
CuspResolutionReport simulate_cusp_resolution(const CuspDescriptor& c);

struct Resolutions {
  SurfaceState log;   // (X, D)
  SurfaceState weak;  // (X_0, D_0)
  std::vector<CuspResolutionReport> cusps;
  // Global ids of the exceptional curves over each cusp, in blowup order.
  std::vector<std::vector<ComponentId>> cusp_components;
  ComponentId e{};
};

// Throws Error{GenusFormulaViolated} or Error{InadmissibleSequence}.
Resolutions build_resolutions(const CurveDescriptor& curve);
SurfaceState build_log_resolution(const CurveDescriptor& curve);
SurfaceState build_weak_resolution(const CurveDescriptor& curve);

std::vector<Finding> validate_curve(const CurveDescriptor& curve);

}  // namespace halfmmp
