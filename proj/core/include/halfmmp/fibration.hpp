#pragma once

#include <optional>
#include <vector>

#include "halfmmp/divisor_graph.hpp"
#include "halfmmp/finding.hpp"

namespace halfmmp {

// A singular fiber of the P^1-fibration together with the horizontal boundary
// components meeting it. Every component not listed as horizontal is a fiber component.
struct FiberGraph {
  DivisorGraph graph;
  ComponentId l_f{};
  Subdivisor horizontal;
  bool l_f_in_boundary = false;
};

struct FibrationData {
  int h = 0;      // horizontal boundary components
  int nu = 0;     // fibers contained in the boundary
  int sigma = 0;  // singular fibers of the open part
  int n = 0;
  std::optional<int> cusps;
  std::vector<FiberGraph> fibers;
  // chi(F_s) for each singular fiber of the open part.
  std::vector<int> open_fiber_euler;
};

// Throws Error{MalformedFiber} when a fiber graph is not a tree with L_f its unique (-1)-curve.
std::vector<Finding> check_fiber(const FiberGraph& f, const std::string& location);
std::vector<Finding> check_fibration(const FibrationData& f);

// Euler characteristic of L_f minus the boundary, when L_f is off the boundary.
std::optional<int> open_euler_characteristic(const FiberGraph& f);

// [2,2,2] with L_f on the middle curve; one horizontal curve meets an end,
// another meets L_f.
FiberGraph standard_fiber();
// Data consistent with the relations for the given h and n (requires nu, sigma >= 0).
FibrationData generate_fibration(int h, int n);

}  // namespace halfmmp
