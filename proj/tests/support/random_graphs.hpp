#pragma once

#include <random>
#include <vector>

#include "halfmmp/surface.hpp"

namespace halfmmp::testing {

// Random snc tree with n components, weights[i] = -C_i^2.
DivisorGraph weighted_tree(const std::vector<int>& parent, const std::vector<int>& weights);
DivisorGraph weighted_chain(const std::vector<int>& weights);

// Random tree shape: parent[i] < i for i >= 1, parent[0] = -1.
std::vector<int> random_parents(std::mt19937_64& rng, int n);

// Random tree with at least one branching component, n >= 4. Twig components
// get weights in [2, 5], branching ones in [-3, 5].
DivisorGraph random_branched_tree(std::mt19937_64& rng, int n);

// Random boundary (tree plus occasional tangency or triple point) on a surface.
SurfaceState random_state(std::mt19937_64& rng);

// A random valid blowup center of s.
Center random_center(std::mt19937_64& rng, const SurfaceState& s);

}  // namespace halfmmp::testing
