#pragma once

#include <vector>

#include "halfmmp/invariants.hpp"

// Independent reference computations, written without the library's linear
// algebra so they can be compared against it.
namespace halfmmp::testing {

// Laplace expansion along the first row, memoized on the set of unused columns.
long long cofactor_det(const std::vector<std::vector<long long>>& m);

// -Q(t) as an integer matrix in the given order.
std::vector<std::vector<long long>> negated_form(const DivisorGraph& g, const std::vector<ComponentId>& t);

// d([a_1, ..., a_k]) by the continuant recurrence d_k = a_k d_{k-1} - d_{k-2}.
long long continuant(const std::vector<int>& weights);

// ind([a_1, ..., a_k]) read from a_1 by ind = 1 / (a_1 - ind([a_2, ..., a_k])).
Rational inductance_recurrence(const std::vector<int>& weights);

// Bark of a twig [T_1 (tip), ..., T_k]: coefficient of T_j is d(T_{j+1} + ... + T_k) / d(T).
std::vector<Rational> bark_closed_form(const DivisorGraph& g, const Twig& t);

}  // namespace halfmmp::testing
