#pragma once

#include <functional>
#include <string>
#include <vector>

#include "halfmmp/finding.hpp"

namespace halfmmp::testing {

// Every check id the library can emit.
const std::vector<std::string>& all_check_ids();

struct MutationCase {
  std::string check;
  std::string description;
  std::function<std::vector<Finding>()> run;
};

// One hand-built violating input per check id.
const std::vector<MutationCase>& mutation_cases();

// lhs, relation, citation and location present, plus rhs or a note.
bool complete_certificate(const Finding& f);

// Fail finding for `check` with a complete certificate among fs.
bool has_certified_failure(const std::vector<Finding>& fs, const std::string& check);

}  // namespace halfmmp::testing
