#pragma once

#include <string>
#include <vector>

namespace halfmmp::testing {

struct CriterionResult {
  int id = 0;
  bool pass = false;
  std::string detail;
};

CriterionResult criterion_discriminant();  // 1
CriterionResult criterion_bark();          // 2
CriterionResult criterion_inductance();    // 3
CriterionResult criterion_blowup();        // 4
CriterionResult criterion_tricuspidal();   // 5
CriterionResult criterion_catalog_checks();  // 6
CriterionResult criterion_mutations();     // 7
CriterionResult criterion_fibrations();    // 8
CriterionResult criterion_determinism();   // 9

std::vector<CriterionResult> all_criteria();

}  // namespace halfmmp::testing
