#pragma once

#include <map>
#include <string>
#include <vector>

namespace halfmmp {

enum class Verdict { Pass, Fail, Inapplicable };
std::string to_string(Verdict v);

// One evaluated relation. lhs/rhs hold exact values; inputs is the certificate.
struct Finding {
  std::string check;
  std::string location;
  Verdict verdict = Verdict::Pass;
  std::string lhs;
  std::string relation;  // "=", "<=", "<", ">=", ...
  std::string rhs;
  std::string citation;
  std::map<std::string, std::string> inputs;
  bool advisory = false;  // never counted as a failure
  std::string note;
};

bool any_failure(const std::vector<Finding>& fs);

}  // namespace halfmmp
