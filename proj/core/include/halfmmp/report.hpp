#pragma once

#include <string>
#include <vector>

#include "halfmmp/verifier.hpp"

namespace halfmmp {

// Graphviz dual graph of the listed components (all components when empty).
// Vertices are labelled "id:self_int"; edges of multiplicity >= 2 carry it as a label.
std::string to_dot(const DivisorGraph& g, const Subdivisor& comps = {}, const std::string& name = "D");

struct ReportOptions {
  bool emit_states = false;
  bool all_branches = true;  // false: only the root and candidate terminal nodes
  bool findings = true;
};

std::string resolution_json(const RunContext& ctx);
std::string run_tree_json(const RunTree& t, const ReportOptions& opts = {});
std::string verify_report_json(const std::vector<CurveReport>& reports, const ReportOptions& opts = {});
std::string verify_report_text(const std::vector<CurveReport>& reports);
// {"schema", "subject", "summary", "findings", "result"}
std::string findings_report_json(const std::string& subject, const std::vector<Finding>& fs);
std::string findings_jsonl(const std::vector<Finding>& fs);
// Core, core graph and Eisenbud-Neumann counts of a boundary.
std::string graph_stats_json(const DivisorGraph& g, const Subdivisor& b);

}  // namespace halfmmp
