#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "halfmmp/catalog.hpp"
#include "halfmmp/error.hpp"
#include "halfmmp/fibration.hpp"
#include "halfmmp/json_io.hpp"
#include "halfmmp/parallel.hpp"
#include "halfmmp/report.hpp"
#include "halfmmp/verifier.hpp"

namespace fs = std::filesystem;
using namespace halfmmp;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailFindings = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A path to a curve file, or the name of a bundled curve (with or without ".json").
CurveDescriptor load_curve(const std::string& arg) {
  if (fs::is_regular_file(arg)) return parse_curve(read_file(arg));
  std::string name = fs::path(arg).filename().string();
  if (name.size() > 5 && name.ends_with(".json")) name.resize(name.size() - 5);
  if (auto e = find_bundled(name)) return e->curve;
  throw InputError("no such curve file or catalog entry: " + arg);
}

std::vector<CatalogEntry> load_entries(const std::string& dir) {
  if (dir.empty()) {
    const std::string d = default_catalog_dir();
    if (fs::is_directory(d)) return load_catalog_dir(d);
    return bundled_catalog();
  }
  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir);
  return load_catalog_dir(dir);
}

std::string stamp(const std::string& json_text) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  auto in = nlohmann::ordered_json::parse(json_text);
  nlohmann::ordered_json out;
  out["timestamp"] = buf;
  for (auto it = in.begin(); it != in.end(); ++it) out[it.key()] = it.value();
  return out.dump(2) + "\n";
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

std::set<std::string> parse_groups(const std::string& list) {
  std::set<std::string> g;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) g.insert(item);
  return g;
}

std::vector<CurveReport> verify_all(const std::vector<CurveDescriptor>& curves, const VerifyOptions& opts) {
  return parallel_map(curves.size(), [&](std::size_t i) { return verify_curve(curves[i], opts); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Half-integral MMP for rational cuspidal plane curves"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "halfmmp 1.0.0");

  std::string output;
  bool timestamp = false;
  int max_depth = 5;

  auto* resolve = app.add_subcommand("resolve", "Build the weak and log resolutions of a curve");
  std::string curve_arg, dot_path;
  bool weak = false;
  resolve->add_option("curve", curve_arg, "Curve JSON file or catalog name")->required();
  resolve->add_option("--dot", dot_path, "Write the boundary dual graph as DOT");
  resolve->add_flag("--weak", weak, "DOT of the weak resolution instead of the log resolution");
  resolve->add_option("-o,--output", output, "Output file (default stdout)");

  auto* minimalize = app.add_subcommand("minimalize", "Run the minimalization over all admissible branches");
  bool all_branches = false, emit_states = false, serial = false;
  minimalize->add_option("curve", curve_arg, "Curve JSON file or catalog name")->required();
  minimalize->add_option("--max-depth", max_depth, "Maximal number of steps")->check(CLI::NonNegativeNumber);
  minimalize->add_flag("--all-branches", all_branches, "Report every node, not only terminal candidates");
  minimalize->add_flag("--emit-states", emit_states, "Include the surface state of each node");
  minimalize->add_flag("--serial", serial, "Grow the tree on one thread");
  minimalize->add_option("-o,--output", output, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run the check suite");
  std::vector<std::string> curve_args;
  std::string checks, format = "json", jsonl_path;
  verify->add_option("curves", curve_args, "Curve JSON files or catalog names")->required();
  verify->add_option("--checks", checks, "Comma separated check groups (default all)");
  verify->add_option("--max-depth", max_depth, "Maximal number of steps")->check(CLI::NonNegativeNumber);
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--findings-jsonl", jsonl_path, "Also write all findings as JSON lines");
  verify->add_flag("--timestamp", timestamp, "Add a generation timestamp to JSON output");
  verify->add_option("-o,--output", output, "Output file (default stdout)");

  auto* catalog = app.add_subcommand("catalog", "Bundled curve catalog");
  catalog->require_subcommand(1);
  std::string catalog_dir;
  auto* list = catalog->add_subcommand("list", "List catalog entries");
  list->add_option("--dir", catalog_dir, "Catalog directory");
  auto* cexport = catalog->add_subcommand("export", "Write the bundled entries as JSON files");
  cexport->add_option("--dir", catalog_dir, "Target directory")->required();
  auto* crun = catalog->add_subcommand("run", "Verify every entry and compare frozen values");
  crun->add_option("--dir", catalog_dir, "Catalog directory");
  crun->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  crun->add_option("--max-depth", max_depth, "Maximal number of steps")->check(CLI::NonNegativeNumber);
  crun->add_flag("--timestamp", timestamp, "Add a generation timestamp to JSON output");
  crun->add_option("-o,--output", output, "Output file (default stdout)");

  auto* fib = app.add_subcommand("fibration-check", "Check C**-fibration data");
  std::string fib_path;
  std::vector<int> generate;
  fib->add_option("file", fib_path, "FibrationData JSON");
  fib->add_option("--generate", generate, "Generate data for H N instead of reading a file")->expected(2);
  fib->add_option("-o,--output", output, "Output file (default stdout)");

  auto* stats = app.add_subcommand("graph-stats", "Core, core graph and EN diagram counts");
  std::string graph_arg;
  stats->add_option("input", graph_arg, "Graph, state or curve JSON, or a catalog name")->required();
  stats->add_option("-o,--output", output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*resolve) {
      const CurveDescriptor c = load_curve(curve_arg);
      const RunContext ctx = make_context(c);
      if (!dot_path.empty()) {
        const SurfaceState& s = weak ? ctx.res.weak : ctx.res.log;
        emit(to_dot(s.graph(), s.boundary(), c.name), dot_path);
      }
      emit(resolution_json(ctx), output);
      return kOk;
    }
    if (*minimalize) {
      RunOptions ro;
      ro.max_depth = max_depth;
      ro.parallel = !serial;
      const RunTree t = run(load_curve(curve_arg), ro);
      ReportOptions rep;
      rep.all_branches = all_branches;
      rep.emit_states = emit_states;
      emit(run_tree_json(t, rep), output);
      return kOk;
    }
    if (*verify) {
      std::vector<CurveDescriptor> curves;
      for (const auto& a : curve_args) curves.push_back(load_curve(a));
      VerifyOptions vo;
      vo.groups = parse_groups(checks);
      vo.run.max_depth = max_depth;
      const auto reports = verify_all(curves, vo);
      std::vector<Finding> all;
      for (const auto& r : reports) all.insert(all.end(), r.findings.begin(), r.findings.end());
      if (!jsonl_path.empty()) emit(findings_jsonl(all), jsonl_path);
      if (format == "text") {
        emit(verify_report_text(reports), output);
      } else {
        const std::string j = verify_report_json(reports);
        emit(timestamp ? stamp(j) : j, output);
      }
      return any_failure(all) ? kFailFindings : kOk;
    }
    if (*catalog && *cexport) {
      fs::create_directories(catalog_dir);
      for (const auto& e : bundled_catalog()) emit(to_json(e), (fs::path(catalog_dir) / (e.curve.name + ".json")).string());
      return kOk;
    }
    if (*catalog) {
      const auto entries = load_entries(catalog_dir);
      if (*list) {
        for (const auto& e : entries) {
          std::cout << e.curve.name << "  d=" << e.curve.degree << "  cusps:";
          for (const auto& cu : e.curve.cusps) {
            std::cout << " (";
            for (std::size_t i = 0; i < cu.multiplicity_sequence.size(); ++i)
              std::cout << (i ? "," : "") << cu.multiplicity_sequence[i];
            std::cout << ")";
          }
          const auto& lgt = e.curve.metadata.log_general_type;
          std::cout << "  log_general_type=" << (lgt ? (*lgt ? "true" : "false") : "unknown") << "\n";
        }
        return kOk;
      }
      VerifyOptions vo;
      vo.run.max_depth = max_depth;
      std::vector<CurveDescriptor> curves;
      for (const auto& e : entries) curves.push_back(e.curve);
      auto reports = verify_all(curves, vo);
      std::vector<Finding> all;
      for (std::size_t i = 0; i < reports.size(); ++i) {
        auto reg = check_expected(entries[i], reports[i].tree);
        reports[i].findings.insert(reports[i].findings.end(), reg.begin(), reg.end());
        all.insert(all.end(), reports[i].findings.begin(), reports[i].findings.end());
      }
      if (format == "text") {
        emit(verify_report_text(reports), output);
      } else {
        const std::string j = verify_report_json(reports);
        emit(timestamp ? stamp(j) : j, output);
      }
      return any_failure(all) ? kFailFindings : kOk;
    }
    if (*fib) {
      FibrationData data;
      std::string subject;
      if (generate.size() == 2) {
        data = generate_fibration(generate[0], generate[1]);
        subject = "generated h=" + std::to_string(generate[0]) + " n=" + std::to_string(generate[1]);
      } else if (!fib_path.empty()) {
        data = parse_fibration(read_file(fib_path));
        subject = fib_path;
      } else {
        throw InputError("fibration-check needs a file or --generate H N");
      }
      const auto findings = check_fibration(data);
      emit(findings_report_json(subject, findings), output);
      return any_failure(findings) ? kFailFindings : kOk;
    }
    if (*stats) {
      if (!fs::is_regular_file(graph_arg)) {
        const SurfaceState s = build_log_resolution(load_curve(graph_arg));
        emit(graph_stats_json(s.graph(), s.boundary()), output);
        return kOk;
      }
      const std::string text = read_file(graph_arg);
      const auto probe = nlohmann::json::parse(text, nullptr, false);
      if (probe.is_object() && probe.contains("degree")) {
        const SurfaceState s = build_log_resolution(parse_curve(text));
        emit(graph_stats_json(s.graph(), s.boundary()), output);
      } else if (probe.is_object() && probe.contains("graph")) {
        const SurfaceState s = parse_state(text);
        emit(graph_stats_json(s.graph(), s.boundary()), output);
      } else {
        const DivisorGraph g = parse_graph(text);
        Subdivisor b;
        for (ComponentId c : g.ids())
          if (g.component(c).role != Role::Auxiliary) b.push_back(c);
        emit(graph_stats_json(g, b), output);
      }
      return kOk;
    }
  } catch (const halfmmp::Error& e) {
    std::cerr << "halfmmp: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "halfmmp: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
