#include <benchmark/benchmark.h>


#include "halfmmp/catalog.hpp"
#include "halfmmp/invariants.hpp"
#include "halfmmp/report.hpp"
#include "halfmmp/verifier.hpp"

using namespace halfmmp;

namespace {

DivisorGraph chain(int n, int w) {
  DivisorGraph g;
  ComponentId prev{};
  for (int i = 0; i < n; ++i) {
    ComponentId c = g.add_component(-w, Role::Exceptional);
    if (i) g.connect(prev, c);
    prev = c;
  }
  return g;
}

void BM_Discriminant(benchmark::State& st) {
  const DivisorGraph g = chain(static_cast<int>(st.range(0)), 3);
  const auto ids = g.ids();
  for (auto _ : st) benchmark::DoNotOptimize(discriminant(g, ids));
}
BENCHMARK(BM_Discriminant)->RangeMultiplier(2)->Range(4, 64);

void BM_Bark(benchmark::State& st) {
  // star: a (-1)-centre with three arms of length n
  DivisorGraph g;
  ComponentId centre = g.add_component(-1, Role::Exceptional);
  const int n = static_cast<int>(st.range(0));
  for (int arm = 0; arm < 3; ++arm) {
    ComponentId prev = centre;
    for (int i = 0; i < n; ++i) {
      ComponentId c = g.add_component(-2 - arm, Role::Exceptional);
      g.connect(prev, c);
      prev = c;
    }
  }
  const Subdivisor all = make_subdivisor(g.ids());
  for (auto _ : st) benchmark::DoNotOptimize(bark(g, all));
}
BENCHMARK(BM_Bark)->Arg(2)->Arg(8)->Arg(16);

void BM_LogResolution(benchmark::State& st) {
  const CurveDescriptor c = bundled_catalog()[static_cast<std::size_t>(st.range(0))].curve;
  st.SetLabel(c.name);
  for (auto _ : st) benchmark::DoNotOptimize(build_resolutions(c));
}
BENCHMARK(BM_LogResolution)->DenseRange(0, 7);

void BM_Run(benchmark::State& st) {
  const CurveDescriptor c = bundled_catalog()[static_cast<std::size_t>(st.range(0))].curve;
  st.SetLabel(c.name);
  RunOptions o;
  o.parallel = false;
  for (auto _ : st) benchmark::DoNotOptimize(run(c, o));
}
BENCHMARK(BM_Run)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

void BM_VerifyCatalog(benchmark::State& st) {
  for (auto _ : st) {
    std::vector<CurveReport> rs;
    for (const auto& e : bundled_catalog()) rs.push_back(verify_curve(e.curve));
    benchmark::DoNotOptimize(verify_report_json(rs));
  }
}
BENCHMARK(BM_VerifyCatalog)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
