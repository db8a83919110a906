#include <gtest/gtest.h>

#include "halfmmp/catalog.hpp"
#include "halfmmp/error.hpp"
#include "halfmmp/fibration.hpp"
#include "halfmmp/json_io.hpp"
#include "halfmmp/mmp.hpp"

using namespace halfmmp;

TEST(Json, CurveRoundTrip) {
  const auto e = find_bundled("tricuspidal-quartic");
  const CurveDescriptor c = parse_curve(to_json(e->curve));
  EXPECT_EQ(c, e->curve);
  EXPECT_EQ(c.cusps.size(), 3u);
}

TEST(Json, MissingDegree) {
  try {
    parse_curve(R"({"schema": "halfmmp/1", "name": "x", "cusps": []})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

TEST(Json, SyntaxErrorPosition) {
  try {
    parse_curve("{\n  \"name\": \"x\",\n  \"degree\": 4,,\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 1u);
  }
}

TEST(Json, GenusFormulaViolated) {
  try {
    parse_curve(R"({"name": "q", "degree": 4, "cusps": [{"multiplicity_sequence": [2]}, {"multiplicity_sequence": [2]}]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GenusFormulaViolated);
  }
}

TEST(Json, InadmissibleSequence) {
  try {
    parse_curve(R"({"name": "q", "degree": 5, "cusps": [{"multiplicity_sequence": [3, 2, 2, 2]}]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InadmissibleSequence);
  }
}

TEST(Json, StateAndGraphRoundTrip) {
  const RunContext ctx = make_context(find_bundled("bicuspidal-quartic")->curve);
  const SurfaceState s = parse_state(to_json(ctx.res.weak));
  EXPECT_EQ(to_json(s.graph()), to_json(ctx.res.weak.graph()));
  EXPECT_TRUE(isomorphic(s, ctx.res.weak));
  EXPECT_EQ(s.rho(), ctx.res.weak.rho());
  EXPECT_EQ(s.marked_e(), ctx.res.weak.marked_e());
  EXPECT_EQ(to_json(parse_graph(to_json(ctx.res.log.graph()))), to_json(ctx.res.log.graph()));
}

TEST(Json, FibrationRoundTrip) {
  const FibrationData d = generate_fibration(2, 1);
  const FibrationData back = parse_fibration(to_json(d));
  EXPECT_EQ(back.nu, d.nu);
  EXPECT_EQ(back.sigma, d.sigma);
  EXPECT_EQ(back.fibers.size(), d.fibers.size());
  EXPECT_EQ(to_json(back), to_json(d));
}

TEST(Json, CatalogDirectoryMatchesBundled) {
  const auto files = load_catalog_dir(default_catalog_dir());
  ASSERT_EQ(files.size(), bundled_catalog().size());
  for (const auto& e : bundled_catalog()) {
    auto it = std::find_if(files.begin(), files.end(), [&](const CatalogEntry& f) { return f.curve.name == e.curve.name; });
    ASSERT_NE(it, files.end()) << e.curve.name;
    EXPECT_EQ(*it, e);
  }
}

TEST(Catalog, MinimumEntries) {
  EXPECT_GE(bundled_catalog().size(), 5u);
  for (const char* n : {"cuspidal-cubic", "tricuspidal-quartic", "unicuspidal-quartic", "bicuspidal-quartic"})
    EXPECT_TRUE(find_bundled(n)) << n;
  for (const auto& e : bundled_catalog()) {
    long delta = 0;
    for (const auto& c : e.curve.cusps) delta += c.delta_invariant();
    EXPECT_EQ(delta, (e.curve.degree - 1) * (e.curve.degree - 2) / 2) << e.curve.name;
    EXPECT_FALSE(e.provenance.empty());
  }
}
