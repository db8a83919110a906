#include <gtest/gtest.h>

#include "halfmmp/catalog.hpp"
#include "halfmmp/error.hpp"
#include "halfmmp/invariants.hpp"
#include "halfmmp/mmp.hpp"

using namespace halfmmp;

namespace {
std::vector<int> chain_weights(const DivisorGraph& q) {
  std::vector<int> w;
  if (auto ch = as_chain(q, make_subdivisor(q.ids())))
    for (ComponentId c : *ch) w.push_back(-q.self_int(c));
  return w;
}
}  // namespace

TEST(Cusp, OrdinaryCusp) {
  const auto r = simulate_cusp_resolution({{2}});
  auto w = chain_weights(r.q);
  if (w.front() == 2) w = {w.rbegin(), w.rend()};
  EXPECT_EQ(w, (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(discriminant(r.q, r.q.ids()), 1);
  EXPECT_EQ(r.tau, 2);
  EXPECT_EQ(r.s, 1);
  EXPECT_EQ(r.tau_star, 0);
  EXPECT_EQ(r.multiplicities, (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(r.weak_blowups, 1);
}

TEST(Cusp, SemiOrdinaryA4) {
  const auto r = simulate_cusp_resolution({{2, 2}});
  auto w = chain_weights(r.q);
  if (w.front() != 2) w = {w.rbegin(), w.rend()};
  EXPECT_EQ(w, (std::vector<int>{2, 3, 1, 2}));
  EXPECT_EQ(r.tau, 2);
  EXPECT_EQ(r.tau_star, 0);
}

TEST(Cusp, E6HasTangencyThree) {
  const auto r = simulate_cusp_resolution({{3}});
  EXPECT_EQ(r.tau, 3);
  EXPECT_EQ(r.s, 1);
  EXPECT_EQ(r.tau_star, 1);
}

TEST(Cusp, InadmissibleSequences) {
  EXPECT_THROW(simulate_cusp_resolution({{3, 2, 2, 2}}), Error);
  EXPECT_THROW(simulate_cusp_resolution({{2, 3}}), Error);
  try {
    simulate_cusp_resolution({{3, 2, 2, 2}});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InadmissibleSequence);
  }
}

TEST(Cusp, GenusFormulaViolated) {
  CurveDescriptor c{"bad", 4, {{{2}}, {{2}}}, {}};
  try {
    build_resolutions(c);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GenusFormulaViolated);
  }
}

class CatalogCurve : public ::testing::TestWithParam<std::string> {};

TEST_P(CatalogCurve, FrozenValues) {
  const auto e = find_bundled(GetParam());
  ASSERT_TRUE(e);
  const RunTree t = run(e->curve);
  for (const Finding& f : check_expected(*e, t)) EXPECT_EQ(f.verdict, Verdict::Pass) << f.check << ": " << f.lhs;
}

TEST_P(CatalogCurve, WeakResolvesToLog) {
  const Resolutions r = build_resolutions(find_bundled(GetParam())->curve);
  EXPECT_TRUE(isomorphic(resolve_non_snc(r.weak), r.log));
  EXPECT_TRUE(is_snc(r.log.graph(), r.log.boundary()));
  EXPECT_EQ(static_cast<int>(r.log.boundary().size()), r.log.rho());
}

TEST_P(CatalogCurve, ValidatesCleanly) {
  for (const Finding& f : validate_curve(find_bundled(GetParam())->curve)) EXPECT_EQ(f.verdict, Verdict::Pass) << f.check;
}

// p2 by the blowup rule: K.(K+D) starts at 9 - 3d on P^2 and changes by mu - 2
// per blowup, mu = m_j + (exceptional curves through p_j) the multiplicity of
// the total boundary at the centre.
TEST_P(CatalogCurve, P2ByBlowupRule) {
  const auto e = find_bundled(GetParam());
  const RunContext ctx = make_context(e->curve);
  long p2 = 9 - 3L * e->curve.degree;
  for (const auto& r : ctx.res.cusps)
    for (std::size_t j = 0; j < r.multiplicities.size(); ++j)
      p2 += r.multiplicities[j] + static_cast<long>(r.proximate[j].size()) - 2;
  EXPECT_EQ(ctx.p2, Rational(p2));
  EXPECT_EQ(ctx.p2, Rational(e->expected.at("p2")));
}

INSTANTIATE_TEST_SUITE_P(Bundled, CatalogCurve,
                         ::testing::Values("cuspidal-cubic", "tricuspidal-quartic", "unicuspidal-quartic",
                                           "bicuspidal-quartic", "e6-quartic", "unicuspidal-quintic",
                                           "four-cuspidal-quintic", "quintic-3-3"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& ch : s)
                             if (ch == '-') ch = '_';
                           return s;
                         });
