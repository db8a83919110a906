#include <gtest/gtest.h>

#include <random>

#include "halfmmp/error.hpp"
#include "halfmmp/invariants.hpp"
#include "halfmmp/surface.hpp"
#include "random_graphs.hpp"

using namespace halfmmp;
using namespace halfmmp::testing;

namespace {
SurfaceState line_with_conic_tangent() {
  DivisorGraph g;
  auto e = g.add_component(4, Role::E, "E");
  auto l = g.add_component(1, Role::Exceptional, "L");
  g.connect(e, l, 2);
  return SurfaceState(g, 1, e);
}
}  // namespace

TEST(Blowup, RoundTripOnRandomStates) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 500; ++i) {
    const SurfaceState s = random_state(rng);
    const SurfaceState up = blow_up(s, random_center(rng, s));
    ASSERT_EQ(up.rho(), s.rho() + 1);
    const SurfaceState down = blow_down(up, up.history().back().curve);
    EXPECT_TRUE(isomorphic(down, s)) << "state " << i;
    for (ComponentId a : s.graph().ids())
      for (ComponentId b : s.graph().ids()) EXPECT_EQ(down.graph().intersection(a, b), s.graph().intersection(a, b));
  }
}

TEST(Blowup, TangencyDropsContact) {
  const SurfaceState s = line_with_conic_tangent();
  const SurfaceState up = blow_up(s, Center::at_point(0));
  const ComponentId x = up.history().back().curve;
  EXPECT_EQ(up.graph().self_int(component_id(0)), 3);
  EXPECT_EQ(up.graph().intersection(component_id(0), component_id(1)), 1);
  EXPECT_EQ(up.graph().intersection(x, component_id(0)), 1);
  EXPECT_EQ(up.history().back().kind, MoveKind::BlowupInner);
  EXPECT_EQ(up.k_squared(), Rational(8));
}

TEST(Blowup, PullbackOfCanonicalPlusBoundary) {
  // Inner blowup: pi^*(K + D) = K' + D'; outer: pi^*(K + D) = K' + D' - X.
  const SurfaceState s = line_with_conic_tangent();
  const DivisorClass kd = DivisorClass::canonical() + s.boundary_class();
  for (const Center c : {Center::at_point(0), Center::on(component_id(1))}) {
    const SurfaceState up = blow_up(s, c);
    const ComponentId x = up.history().back().curve;
    const DivisorClass pb = pullback(s, up, kd);
    DivisorClass expect = DivisorClass::canonical() + up.boundary_class();
    if (up.history().back().kind == MoveKind::BlowupOuter) expect.d.add(x, -1);
    for (ComponentId u : up.graph().ids())
      EXPECT_EQ(up.dot(pb, DivisorClass::of(QDivisor::reduced({u}))),
                up.dot(expect, DivisorClass::of(QDivisor::reduced({u}))));
  }
}

TEST(Blowdown, RejectsNonMinusOne) {
  const SurfaceState s = line_with_conic_tangent();
  EXPECT_THROW(blow_down(s, component_id(1)), Error);
}

TEST(ResolveNonSnc, TangencyNeedsTwoBlowups) {
  const SurfaceState s = line_with_conic_tangent();
  const SurfaceState r = resolve_non_snc(s);
  EXPECT_TRUE(is_snc(r.graph(), r.boundary()));
  EXPECT_EQ(r.rho(), 3);
  EXPECT_EQ(r.graph().self_int(component_id(0)), 2);
}

TEST(ContractNegdef, SingleCurveDiscrepancy) {
  DivisorGraph g;
  auto e = g.add_component(1, Role::E, "E");
  auto c = g.add_component(-3, Role::Exceptional, "C");
  g.connect(e, c);
  SurfaceState s(g, 2, e);
  const NegdefContraction k = contract_negdef(s, {c}, DivisorClass::canonical());
  // (K + pC).C = 0 with K.C = 1: p = 1/3
  EXPECT_EQ(k.pullback_coeffs.coeff(c), Rational(1, 3));
  EXPECT_EQ(k.discrepancies.coeff(c), Rational(-1, 3));
  EXPECT_THROW(contract_negdef(s, {e}, DivisorClass::canonical()), Error);
}

TEST(Isomorphism, RelabelledGraphs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    DivisorGraph g = random_branched_tree(rng, 7);
    DivisorGraph h;
    auto ids = g.ids();
    std::vector<ComponentId> fresh(ids.size());
    for (std::size_t k = ids.size(); k-- > 0;) fresh[k] = h.add_component(g.self_int(ids[k]), Role::Exceptional);
    for (const auto& p : g.points())
      h.connect(fresh[static_cast<std::size_t>(to_int(p.comps[0]))], fresh[static_cast<std::size_t>(to_int(p.comps[1]))]);
    EXPECT_TRUE(isomorphic(g, h));
    h.set_self_int(fresh[0], h.self_int(fresh[0]) - 1);
    EXPECT_FALSE(isomorphic(g, h));
  }
}
