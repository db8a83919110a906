#include <gtest/gtest.h>

#include "halfmmp/error.hpp"
#include "halfmmp/fibration.hpp"

using namespace halfmmp;

TEST(Fibration, SweepOfGeneratedData) {
  int pairs = 0;
  for (int h = 1; h <= 3; ++h)
    for (int n = 0; n <= 4; ++n) {
      if (n + 2 - h < 0 || h + 1 - n < 0) continue;
      ++pairs;
      const FibrationData d = generate_fibration(h, n);
      EXPECT_EQ(d.nu, n + 2 - h);
      EXPECT_EQ(d.sigma, h + 1 - n);
      EXPECT_EQ(static_cast<int>(d.fibers.size()), d.sigma);
      for (const Finding& f : check_fibration(d)) EXPECT_EQ(f.verdict, Verdict::Pass) << f.check << " h=" << h << " n=" << n;
    }
  EXPECT_EQ(pairs, 11);
}

TEST(Fibration, StandardFiberAccepted) {
  const FiberGraph f = standard_fiber();
  for (const Finding& x : check_fiber(f, "f")) EXPECT_EQ(x.verdict, Verdict::Pass) << x.check;
  EXPECT_EQ(open_euler_characteristic(f), 0);
}

TEST(Fibration, ChainWithMinusOneInTheMiddleRejected) {
  FiberGraph f;
  auto t1 = f.graph.add_component(-2, Role::Exceptional);
  f.l_f = f.graph.add_component(-1, Role::Auxiliary);
  auto t2 = f.graph.add_component(-2, Role::Exceptional);
  auto h = f.graph.add_component(-1, Role::Exceptional);
  f.graph.connect(t1, f.l_f);
  f.graph.connect(f.l_f, t2);
  f.graph.connect(h, t1);
  f.horizontal = {h};
  bool rejected = false;
  for (const Finding& x : check_fiber(f, "f"))
    if (x.check == "fibration.fiber_shape") rejected = x.verdict == Verdict::Fail;
  EXPECT_TRUE(rejected);
}

TEST(Fibration, MalformedFibers) {
  FiberGraph f = standard_fiber();
  f.graph.set_self_int(f.l_f, -2);
  EXPECT_THROW(check_fiber(f, "f"), Error);
  FiberGraph g = standard_fiber();
  g.graph.connect(component_id(0), component_id(2));  // closes a cycle
  EXPECT_THROW(check_fiber(g, "f"), Error);
}
