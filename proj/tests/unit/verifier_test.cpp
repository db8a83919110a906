#include <gtest/gtest.h>

#include <set>

#include "halfmmp/catalog.hpp"
#include "halfmmp/error.hpp"
#include "halfmmp/verifier.hpp"
#include "mutations.hpp"

using namespace halfmmp;
using namespace halfmmp::testing;

class Mutation : public ::testing::TestWithParam<std::size_t> {};

TEST_P(Mutation, ProducesCertifiedFailure) {
  const MutationCase& m = mutation_cases()[GetParam()];
  const auto fs = m.run();
  EXPECT_TRUE(has_certified_failure(fs, m.check)) << m.check << ": " << m.description;
}

INSTANTIATE_TEST_SUITE_P(AllChecks, Mutation, ::testing::Range<std::size_t>(0, mutation_cases().size()),
                         [](const auto& info) {
                           std::string s = mutation_cases()[info.param].check;
                           for (char& c : s)
                             if (c == '.') c = '_';
                           return s;
                         });

TEST(Verifier, EveryCheckHasAMutation) {
  std::set<std::string> ids;
  for (const auto& m : mutation_cases()) ids.insert(m.check);
  for (const auto& id : all_check_ids()) EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Verifier, TricuspidalPassesEverything) {
  const CurveReport r = verify_curve(find_bundled("tricuspidal-quartic")->curve);
  EXPECT_FALSE(any_failure(r.findings));
  std::size_t evaluated = 0;
  for (const auto& f : r.findings) evaluated += f.verdict == Verdict::Pass;
  EXPECT_GE(evaluated, 40u);
}

TEST(Verifier, UnknownMetadataMakesBoundsInapplicable) {
  const CurveReport r = verify_curve(find_bundled("quintic-3-3")->curve);
  bool saw = false;
  for (const auto& f : r.findings)
    if (f.check.rfind("bound.", 0) == 0) {
      EXPECT_EQ(f.verdict, Verdict::Inapplicable) << f.check;
      saw = true;
    }
  EXPECT_TRUE(saw);
}

TEST(Verifier, FourCuspidalQuinticSelfIntersection) {
  // The branch certifies kappa = -inf (rank 1, not nef) yet E' has E'^2 = -7.
  const CurveReport r = verify_curve(find_bundled("four-cuspidal-quintic")->curve);
  std::vector<std::string> failing;
  for (const auto& f : r.findings)
    if (f.verdict == Verdict::Fail) failing.push_back(f.check + " " + f.lhs);
  EXPECT_EQ(failing, (std::vector<std::string>{"main.self_int -7"}));
}

TEST(Verifier, GroupSelection) {
  VerifyOptions o;
  o.groups = {"square"};
  const CurveReport r = verify_curve(find_bundled("tricuspidal-quartic")->curve, o);
  ASSERT_EQ(r.findings.size(), 1u);
  EXPECT_EQ(r.findings[0].check, "square.formula");
  o.groups = {"nonsense"};
  EXPECT_THROW(verify_curve(find_bundled("tricuspidal-quartic")->curve, o), Error);
}

TEST(Verifier, StructuralFibrationGate) {
  CurveFacts cf;
  NodeFacts nf;
  nf.has_model = true;
  nf.rho_y = 1;
  EXPECT_EQ(no_structural_cstst(cf, nf), true);
  nf.rho_y = 2;
  EXPECT_EQ(no_structural_cstst(cf, nf), std::nullopt);
  cf.structural_cstst = true;
  EXPECT_EQ(no_structural_cstst(cf, nf), false);
}

TEST(Verifier, AdvisoryNeverFails) {
  Finding f;
  f.verdict = Verdict::Fail;
  f.advisory = true;
  EXPECT_FALSE(any_failure({f}));
  f.advisory = false;
  EXPECT_TRUE(any_failure({f}));
}
