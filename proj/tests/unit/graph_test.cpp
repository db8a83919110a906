#include <gtest/gtest.h>

#include <random>

#include "halfmmp/error.hpp"
#include "halfmmp/invariants.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

using namespace halfmmp;
using namespace halfmmp::testing;

TEST(Discriminant, EmptyAndSmallChains) {
  DivisorGraph g = weighted_chain({3, 1, 2});
  EXPECT_EQ(discriminant(g, {}), 1);
  EXPECT_EQ(discriminant(g, g.ids()), 1);
  DivisorGraph a = weighted_chain({2, 2, 2, 2});
  EXPECT_EQ(discriminant(a, a.ids()), 5);
}

TEST(Discriminant, OrderIrrelevant) {
  DivisorGraph g = weighted_chain({2, 3, 4});
  auto ids = g.ids();
  std::vector<ComponentId> rev(ids.rbegin(), ids.rend());
  EXPECT_EQ(discriminant(g, ids), discriminant(g, rev));
}

TEST(Discriminant, ChainsMatchContinuants) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    std::vector<int> w(static_cast<std::size_t>(1 + i % 7));
    for (int& x : w) x = std::uniform_int_distribution<int>(1, 5)(rng);
    DivisorGraph g = weighted_chain(w);
    EXPECT_EQ(discriminant(g, g.ids()), Rational(static_cast<long>(continuant(w)), 1L));
  }
}

TEST(Discriminant, RandomTreesMatchCofactors) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    auto parent = random_parents(rng, n);
    std::vector<int> w;
    for (int k = 0; k < n; ++k) w.push_back(std::uniform_int_distribution<int>(-1, 5)(rng));
    DivisorGraph g = weighted_tree(parent, w);
    EXPECT_EQ(discriminant(g, g.ids()), Rational(static_cast<long>(cofactor_det(negated_form(g, g.ids()))), 1L));
  }
}

TEST(Inductance, KnownValues) {
  auto ind = [](std::vector<int> w) {
    DivisorGraph g = weighted_chain(w);
    return inductance(g, Twig{g.ids(), std::nullopt});
  };
  EXPECT_EQ(ind({2}), Rational(1, 2));
  EXPECT_EQ(ind({3}), Rational(1, 3));
  EXPECT_EQ(ind({2, 2}), Rational(2, 3));
  EXPECT_EQ(ind({2, 3}), Rational(3, 5));
  EXPECT_EQ(ind({3, 2}), Rational(2, 5));
}

TEST(Inductance, RejectsNonNegativeDefinite) {
  DivisorGraph g = weighted_chain({1, 1});
  EXPECT_THROW(inductance(g, Twig{g.ids(), std::nullopt}), Error);
}

TEST(Twigs, StarWithThreeArms) {
  // centre -1 with arms [2], [3], [2,2]
  DivisorGraph g = weighted_tree({-1, 0, 0, 0, 3}, {1, 2, 3, 2, 2});
  const Subdivisor all = make_subdivisor(g.ids());
  auto twigs = maximal_twigs(g, all);
  ASSERT_EQ(twigs.size(), 3u);
  Rational total;
  for (const auto& t : twigs) total += inductance(g, t);
  EXPECT_EQ(total, Rational(1, 2) + Rational(1, 3) + Rational(2, 3));
  EXPECT_EQ(inductance(g, all), total);
  EXPECT_EQ(minus_two_twigs(g, all).size(), 2u);
  EXPECT_THROW(inductance(g, make_subdivisor({component_id(0), component_id(3), component_id(4)})), Error);
}

TEST(Bark, DefiningEquationsOnRandomTrees) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    DivisorGraph g = random_branched_tree(rng, std::uniform_int_distribution<int>(4, 12)(rng));
    const Subdivisor all = make_subdivisor(g.ids());
    const QDivisor bk = bark(g, all);
    for (const auto& tw : maximal_twigs(g, all)) {
      const auto closed = bark_closed_form(g, tw);
      for (std::size_t j = 0; j < tw.chain.size(); ++j) {
        EXPECT_EQ(bk.coeff(tw.chain[j]), closed[j]);
        EXPECT_EQ(dot(g, bk, tw.chain[j]), Rational(beta(g, tw.chain[j], all) - 2));
      }
      const QDivisor one = bark_of_twig(g, all, tw);
      EXPECT_EQ(dot(g, one, one), -inductance(g, tw));
      EXPECT_EQ(one.coeff(tw.chain.back()), delta(g, tw));
    }
  }
}

TEST(Genus, TreesAreRational) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    DivisorGraph g = random_branched_tree(rng, 6);
    EXPECT_EQ(arithmetic_genus(g, make_subdivisor(g.ids())), 0);
  }
  DivisorGraph cyc = weighted_chain({2, 2, 2});
  cyc.connect(component_id(0), component_id(2));
  EXPECT_EQ(arithmetic_genus(cyc, make_subdivisor(cyc.ids())), 1);
}

TEST(Snc, TangencyAndTriplePoints) {
  DivisorGraph g;
  auto a = g.add_component(1, Role::E);
  auto b = g.add_component(-1, Role::Exceptional);
  auto c = g.add_component(-2, Role::Exceptional);
  g.connect(a, b, 2);
  EXPECT_FALSE(is_snc(g, make_subdivisor({a, b})));
  EXPECT_EQ(g.intersection(a, b), 2);
  g.add_point_transversal({a, b, c});
  EXPECT_EQ(non_snc_points(g, make_subdivisor({a, b, c})).size(), 2u);
  EXPECT_TRUE(is_snc(g, make_subdivisor({b})));
}

TEST(Superfluous, MinusOneCurves) {
  DivisorGraph g = weighted_chain({2, 1, 3});
  const Subdivisor all = make_subdivisor(g.ids());
  EXPECT_TRUE(is_superfluous(g, component_id(1), all));
  DivisorGraph star = weighted_tree({-1, 0, 0, 0}, {1, 2, 3, 6});
  EXPECT_FALSE(is_superfluous(star, component_id(0), make_subdivisor(star.ids())));
}

TEST(CoreGraphs, CaterpillarAndCounts) {
  // two branching vertices joined by a chain of two, with tips
  DivisorGraph g = weighted_tree({-1, 0, 0, 0, 3, 4, 5, 5}, {1, 2, 2, 3, 3, 1, 2, 2});
  const Subdivisor all = make_subdivisor(g.ids());
  const Subdivisor cr = core(g, all);
  EXPECT_EQ(cr, make_subdivisor({component_id(0), component_id(3), component_id(4), component_id(5)}));
  const AbstractGraph en = en_diagram(g, all);
  EXPECT_EQ(en.vertices.size(), 6u);
  EXPECT_TRUE(is_caterpillar(en));
  EXPECT_LE(core_graph(g, all).vertices.size(), g.component_count());
}
