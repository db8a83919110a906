#include <gtest/gtest.h>

#include <random>

#include "halfmmp/error.hpp"
#include "halfmmp/lattice.hpp"
#include "oracles.hpp"

using namespace halfmmp;

TEST(Rational, LowestTerms) {
  Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_THROW(Rational(1, 0), std::exception);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_LT(Rational(-1, 2), Rational(-1, 3));
  EXPECT_EQ(Rational(9, 3).to_long(), 3);
  EXPECT_THROW(Rational(1, 3).to_long(), std::domain_error);
}

TEST(Lattice, DeterminantAgainstCofactors) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 7;
    SymMatrix m(n);
    std::vector<std::vector<long long>> raw(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const int v = entry(rng);
        m.set(i, j, v);
        raw[i][j] = raw[j][i] = v;
      }
    EXPECT_EQ(det(m), Rational(static_cast<long>(halfmmp::testing::cofactor_det(raw)), 1L));
  }
}

TEST(Lattice, NegativeDefinite) {
  EXPECT_TRUE(is_negative_definite(SymMatrix::from_int_rows({{-2, 1}, {1, -2}})));
  EXPECT_FALSE(is_negative_definite(SymMatrix::from_int_rows({{-1, 1}, {1, -1}})));
  EXPECT_FALSE(is_negative_definite(SymMatrix::from_int_rows({{1}})));
}

TEST(Lattice, InertiaMatchesSylvester) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m.set(i, j, i == j ? entry(rng) - 3 : entry(rng));
    const Inertia in = inertia(m);
    EXPECT_EQ(in.positive + in.negative + in.zero, n);
    EXPECT_EQ(is_negative_definite(m), in.negative == n);
    EXPECT_EQ(det(m).is_zero(), in.zero > 0);
  }
}

TEST(Lattice, SolveRoundTrip) {
  SymMatrix m = SymMatrix::from_int_rows({{-3, 1, 0}, {1, -1, 1}, {0, 1, -2}});
  std::vector<Rational> b = {Rational(1), Rational(-2), Rational(1, 2)};
  auto x = solve(m, b);
  EXPECT_EQ(multiply(m, x), b);
  EXPECT_THROW(solve(SymMatrix::from_int_rows({{1, 1}, {1, 1}}), {1, 1}), Error);
}

TEST(Lattice, RejectsAsymmetricRows) {
  EXPECT_THROW(SymMatrix::from_rows({{Rational(1), Rational(2)}, {Rational(3), Rational(1)}}), std::invalid_argument);
}
