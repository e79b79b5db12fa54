#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "randsat/twosat.hpp"

using namespace randsat;
using namespace randsat::oracle;

TEST(TwoSatTest, ForcedSecondVariable) {
  const auto alpha = solve_2sat(CnfFormula(2, {{1, 2}, {-1, 2}}));
  ASSERT_TRUE(alpha);
  EXPECT_TRUE((*alpha)[2]);
}

TEST(TwoSatTest, AllFourPolaritiesUnsat) {
  EXPECT_FALSE(solve_2sat(CnfFormula(2, {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}})));
}

TEST(TwoSatTest, EmptyFormulaAllFalse) {
  const auto alpha = solve_2sat(CnfFormula(5));
  ASSERT_TRUE(alpha);
  EXPECT_EQ(alpha->to_string(), "00000");
}

TEST(TwoSatTest, UnusedVariablesFalse) {
  const auto alpha = solve_2sat(CnfFormula(4, {{2}, {2, -3}}));
  ASSERT_TRUE(alpha);
  EXPECT_FALSE((*alpha)[1]);
  EXPECT_TRUE((*alpha)[2]);
  EXPECT_FALSE((*alpha)[4]);
}

TEST(TwoSatTest, ContradictoryUnits) {
  EXPECT_FALSE(solve_2sat(CnfFormula(1, {{1}, {-1}})));
}

TEST(TwoSatTest, RejectsWidthThree) {
  EXPECT_THROW(solve_2sat(CnfFormula(3, {{1, 2, 3}})), std::invalid_argument);
}

TEST(TwoSatTest, LongImplicationChain) {
  // x1 and x1 -> x2 -> ... -> xn, plus ~xn: unsat, and deep enough to break
  // a recursive traversal.
  const std::uint32_t n = 200000;
  CnfFormula f(n);
  f.add_clause({1});
  for (std::uint32_t v = 1; v < n; ++v)
    f.add_clause({-static_cast<int>(v), static_cast<int>(v + 1)});
  const auto sat = solve_2sat(f);
  ASSERT_TRUE(sat);
  EXPECT_TRUE((*sat)[n]);
  f.add_clause({-static_cast<int>(n)});
  EXPECT_FALSE(solve_2sat(f));
}

TEST(TwoSatTest, Deterministic) {
  const CnfFormula f(4, {{1, -2}, {2, 3}, {-3, 4}});
  TwoSatSolver solver;
  const auto a = solver.solve(f);
  const auto b = solver.solve(f);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(*a, *b);
  EXPECT_EQ(*a, *solve_2sat(f));
}

TEST(TwoSatProperty, MatchesBruteForce) {
  std::mt19937_64 rng(2024);
  TwoSatSolver solver;
  for (int i = 0; i < 10000; ++i) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 4);
    const Clauses clauses = random_clauses(rng, n, rng() % 9, 1, 2);
    const CnfFormula f = to_formula(n, clauses);
    const auto alpha = solver.solve(f);
    ASSERT_EQ(alpha.has_value(), brute_sat(n, clauses)) << i;
    if (alpha)
      ASSERT_TRUE(satisfies(clauses, to_mask(*alpha))) << i;
  }
}
