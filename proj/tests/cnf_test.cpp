#include <algorithm>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "randsat/cnf.hpp"
#include "randsat/generators.hpp"

using namespace randsat;
using namespace randsat::oracle;

TEST(LiteralTest, EncodingAndNegation) {
  const Literal a(3, true);
  const Literal b = ~a;
  EXPECT_EQ(a.var(), 3u);
  EXPECT_TRUE(a.positive());
  EXPECT_FALSE(b.positive());
  EXPECT_EQ(b.dimacs(), -3);
  EXPECT_EQ(a.index(), 4u);
  EXPECT_EQ(b.index(), 5u);
  EXPECT_EQ(~b, a);
}

TEST(CnfFormulaTest, RejectsInvalidClauses) {
  CnfFormula f(3);
  EXPECT_THROW(f.add_clause({1, -1}), std::invalid_argument);
  EXPECT_THROW(f.add_clause({2, 2}), std::invalid_argument);
  EXPECT_THROW(f.add_clause({4}), std::invalid_argument);
  EXPECT_THROW(f.add_clause(std::initializer_list<int>{}),
               std::invalid_argument);
  EXPECT_TRUE(f.empty());
  f.add_clause({1, -2, 3});
  EXPECT_EQ(f.num_clauses(), 1u);
  EXPECT_EQ(f.max_width(), 3u);
  EXPECT_TRUE(f.is_3cnf());
  EXPECT_FALSE(f.is_2cnf());
}

TEST(EvaluateTest, EmptyFormulaIsTrue) {
  const CnfFormula f(3);
  EXPECT_TRUE(evaluate(f, Assignment(3)));
  EXPECT_TRUE(evaluate(f, Assignment(3, true)));
}

TEST(EvaluateTest, UnitClauseFalsified) {
  const CnfFormula f(1, {{1}});
  EXPECT_FALSE(evaluate(f, Assignment(1)));
}

TEST(EvaluateTest, XorChainMatchesBruteForce) {
  const CnfFormula f = xor_chain(1);
  EXPECT_TRUE(evaluate(f, Assignment::from_string("100")));
  // Brute force: exactly the odd-parity assignments.
  const auto sols = brute_solutions(3, f.to_dimacs_clauses());
  ASSERT_EQ(sols.size(), 4u);
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    const bool odd = __builtin_popcountll(mask) % 2 == 1;
    EXPECT_EQ(evaluate(f, from_mask(mask, 3)), odd) << mask;
  }
}

TEST(EvaluateTest, RejectsWrongSizeAssignment) {
  const CnfFormula f(2, {{1, 2}});
  EXPECT_THROW(evaluate(f, Assignment(3)), std::invalid_argument);
}

TEST(SubstituteTest, SatisfiedRemovedFalsifiedShrunk) {
  const CnfFormula f(3, {{1, 2}, {-1, 3}});
  const auto r = substitute(f, 1, true);
  EXPECT_FALSE(r.conflict);
  EXPECT_EQ(r.formula, CnfFormula(3, {{3}}));
}

TEST(SubstituteTest, EmptiedClauseIsConflict) {
  const auto r = substitute(CnfFormula(1, {{1}}), 1, false);
  EXPECT_TRUE(r.conflict);
  EXPECT_TRUE(r.formula.empty());
  EXPECT_EQ(r.formula.num_vars(), 1u);
}

TEST(SubstituteTest, XorChainFixFirstVariable) {
  const auto r = substitute(xor_chain(1), 1, true);
  EXPECT_FALSE(r.conflict);
  // x1 = 1 leaves x2 ^ x3 = 0, i.e. x2 == x3.
  EXPECT_EQ(r.formula, CnfFormula(3, {{2, -3}, {-2, 3}}));
  const auto sols = brute_solutions(3, r.formula.to_dimacs_clauses());
  for (const auto mask : sols)
    EXPECT_EQ((mask >> 1) & 1, (mask >> 2) & 1);
}

TEST(SubstituteTest, OutOfRangeVariableThrows) {
  EXPECT_THROW(substitute(CnfFormula(2), 3, true), std::invalid_argument);
  EXPECT_THROW(substitute(CnfFormula(2), 0, true), std::invalid_argument);
}

TEST(UnitClauseTest, Polarity) {
  const CnfFormula f(3, {{1, 3}, {-2}});
  EXPECT_EQ(unit_clause_polarity(f, 2), std::optional<bool>(false));
  EXPECT_EQ(unit_clause_polarity(f, 1), std::nullopt);
}

TEST(UnitClauseTest, FirstClauseWinsOnContradiction) {
  const CnfFormula f(1, {{1}, {-1}});
  EXPECT_EQ(unit_clause_polarity(f, 1), std::optional<bool>(true));
  const CnfFormula g(1, {{-1}, {1}});
  EXPECT_EQ(unit_clause_polarity(g, 1), std::optional<bool>(false));
}

// For every small formula, variable and value: the solutions of the reduced
// formula with x_v = b are exactly the solutions of f with x_v = b.
TEST(SubstituteProperty, SoundAgainstBruteForce) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 8);
    const std::size_t m = rng() % 12;
    const Clauses clauses = random_clauses(rng, n, m, 1, 3);
    const CnfFormula f = to_formula(n, clauses);
    const auto sols = brute_solutions(n, clauses);
    for (Var v = 1; v <= n; ++v)
      for (const bool b : {false, true}) {
        const auto r = substitute(f, v, b);
        const Clauses reduced = r.formula.to_dimacs_clauses();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
          if (((mask >> (v - 1)) & 1) != b)
            continue;
          const bool in_f =
              std::find(sols.begin(), sols.end(), mask) != sols.end();
          const bool in_reduced = !r.conflict && satisfies(reduced, mask);
          ASSERT_EQ(in_f, in_reduced) << "round " << round << " v " << v;
        }
        if (r.conflict)
          for (const auto mask : sols)
            ASSERT_NE((mask >> (v - 1)) & 1, static_cast<std::uint64_t>(b));
        ASSERT_LE(r.formula.num_clauses(), f.num_clauses());
        ASSERT_LE(r.formula.max_width(), f.max_width());
        for (const auto &c : reduced)
          for (const int l : c)
            ASSERT_NE(static_cast<Var>(std::abs(l)), v);
      }
  }
}

TEST(AssignmentTest, StringRoundTrip) {
  const Assignment a = Assignment::from_string("1011");
  EXPECT_EQ(a.to_string(), "1011");
  EXPECT_EQ(a.to_literals(), (std::vector<int>{1, -2, 3, 4}));
  EXPECT_THROW(Assignment::from_string("10x"), std::invalid_argument);
}
