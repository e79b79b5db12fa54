#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "randsat/analysis.hpp"
#include "randsat/generators.hpp"

using namespace randsat;
using namespace randsat::oracle;

namespace {

// Solutions {0010, 0100, 0111, 1001, 1100}; exact PPZ 25/32, DEL 580/729.
CnfFormula small_formula() {
  return CnfFormula(4, {{1, 2, 3}, {-1, 2, 4}, {-2, -3, 4}, {1, -4, 3},
                        {-1, -2, -4}, {2, -3, -4}});
}

} // namespace

TEST(EnumerateTest, XorChainOne) {
  const SolutionSet s = enumerate_solutions(xor_chain(1));
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s.solutions()[0].to_string(), "001");
  EXPECT_EQ(s.solutions()[1].to_string(), "010");
  EXPECT_EQ(s.solutions()[2].to_string(), "100");
  EXPECT_EQ(s.solutions()[3].to_string(), "111");
  EXPECT_TRUE(s.contains(Assignment::from_string("111")));
  EXPECT_FALSE(s.contains(Assignment::from_string("110")));
}

TEST(EnumerateTest, CountsAndGuard) {
  EXPECT_EQ(enumerate_solutions(xor_chain(2)).size(), 16u);
  EXPECT_TRUE(enumerate_solutions(CnfFormula(1, {{1}, {-1}})).empty());
  EXPECT_THROW(enumerate_solutions(CnfFormula(25)), std::invalid_argument);
  EXPECT_THROW(enumerate_solutions(CnfFormula(4), 3), std::invalid_argument);
  EXPECT_EQ(enumerate_solutions(CnfFormula(4), 4).size(), 16u);
}

TEST(EnumerateTest, SmallFormulaSolutions) {
  const SolutionSet s = enumerate_solutions(small_formula());
  std::vector<std::string> got;
  for (const Assignment &a : s)
    got.push_back(a.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"0010", "0100", "0111", "1001",
                                           "1100"}));
}

TEST(CriticalVariableTest, Examples) {
  const CnfFormula f(3, {{1, 2, 3}, {-1, 2, -3}});
  const Assignment a100 = Assignment::from_string("100");
  EXPECT_EQ(critical_variable(f.clause(0), a100), std::optional<Var>(1));
  EXPECT_EQ(critical_variable(f.clause(0), Assignment::from_string("110")),
            std::nullopt);
  EXPECT_EQ(critical_variable(f.clause(1), a100), std::optional<Var>(3));
  EXPECT_EQ(critical_variable(f.clause(0), Assignment::from_string("000")),
            std::nullopt);
}

TEST(CriticalProfileTest, XorChainOne) {
  const CnfFormula f = xor_chain(1);
  const SolutionSet s = enumerate_solutions(f);
  const CriticalProfile p =
      critical_profile(f, Assignment::from_string("100"), s);
  EXPECT_EQ(p.c, 3u);
  EXPECT_EQ(p.t_per_var, (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(p.l, 0u);
  EXPECT_EQ(p.isolation, 3u);
  EXPECT_EQ(p.t_min, std::optional<std::size_t>(1));
  ASSERT_TRUE(p.t_av);
  EXPECT_DOUBLE_EQ(*p.t_av, 1.0);
}

TEST(CriticalProfileTest, NoCriticalClauses) {
  const CnfFormula f(2, {{1, 2}});
  const SolutionSet s = enumerate_solutions(f);
  ASSERT_EQ(s.size(), 3u);
  const CriticalProfile p =
      critical_profile(f, Assignment::from_string("11"), s);
  EXPECT_EQ(p.c, 0u);
  EXPECT_EQ(p.l, 2u);
  EXPECT_EQ(p.isolation, 0u);
  EXPECT_FALSE(p.t_av);
  EXPECT_FALSE(p.t_min);
}

TEST(CriticalProfileTest, RejectsNonSolution) {
  const CnfFormula f = xor_chain(1);
  EXPECT_THROW(
      critical_profile(f, Assignment::from_string("000"),
                       enumerate_solutions(f)),
      std::invalid_argument);
}

TEST(CriticalProfileTest, XorChainsAllSolutions) {
  for (std::uint32_t m = 1; m <= 3; ++m) {
    const CnfFormula f = xor_chain(m);
    const SolutionSet s = enumerate_solutions(f);
    for (const Assignment &alpha : s) {
      const CriticalProfile p = critical_profile(f, alpha, s);
      EXPECT_EQ(p.c, 3 * m);
      EXPECT_EQ(p.l, 0u);
      ASSERT_TRUE(p.t_av);
      EXPECT_DOUBLE_EQ(*p.t_av, 1.0);
    }
  }
}

// Profile invariants on random small formulas, with l checked against a
// direct flip test.
TEST(CriticalProfileProperty, Invariants) {
  std::mt19937_64 rng(31);
  int profiles = 0;
  for (int round = 0; round < 300; ++round) {
    const std::uint32_t n = 3 + static_cast<std::uint32_t>(rng() % 6);
    const Clauses clauses = random_clauses(rng, n, rng() % (4 * n), 3, 3);
    const CnfFormula f = to_formula(n, clauses);
    const SolutionSet s = enumerate_solutions(f);
    for (const Assignment &alpha : s) {
      const CriticalProfile p = critical_profile(f, alpha, s);
      EXPECT_EQ(p.c, std::accumulate(p.t_per_var.begin(), p.t_per_var.end(),
                                     std::size_t{0}));
      EXPECT_EQ(p.l + p.isolation, n);
      EXPECT_GE(p.c, p.isolation);
      std::uint32_t l = 0;
      for (Var v = 1; v <= n; ++v)
        l += satisfies(clauses, to_mask(alpha) ^ (std::uint64_t{1} << (v - 1)));
      EXPECT_EQ(p.l, l);
      EXPECT_EQ(p.t_av.has_value(), p.c > 0);
      if (p.t_av)
        EXPECT_GE(*p.t_av, 1.0);
      ++profiles;
    }
  }
  EXPECT_GT(profiles, 100);
}

TEST(BoundsTest, Examples) {
  EXPECT_DOUBLE_EQ(ppz_bound(3), 0.25);
  EXPECT_DOUBLE_EQ(ppz_bound(30), std::ldexp(1.0, -20));
  EXPECT_THROW(ppz_bound(0), std::invalid_argument);
  EXPECT_DOUBLE_EQ(del_bound(0), 1.0);
  EXPECT_NEAR(del_bound(3), 8.0 / 27.0, 1e-15);
  EXPECT_NEAR(del_bound(6), 64.0 / 729.0, 1e-15);
  EXPECT_NEAR(delppz_bound(30, 1, 1), std::pow(1.5, -30) + std::ldexp(1.0, -20),
              1e-18);
  EXPECT_NEAR(delppz_bound(30, 1, 1), 6.1688e-6, 1e-10);
  EXPECT_DOUBLE_EQ(delppz_bound(3, 4, 1), 1.0);
  EXPECT_NEAR(crossover_t_av(), 1.13967, 1e-5);
  EXPECT_THROW(delppz_bound(0, 1, 1), std::invalid_argument);
  EXPECT_THROW(delppz_bound(3, 0.5, 1), std::invalid_argument);
  EXPECT_THROW(delppz_bound(3, 1, 0.5), std::invalid_argument);
}

TEST(BoundsTest, CrossoverMatchesPpzBound) {
  const double first = delppz_bound(30, 1, crossover_t_av()) -
                       std::pow(std::ldexp(1.0, -30), 2.0 / 3.0);
  EXPECT_NEAR(first / ppz_bound(30), 1.0, 1e-9);
}

TEST(BoundsTest, Log2VariantsAgree) {
  EXPECT_NEAR(ppz_bound_log2(30), -20.0, 1e-12);
  EXPECT_NEAR(del_bound_log2(6), std::log2(del_bound(6)), 1e-12);
  EXPECT_NEAR(delppz_bound_log2(30, 2, 1.05),
              std::log2(delppz_bound(30, 2, 1.05)), 1e-9);
  EXPECT_TRUE(std::isfinite(delppz_bound_log2(3000, 1, 1.1)));
}

TEST(BoundsProperty, DelPpzMonotone) {
  for (std::uint32_t n : {10u, 30u, 60u}) {
    for (double s = 1; s <= 64; s *= 2) {
      double prev = 2.0;
      for (int k = 0; k <= 20; ++k) {
        const double t = 1.0 + k * 0.05;
        const double b = delppz_bound(n, s, t);
        EXPECT_LE(b, prev);
        EXPECT_LE(b, delppz_bound(n, s * 2, t));
        prev = b;
      }
    }
  }
}

TEST(WilsonTest, Invariants) {
  for (const std::uint64_t trials : {100, 1000, 200000})
    for (const std::uint64_t k : {std::uint64_t{0}, std::uint64_t{1}, trials / 3,
                                   trials - 1, trials}) {
      const TauEstimate e = wilson_interval(k, trials);
      EXPECT_LE(0.0, e.ci_low);
      EXPECT_LE(e.ci_low, e.point);
      EXPECT_LE(e.point, e.ci_high);
      EXPECT_LE(e.ci_high, 1.0);
    }
  const TauEstimate zero = wilson_interval(0, 100);
  EXPECT_EQ(zero.point, 0.0);
  EXPECT_EQ(zero.ci_low, 0.0);
  // Reference value from the closed form.
  const TauEstimate half = wilson_interval(50, 100);
  EXPECT_NEAR(half.ci_low, 0.403831, 1e-6);
  EXPECT_NEAR(half.ci_high, 0.596169, 1e-6);
}

TEST(EstimateTauTest, UnsatAndPrecondition) {
  const CnfFormula unsat(1, {{1}, {-1}});
  for (Algorithm a : {Algorithm::Ppz, Algorithm::Del, Algorithm::DelPpz}) {
    const TauEstimate e = estimate_tau(unsat, a, 100, 1);
    EXPECT_EQ(e.point, 0.0);
    EXPECT_EQ(e.ci_low, 0.0);
  }
  EXPECT_THROW(estimate_tau(unsat, Algorithm::Ppz, 10, 1),
               std::invalid_argument);
}

TEST(EstimateTauTest, ThreadIndependent) {
  const CnfFormula f = xor_chain(2);
  const TauEstimate a = estimate_tau(f, Algorithm::DelPpz, 5000, 8, 1);
  const TauEstimate b = estimate_tau(f, Algorithm::DelPpz, 5000, 8, 4);
  EXPECT_EQ(a.successes, b.successes);
}

TEST(ExactOracleTest, FrozenValues) {
  EXPECT_DOUBLE_EQ(exact_ppz_success(CnfFormula(1, {{1}})), 1.0);
  EXPECT_DOUBLE_EQ(exact_ppz_success(xor_chain(1)), 1.0);
  EXPECT_DOUBLE_EQ(exact_ppz_success(xor_chain(2)), 1.0);
  EXPECT_DOUBLE_EQ(exact_ppz_success(small_formula()), 25.0 / 32.0);
  EXPECT_DOUBLE_EQ(exact_ppz_success(CnfFormula(1, {{1}, {-1}})), 0.0);
  EXPECT_DOUBLE_EQ(exact_del_success(small_formula()), 580.0 / 729.0);
  EXPECT_DOUBLE_EQ(exact_del_success(CnfFormula(3, {{1, 2}, {-3}})), 1.0);
  EXPECT_THROW(exact_ppz_success(xor_chain(3)), std::invalid_argument);
  EXPECT_THROW(exact_del_success(xor_chain(3)), std::invalid_argument);
}

TEST(ExactOracleTest, UnsatisfiableIsZero) {
  CnfFormula f(3);
  for (int mask = 0; mask < 8; ++mask)
    f.add_clause({mask & 1 ? 1 : -1, mask & 2 ? 2 : -2, mask & 4 ? 3 : -3});
  EXPECT_DOUBLE_EQ(exact_del_success(f), 0.0);
  EXPECT_DOUBLE_EQ(exact_ppz_success(f), 0.0);
}

// Per-solution bounds hold against exact oracles on random instances.
TEST(ExactOracleProperty, BoundsBelowExact) {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int round = 0; round < 60; ++round) {
    const std::uint32_t n = 3 + static_cast<std::uint32_t>(rng() % 3);
    const Clauses clauses = random_clauses(rng, n, 1 + rng() % 9, 3, 3);
    const CnfFormula f = to_formula(n, clauses);
    const SolutionSet s = enumerate_solutions(f);
    if (s.empty())
      continue;
    const double del = exact_del_success(f);
    const double ppz = exact_ppz_success(f);
    EXPECT_GE(ppz + 1e-12, ppz_bound(n));
    for (const Assignment &alpha : s)
      EXPECT_GE(del + 1e-12, del_bound(critical_profile(f, alpha, s).c));
    ++checked;
  }
  EXPECT_GT(checked, 20);
}
