#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "randsat/cnf.hpp"
#include "randsat/solver.hpp"

namespace randsat {

// Brute-force guards. Each oracle takes its limit as an argument defaulting
// to these values.
inline constexpr std::uint32_t kEnumerationGuard = 24;
inline constexpr std::size_t kDelPatternGuard = 10;
inline constexpr std::uint32_t kPpzOracleGuard = 6;

/// All satisfying assignments of a formula, in lexicographic order of
/// their 0/1 strings.
class SolutionSet {
public:
  SolutionSet(std::uint32_t num_vars, std::vector<Assignment> solutions);

  std::uint32_t num_vars() const { return num_vars_; }
  std::size_t size() const { return solutions_.size(); }
  bool empty() const { return solutions_.empty(); }
  std::span<const Assignment> solutions() const { return solutions_; }
  auto begin() const { return solutions_.begin(); }
  auto end() const { return solutions_.end(); }

  bool contains(const Assignment &alpha) const;

private:
  std::uint32_t num_vars_;
  std::vector<Assignment> solutions_;
  std::vector<std::uint64_t> keys_;
};

/// Exhaustive 2^n scan. Throws std::invalid_argument when num_vars exceeds
/// `max_vars` (hard limit 40).
SolutionSet enumerate_solutions(const CnfFormula &formula,
                                std::uint32_t max_vars = kEnumerationGuard);

/// Variable of the only literal of `clause` satisfied by alpha, if exactly
/// one is.
std::optional<Var> critical_variable(ClauseView clause,
                                     const Assignment &alpha);

/// Number of clauses with exactly one literal satisfied by alpha.
std::size_t critical_count(const CnfFormula &formula, const Assignment &alpha);

struct CriticalProfile {
  Assignment alpha;
  /// Total critical clauses.
  std::size_t c = 0;
  /// t_per_var[v-1]: critical clauses whose unique true literal is over x_v.
  std::vector<std::size_t> t_per_var;
  /// Solutions at Hamming distance 1.
  std::uint32_t l = 0;
  /// Directions in which alpha is isolated; alpha is isolation-isolated.
  std::uint32_t isolation = 0;
  /// Smallest positive t_per_var entry; absent when c = 0.
  std::optional<std::size_t> t_min;
  /// c / (n - l); absent when c = 0.
  std::optional<double> t_av;
};

/// Throws std::invalid_argument if alpha is not in `solutions`.
CriticalProfile critical_profile(const CnfFormula &formula,
                                 const Assignment &alpha,
                                 const SolutionSet &solutions);

// Closed-form success-probability bounds for one iteration. The *_log2
// variants return log2 of the same quantity and stay finite for large n.

/// 2^(-2n/3). Throws for n = 0.
double ppz_bound(std::uint32_t n);
double ppz_bound_log2(std::uint32_t n);

/// (2/3)^c. Takes a real c so bound curves can use c = t_av * n.
double del_bound(double c);
double del_bound_log2(double c);

/// min(1, s * 2^(-n * t_av * log2(3/2)) + (2^-n * s)^(2/3)).
/// Requires n >= 1, s >= 1, t_av >= 1.
double delppz_bound(std::uint32_t n, double s, double t_av);
double delppz_bound_log2(std::uint32_t n, double s, double t_av);

/// T_av at which the DEL term equals the PPZ bound: 2 / (3 log2(3/2)).
double crossover_t_av();

struct TauEstimate {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double point = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

/// Wilson score interval; z = 1.96 gives 95 % coverage.
TauEstimate wilson_interval(std::uint64_t successes, std::uint64_t trials,
                            double z = 1.959963984540054);

/// Monte Carlo estimate of single-iteration success probability. Trial k
/// uses derive_seed(seed, k). Requires trials >= 100.
TauEstimate estimate_tau(const CnfFormula &formula, Algorithm algorithm,
                         std::uint64_t trials, std::uint64_t seed,
                         unsigned threads = 1);

/// Exact probability that one DEL iteration succeeds: the fraction of the
/// 3^k equally likely deletion patterns (k = number of width-3 clauses)
/// whose reduced 2-CNF is satisfiable.
double exact_del_success(const CnfFormula &formula,
                         std::size_t max_width3_clauses = kDelPatternGuard);

/// Exact probability that one PPZ iteration succeeds, by enumerating all n!
/// permutations and every coin outcome of the unforced steps.
double exact_ppz_success(const CnfFormula &formula,
                         std::uint32_t max_vars = kPpzOracleGuard);

} // namespace randsat
