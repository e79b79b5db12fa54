#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "randsat/cnf.hpp"
#include "randsat/ppz.hpp"
#include "randsat/random.hpp"
#include "randsat/twosat.hpp"

namespace randsat {

/// Where an iteration returned from.
enum class Exit {
  Del,    ///< 2-SAT on a reduced copy of the current formula succeeded
  Ppz,    ///< all variables assigned and the result satisfies the input
  Failed, ///< no satisfying assignment found (never a proof of UNSAT)
};

std::string_view to_string(Exit exit);

struct SolverOutcome {
  std::optional<Assignment> assignment;
  Exit exit = Exit::Failed;
  /// 1-based loop step of a Del exit.
  std::optional<std::uint32_t> exit_step;
  /// Iterations consumed.
  std::uint64_t trials = 1;
};

struct DelPpzTrace {
  std::vector<Var> permutation;
  /// Assignments made by the PPZ branch, in order.
  std::vector<PpzStep> steps;
  /// Critical-clause count of the current formula with respect to the
  /// tracked solution, taken at the start of each step. Recorded only while
  /// every value fixed so far agrees with that solution.
  std::vector<std::size_t> critical_counts;
  /// First step whose value disagreed with the tracked solution.
  std::optional<std::uint32_t> diverged_at;
  Exit exit = Exit::Failed;
};

struct DelPpzResult {
  SolverOutcome outcome;
  DelPpzTrace trace;
};

/// One iteration of the combined algorithm.
///
/// After drawing a permutation, each step i first runs DEL on the current
/// formula and returns on 2-SAT success, keeping the values fixed in steps
/// 1..i-1. Otherwise it performs one PPZ step on the i-th variable and
/// substitutes. Once a substitution empties a clause the current formula is
/// unsatisfiable, so further DEL attempts are skipped.
class DelPpzSolver {
public:
  /// `formula` must be 3-CNF. `track`, when given, must satisfy `formula`
  /// and requires `trace`.
  Exit iterate(const CnfFormula &formula, RandomSource &rng, Assignment &out,
               std::uint32_t *exit_step = nullptr, DelPpzTrace *trace = nullptr,
               const Assignment *track = nullptr);

private:
  std::vector<Var> permutation_;
  CnfFormula current_;
  CnfFormula next_;
  CnfFormula reduced_;
  Assignment beta_;
  TwoSatSolver twosat_;
};

DelPpzResult delppz_iteration(const CnfFormula &formula, RandomSource &rng,
                              const Assignment *track = nullptr);

inline constexpr std::uint64_t kDefaultBudgetCap = 10'000'000;

/// ceil(n * 1.5875^n), at least 1, clipped to `cap`.
std::uint64_t default_omega(std::uint32_t num_vars,
                            std::uint64_t cap = kDefaultBudgetCap);

struct RunOptions {
  /// Iteration count; default_omega(n, budget_cap) when absent.
  std::optional<std::uint64_t> omega;
  std::uint64_t budget_cap = kDefaultBudgetCap;
  unsigned threads = 1;
};

/// Repeats delppz_iteration with seeds derive_seed(seed, k) and returns the
/// lowest-indexed success. On failure `trials` is the number of iterations
/// run.
SolverOutcome run_delppz(const CnfFormula &formula, std::uint64_t seed,
                         const RunOptions &options = {});

} // namespace randsat
