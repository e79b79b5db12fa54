#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "randsat/cnf.hpp"
#include "randsat/random.hpp"

namespace randsat {

struct PpzStep {
  Var var = 0;
  /// Value came from a unit clause rather than a coin.
  bool forced = false;
  bool value = false;
};

struct PpzTrace {
  std::vector<Var> permutation;
  std::vector<PpzStep> steps;

  std::size_t unforced_count() const;
};

struct PpzResult {
  std::optional<Assignment> assignment;
  PpzTrace trace;
};

/// One PPZ iteration with reusable buffers.
///
/// Draws a uniform permutation, then visits variables in that order: a unit
/// clause over the variable forces its value, otherwise a fair coin decides.
/// The formula is reduced after every step. Succeeds iff the assembled
/// assignment satisfies the input.
class PpzSolver {
public:
  /// `formula` must be 3-CNF. On success `out` holds the assignment.
  bool iterate(const CnfFormula &formula, RandomSource &rng, Assignment &out,
               PpzTrace *trace = nullptr);

private:
  std::vector<Var> permutation_;
  CnfFormula current_;
  CnfFormula next_;
};

PpzResult ppz_iteration(const CnfFormula &formula, RandomSource &rng);

/// Independent iterations seeded by derive_seed(seed, k), k = 0, 1, ...;
/// returns the assignment of the lowest-indexed successful trial.
std::optional<Assignment> run_ppz(const CnfFormula &formula,
                                  std::uint64_t iterations, std::uint64_t seed,
                                  unsigned threads = 1);

} // namespace randsat
