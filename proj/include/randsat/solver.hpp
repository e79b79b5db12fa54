#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "randsat/cnf.hpp"
#include "randsat/del.hpp"
#include "randsat/delppz.hpp"
#include "randsat/ppz.hpp"

namespace randsat {

enum class Algorithm { Ppz, Del, DelPpz };

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// Runs single iterations of one algorithm on one formula, reusing buffers
/// between calls. Not thread-safe; use one per thread.
class IterationRunner {
public:
  /// Throws std::invalid_argument unless `formula` is 3-CNF. The formula
  /// must outlive the runner.
  IterationRunner(const CnfFormula &formula, Algorithm algorithm);

  /// One iteration driven by RandomSource(seed).
  Exit run(std::uint64_t seed, std::uint32_t *exit_step = nullptr);

  /// Assignment of the last successful run.
  const Assignment &assignment() const { return alpha_; }

private:
  const CnfFormula *formula_;
  Algorithm algorithm_;
  PpzSolver ppz_;
  DelSolver del_;
  DelPpzSolver delppz_;
  Assignment alpha_;
};

/// Repeated independent iterations with per-trial seeds derive_seed(seed, k).
/// Returns the lowest-indexed success; the result does not depend on
/// options.threads.
SolverOutcome solve(const CnfFormula &formula, Algorithm algorithm,
                    std::uint64_t seed, const RunOptions &options = {});

} // namespace randsat
