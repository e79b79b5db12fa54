#include "randsat/solver.hpp"

#include <stdexcept>

#include "randsat/trials.hpp"

namespace randsat {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
  case Algorithm::Ppz:
    return "ppz";
  case Algorithm::Del:
    return "del";
  case Algorithm::DelPpz:
    return "delppz";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "ppz")
    return Algorithm::Ppz;
  if (name == "del")
    return Algorithm::Del;
  if (name == "delppz")
    return Algorithm::DelPpz;
  return std::nullopt;
}

IterationRunner::IterationRunner(const CnfFormula &formula,
                                 Algorithm algorithm)
    : formula_(&formula), algorithm_(algorithm) {
  require_3cnf(formula, "randomized solver");
}

Exit IterationRunner::run(std::uint64_t seed, std::uint32_t *exit_step) {
  RandomSource rng(seed);
  switch (algorithm_) {
  case Algorithm::Ppz:
    return ppz_.iterate(*formula_, rng, alpha_) ? Exit::Ppz : Exit::Failed;
  case Algorithm::Del:
    if (!del_.iterate(*formula_, rng, alpha_))
      return Exit::Failed;
    if (exit_step)
      *exit_step = 1;
    return Exit::Del;
  case Algorithm::DelPpz:
    return delppz_.iterate(*formula_, rng, alpha_, exit_step);
  }
  return Exit::Failed;
}

SolverOutcome solve(const CnfFormula &formula, Algorithm algorithm,
                    std::uint64_t seed, const RunOptions &options) {
  require_3cnf(formula, "randomized solver");
  const std::uint64_t omega =
      options.omega ? *options.omega
                    : default_omega(formula.num_vars(), options.budget_cap);
  if (omega == 0)
    throw std::invalid_argument("omega must be at least 1");

  const auto winner = first_success(omega, options.threads, [&] {
    return [runner = IterationRunner(formula, algorithm),
            seed](std::uint64_t trial) mutable {
      return runner.run(derive_seed(seed, trial)) != Exit::Failed;
    };
  });

  SolverOutcome outcome;
  if (!winner) {
    outcome.trials = omega;
    return outcome;
  }
  IterationRunner replay(formula, algorithm);
  std::uint32_t step = 0;
  outcome.exit = replay.run(derive_seed(seed, *winner), &step);
  outcome.trials = *winner + 1;
  if (outcome.exit == Exit::Failed || !evaluate(formula, replay.assignment()))
    throw std::logic_error("replay of a successful trial failed");
  outcome.assignment = replay.assignment();
  if (outcome.exit == Exit::Del)
    outcome.exit_step = step;
  return outcome;
}

} // namespace randsat
