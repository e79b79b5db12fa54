#include "randsat/ppz.hpp"

#include <algorithm>
#include <stdexcept>

#include "randsat/solver.hpp"

namespace randsat {

std::size_t PpzTrace::unforced_count() const {
  return static_cast<std::size_t>(std::count_if(
      steps.begin(), steps.end(), [](const PpzStep &s) { return !s.forced; }));
}

bool PpzSolver::iterate(const CnfFormula &formula, RandomSource &rng,
                        Assignment &out, PpzTrace *trace) {
  const std::uint32_t n = formula.num_vars();
  permutation_.resize(n);
  rng.permutation(permutation_);
  out.resize(n);
  if (trace) {
    trace->permutation = permutation_;
    trace->steps.clear();
    trace->steps.reserve(n);
  }

  current_ = formula;
  for (const Var v : permutation_) {
    const std::optional<bool> unit = unit_clause_polarity(current_, v);
    const bool value = unit ? *unit : rng.coin();
    out.set(v, value);
    if (trace)
      trace->steps.push_back({v, unit.has_value(), value});
    // A conflict leaves the branch unsatisfiable; the final check rejects it.
    substitute_into(current_, v, value, next_);
    std::swap(current_, next_);
  }
  return evaluate(formula, out);
}

PpzResult ppz_iteration(const CnfFormula &formula, RandomSource &rng) {
  require_3cnf(formula, "PPZ");
  PpzSolver solver;
  PpzResult result;
  Assignment alpha;
  if (solver.iterate(formula, rng, alpha, &result.trace))
    result.assignment = std::move(alpha);
  return result;
}

std::optional<Assignment> run_ppz(const CnfFormula &formula,
                                  std::uint64_t iterations, std::uint64_t seed,
                                  unsigned threads) {
  if (iterations == 0)
    throw std::invalid_argument("run_ppz needs at least one iteration");
  RunOptions options;
  options.omega = iterations;
  options.threads = threads;
  return solve(formula, Algorithm::Ppz, seed, options).assignment;
}

} // namespace randsat
