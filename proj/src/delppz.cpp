#include "randsat/delppz.hpp"

#include <cmath>
#include <stdexcept>

#include "randsat/analysis.hpp"
#include "randsat/del.hpp"
#include "randsat/solver.hpp"

namespace randsat {

std::string_view to_string(Exit exit) {
  switch (exit) {
  case Exit::Del:
    return "del";
  case Exit::Ppz:
    return "ppz";
  case Exit::Failed:
    return "failed";
  }
  return "?";
}

Exit DelPpzSolver::iterate(const CnfFormula &formula, RandomSource &rng,
                           Assignment &out, std::uint32_t *exit_step,
                           DelPpzTrace *trace, const Assignment *track) {
  const std::uint32_t n = formula.num_vars();
  permutation_.resize(n);
  rng.permutation(permutation_);
  out.resize(n);
  if (trace) {
    trace->permutation = permutation_;
    trace->steps.clear();
    trace->critical_counts.clear();
    trace->diverged_at.reset();
  }
  bool consistent = track != nullptr && trace != nullptr;

  auto finish = [&](Exit exit) {
    if (trace)
      trace->exit = exit;
    return exit;
  };

  current_ = formula;
  bool conflict = false;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (consistent)
      trace->critical_counts.push_back(critical_count(current_, *track));

    if (!conflict) {
      delete_random_literals_into(current_, rng, reduced_);
      if (twosat_.solve(reduced_, beta_)) {
        for (std::uint32_t j = 0; j < i; ++j)
          beta_.set(permutation_[j], out[permutation_[j]]);
        if (!evaluate(formula, beta_))
          throw std::logic_error(
              "DEL-PPZ produced an assignment that falsifies the input");
        std::swap(out, beta_);
        if (exit_step)
          *exit_step = i + 1;
        return finish(Exit::Del);
      }
    }

    const Var v = permutation_[i];
    const std::optional<bool> unit = unit_clause_polarity(current_, v);
    const bool value = unit ? *unit : rng.coin();
    out.set(v, value);
    if (trace)
      trace->steps.push_back({v, unit.has_value(), value});
    if (consistent && value != (*track)[v]) {
      consistent = false;
      trace->diverged_at = i + 1;
    }
    conflict |= substitute_into(current_, v, value, next_);
    std::swap(current_, next_);
  }
  return finish(evaluate(formula, out) ? Exit::Ppz : Exit::Failed);
}

DelPpzResult delppz_iteration(const CnfFormula &formula, RandomSource &rng,
                              const Assignment *track) {
  require_3cnf(formula, "DEL-PPZ");
  if (track && (track->num_vars() != formula.num_vars() ||
                !evaluate(formula, *track)))
    throw std::invalid_argument("tracked assignment must satisfy the formula");
  DelPpzSolver solver;
  DelPpzResult result;
  Assignment alpha;
  std::uint32_t step = 0;
  const Exit exit =
      solver.iterate(formula, rng, alpha, &step, &result.trace, track);
  result.outcome.exit = exit;
  if (exit != Exit::Failed)
    result.outcome.assignment = std::move(alpha);
  if (exit == Exit::Del)
    result.outcome.exit_step = step;
  return result;
}

std::uint64_t default_omega(std::uint32_t num_vars, std::uint64_t cap) {
  const double omega =
      std::ceil(static_cast<double>(num_vars) * std::pow(1.5875, num_vars));
  if (!(omega < static_cast<double>(cap)))
    return std::max<std::uint64_t>(cap, 1);
  return std::max<std::uint64_t>(static_cast<std::uint64_t>(omega), 1);
}

SolverOutcome run_delppz(const CnfFormula &formula, std::uint64_t seed,
                         const RunOptions &options) {
  return solve(formula, Algorithm::DelPpz, seed, options);
}

} // namespace randsat
