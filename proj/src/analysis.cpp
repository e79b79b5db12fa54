#include "randsat/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "randsat/trials.hpp"

namespace randsat {

namespace {

constexpr std::uint32_t kEnumerationHardLimit = 40;

// x_1 is the most significant bit, so numeric order is string order.
std::uint64_t lex_key(const Assignment &alpha) {
  std::uint64_t key = 0;
  for (Var v = 1; v <= alpha.num_vars(); ++v)
    key = (key << 1) | (alpha[v] ? 1 : 0);
  return key;
}

} // namespace

SolutionSet::SolutionSet(std::uint32_t num_vars,
                         std::vector<Assignment> solutions)
    : num_vars_(num_vars), solutions_(std::move(solutions)) {
  if (num_vars_ > 64)
    throw std::invalid_argument("solution sets are limited to 64 variables");
  std::sort(solutions_.begin(), solutions_.end(),
            [](const Assignment &a, const Assignment &b) {
              return lex_key(a) < lex_key(b);
            });
  keys_.reserve(solutions_.size());
  for (const auto &alpha : solutions_) {
    if (alpha.num_vars() != num_vars_)
      throw std::invalid_argument("solution has the wrong variable count");
    keys_.push_back(lex_key(alpha));
  }
  if (std::adjacent_find(keys_.begin(), keys_.end()) != keys_.end())
    throw std::invalid_argument("duplicate solution");
}

bool SolutionSet::contains(const Assignment &alpha) const {
  if (alpha.num_vars() != num_vars_)
    return false;
  return std::binary_search(keys_.begin(), keys_.end(), lex_key(alpha));
}

SolutionSet enumerate_solutions(const CnfFormula &formula,
                                std::uint32_t max_vars) {
  const std::uint32_t n = formula.num_vars();
  if (n > std::min(max_vars, kEnumerationHardLimit))
    throw std::invalid_argument(fmt::format(
        "refusing to enumerate 2^{} assignments (limit is {} variables)", n,
        std::min(max_vars, kEnumerationHardLimit)));

  struct Masks {
    std::uint64_t positive = 0;
    std::uint64_t negative = 0;
  };
  std::vector<Masks> clauses(formula.num_clauses());
  for (std::size_t i = 0; i < formula.num_clauses(); ++i)
    for (const Literal l : formula.clause(i)) {
      const std::uint64_t bit = std::uint64_t{1} << (n - l.var());
      (l.positive() ? clauses[i].positive : clauses[i].negative) |= bit;
    }

  std::vector<Assignment> found;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t key = 0; key < total; ++key) {
    const bool sat = std::all_of(clauses.begin(), clauses.end(), [&](Masks m) {
      return ((key & m.positive) | (~key & m.negative)) != 0;
    });
    if (!sat)
      continue;
    Assignment alpha(n);
    for (Var v = 1; v <= n; ++v)
      if ((key >> (n - v)) & 1)
        alpha.set(v, true);
    found.push_back(std::move(alpha));
  }
  return SolutionSet(n, std::move(found));
}

std::optional<Var> critical_variable(ClauseView clause,
                                     const Assignment &alpha) {
  std::optional<Var> unique;
  for (const Literal l : clause) {
    if (!alpha.satisfies(l))
      continue;
    if (unique)
      return std::nullopt;
    unique = l.var();
  }
  return unique;
}

std::size_t critical_count(const CnfFormula &formula, const Assignment &alpha) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < formula.num_clauses(); ++i)
    if (critical_variable(formula.clause(i), alpha))
      ++count;
  return count;
}

CriticalProfile critical_profile(const CnfFormula &formula,
                                 const Assignment &alpha,
                                 const SolutionSet &solutions) {
  if (!solutions.contains(alpha) || !evaluate(formula, alpha))
    throw std::invalid_argument(fmt::format(
        "{} is not a satisfying assignment of the formula", alpha.to_string()));

  const std::uint32_t n = formula.num_vars();
  CriticalProfile profile;
  profile.alpha = alpha;
  profile.t_per_var.assign(n, 0);
  for (std::size_t i = 0; i < formula.num_clauses(); ++i)
    if (const auto v = critical_variable(formula.clause(i), alpha)) {
      ++profile.t_per_var[*v - 1];
      ++profile.c;
    }

  Assignment neighbour = alpha;
  for (Var v = 1; v <= n; ++v) {
    neighbour.flip(v);
    if (solutions.contains(neighbour))
      ++profile.l;
    neighbour.flip(v);
  }
  profile.isolation = n - profile.l;

  for (const std::size_t t : profile.t_per_var)
    if (t > 0 && (!profile.t_min || t < *profile.t_min))
      profile.t_min = t;
  if (profile.c > 0)
    profile.t_av =
        static_cast<double>(profile.c) / static_cast<double>(profile.isolation);
  return profile;
}

TauEstimate wilson_interval(std::uint64_t successes, std::uint64_t trials,
                            double z) {
  if (trials == 0 || successes > trials)
    throw std::invalid_argument("wilson_interval needs 0 <= successes <= trials, trials > 0");
  TauEstimate est;
  est.successes = successes;
  est.trials = trials;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  est.point = p;
  est.ci_low = successes == 0 ? 0.0 : std::clamp(centre - half, 0.0, p);
  est.ci_high = successes == trials ? 1.0 : std::clamp(centre + half, p, 1.0);
  return est;
}

TauEstimate estimate_tau(const CnfFormula &formula, Algorithm algorithm,
                         std::uint64_t trials, std::uint64_t seed,
                         unsigned threads) {
  if (trials < 100)
    throw std::invalid_argument(
        fmt::format("estimate_tau needs at least 100 trials, got {}", trials));
  require_3cnf(formula, "estimate_tau");
  const std::uint64_t successes = count_successes(trials, threads, [&] {
    return [runner = IterationRunner(formula, algorithm),
            seed](std::uint64_t trial) mutable {
      return runner.run(derive_seed(seed, trial)) != Exit::Failed;
    };
  });
  return wilson_interval(successes, trials);
}

} // namespace randsat
