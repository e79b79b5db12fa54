#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "randsat/analysis.hpp"
#include "randsat/dimacs.hpp"
#include "randsat/generators.hpp"
#include "randsat/solver.hpp"

namespace randsat::cli {
namespace {

/// Thrown for bad input; reported on stderr with exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kAlgorithms = {"ppz", "del", "delppz"};

Algorithm algorithm_from(const std::string &name) {
  if (const auto a = parse_algorithm(name))
    return *a;
  throw InputError(fmt::format("unknown algorithm '{}'", name));
}

CnfFormula load(const std::string &path, std::ostream &err) {
  std::vector<std::string> warnings;
  CnfFormula formula = read_dimacs_file(path, &warnings);
  for (const auto &w : warnings)
    fmt::print(err, "warning: {}: {}\n", path, w);
  return formula;
}

void require_solvable_width(const CnfFormula &formula) {
  if (!formula.is_3cnf())
    throw InputError(fmt::format(
        "input has a clause of width {}; the solvers accept 3-CNF only",
        formula.max_width()));
}

std::string optional_field(const std::optional<double> &v) {
  return v ? fmt::format("{}", *v) : std::string();
}

struct SolveArgs {
  std::string file;
  std::string algorithm = "delppz";
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> omega;
  std::uint64_t budget_cap = kDefaultBudgetCap;
  unsigned threads = 1;
};

int cmd_solve(const SolveArgs &a, std::ostream &out, std::ostream &err) {
  const CnfFormula formula = load(a.file, err);
  require_solvable_width(formula);
  RunOptions options;
  options.omega = a.omega;
  options.budget_cap = a.budget_cap;
  options.threads = a.threads;
  const Algorithm algorithm = algorithm_from(a.algorithm);
  const SolverOutcome r = solve(formula, algorithm, a.seed, options);

  if (!r.assignment) {
    fmt::print(out, "c {}: no satisfying assignment in {} trials\n",
               a.algorithm, r.trials);
    fmt::print(out, "c this is not a proof of unsatisfiability\n");
    fmt::print(out, "s UNKNOWN\n");
    return kExitUnknown;
  }
  if (!evaluate(formula, *r.assignment))
    throw std::logic_error("solver returned an assignment that does not verify");
  std::string exit = std::string(to_string(r.exit));
  if (r.exit_step && algorithm == Algorithm::DelPpz)
    exit += fmt::format(" at step {}", *r.exit_step);
  fmt::print(out, "c {}: found after {} trials, exit {}\n",
             a.algorithm, r.trials, exit);
  fmt::print(out, "s SATISFIABLE\n");
  fmt::print(out, "v {} 0\n", fmt::join(r.assignment->to_literals(), " "));
  return kExitSat;
}

struct AnalyzeArgs {
  std::string file;
  std::uint32_t max_vars = kEnumerationGuard;
  bool csv = false;
};

int cmd_analyze(const AnalyzeArgs &a, std::ostream &out, std::ostream &err) {
  const CnfFormula formula = load(a.file, err);
  if (formula.num_vars() > a.max_vars)
    throw InputError(fmt::format(
        "{} variables exceed the enumeration guard of {} (see --max-vars)",
        formula.num_vars(), a.max_vars));
  const SolutionSet solutions = enumerate_solutions(formula, a.max_vars);

  std::vector<CriticalProfile> profiles;
  profiles.reserve(solutions.size());
  for (const Assignment &alpha : solutions)
    profiles.push_back(critical_profile(formula, alpha, solutions));

  if (a.csv) {
    fmt::print(out, "alpha,c,l,isolation,t_av,t_min\n");
    for (const auto &p : profiles)
      fmt::print(out, "{},{},{},{},{},{}\n", p.alpha.to_string(), p.c, p.l,
                 p.isolation, optional_field(p.t_av),
                 p.t_min ? fmt::format("{}", *p.t_min) : std::string());
    return 0;
  }

  fmt::print(out, "|S| = {}\n", solutions.size());
  if (profiles.empty())
    return 0;
  const std::size_t width = std::max<std::size_t>(5, formula.num_vars());
  fmt::print(out, "{:<{}}  {:>6}  {:>4}  {:>9}  {:>8}  {:>5}\n", "alpha",
             width, "c", "l", "isolation", "t_av", "t_min");
  std::vector<double> t_avs;
  for (const auto &p : profiles) {
    fmt::print(out, "{:<{}}  {:>6}  {:>4}  {:>9}  {:>8}  {:>5}\n",
               p.alpha.to_string(), width, p.c, p.l, p.isolation,
               p.t_av ? fmt::format("{:.4f}", *p.t_av) : "-",
               p.t_min ? fmt::format("{}", *p.t_min) : "-");
    if (p.t_av)
      t_avs.push_back(*p.t_av);
  }
  if (t_avs.empty()) {
    fmt::print(out, "T_av undefined for every solution (c = 0)\n");
  } else {
    double sum = 0;
    for (const double t : t_avs)
      sum += t;
    fmt::print(out, "T_av min {:.4f}  mean {:.4f}  max {:.4f}  ({} of {} defined)\n",
               *std::min_element(t_avs.begin(), t_avs.end()),
               sum / static_cast<double>(t_avs.size()),
               *std::max_element(t_avs.begin(), t_avs.end()), t_avs.size(),
               profiles.size());
  }
  return 0;
}

struct EstimateArgs {
  std::string file;
  std::string algorithm = "delppz";
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

// Exact oracle value, when the instance is small enough.
std::optional<double> oracle_for(const CnfFormula &formula, Algorithm algorithm) {
  std::size_t width3 = 0;
  for (std::size_t i = 0; i < formula.num_clauses(); ++i)
    width3 += formula.clause(i).size() == 3;
  switch (algorithm) {
  case Algorithm::Ppz:
    if (formula.num_vars() <= kPpzOracleGuard)
      return exact_ppz_success(formula);
    break;
  case Algorithm::Del:
    if (width3 <= kDelPatternGuard)
      return exact_del_success(formula);
    break;
  case Algorithm::DelPpz:
    break;
  }
  return std::nullopt;
}

// Closed-form lower bound from the solution set: the PPZ bound, the best
// per-solution DEL bound, or the combined bound at the largest T_av.
std::optional<double> bound_for(const CnfFormula &formula, Algorithm algorithm) {
  const std::uint32_t n = formula.num_vars();
  if (n == 0 || n > kEnumerationGuard)
    return std::nullopt;
  const SolutionSet solutions = enumerate_solutions(formula);
  if (solutions.empty())
    return std::nullopt;
  if (algorithm == Algorithm::Ppz)
    return ppz_bound(n);

  std::size_t min_c = SIZE_MAX;
  double max_t = 1.0;
  for (const Assignment &alpha : solutions) {
    const CriticalProfile p = critical_profile(formula, alpha, solutions);
    min_c = std::min(min_c, p.c);
    if (p.t_av)
      max_t = std::max(max_t, *p.t_av);
  }
  if (algorithm == Algorithm::Del)
    return del_bound(static_cast<double>(min_c));
  if (min_c == 0)
    max_t = 1.0;
  return delppz_bound(n, static_cast<double>(solutions.size()), max_t);
}

int cmd_estimate(const EstimateArgs &a, std::ostream &out, std::ostream &err) {
  if (a.trials < 100)
    throw InputError("--trials must be at least 100");
  const CnfFormula formula = load(a.file, err);
  require_solvable_width(formula);
  const Algorithm algorithm = algorithm_from(a.algorithm);
  const TauEstimate e =
      estimate_tau(formula, algorithm, a.trials, a.seed, a.threads);
  fmt::print(out, "algorithm,successes,trials,point,ci_low,ci_high,oracle,bound\n");
  fmt::print(out, "{},{},{},{},{},{},{},{}\n", a.algorithm,
             e.successes, e.trials, e.point, e.ci_low, e.ci_high,
             optional_field(oracle_for(formula, algorithm)),
             optional_field(bound_for(formula, algorithm)));
  return 0;
}

struct BoundsArgs {
  std::uint32_t n = 30;
  double s = 1;
  double t_min = 1;
  std::optional<double> t_max;
  std::uint32_t steps = 10;
  bool log = false;
};

int cmd_bounds(const BoundsArgs &a, std::ostream &out) {
  const double crossover = crossover_t_av();
  const double t_max = a.t_max.value_or(crossover);
  if (a.t_min < 1.0 || t_max > crossover || a.t_min > t_max)
    throw InputError(fmt::format(
        "t_av range must lie within [1, {:.6f}] with t-min <= t-max", crossover));
  if (a.n == 0 || a.s < 1)
    throw InputError("--n must be positive and --s at least 1");

  const double log10_2 = std::log10(2.0);
  fmt::print(out, "t_av,ppz_bound,del_bound,delppz_bound\n");
  for (std::uint32_t k = 0; k <= a.steps; ++k) {
    const double t = a.steps == 0
                         ? a.t_min
                         : a.t_min + (t_max - a.t_min) * k / a.steps;
    const double c = t * a.n;
    if (a.log)
      fmt::print(out, "{},{},{},{}\n", t, ppz_bound_log2(a.n) * log10_2,
                 del_bound_log2(c) * log10_2,
                 delppz_bound_log2(a.n, a.s, t) * log10_2);
    else
      fmt::print(out, "{},{},{},{}\n", t, ppz_bound(a.n), del_bound(c),
                 delppz_bound(a.n, a.s, t));
  }
  return 0;
}

void write_formula(const CnfFormula &formula, const std::string &path,
                   std::ostream &out) {
  if (path.empty() || path == "-") {
    emit_dimacs(formula, out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file)
    throw InputError(fmt::format("cannot write '{}'", path));
  emit_dimacs(formula, file);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Randomized 3-SAT solvers (PPZ, DEL, DEL-PPZ) with analysis "
               "tools",
               "randsat"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto *solve_cmd = app.add_subcommand(
      "solve", "Search for a satisfying assignment. Exit 10 when found, 20 "
               "when the budget runs out (not a proof of unsatisfiability)");
  solve_cmd->add_option("file", solve_args.file, "DIMACS CNF input")->required();
  solve_cmd->add_option("-a,--algorithm", solve_args.algorithm, "ppz, del or delppz")
      ->check(CLI::IsMember(kAlgorithms))
      ->capture_default_str();
  solve_cmd->add_option("--seed", solve_args.seed, "Master seed")
      ->capture_default_str();
  solve_cmd->add_option("--omega", solve_args.omega,
                        "Number of iterations [default: ceil(n*1.5875^n) "
                        "clipped to the budget cap]")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--budget-cap", solve_args.budget_cap,
                        "Upper limit for the default iteration count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve_cmd->add_option("--threads", solve_args.threads,
                        "Worker threads, 0 for all cores; results do not "
                        "depend on it")
      ->capture_default_str();

  AnalyzeArgs analyze_args;
  auto *analyze_cmd = app.add_subcommand(
      "analyze", "Enumerate all solutions and print critical-clause profiles");
  analyze_cmd->add_option("file", analyze_args.file, "DIMACS CNF input")
      ->required();
  analyze_cmd->add_option("--max-vars", analyze_args.max_vars,
                          "Refuse inputs with more variables (hard limit 40)")
      ->check(CLI::Range(1, 40))
      ->capture_default_str();
  analyze_cmd->add_flag("--csv", analyze_args.csv, "Machine-readable output");

  EstimateArgs estimate_args;
  auto *estimate_cmd = app.add_subcommand(
      "estimate", "Monte Carlo estimate of single-iteration success "
                  "probability with a 95% Wilson interval (CSV)");
  estimate_cmd->add_option("file", estimate_args.file, "DIMACS CNF input")
      ->required();
  estimate_cmd->add_option("-a,--algorithm", estimate_args.algorithm, "ppz, del or delppz")
      ->check(CLI::IsMember(kAlgorithms))
      ->capture_default_str();
  estimate_cmd->add_option("--trials", estimate_args.trials, "At least 100")
      ->capture_default_str();
  estimate_cmd->add_option("--seed", estimate_args.seed, "Master seed")
      ->capture_default_str();
  estimate_cmd->add_option("--threads", estimate_args.threads,
                           "Worker threads, 0 for all cores")
      ->capture_default_str();

  BoundsArgs bounds_args;
  auto *bounds_cmd = app.add_subcommand(
      "bounds", "Success-probability bound curves over T_av (CSV)");
  bounds_cmd->add_option("--n", bounds_args.n, "Number of variables")
      ->capture_default_str();
  bounds_cmd->add_option("--s", bounds_args.s, "Number of solutions")
      ->capture_default_str();
  bounds_cmd->add_option("--t-min", bounds_args.t_min, "First T_av value")
      ->capture_default_str();
  bounds_cmd->add_option("--t-max", bounds_args.t_max,
                         "Last T_av value [default: 2/(3 log2 1.5)]");
  bounds_cmd->add_option("--steps", bounds_args.steps,
                         "Intervals between rows; prints steps+1 rows")
      ->capture_default_str();
  bounds_cmd->add_flag("--log", bounds_args.log, "Print log10 of each bound");

  auto *generate_cmd =
      app.add_subcommand("generate", "Write a generated instance as DIMACS");
  generate_cmd->require_subcommand(1);
  std::string out_path;
  std::uint32_t xor_m = 1;
  auto *xor_cmd = generate_cmd->add_subcommand(
      "xor", "Chain of m independent 3-variable XOR constraints (n = 3m)");
  xor_cmd->add_option("--m", xor_m, "Number of triples")->required();
  xor_cmd->add_option("-o,--out", out_path, "Output file [default: stdout]");
  std::uint32_t rand_n = 0, rand_m = 0;
  std::uint64_t rand_seed = 0;
  auto *random_cmd = generate_cmd->add_subcommand(
      "random", "Uniform random 3-CNF over distinct variables per clause");
  random_cmd->add_option("--n", rand_n, "Number of variables")->required();
  random_cmd->add_option("--m", rand_m, "Number of clauses")->required();
  random_cmd->add_option("--seed", rand_seed, "Seed")->capture_default_str();
  random_cmd->add_option("-o,--out", out_path, "Output file [default: stdout]");

  std::vector<std::string> argv_storage{"randsat"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto &s : argv_storage)
    argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? 0 : kExitInputError;
  }

  try {
    if (solve_cmd->parsed())
      return cmd_solve(solve_args, out, err);
    if (analyze_cmd->parsed())
      return cmd_analyze(analyze_args, out, err);
    if (estimate_cmd->parsed())
      return cmd_estimate(estimate_args, out, err);
    if (bounds_cmd->parsed())
      return cmd_bounds(bounds_args, out);
    if (xor_cmd->parsed()) {
      if (xor_m == 0)
        throw InputError("--m must be at least 1");
      write_formula(xor_chain(xor_m), out_path, out);
      return 0;
    }
    if (random_cmd->parsed()) {
      if (rand_n < 3)
        throw InputError("--n must be at least 3");
      write_formula(random_3cnf(rand_n, rand_m, rand_seed), out_path, out);
      return 0;
    }
  } catch (const std::invalid_argument &e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitInputError;
  } catch (const std::runtime_error &e) {
    // Unreadable files, DIMACS errors and refused parameters.
    fmt::print(err, "error: {}\n", e.what());
    return kExitInputError;
  }
  return kExitInputError;
}

} // namespace randsat::cli
