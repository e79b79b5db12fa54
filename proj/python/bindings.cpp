#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "randsat/analysis.hpp"
#include "randsat/dimacs.hpp"
#include "randsat/generators.hpp"
#include "randsat/solver.hpp"

namespace py = pybind11;
using namespace randsat;

namespace {

// Assignments cross the boundary as lists of bools, index 0 holding x1.
py::list to_py(const Assignment &alpha) {
  py::list out;
  for (Var v = 1; v <= alpha.num_vars(); ++v)
    out.append(py::bool_(alpha[v]));
  return out;
}

py::object to_py(const std::optional<Assignment> &alpha) {
  return alpha ? py::object(to_py(*alpha)) : py::none();
}

Assignment from_py(const std::vector<bool> &values) {
  Assignment alpha(static_cast<std::uint32_t>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i)
    alpha.set(static_cast<Var>(i + 1), values[i]);
  return alpha;
}

Algorithm algorithm_from(const std::string &name) {
  if (const auto a = parse_algorithm(name))
    return *a;
  throw std::invalid_argument("algorithm must be 'ppz', 'del' or 'delppz'");
}

py::dict outcome_dict(const SolverOutcome &r) {
  py::dict d;
  d["assignment"] = to_py(r.assignment);
  d["exit"] = std::string(to_string(r.exit));
  d["exit_step"] = r.exit_step ? py::object(py::int_(*r.exit_step)) : py::none();
  d["trials"] = r.trials;
  return d;
}

py::list steps_list(const std::vector<PpzStep> &steps) {
  py::list out;
  for (const PpzStep &s : steps)
    out.append(py::make_tuple(s.var, s.forced, s.value));
  return out;
}

py::dict estimate_dict(const TauEstimate &e) {
  py::dict d;
  d["successes"] = e.successes;
  d["trials"] = e.trials;
  d["point"] = e.point;
  d["ci_low"] = e.ci_low;
  d["ci_high"] = e.ci_high;
  return d;
}

} // namespace

PYBIND11_MODULE(_randsat, m) {
  m.doc() = "Randomized 3-SAT algorithms PPZ, DEL and DEL-PPZ with exact "
            "oracles and bound calculators.";

  py::register_exception<DimacsError>(m, "DimacsError", PyExc_ValueError);

  py::class_<CnfFormula>(m, "CnfFormula")
      .def(py::init([](std::uint32_t num_vars,
                       const std::vector<std::vector<int>> &clauses) {
             CnfFormula f(num_vars);
             for (const auto &c : clauses) {
               std::vector<Literal> lits;
               for (const int l : c)
                 lits.push_back(Literal::from_dimacs(l));
               f.add_clause(lits);
             }
             return f;
           }),
           py::arg("num_vars"), py::arg("clauses") = std::vector<std::vector<int>>{})
      .def_property_readonly("num_vars", &CnfFormula::num_vars)
      .def_property_readonly("num_clauses", &CnfFormula::num_clauses)
      .def_property_readonly("clauses", &CnfFormula::to_dimacs_clauses,
                             "Clauses as lists of signed DIMACS literals.")
      .def("is_3cnf", &CnfFormula::is_3cnf)
      .def("is_2cnf", &CnfFormula::is_2cnf)
      .def("__len__", &CnfFormula::num_clauses)
      .def("__eq__", [](const CnfFormula &a, const CnfFormula &b) { return a == b; })
      .def("__repr__", [](const CnfFormula &f) {
        return "<CnfFormula n=" + std::to_string(f.num_vars()) +
               " m=" + std::to_string(f.num_clauses()) + ">";
      });

  m.def("parse_dimacs",
        [](const std::string &text) { return parse_dimacs(std::string_view(text)); },
        py::arg("text"));
  m.def("emit_dimacs", py::overload_cast<const CnfFormula &>(&emit_dimacs),
        py::arg("formula"));
  m.def("evaluate",
        [](const CnfFormula &f, const std::vector<bool> &alpha) {
          return evaluate(f, from_py(alpha));
        },
        py::arg("formula"), py::arg("assignment"));
  m.def("substitute",
        [](const CnfFormula &f, Var var, bool value) {
          auto r = substitute(f, var, value);
          return py::make_tuple(std::move(r.formula), r.conflict);
        },
        py::arg("formula"), py::arg("var"), py::arg("value"),
        "Fix x_var and simplify. Returns (formula, conflict).");

  m.def("solve_2sat", [](const CnfFormula &f) { return to_py(solve_2sat(f)); },
        py::arg("formula"));

  m.def("ppz_iteration",
        [](const CnfFormula &f, std::uint64_t seed) {
          RandomSource rng(seed);
          const PpzResult r = ppz_iteration(f, rng);
          return py::make_tuple(to_py(r.assignment), steps_list(r.trace.steps));
        },
        py::arg("formula"), py::arg("seed"),
        "One PPZ iteration. Returns (assignment or None, [(var, forced, value)]).");
  m.def("del_iteration",
        [](const CnfFormula &f, std::uint64_t seed) {
          RandomSource rng(seed);
          return to_py(del_iteration(f, rng));
        },
        py::arg("formula"), py::arg("seed"));
  m.def("delppz_iteration",
        [](const CnfFormula &f, std::uint64_t seed,
           const std::optional<std::vector<bool>> &track) {
          RandomSource rng(seed);
          std::optional<Assignment> tracked;
          if (track)
            tracked = from_py(*track);
          const DelPpzResult r =
              delppz_iteration(f, rng, tracked ? &*tracked : nullptr);
          py::dict d = outcome_dict(r.outcome);
          d["steps"] = steps_list(r.trace.steps);
          d["critical_counts"] = r.trace.critical_counts;
          d["diverged_at"] = r.trace.diverged_at
                                 ? py::object(py::int_(*r.trace.diverged_at))
                                 : py::none();
          return d;
        },
        py::arg("formula"), py::arg("seed"), py::arg("track") = py::none());

  m.def("default_omega", &default_omega, py::arg("num_vars"),
        py::arg("cap") = kDefaultBudgetCap);
  m.def("solve",
        [](const CnfFormula &f, const std::string &algorithm, std::uint64_t seed,
           std::optional<std::uint64_t> omega, std::uint64_t budget_cap,
           unsigned threads) {
          RunOptions options;
          options.omega = omega;
          options.budget_cap = budget_cap;
          options.threads = threads;
          SolverOutcome r;
          {
            py::gil_scoped_release release;
            r = solve(f, algorithm_from(algorithm), seed, options);
          }
          return outcome_dict(r);
        },
        py::arg("formula"), py::arg("algorithm") = "delppz", py::arg("seed") = 0,
        py::arg("omega") = py::none(), py::arg("budget_cap") = kDefaultBudgetCap,
        py::arg("threads") = 1,
        "Repeated independent iterations; returns the lowest-indexed success.");

  m.def("xor_chain", &xor_chain, py::arg("m"));
  m.def("random_3cnf", &random_3cnf, py::arg("n"), py::arg("m"), py::arg("seed"));

  m.def("enumerate_solutions",
        [](const CnfFormula &f, std::uint32_t max_vars) {
          py::list out;
          for (const Assignment &alpha : enumerate_solutions(f, max_vars))
            out.append(to_py(alpha));
          return out;
        },
        py::arg("formula"), py::arg("max_vars") = kEnumerationGuard);
  m.def("critical_profile",
        [](const CnfFormula &f, const std::vector<bool> &alpha) {
          const CriticalProfile p =
              critical_profile(f, from_py(alpha), enumerate_solutions(f));
          py::dict d;
          d["c"] = p.c;
          d["t_per_var"] = p.t_per_var;
          d["l"] = p.l;
          d["isolation"] = p.isolation;
          d["t_min"] = p.t_min;
          d["t_av"] = p.t_av;
          return d;
        },
        py::arg("formula"), py::arg("alpha"));

  m.def("ppz_bound", &ppz_bound, py::arg("n"));
  m.def("del_bound", &del_bound, py::arg("c"));
  m.def("delppz_bound", &delppz_bound, py::arg("n"), py::arg("s"), py::arg("t_av"));
  m.def("crossover_t_av", &crossover_t_av);
  m.def("wilson_interval",
        [](std::uint64_t successes, std::uint64_t trials) {
          return estimate_dict(wilson_interval(successes, trials));
        },
        py::arg("successes"), py::arg("trials"));
  m.def("estimate_tau",
        [](const CnfFormula &f, const std::string &algorithm, std::uint64_t trials,
           std::uint64_t seed, unsigned threads) {
          TauEstimate e;
          {
            py::gil_scoped_release release;
            e = estimate_tau(f, algorithm_from(algorithm), trials, seed, threads);
          }
          return estimate_dict(e);
        },
        py::arg("formula"), py::arg("algorithm"), py::arg("trials"),
        py::arg("seed") = 0, py::arg("threads") = 1);
  m.def("exact_del_success", &exact_del_success, py::arg("formula"),
        py::arg("max_width3_clauses") = kDelPatternGuard);
  m.def("exact_ppz_success", &exact_ppz_success, py::arg("formula"),
        py::arg("max_vars") = kPpzOracleGuard);
}
