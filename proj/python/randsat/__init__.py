"""Randomized 3-SAT algorithms PPZ, DEL and DEL-PPZ.

Assignments are lists of bools where index 0 holds x1.
"""

from ._randsat import (
    CnfFormula,
    DimacsError,
    critical_profile,
    crossover_t_av,
    default_omega,
    del_bound,
    del_iteration,
    delppz_bound,
    delppz_iteration,
    emit_dimacs,
    enumerate_solutions,
    estimate_tau,
    evaluate,
    exact_del_success,
    exact_ppz_success,
    parse_dimacs,
    ppz_bound,
    ppz_iteration,
    random_3cnf,
    solve,
    solve_2sat,
    substitute,
    wilson_interval,
    xor_chain,
)

__all__ = [
    "CnfFormula",
    "DimacsError",
    "critical_profile",
    "crossover_t_av",
    "default_omega",
    "del_bound",
    "del_iteration",
    "delppz_bound",
    "delppz_iteration",
    "emit_dimacs",
    "enumerate_solutions",
    "estimate_tau",
    "evaluate",
    "exact_del_success",
    "exact_ppz_success",
    "parse_dimacs",
    "ppz_bound",
    "ppz_iteration",
    "random_3cnf",
    "solve",
    "solve_2sat",
    "substitute",
    "wilson_interval",
    "xor_chain",
]
