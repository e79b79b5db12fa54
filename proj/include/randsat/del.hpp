#pragma once

#include <optional>

#include "randsat/cnf.hpp"
#include "randsat/random.hpp"
#include "randsat/twosat.hpp"

namespace randsat {

/// Removes one uniformly chosen literal from every width-3 clause, in clause
/// order with one draw per such clause. Narrower clauses are copied as is.
CnfFormula delete_random_literals(const CnfFormula &formula, RandomSource &rng);

/// Allocation-free variant. `out` must not alias `in`.
void delete_random_literals_into(const CnfFormula &in, RandomSource &rng,
                                 CnfFormula &out);

/// One DEL iteration: random literal deletion, then exact 2-SAT on the
/// result. Every clause of the reduced formula is a sub-clause of the input,
/// so a returned assignment always satisfies the input.
class DelSolver {
public:
  bool iterate(const CnfFormula &formula, RandomSource &rng, Assignment &out);

private:
  CnfFormula reduced_;
  TwoSatSolver twosat_;
};

std::optional<Assignment> del_iteration(const CnfFormula &formula,
                                        RandomSource &rng);

} // namespace randsat
