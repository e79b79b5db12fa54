#include "randsat/del.hpp"

#include <stdexcept>

namespace randsat {

void delete_random_literals_into(const CnfFormula &in, RandomSource &rng,
                                 CnfFormula &out) {
  out.reset(in.num_vars());
  for (std::size_t i = 0; i < in.num_clauses(); ++i) {
    const ClauseView c = in.clause(i);
    if (c.size() != 3) {
      out.add_clause_unchecked(c);
      continue;
    }
    const unsigned drop = rng.choose3();
    Literal kept[2];
    std::size_t k = 0;
    for (unsigned j = 0; j < 3; ++j)
      if (j != drop)
        kept[k++] = c[j];
    out.add_clause_unchecked(kept);
  }
}

CnfFormula delete_random_literals(const CnfFormula &formula,
                                  RandomSource &rng) {
  require_3cnf(formula, "literal deletion");
  CnfFormula out;
  delete_random_literals_into(formula, rng, out);
  return out;
}

bool DelSolver::iterate(const CnfFormula &formula, RandomSource &rng,
                        Assignment &out) {
  delete_random_literals_into(formula, rng, reduced_);
  if (!twosat_.solve(reduced_, out))
    return false;
  if (!evaluate(formula, out))
    throw std::logic_error("DEL produced an assignment that falsifies the input");
  return true;
}

std::optional<Assignment> del_iteration(const CnfFormula &formula,
                                        RandomSource &rng) {
  require_3cnf(formula, "DEL");
  DelSolver solver;
  Assignment alpha;
  if (!solver.iterate(formula, rng, alpha))
    return std::nullopt;
  return alpha;
}

} // namespace randsat
