#include "randsat/generators.hpp"

#include <stdexcept>

#include "randsat/random.hpp"

namespace randsat {

CnfFormula xor_chain(std::uint32_t m) {
  if (m == 0)
    throw std::invalid_argument("xor_chain needs at least one triple");
  CnfFormula formula(3 * m);
  for (std::uint32_t i = 0; i < m; ++i) {
    const int a = static_cast<int>(3 * i + 1);
    const int b = a + 1;
    const int c = a + 2;
    formula.add_clause({a, b, c});
    formula.add_clause({a, -b, -c});
    formula.add_clause({-a, b, -c});
    formula.add_clause({-a, -b, c});
  }
  return formula;
}

CnfFormula random_3cnf(std::uint32_t n, std::uint32_t m, std::uint64_t seed) {
  if (n < 3)
    throw std::invalid_argument("random_3cnf needs at least 3 variables");
  RandomSource rng(seed);
  CnfFormula formula(n);
  for (std::uint32_t k = 0; k < m; ++k) {
    Literal clause[3];
    for (std::size_t j = 0; j < 3; ++j) {
      Var v;
      bool fresh;
      do {
        v = static_cast<Var>(rng.below(n) + 1);
        fresh = true;
        for (std::size_t i = 0; i < j; ++i)
          fresh = fresh && clause[i].var() != v;
      } while (!fresh);
      clause[j] = Literal(v, rng.coin());
    }
    formula.add_clause_unchecked(clause);
  }
  return formula;
}

} // namespace randsat
