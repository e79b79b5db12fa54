// Exact success probabilities of single DEL and PPZ iterations.

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "randsat/analysis.hpp"
#include "randsat/twosat.hpp"

namespace randsat {

double exact_del_success(const CnfFormula &formula,
                         std::size_t max_width3_clauses) {
  require_3cnf(formula, "exact_del_success");
  std::vector<std::size_t> wide;
  for (std::size_t i = 0; i < formula.num_clauses(); ++i)
    if (formula.clause(i).size() == 3)
      wide.push_back(i);
  if (wide.size() > max_width3_clauses)
    throw std::invalid_argument(fmt::format(
        "refusing to enumerate 3^{} deletion patterns (limit is 3^{})",
        wide.size(), max_width3_clauses));

  // Mixed-radix counter over the dropped position of each width-3 clause.
  std::vector<unsigned> drop(wide.size(), 0);
  std::uint64_t patterns = 0;
  std::uint64_t satisfiable = 0;
  CnfFormula reduced;
  TwoSatSolver twosat;
  Assignment alpha;
  for (;;) {
    reduced.reset(formula.num_vars());
    std::size_t w = 0;
    for (std::size_t i = 0; i < formula.num_clauses(); ++i) {
      const ClauseView c = formula.clause(i);
      if (c.size() != 3) {
        reduced.add_clause_unchecked(c);
        continue;
      }
      Literal kept[2];
      std::size_t k = 0;
      for (unsigned j = 0; j < 3; ++j)
        if (j != drop[w])
          kept[k++] = c[j];
      reduced.add_clause_unchecked(kept);
      ++w;
    }
    ++patterns;
    if (twosat.solve(reduced, alpha))
      ++satisfiable;

    std::size_t digit = 0;
    while (digit < drop.size() && ++drop[digit] == 3)
      drop[digit++] = 0;
    if (digit == drop.size())
      break;
  }
  return static_cast<double>(satisfiable) / static_cast<double>(patterns);
}

namespace {

enum class Value : std::uint8_t { False, True, Unset };

// Replays PPZ on a partial assignment over the original clauses. A clause
// is a unit for v when no literal is true and v is its only unset literal;
// clause order is preserved, so the first such clause matches the reduced
// formula's first unit clause.
class PpzEnumerator {
public:
  explicit PpzEnumerator(const CnfFormula &formula)
      : formula_(formula), values_(formula.num_vars(), Value::Unset) {}

  double success_given(const std::vector<Var> &order) {
    order_ = &order;
    return descend(0);
  }

private:
  bool literal_true(Literal l) const {
    const Value v = values_[l.var() - 1];
    return v != Value::Unset && (v == Value::True) == l.positive();
  }

  std::optional<bool> unit_for(Var var) const {
    for (std::size_t i = 0; i < formula_.num_clauses(); ++i) {
      const ClauseView c = formula_.clause(i);
      std::optional<Literal> open;
      std::size_t unset = 0;
      bool satisfied = false;
      for (const Literal l : c) {
        if (literal_true(l)) {
          satisfied = true;
          break;
        }
        if (values_[l.var() - 1] == Value::Unset) {
          ++unset;
          open = l;
        }
      }
      if (!satisfied && unset == 1 && open->var() == var)
        return open->positive();
    }
    return std::nullopt;
  }

  bool all_satisfied() const {
    for (std::size_t i = 0; i < formula_.num_clauses(); ++i) {
      const ClauseView c = formula_.clause(i);
      if (std::none_of(c.begin(), c.end(),
                       [&](Literal l) { return literal_true(l); }))
        return false;
    }
    return true;
  }

  double descend(std::size_t step) {
    if (step == order_->size())
      return all_satisfied() ? 1.0 : 0.0;
    const Var v = (*order_)[step];
    auto assign = [&](bool value) {
      values_[v - 1] = value ? Value::True : Value::False;
      const double p = descend(step + 1);
      values_[v - 1] = Value::Unset;
      return p;
    };
    if (const auto forced = unit_for(v))
      return assign(*forced);
    return 0.5 * assign(false) + 0.5 * assign(true);
  }

  const CnfFormula &formula_;
  std::vector<Value> values_;
  const std::vector<Var> *order_ = nullptr;
};

} // namespace

double exact_ppz_success(const CnfFormula &formula, std::uint32_t max_vars) {
  require_3cnf(formula, "exact_ppz_success");
  const std::uint32_t n = formula.num_vars();
  if (n > max_vars)
    throw std::invalid_argument(fmt::format(
        "refusing to enumerate {}! permutations (limit is {} variables)", n,
        max_vars));
  std::vector<Var> order(n);
  std::iota(order.begin(), order.end(), Var{1});
  PpzEnumerator enumerator(formula);
  double total = 0.0;
  std::uint64_t permutations = 0;
  do {
    total += enumerator.success_given(order);
    ++permutations;
  } while (std::next_permutation(order.begin(), order.end()));
  return total / static_cast<double>(permutations);
}

} // namespace randsat
