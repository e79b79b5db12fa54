#include "randsat/cnf.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace randsat {

std::string Assignment::to_string() const {
  std::string out(values_.size(), '0');
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i])
      out[i] = '1';
  return out;
}

Assignment Assignment::from_string(const std::string &bits) {
  Assignment alpha(static_cast<std::uint32_t>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      throw std::invalid_argument(
          fmt::format("assignment string must be 0/1 digits, got '{}'", bits));
    alpha.values_[i] = bits[i] == '1';
  }
  return alpha;
}

std::vector<int> Assignment::to_literals() const {
  std::vector<int> lits;
  lits.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const int v = static_cast<int>(i + 1);
    lits.push_back(values_[i] ? v : -v);
  }
  return lits;
}

CnfFormula::CnfFormula(
    std::uint32_t num_vars,
    std::initializer_list<std::initializer_list<int>> clauses)
    : num_vars_(num_vars) {
  for (const auto &c : clauses)
    add_clause(c);
}

std::size_t CnfFormula::max_width() const {
  std::size_t width = 0;
  std::uint32_t begin = 0;
  for (const std::uint32_t end : ends_) {
    width = std::max<std::size_t>(width, end - begin);
    begin = end;
  }
  return width;
}

void CnfFormula::add_clause(ClauseView clause) {
  if (clause.empty())
    throw std::invalid_argument("empty clause");
  for (std::size_t i = 0; i < clause.size(); ++i) {
    const Literal l = clause[i];
    if (l.var() < 1 || l.var() > num_vars_)
      throw std::invalid_argument(fmt::format(
          "literal {} out of range for {} variables", l.dimacs(), num_vars_));
    for (std::size_t j = 0; j < i; ++j)
      if (clause[j].var() == l.var())
        throw std::invalid_argument(fmt::format(
            "variable {} occurs twice in one clause", l.var()));
  }
  add_clause_unchecked(clause);
}

void CnfFormula::add_clause(std::initializer_list<int> dimacs) {
  std::vector<Literal> lits;
  lits.reserve(dimacs.size());
  for (const int v : dimacs)
    lits.push_back(Literal::from_dimacs(v));
  add_clause(lits);
}

std::vector<std::vector<int>> CnfFormula::to_dimacs_clauses() const {
  std::vector<std::vector<int>> out;
  out.reserve(num_clauses());
  for (std::size_t i = 0; i < num_clauses(); ++i) {
    auto &row = out.emplace_back();
    for (const Literal l : clause(i))
      row.push_back(l.dimacs());
  }
  return out;
}

bool evaluate(const CnfFormula &formula, const Assignment &alpha) {
  if (alpha.num_vars() != formula.num_vars())
    throw std::invalid_argument(
        fmt::format("assignment covers {} variables, formula has {}",
                    alpha.num_vars(), formula.num_vars()));
  for (std::size_t i = 0; i < formula.num_clauses(); ++i) {
    const ClauseView c = formula.clause(i);
    if (std::none_of(c.begin(), c.end(),
                     [&](Literal l) { return alpha.satisfies(l); }))
      return false;
  }
  return true;
}

bool substitute_into(const CnfFormula &in, Var var, bool value,
                     CnfFormula &out) {
  const Literal satisfied(var, value);
  const Literal falsified = ~satisfied;
  out.reset(in.num_vars());
  bool conflict = false;
  Literal kept[64];
  std::vector<Literal> wide;
  for (std::size_t i = 0; i < in.num_clauses(); ++i) {
    const ClauseView c = in.clause(i);
    if (std::find(c.begin(), c.end(), satisfied) != c.end())
      continue;
    if (std::find(c.begin(), c.end(), falsified) == c.end()) {
      out.add_clause_unchecked(c);
      continue;
    }
    if (c.size() == 1) {
      conflict = true;
      continue;
    }
    Literal *dst = kept;
    if (c.size() > std::size(kept)) {
      wide.resize(c.size());
      dst = wide.data();
    }
    std::size_t n = 0;
    for (const Literal l : c)
      if (l != falsified)
        dst[n++] = l;
    out.add_clause_unchecked({dst, n});
  }
  return conflict;
}

SubstitutionResult substitute(const CnfFormula &formula, Var var,
                              bool value) {
  if (var < 1 || var > formula.num_vars())
    throw std::invalid_argument(fmt::format(
        "variable {} out of range for {} variables", var, formula.num_vars()));
  SubstitutionResult result;
  result.conflict = substitute_into(formula, var, value, result.formula);
  return result;
}

std::optional<bool> unit_clause_polarity(const CnfFormula &formula, Var var) {
  for (std::size_t i = 0; i < formula.num_clauses(); ++i) {
    const ClauseView c = formula.clause(i);
    if (c.size() == 1 && c[0].var() == var)
      return c[0].positive();
  }
  return std::nullopt;
}

void require_3cnf(const CnfFormula &formula, const char *who) {
  const std::size_t width = formula.max_width();
  if (width > 3)
    throw std::invalid_argument(
        fmt::format("{} requires a 3-CNF formula, got a clause of width {}",
                    who, width));
}

} // namespace randsat
