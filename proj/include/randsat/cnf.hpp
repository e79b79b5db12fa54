#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace randsat {

/// Variable index, 1-based.
using Var = std::uint32_t;

/// A variable or its negation. Stored as a signed DIMACS integer.
class Literal {
public:
  constexpr Literal() = default;
  constexpr Literal(Var var, bool positive)
      : code_(positive ? static_cast<std::int32_t>(var)
                       : -static_cast<std::int32_t>(var)) {}

  static constexpr Literal from_dimacs(int value) {
    Literal l;
    l.code_ = value;
    return l;
  }

  constexpr Var var() const {
    return static_cast<Var>(code_ < 0 ? -code_ : code_);
  }
  constexpr bool positive() const { return code_ > 0; }
  constexpr int dimacs() const { return code_; }
  constexpr Literal operator~() const { return from_dimacs(-code_); }

  /// Dense node index in [0, 2n): x_v -> 2(v-1), ~x_v -> 2(v-1)+1.
  constexpr std::uint32_t index() const {
    return 2 * (var() - 1) + (positive() ? 0 : 1);
  }

  friend constexpr bool operator==(Literal, Literal) = default;

private:
  std::int32_t code_ = 0;
};

using ClauseView = std::span<const Literal>;

/// Total assignment over x_1..x_n.
class Assignment {
public:
  Assignment() = default;
  explicit Assignment(std::uint32_t num_vars, bool fill = false)
      : values_(num_vars, fill ? 1 : 0) {}

  std::uint32_t num_vars() const {
    return static_cast<std::uint32_t>(values_.size());
  }
  bool operator[](Var v) const { return values_[v - 1] != 0; }
  void set(Var v, bool value) { values_[v - 1] = value ? 1 : 0; }
  void flip(Var v) { values_[v - 1] ^= 1; }
  void fill(bool value) { values_.assign(values_.size(), value ? 1 : 0); }
  void resize(std::uint32_t num_vars) { values_.assign(num_vars, 0); }

  bool satisfies(Literal l) const { return (*this)[l.var()] == l.positive(); }

  /// "100" means x1=1, x2=0, x3=0.
  std::string to_string() const;
  static Assignment from_string(const std::string &bits);

  /// Signed literals, one per variable, in variable order.
  std::vector<int> to_literals() const;

  friend bool operator==(const Assignment &, const Assignment &) = default;

private:
  std::vector<std::uint8_t> values_;
};

/// Conjunction of clauses over a fixed variable range 1..num_vars.
///
/// Clauses are stored contiguously. Every stored clause is non-empty and
/// mentions each variable at most once. Width is not bounded here; use
/// max_width() for the 3-CNF / 2-CNF predicates.
class CnfFormula {
public:
  CnfFormula() = default;
  explicit CnfFormula(std::uint32_t num_vars) : num_vars_(num_vars) {}

  /// Clauses given as DIMACS integers, e.g. {{1, -2}, {3}}.
  CnfFormula(std::uint32_t num_vars,
             std::initializer_list<std::initializer_list<int>> clauses);

  std::uint32_t num_vars() const { return num_vars_; }
  std::size_t num_clauses() const { return ends_.size(); }
  bool empty() const { return ends_.empty(); }

  ClauseView clause(std::size_t i) const {
    const std::uint32_t begin = i == 0 ? 0 : ends_[i - 1];
    return {literals_.data() + begin, ends_[i] - begin};
  }

  std::size_t max_width() const;
  bool is_3cnf() const { return max_width() <= 3; }
  bool is_2cnf() const { return max_width() <= 2; }

  /// Throws std::invalid_argument if the clause is empty, mentions a
  /// variable outside 1..num_vars, or mentions a variable twice.
  void add_clause(ClauseView clause);
  void add_clause(std::initializer_list<int> dimacs);

  /// Caller guarantees the invariants.
  void add_clause_unchecked(ClauseView clause) {
    literals_.insert(literals_.end(), clause.begin(), clause.end());
    ends_.push_back(static_cast<std::uint32_t>(literals_.size()));
  }

  /// Drops all clauses and resets the variable count, keeping capacity.
  void reset(std::uint32_t num_vars) {
    num_vars_ = num_vars;
    literals_.clear();
    ends_.clear();
  }

  /// Clause list as DIMACS integers; handy for tests and bindings.
  std::vector<std::vector<int>> to_dimacs_clauses() const;

  friend bool operator==(const CnfFormula &, const CnfFormula &) = default;

private:
  std::uint32_t num_vars_ = 0;
  std::vector<Literal> literals_;
  std::vector<std::uint32_t> ends_;
};

struct SubstitutionResult {
  CnfFormula formula;
  /// Substitution emptied at least one clause.
  bool conflict = false;
};

/// True iff every clause has a literal satisfied by alpha.
bool evaluate(const CnfFormula &formula, const Assignment &alpha);

/// formula[var <- value]: satisfied clauses are removed, falsified literals
/// are removed, emptied clauses are dropped and reported via `conflict`.
SubstitutionResult substitute(const CnfFormula &formula, Var var, bool value);

/// Allocation-free variant for trial loops. `out` must not alias `in`.
/// Returns the conflict flag.
bool substitute_into(const CnfFormula &in, Var var, bool value,
                     CnfFormula &out);

/// Polarity of the first unit clause over `var`, if any.
std::optional<bool> unit_clause_polarity(const CnfFormula &formula, Var var);

/// Throws std::invalid_argument naming `who` if some clause is wider than 3.
void require_3cnf(const CnfFormula &formula, const char *who);

} // namespace randsat
