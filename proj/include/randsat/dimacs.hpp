#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "randsat/cnf.hpp"

namespace randsat {

class DimacsError : public std::runtime_error {
public:
  DimacsError(std::size_t line, const std::string &what);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Reads DIMACS CNF. Duplicate literals inside a clause are merged;
/// tautological clauses, empty clauses and out-of-range literals are
/// rejected with DimacsError. A clause count that disagrees with the header
/// is accepted and reported through `warnings` when given.
CnfFormula parse_dimacs(std::istream &in,
                        std::vector<std::string> *warnings = nullptr);
CnfFormula parse_dimacs(std::string_view text,
                        std::vector<std::string> *warnings = nullptr);
CnfFormula read_dimacs_file(const std::string &path,
                            std::vector<std::string> *warnings = nullptr);

void emit_dimacs(const CnfFormula &formula, std::ostream &out);
std::string emit_dimacs(const CnfFormula &formula);

} // namespace randsat
