#include "randsat/dimacs.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

namespace randsat {

DimacsError::DimacsError(std::size_t line, const std::string &what)
    : std::runtime_error(fmt::format("line {}: {}", line, what)), line_(line) {}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
         c == '\f';
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i]))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i]))
      ++i;
    if (i > start)
      tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<long long> to_int(std::string_view token) {
  long long value = 0;
  const char *first = token.data();
  const char *last = token.data() + token.size();
  if (first != last && *first == '+')
    ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    return std::nullopt;
  return value;
}

class Parser {
public:
  explicit Parser(std::vector<std::string> *warnings) : warnings_(warnings) {}

  void line(std::string_view text) {
    ++line_no_;
    const auto tokens = split(text);
    if (tokens.empty())
      return;
    if (tokens[0][0] == 'c')
      return;
    if (tokens[0] == "p") {
      header(tokens);
      return;
    }
    if (tokens[0] == "%") {
      done_ = true;
      return;
    }
    if (!formula_)
      throw DimacsError(line_no_, "clause data before 'p cnf' header");
    for (const auto token : tokens) {
      const auto value = to_int(token);
      if (!value)
        throw DimacsError(line_no_,
                          fmt::format("invalid literal '{}'", token));
      literal(*value);
    }
  }

  bool done() const { return done_; }

  CnfFormula finish() {
    if (!formula_)
      throw DimacsError(line_no_, "missing 'p cnf' header");
    if (!pending_.empty())
      throw DimacsError(line_no_, "last clause is not terminated by 0");
    if (formula_->num_clauses() != declared_clauses_ && warnings_)
      warnings_->push_back(fmt::format(
          "header declares {} clauses, found {}", declared_clauses_,
          formula_->num_clauses()));
    return std::move(*formula_);
  }

private:
  void header(const std::vector<std::string_view> &tokens) {
    if (formula_)
      throw DimacsError(line_no_, "duplicate 'p' header");
    if (tokens.size() != 4 || tokens[1] != "cnf")
      throw DimacsError(line_no_, "malformed header, expected 'p cnf <n> <m>'");
    const auto n = to_int(tokens[2]);
    const auto m = to_int(tokens[3]);
    if (!n || !m || *n < 0 || *m < 0 ||
        *n > std::numeric_limits<std::int32_t>::max())
      throw DimacsError(line_no_, "malformed header, expected 'p cnf <n> <m>'");
    formula_.emplace(static_cast<std::uint32_t>(*n));
    declared_clauses_ = static_cast<std::size_t>(*m);
  }

  void literal(long long value) {
    if (value == 0) {
      end_clause();
      return;
    }
    const long long var = value < 0 ? -value : value;
    if (var > formula_->num_vars())
      throw DimacsError(line_no_,
                        fmt::format("literal {} out of range for {} variables",
                                    value, formula_->num_vars()));
    const Literal lit = Literal::from_dimacs(static_cast<int>(value));
    if (std::find(pending_.begin(), pending_.end(), ~lit) != pending_.end())
      throw DimacsError(line_no_,
                        fmt::format("tautological clause (contains {} and {})",
                                    var, -var));
    if (std::find(pending_.begin(), pending_.end(), lit) == pending_.end())
      pending_.push_back(lit);
  }

  void end_clause() {
    if (pending_.empty())
      throw DimacsError(line_no_, "empty clause");
    formula_->add_clause_unchecked(pending_);
    pending_.clear();
  }

  std::vector<std::string> *warnings_;
  std::optional<CnfFormula> formula_;
  std::size_t declared_clauses_ = 0;
  std::vector<Literal> pending_;
  std::size_t line_no_ = 0;
  bool done_ = false;
};

} // namespace

CnfFormula parse_dimacs(std::istream &in, std::vector<std::string> *warnings) {
  Parser parser(warnings);
  std::string line;
  while (!parser.done() && std::getline(in, line))
    parser.line(line);
  return parser.finish();
}

CnfFormula parse_dimacs(std::string_view text,
                        std::vector<std::string> *warnings) {
  Parser parser(warnings);
  while (!text.empty() && !parser.done()) {
    const std::size_t nl = text.find('\n');
    parser.line(text.substr(0, nl));
    if (nl == std::string_view::npos)
      break;
    text.remove_prefix(nl + 1);
  }
  return parser.finish();
}

CnfFormula read_dimacs_file(const std::string &path,
                            std::vector<std::string> *warnings) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error(fmt::format("cannot open '{}'", path));
  return parse_dimacs(in, warnings);
}

void emit_dimacs(const CnfFormula &formula, std::ostream &out) {
  out << emit_dimacs(formula);
}

std::string emit_dimacs(const CnfFormula &formula) {
  fmt::memory_buffer buf;
  fmt::format_to(std::back_inserter(buf), "p cnf {} {}\n", formula.num_vars(),
                 formula.num_clauses());
  for (std::size_t i = 0; i < formula.num_clauses(); ++i) {
    for (const Literal l : formula.clause(i))
      fmt::format_to(std::back_inserter(buf), "{} ", l.dimacs());
    buf.push_back('0');
    buf.push_back('\n');
  }
  return fmt::to_string(buf);
}

} // namespace randsat
