#include "randsat/twosat.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace randsat {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

} // namespace

void TwoSatSolver::build_graph(const CnfFormula &formula) {
  nodes_ = 2 * formula.num_vars();
  edge_begin_.assign(nodes_ + 1, 0);
  occurs_.assign(formula.num_vars(), 0);

  auto for_each_edge = [&](auto &&emit) {
    for (std::size_t i = 0; i < formula.num_clauses(); ++i) {
      const ClauseView c = formula.clause(i);
      if (c.size() == 1) {
        emit((~c[0]).index(), c[0].index());
      } else {
        emit((~c[0]).index(), c[1].index());
        emit((~c[1]).index(), c[0].index());
      }
    }
  };

  for (std::size_t i = 0; i < formula.num_clauses(); ++i) {
    const ClauseView c = formula.clause(i);
    if (c.size() > 2)
      throw std::invalid_argument(fmt::format(
          "2-SAT given a clause of width {} (clause {})", c.size(), i));
    for (const Literal l : c)
      occurs_[l.var() - 1] = 1;
  }

  for_each_edge([&](std::uint32_t from, std::uint32_t) { ++edge_begin_[from + 1]; });
  for (std::uint32_t v = 0; v < nodes_; ++v)
    edge_begin_[v + 1] += edge_begin_[v];
  edges_.resize(edge_begin_[nodes_]);
  // Reuse lowlink_ as the fill cursor.
  lowlink_.assign(edge_begin_.begin(), edge_begin_.end() - 1);
  for_each_edge([&](std::uint32_t from, std::uint32_t to) {
    edges_[lowlink_[from]++] = to;
  });
}

void TwoSatSolver::tarjan() {
  order_.assign(nodes_, kUnvisited);
  lowlink_.assign(nodes_, 0);
  component_.assign(nodes_, kUnvisited);
  on_stack_.assign(nodes_, 0);
  stack_.clear();
  calls_.clear();

  std::uint32_t counter = 0;
  std::uint32_t components = 0;

  for (std::uint32_t root = 0; root < nodes_; ++root) {
    if (order_[root] != kUnvisited)
      continue;
    calls_.push_back({root, edge_begin_[root]});
    order_[root] = lowlink_[root] = counter++;
    stack_.push_back(root);
    on_stack_[root] = 1;

    while (!calls_.empty()) {
      Frame &frame = calls_.back();
      const std::uint32_t v = frame.node;
      if (frame.next_edge < edge_begin_[v + 1]) {
        const std::uint32_t w = edges_[frame.next_edge++];
        if (order_[w] == kUnvisited) {
          order_[w] = lowlink_[w] = counter++;
          stack_.push_back(w);
          on_stack_[w] = 1;
          calls_.push_back({w, edge_begin_[w]});
        } else if (on_stack_[w]) {
          lowlink_[v] = std::min(lowlink_[v], order_[w]);
        }
        continue;
      }

      if (lowlink_[v] == order_[v]) {
        std::uint32_t w;
        do {
          w = stack_.back();
          stack_.pop_back();
          on_stack_[w] = 0;
          component_[w] = components;
        } while (w != v);
        ++components;
      }
      calls_.pop_back();
      if (!calls_.empty()) {
        const std::uint32_t parent = calls_.back().node;
        lowlink_[parent] = std::min(lowlink_[parent], lowlink_[v]);
      }
    }
  }
}

bool TwoSatSolver::solve(const CnfFormula &formula, Assignment &out) {
  build_graph(formula);
  tarjan();

  const std::uint32_t n = formula.num_vars();
  for (std::uint32_t i = 0; i < n; ++i)
    if (component_[2 * i] == component_[2 * i + 1])
      return false;

  // Components are numbered in reverse topological order.
  out.resize(n);
  for (std::uint32_t i = 0; i < n; ++i)
    if (occurs_[i] && component_[2 * i] < component_[2 * i + 1])
      out.set(i + 1, true);
  return true;
}

std::optional<Assignment> TwoSatSolver::solve(const CnfFormula &formula) {
  Assignment alpha;
  if (!solve(formula, alpha))
    return std::nullopt;
  return alpha;
}

std::optional<Assignment> solve_2sat(const CnfFormula &formula) {
  TwoSatSolver solver;
  return solver.solve(formula);
}

} // namespace randsat
