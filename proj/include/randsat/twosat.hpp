#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "randsat/cnf.hpp"

namespace randsat {

/// Linear-time 2-SAT via the implication graph and its strongly connected
/// components.
///
/// Clause (a | b) contributes ~a -> b and ~b -> a; a unit clause (a)
/// contributes ~a -> a. The formula is unsatisfiable iff some x_v shares a
/// component with ~x_v. Otherwise x_v is set true iff its component comes
/// later in topological order than the component of ~x_v. Variables that
/// occur in no clause are set false.
///
/// SCCs are found with an iterative Tarjan traversal, so graph depth is not
/// limited by the call stack. The solver keeps its buffers between calls;
/// one instance per thread.
class TwoSatSolver {
public:
  /// Throws std::invalid_argument if a clause is wider than 2.
  std::optional<Assignment> solve(const CnfFormula &formula);

  /// Writes the assignment into `out` (resized to num_vars) on success.
  bool solve(const CnfFormula &formula, Assignment &out);

private:
  void build_graph(const CnfFormula &formula);
  void tarjan();

  std::uint32_t nodes_ = 0;
  std::vector<std::uint32_t> edge_begin_;
  std::vector<std::uint32_t> edges_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> lowlink_;
  std::vector<std::uint32_t> component_;
  std::vector<std::uint32_t> stack_;
  std::vector<std::uint8_t> on_stack_;
  std::vector<std::uint8_t> occurs_;
  struct Frame {
    std::uint32_t node;
    std::uint32_t next_edge;
  };
  std::vector<Frame> calls_;
};

std::optional<Assignment> solve_2sat(const CnfFormula &formula);

} // namespace randsat
