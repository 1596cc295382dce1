#pragma once

#include <cstdint>

#include "demigod/cube.hpp"
#include "demigod/tables.hpp"

namespace demigod {

// Search nodes per millisecond of time cap. The cap is turned into a node
// budget so results never depend on machine speed or load; the constant was
// measured on a single core of the development machine.
inline constexpr std::uint64_t kNodesPerMs = 4000;

struct SolveBudget {
  int max_length = 24;
  int time_cap_ms = 200;
  bool improve = true;  // keep looking for shorter solutions until the budget runs out

  std::uint64_t node_budget() const { return static_cast<std::uint64_t>(time_cap_ms) * kNodesPerMs; }
};

struct SolveStats {
  std::uint64_t nodes = 0;
  int solutions_found = 0;
};

// Kociemba-style two-phase search, run on the state, its inverse and both
// diagonal rotations of each, interleaved by phase-1 depth. Throws
// InvalidState for invalid input and BudgetExceeded when nothing of length
// <= max_length is found within the node budget.
MoveSequence solve_twophase(const CubieState& s, const SolveBudget& budget, const PhaseTables& tables,
                            SolveStats* stats = nullptr);

}  // namespace demigod
