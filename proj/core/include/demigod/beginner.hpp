#pragma once

// Layer-by-layer solver with a fixed move budget per step. White is the D
// face, so the last layer is U and the last-layer algorithms read as usual.

#include <array>
#include <string_view>
#include <vector>

#include "demigod/cube.hpp"

namespace demigod {

enum class BeginnerStep : std::uint8_t {
  white_cross,
  white_corners,
  second_layer,
  yellow_cross,
  yellow_edges,
  yellow_corner_perm,
  yellow_corner_ori,
};

inline constexpr int kBeginnerStepCount = 7;

struct StepBudget {
  BeginnerStep step;
  int cap;
};

inline constexpr std::array<StepBudget, kBeginnerStepCount> kStepBudgets{{
    {BeginnerStep::white_cross, 20},
    {BeginnerStep::white_corners, 60},
    {BeginnerStep::second_layer, 80},
    {BeginnerStep::yellow_cross, 18},
    {BeginnerStep::yellow_edges, 21},
    {BeginnerStep::yellow_corner_perm, 24},
    {BeginnerStep::yellow_corner_ori, 42},
}};

// The step caps add up to 265, so the total is enforced on its own.
inline constexpr int kBeginnerTotalCap = 205;

std::string_view to_string(BeginnerStep step);

// Holds once `step` and every earlier step are complete.
bool step_satisfied(BeginnerStep step, const CubieState& s);

struct StepMoves {
  BeginnerStep step;
  MoveSequence moves;
};

// Throws InvalidState for states outside the cube group.
std::vector<StepMoves> step_trace(const CubieState& s);
MoveSequence solve_beginner(const CubieState& s);

// Case-table summary per step. Steps 1-3 run one stage per piece, capped at
// piece_cap each; later steps are a single stage (piece_cap 0). worst_case
// sums the stage maxima, so it bounds the step's length for every state.
struct CaseTableInfo {
  BeginnerStep step;
  int cases = 0;
  int max_stage_cost = 0;
  int worst_case = 0;
  int piece_cap = 0;
};
std::vector<CaseTableInfo> case_table_info();

}  // namespace demigod
