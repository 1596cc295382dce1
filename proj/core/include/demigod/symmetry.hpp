#pragma once

// The 48 symmetries of the cube as cubie states. Corner orientations 3..5
// mark mirrored corners. Symmetry s = 16*a + 8*b + 2*c + d is
// URF3^a F2^b U4^c LR2^d; s < 16 are the symmetries that keep the U-D axis.

#include <array>
#include <cstdint>

#include "demigod/cube.hpp"

namespace demigod::sym {

inline constexpr int kCount = 48;
inline constexpr int kUdCount = 16;

// compose() extended to mirrored states.
CubieState multiply(const CubieState& a, const CubieState& b);

const std::array<CubieState, kCount>& cubes();
// inverse()[s] is the symmetry t with cubes()[s] * cubes()[t] = identity.
const std::array<std::uint8_t, kCount>& inverse();

// S_s^-1 * c * S_s.
CubieState conjugate(const CubieState& c, int s);

// move_conj()[s][m] is the move equal to S_s * m * S_s^-1.
const std::array<std::array<std::uint8_t, kMoveCount>, kCount>& move_conj();

}  // namespace demigod::sym
