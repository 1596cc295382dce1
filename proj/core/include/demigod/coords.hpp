#pragma once

// Integer coordinates of cube states used by the two-phase solver. Each
// getter depends only on the part of the state it names. Setters overwrite
// that part; the edge-permutation setters rebuild all of edge_perm.

#include <cstdint>

#include "demigod/cube.hpp"

namespace demigod::coord {

inline constexpr int kTwist = 2187;         // 3^7 corner twists
inline constexpr int kFlip = 2048;          // 2^11 edge flips
inline constexpr int kSlice = 495;          // C(12,4) placements of FR, FL, BL, BR
inline constexpr int kSliceSorted = 11880;  // placement x order of those four edges
inline constexpr int kCorners = 40320;      // 8! corner permutations
inline constexpr int kUdEdges = 40320;      // 8! orders of the U/D-layer edges (G1 only)
inline constexpr int kSlicePerm = 24;       // 4! orders of the slice edges (G1 only)
inline constexpr int kFlipSlice = kSlice * kFlip;

int twist(const CubieState& c);
void set_twist(CubieState& c, int twist);

int flip(const CubieState& c);
void set_flip(CubieState& c, int flip);

// 24 * placement + order. Zero iff the slice edges sit in the slice in home
// order; below 24 iff they are in the slice at all.
int slice_sorted(const CubieState& c);
void set_slice_sorted(CubieState& c, int idx);
inline int slice(const CubieState& c) { return slice_sorted(c) / 24; }

int corners(const CubieState& c);
void set_corners(CubieState& c, int idx);

// Order of the edges in slots UR..DB; meaningful only when those slots hold
// U/D-layer edges. The setter puts the slice edges home.
int ud_edges(const CubieState& c);
void set_ud_edges(CubieState& c, int idx);

// Lehmer rank of a permutation of 0..n-1 (n <= 12) and its inverse.
int perm_rank(const std::uint8_t* p, int n);
void perm_unrank(int rank, std::uint8_t* p, int n);

}  // namespace demigod::coord
