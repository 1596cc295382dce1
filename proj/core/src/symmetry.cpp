#include "demigod/symmetry.hpp"

#include <stdexcept>

namespace demigod::sym {
namespace {

CubieState make(std::array<std::uint8_t, 8> cp, std::array<std::uint8_t, 8> co, std::array<std::uint8_t, 12> ep,
                std::array<std::uint8_t, 12> eo) {
  CubieState c;
  c.corner_perm = cp;
  c.corner_ori = co;
  c.edge_perm = ep;
  c.edge_ori = eo;
  return c;
}

// 120 degree turn about the URF-DBL diagonal.
const CubieState kUrf3 = make({URF, DFR, DLF, UFL, UBR, DRB, DBL, ULB}, {1, 2, 1, 2, 2, 1, 2, 1},
                              {UF, FR, DF, FL, UB, BR, DB, BL, UR, DR, DL, UL}, {1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 1});
// 180 degrees about the F-B axis.
const CubieState kF2 = make({DLF, DFR, DRB, DBL, UFL, URF, UBR, ULB}, {}, {DL, DF, DR, DB, UL, UF, UR, UB, FL, FR, BR, BL},
                            {});
// 90 degrees about the U-D axis.
const CubieState kU4 = make({UBR, URF, UFL, ULB, DRB, DFR, DLF, DBL}, {}, {UB, UR, UF, UL, DB, DR, DF, DL, BR, FR, FL, BL},
                            {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1});
// Reflection in the L-R plane.
const CubieState kLr2 = make({UFL, URF, UBR, ULB, DLF, DFR, DRB, DBL}, {3, 3, 3, 3, 3, 3, 3, 3},
                             {UL, UF, UR, UB, DL, DF, DR, DB, FL, FR, BR, BL}, {});

}  // namespace

CubieState multiply(const CubieState& a, const CubieState& b) {
  CubieState r;
  for (int i = 0; i < kCornerCount; ++i) {
    r.corner_perm[i] = a.corner_perm[b.corner_perm[i]];
    const int oa = a.corner_ori[b.corner_perm[i]], ob = b.corner_ori[i];
    int o;
    if (oa < 3 && ob < 3) {
      o = (oa + ob) % 3;
    } else if (oa < 3) {
      o = oa + ob;
      if (o >= 6) o -= 3;
    } else if (ob < 3) {
      o = oa - ob;
      if (o < 3) o += 3;
    } else {
      o = oa - ob;
      if (o < 0) o += 3;
    }
    r.corner_ori[i] = static_cast<std::uint8_t>(o);
  }
  for (int i = 0; i < kEdgeCount; ++i) {
    r.edge_perm[i] = a.edge_perm[b.edge_perm[i]];
    r.edge_ori[i] = static_cast<std::uint8_t>((a.edge_ori[b.edge_perm[i]] + b.edge_ori[i]) % 2);
  }
  return r;
}

const std::array<CubieState, kCount>& cubes() {
  static const auto table = [] {
    std::array<CubieState, kCount> t;
    CubieState c;
    int idx = 0;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 2; ++b) {
        for (int u = 0; u < 4; ++u) {
          for (int d = 0; d < 2; ++d) {
            t[idx++] = c;
            c = multiply(c, kLr2);
          }
          c = multiply(c, kU4);
        }
        c = multiply(c, kF2);
      }
      c = multiply(c, kUrf3);
    }
    return t;
  }();
  return table;
}

const std::array<std::uint8_t, kCount>& inverse() {
  static const auto table = [] {
    std::array<std::uint8_t, kCount> t{};
    for (int s = 0; s < kCount; ++s)
      for (int u = 0; u < kCount; ++u)
        if (multiply(cubes()[s], cubes()[u]).is_solved()) t[s] = static_cast<std::uint8_t>(u);
    return t;
  }();
  return table;
}

CubieState conjugate(const CubieState& c, int s) {
  return multiply(multiply(cubes()[inverse()[s]], c), cubes()[s]);
}

const std::array<std::array<std::uint8_t, kMoveCount>, kCount>& move_conj() {
  static const auto table = [] {
    std::array<std::array<std::uint8_t, kMoveCount>, kCount> t{};
    for (int s = 0; s < kCount; ++s) {
      for (int m = 0; m < kMoveCount; ++m) {
        const CubieState x = multiply(multiply(cubes()[s], move_cube(Move::from_index(m))), cubes()[inverse()[s]]);
        int found = -1;
        for (int k = 0; k < kMoveCount; ++k)
          if (move_cube(Move::from_index(k)) == x) found = k;
        if (found < 0) throw std::logic_error("symmetry does not map moves to moves");
        t[s][m] = static_cast<std::uint8_t>(found);
      }
    }
    return t;
  }();
  return table;
}

}  // namespace demigod::sym
