#include "demigod/twophase.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <vector>

#include "demigod/coords.hpp"
#include "demigod/errors.hpp"
#include "demigod/symmetry.hpp"

namespace demigod {
namespace {

constexpr std::uint32_t kAllMoves = (1u << kMoveCount) - 1;
constexpr std::uint32_t kG1Moves = 0b010010'010010'111111;  // U, D, L2, R2, F2, B2
constexpr std::array<int, 10> kPhase2Moves{0, 1, 2, 3, 4, 5, 7, 10, 13, 16};
constexpr int kMaxPhase2 = 10;
constexpr int kMaxDepth = 32;

// Same face twice, or opposite faces in descending order.
constexpr bool redundant(int prev, int m) {
  if (prev < 0) return false;
  const int pf = prev / 3, mf = m / 3;
  return pf == mf || (pf / 2 == mf / 2 && mf < pf);
}

// Moves allowed after `prev`, indexed by prev + 1.
constexpr std::array<std::uint32_t, kMoveCount + 1> kFollowers = [] {
  std::array<std::uint32_t, kMoveCount + 1> out{};
  for (int prev = -1; prev < kMoveCount; ++prev)
    for (int m = 0; m < kMoveCount; ++m)
      if (!redundant(prev, m)) out[prev + 1] |= 1u << m;
  return out;
}();

class Search {
 public:
  Search(const PhaseTables& t, const SolveBudget& b) : t_(t), budget_(b), node_budget_(b.node_budget()) {}

  MoveSequence run(const CubieState& s, SolveStats* stats) {
    if (!is_valid(s)) throw InvalidState("cannot solve an invalid state");
    best_length_ = budget_.max_length + 1;
    if (!s.is_solved()) search(s);
    if (stats) {
      stats->nodes = nodes_;
      stats->solutions_found = solutions_;
    }
    if (s.is_solved()) return {};
    if (best_moves_.empty()) throw BudgetExceeded("no solution of length <= " + std::to_string(budget_.max_length));

    const Direction& d = dirs_[best_dir_];
    std::vector<int> moves = best_moves_;
    if (d.inverse) {
      std::reverse(moves.begin(), moves.end());
      for (int& m : moves) m = Move::from_index(m).inverse().index();
    }
    MoveSequence out;
    for (int m : moves) out.push_back(Move::from_index(sym::move_conj()[d.symmetry][m]));
    if (!apply_sequence(s, out).is_solved()) throw std::logic_error("two-phase produced a non-solution");
    return out;
  }

 private:
  struct Direction {
    CubieState cube;
    int symmetry = 0;
    bool inverse = false;
    int flip = 0, twist = 0, slice_sorted = 0, corners = 0, dist = 0;
  };

  void search(const CubieState& s) {
    for (int rot = 0; rot < 3; ++rot) {
      for (int inv = 0; inv < 2; ++inv) {
        Direction d;
        d.symmetry = 16 * rot;
        d.inverse = inv;
        d.cube = rot ? sym::conjugate(s, d.symmetry) : s;
        if (inv) d.cube = inverse(d.cube);
        d.flip = coord::flip(d.cube);
        d.twist = coord::twist(d.cube);
        d.slice_sorted = coord::slice_sorted(d.cube);
        d.corners = coord::corners(d.cube);
        d.dist = t_.phase1_depth(d.flip, d.twist, d.slice_sorted);
        dirs_.push_back(d);
      }
    }
    int start = kMaxDepth;
    for (const auto& d : dirs_) start = std::min(start, d.dist);
    for (int togo = start; togo < best_length_ && togo < kMaxDepth && !stop_; ++togo) {
      for (dir_ = 0; dir_ < static_cast<int>(dirs_.size()) && !stop_; ++dir_) {
        const Direction& d = dirs_[dir_];
        if (d.dist > togo) continue;
        len1_ = 0;
        phase1(d.flip, d.twist, d.slice_sorted, d.corners, d.dist, togo);
      }
    }
  }

  bool out_of_nodes() {
    if (++nodes_ > node_budget_) stop_ = true;
    return stop_;
  }

  void phase1(int flip, int twist, int slice_sorted, int corners, int dist, int togo) {
    if (out_of_nodes()) return;
    if (togo == 0) {
      phase1_leaf(corners, slice_sorted);
      return;
    }
    std::uint32_t moves = kFollowers[len1_ > 0 ? path1_[len1_ - 1] + 1 : 0];
    // Phase-1 tails of G1 moves are generated by phase 2 instead, except
    // where that would need more than kMaxPhase2 phase-2 moves.
    if (dist == 0 && togo < 5) moves &= ~kG1Moves;
    if (togo == 1) {
      // The child must be in G1, which the coordinates show directly.
      for (; moves && !stop_; moves &= moves - 1) {
        const int m = std::countr_zero(moves);
        if (t_.flip_move[flip * kMoveCount + m] != 0 || t_.twist_move[twist * kMoveCount + m] != 0) continue;
        const int ss = t_.slice_sorted_move[slice_sorted * kMoveCount + m];
        if (ss >= coord::kSlicePerm || out_of_nodes()) continue;
        path1_[len1_++] = m;
        phase1_leaf(t_.corners_move[corners * kMoveCount + m], ss);
        --len1_;
      }
      return;
    }
    struct Child {
      int m, flip, twist, slice_sorted;
      std::size_t idx;
    };
    std::array<Child, kMoveCount> kids;
    int n = 0;
    // Gather first so the pruning-table misses overlap.
    for (; moves; moves &= moves - 1) {
      Child& k = kids[n++];
      k.m = std::countr_zero(moves);
      k.flip = t_.flip_move[flip * kMoveCount + k.m];
      k.twist = t_.twist_move[twist * kMoveCount + k.m];
      k.slice_sorted = t_.slice_sorted_move[slice_sorted * kMoveCount + k.m];
      k.idx = t_.phase1_index(k.flip, k.twist, k.slice_sorted);
      t_.phase1_prune.prefetch(k.idx);
    }
    for (int i = 0; i < n && !stop_; ++i) {
      const Child& k = kids[i];
      const int d = t_.phase1_prune.get(k.idx);
      if (d >= togo) continue;
      path1_[len1_++] = k.m;
      phase1(k.flip, k.twist, k.slice_sorted, t_.corners_move[corners * kMoveCount + k.m], d, togo - 1);
      --len1_;
    }
  }

  void phase1_leaf(int corners, int slice_sorted) {
    const int limit = std::min(best_length_ - len1_, kMaxPhase2 + 1);
    if (t_.cornslice(corners, slice_sorted) >= limit) return;
    CubieState c = dirs_[dir_].cube;
    for (int i = 0; i < len1_; ++i) c = compose(c, move_cube(Move::from_index(path1_[i])));
    const int ud = coord::ud_edges(c);
    const int d2 = std::max(t_.phase2_depth(corners, ud), t_.cornslice(corners, slice_sorted));
    found_ = false;
    for (int togo2 = d2; togo2 < limit && !found_ && !stop_; ++togo2) {
      len2_ = 0;
      phase2(corners, ud, slice_sorted, togo2);
    }
  }

  void phase2(int corners, int ud, int slice_sorted, int togo) {
    if (out_of_nodes()) return;
    if (togo == 0) {
      if (corners == 0 && ud == 0 && slice_sorted == 0) record();
      return;
    }
    const int prev = len2_ > 0 ? path2_[len2_ - 1] : (len1_ > 0 ? path1_[len1_ - 1] : -1);
    struct Child {
      int m, corners, ud, slice_sorted;
      std::size_t idx;
    };
    std::array<Child, kPhase2Moves.size()> kids;
    int n = 0;
    for (int m : kPhase2Moves) {
      if (!(kFollowers[prev + 1] >> m & 1)) continue;
      Child& k = kids[n++];
      k.m = m;
      k.corners = t_.corners_move[corners * kMoveCount + m];
      k.ud = t_.ud_edges_move[ud * kMoveCount + m];
      k.slice_sorted = t_.slice_sorted_move[slice_sorted * kMoveCount + m];
      k.idx = t_.phase2_index(k.corners, k.ud);
      t_.phase2_prune.prefetch(k.idx);
    }
    for (int i = 0; i < n; ++i) {
      const Child& k = kids[i];
      if (std::max(t_.phase2_prune.get(k.idx), t_.cornslice(k.corners, k.slice_sorted)) >= togo) continue;
      path2_[len2_++] = k.m;
      phase2(k.corners, k.ud, k.slice_sorted, togo - 1);
      --len2_;
      if (found_ || stop_) return;
    }
  }

  void record() {
    found_ = true;
    ++solutions_;
    const int total = len1_ + len2_;
    if (total >= best_length_) return;
    best_length_ = total;
    best_dir_ = dir_;
    best_moves_.assign(path1_.begin(), path1_.begin() + len1_);
    best_moves_.insert(best_moves_.end(), path2_.begin(), path2_.begin() + len2_);
    if (!budget_.improve) stop_ = true;
  }

  const PhaseTables& t_;
  const SolveBudget& budget_;
  const std::uint64_t node_budget_;
  std::vector<Direction> dirs_;
  int dir_ = 0;
  std::array<int, kMaxDepth> path1_{}, path2_{};
  int len1_ = 0, len2_ = 0;
  int best_length_ = 0, best_dir_ = 0;
  std::vector<int> best_moves_;
  std::uint64_t nodes_ = 0;
  int solutions_ = 0;
  bool stop_ = false, found_ = false;
};

}  // namespace

MoveSequence solve_twophase(const CubieState& s, const SolveBudget& budget, const PhaseTables& tables,
                            SolveStats* stats) {
  if (budget.max_length < 1 || budget.time_cap_ms < 1) throw DomainError("max_length and time_cap must be >= 1");
  return Search(tables, budget).run(s, stats);
}

}  // namespace demigod
