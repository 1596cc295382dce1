#include "demigod/beginner.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>

#include "demigod/errors.hpp"
#include "demigod/symmetry.hpp"

namespace demigod {
namespace {

// A move sequence reduced to where it sends each slot.
struct Macro {
  MoveSequence moves;
  std::array<std::uint8_t, kCornerCount> cdest{}, cadd{};
  std::array<std::uint8_t, kEdgeCount> edest{}, eadd{};
};

Macro make_macro(const MoveSequence& moves) {
  Macro m{moves, {}, {}, {}, {}};
  const CubieState c = apply_sequence(CubieState{}, moves);
  for (int i = 0; i < kCornerCount; ++i) {
    m.cdest[c.corner_perm[i]] = static_cast<std::uint8_t>(i);
    m.cadd[c.corner_perm[i]] = c.corner_ori[i];
  }
  for (int i = 0; i < kEdgeCount; ++i) {
    m.edest[c.edge_perm[i]] = static_cast<std::uint8_t>(i);
    m.eadd[c.edge_perm[i]] = c.edge_ori[i];
  }
  return m;
}

// The same algorithm performed after turning the whole cube c quarter turns
// about the U-D axis.
MoveSequence rotated(const MoveSequence& seq, int c) {
  MoveSequence out;
  for (Move m : seq) out.push_back(Move::from_index(sym::move_conj()[2 * c][m.index()]));
  return out;
}

std::vector<MoveSequence> u_turns() { return {MoveSequence::parse("U"), MoveSequence::parse("U2"), MoveSequence::parse("U'")}; }

std::vector<MoveSequence> with_rotations(std::vector<MoveSequence> out, std::initializer_list<const char*> algs) {
  for (const char* alg : algs)
    for (int c = 0; c < 4; ++c) out.push_back(rotated(MoveSequence::parse(alg), c));
  return out;
}

// Pieces whose (slot, orientation) make up a case key, five bits each.
struct Tracked {
  std::vector<std::uint8_t> edges, corners;
  bool corner_ori = true;
};

using Key = std::uint64_t;

Key key_of(const CubieState& s, const Tracked& t) {
  std::array<std::uint8_t, kEdgeCount> eslot{};
  std::array<std::uint8_t, kCornerCount> cslot{};
  for (int i = 0; i < kEdgeCount; ++i) eslot[s.edge_perm[i]] = static_cast<std::uint8_t>(i);
  for (int i = 0; i < kCornerCount; ++i) cslot[s.corner_perm[i]] = static_cast<std::uint8_t>(i);
  Key k = 0;
  for (auto e : t.edges) k = k << 5 | (eslot[e] * 2u + s.edge_ori[eslot[e]]);
  for (auto c : t.corners) k = k << 5 | (cslot[c] * 3u + (t.corner_ori ? s.corner_ori[cslot[c]] : 0u));
  return k;
}

Key apply_macro(Key k, const Macro& m, const Tracked& t) {
  const int n = static_cast<int>(t.edges.size() + t.corners.size());
  Key out = 0;
  for (int i = 0; i < n; ++i) {
    const int shift = 5 * (n - 1 - i);
    const unsigned v = (k >> shift) & 31;
    unsigned w;
    if (i < static_cast<int>(t.edges.size())) {
      const unsigned slot = v / 2;
      w = m.edest[slot] * 2u + (v % 2 + m.eadd[slot]) % 2;
    } else {
      const unsigned slot = v / 3;
      w = m.cdest[slot] * 3u + (t.corner_ori ? (v % 3 + m.cadd[slot]) % 3 : 0u);
    }
    out |= Key{w} << shift;
  }
  return out;
}

// Cheapest macro sequence from each case to a goal, by Dijkstra run backwards
// from the goals. Throws if any case is not solved within `limit` moves.
std::unordered_map<Key, MoveSequence> build_recipes(const Tracked& t, const std::vector<MoveSequence>& algs,
                                                   const std::vector<Key>& goals, const std::vector<Key>& cases,
                                                   int limit, const std::string& name) {
  std::vector<Macro> inv;
  for (const auto& a : algs) inv.push_back(make_macro(a.inverse()));

  struct Entry {
    int cost;
    int macro;  // first macro of the recipe, -1 at a goal
    Key next;
  };
  std::unordered_map<Key, Entry> best;
  using Item = std::tuple<int, std::uint64_t, Key>;  // cost, insertion order, key
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  std::uint64_t order = 0;
  for (Key g : goals) {
    best[g] = {0, -1, g};
    queue.emplace(0, order++, g);
  }
  std::unordered_map<Key, bool> pending;
  for (Key c : cases) pending[c] = true;
  std::size_t remaining = pending.size();

  while (!queue.empty() && remaining > 0) {
    const auto [cost, ord, key] = queue.top();
    queue.pop();
    if (best[key].cost < cost) continue;
    if (auto it = pending.find(key); it != pending.end() && it->second) {
      it->second = false;
      --remaining;
    }
    for (int m = 0; m < static_cast<int>(inv.size()); ++m) {
      const Key prev = apply_macro(key, inv[m], t);
      const int c = cost + static_cast<int>(algs[m].length());
      if (c > limit) continue;
      auto [it, fresh] = best.try_emplace(prev, Entry{c, m, key});
      if (!fresh) {
        if (it->second.cost <= c) continue;
        it->second = {c, m, key};
      }
      queue.emplace(c, order++, prev);
    }
  }
  if (remaining > 0) throw std::logic_error(name + ": some case needs more than " + std::to_string(limit) + " moves");

  std::unordered_map<Key, MoveSequence> out;
  for (Key c : cases) {
    MoveSequence seq;
    for (Key k = c; best.at(k).macro >= 0; k = best.at(k).next) seq.append(algs[best.at(k).macro]);
    out.emplace(c, std::move(seq));
  }
  return out;
}

struct Stage {
  Tracked tracked;
  std::unordered_map<Key, MoveSequence> recipes;
  int max_cost = 0;
};

struct StepTables {
  BeginnerStep step;
  int piece_cap = 0;
  std::vector<Stage> stages;  // one per piece for steps 1-3, a single stage after that
};

constexpr std::array<std::uint8_t, 4> kCrossEdges{DR, DF, DL, DB};
constexpr std::array<std::uint8_t, 4> kBottomCorners{DFR, DLF, DBL, DRB};
constexpr std::array<std::uint8_t, 4> kMiddleEdges{FR, FL, BL, BR};
constexpr std::array<std::uint8_t, 4> kTopEdges{UR, UF, UL, UB};
constexpr std::array<std::uint8_t, 4> kTopCorners{URF, UFL, ULB, UBR};

int stage_max(const std::unordered_map<Key, MoveSequence>& r) {
  int m = 0;
  for (const auto& [k, seq] : r) m = std::max(m, static_cast<int>(seq.length()));
  return m;
}

// Places `targets` one at a time, keeping `base` and earlier targets home.
StepTables piece_step(BeginnerStep step, int piece_cap, bool corners, const std::vector<std::uint8_t>& base_edges,
                      const std::vector<std::uint8_t>& base_corners, const std::array<std::uint8_t, 4>& targets,
                      const std::vector<MoveSequence>& algs) {
  StepTables out{step, piece_cap, {}};
  Tracked t{base_edges, base_corners, true};
  for (std::uint8_t target : targets) {
    auto& list = corners ? t.corners : t.edges;
    const std::vector<std::uint8_t> protect = list;
    list.push_back(target);
    const int orientations = corners ? 3 : 2;
    const int slots = corners ? kCornerCount : kEdgeCount;

    std::vector<Key> cases;
    for (int slot = 0; slot < slots; ++slot) {
      if (std::find(protect.begin(), protect.end(), slot) != protect.end()) continue;
      for (int o = 0; o < orientations; ++o) {
        // Swap the target into `slot`; the cube need not be valid for a key.
        CubieState s;
        if (corners) {
          std::swap(s.corner_perm[slot], s.corner_perm[target]);
          s.corner_ori[slot] = static_cast<std::uint8_t>(o);
        } else {
          std::swap(s.edge_perm[slot], s.edge_perm[target]);
          s.edge_ori[slot] = static_cast<std::uint8_t>(o);
        }
        cases.push_back(key_of(s, t));
      }
    }
    Stage stage{t, build_recipes(t, algs, {key_of(CubieState{}, t)}, cases, piece_cap,
                                 std::string(to_string(step))),
                0};
    stage.max_cost = stage_max(stage.recipes);
    out.stages.push_back(std::move(stage));
  }
  return out;
}

template <std::size_t N>
std::vector<std::array<std::uint8_t, N>> permutations_of(std::array<std::uint8_t, N> a) {
  std::vector<std::array<std::uint8_t, N>> out;
  std::sort(a.begin(), a.end());
  do out.push_back(a);
  while (std::next_permutation(a.begin(), a.end()));
  return out;
}

StepTables last_layer_step(BeginnerStep step, int cap, const Tracked& t, const std::vector<MoveSequence>& algs) {
  std::vector<Key> goals, cases;
  const auto perms = permutations_of(kTopEdges);
  auto edge_state = [&](const std::array<std::uint8_t, 4>& p, int flips) {
    CubieState s;
    for (int i = 0; i < 4; ++i) {
      s.edge_perm[kTopEdges[i]] = p[i];
      s.edge_ori[kTopEdges[i]] = static_cast<std::uint8_t>(flips >> i & 1);
    }
    return s;
  };
  switch (step) {
    case BeginnerStep::yellow_cross:
      for (const auto& p : perms) {
        goals.push_back(key_of(edge_state(p, 0), t));
        for (int f = 0; f < 16; ++f)
          if (std::popcount(static_cast<unsigned>(f)) % 2 == 0) cases.push_back(key_of(edge_state(p, f), t));
      }
      break;
    case BeginnerStep::yellow_edges:
      goals.push_back(key_of(CubieState{}, t));
      for (const auto& p : perms) cases.push_back(key_of(edge_state(p, 0), t));
      break;
    case BeginnerStep::yellow_corner_perm:
      goals.push_back(key_of(CubieState{}, t));
      for (const auto& p : permutations_of(kTopCorners)) {
        if (permutation_parity(p.data(), 4)) continue;
        CubieState s;
        std::copy(p.begin(), p.end(), s.corner_perm.begin());
        cases.push_back(key_of(s, t));
      }
      break;
    case BeginnerStep::yellow_corner_ori:
      goals.push_back(key_of(CubieState{}, t));
      for (int tw = 0; tw < 27; ++tw) {
        CubieState s;
        int sum = 0;
        for (int i = 0, x = tw; i < 3; ++i, x /= 3) {
          s.corner_ori[i] = static_cast<std::uint8_t>(x % 3);
          sum += x % 3;
        }
        s.corner_ori[3] = static_cast<std::uint8_t>((3 - sum % 3) % 3);
        cases.push_back(key_of(s, t));
      }
      break;
    default:
      throw std::logic_error("not a last-layer step");
  }
  Stage stage{t, build_recipes(t, algs, goals, cases, cap, std::string(to_string(step))), 0};
  stage.max_cost = stage_max(stage.recipes);
  return {step, 0, {std::move(stage)}};
}

std::vector<std::uint8_t> vec(const std::array<std::uint8_t, 4>& a) { return {a.begin(), a.end()}; }

std::vector<StepTables> build_all() {
  std::vector<StepTables> out;
  std::vector<MoveSequence> single;
  for (Move m : all_moves()) single.push_back(MoveSequence{m});
  out.push_back(piece_step(BeginnerStep::white_cross, 5, false, {}, {}, kCrossEdges, single));
  out.push_back(piece_step(BeginnerStep::white_corners, 15, true, vec(kCrossEdges), {}, kBottomCorners,
                           with_rotations(u_turns(), {"R U R'", "R U' R'", "F' U F", "F' U' F"})));
  out.push_back(piece_step(BeginnerStep::second_layer, 20, false, vec(kCrossEdges), vec(kBottomCorners), kMiddleEdges,
                           with_rotations(u_turns(), {"U R U' R' U' F' U F", "U' F' U F U R U' R'"})));

  const Tracked edges{vec(kTopEdges), {}, true};
  const Tracked perm{vec(kTopEdges), vec(kTopCorners), false};
  const Tracked full{vec(kTopEdges), vec(kTopCorners), true};
  out.push_back(last_layer_step(BeginnerStep::yellow_cross, 18, edges, with_rotations(u_turns(), {"F R U R' U' F'"})));
  out.push_back(
      last_layer_step(BeginnerStep::yellow_edges, 21, edges, with_rotations(u_turns(), {"R U2 R' U' R U' R'"})));
  out.push_back(last_layer_step(BeginnerStep::yellow_corner_perm, 24, perm,
                                with_rotations(u_turns(), {"R U' L' U R' U' L U"})));
  out.push_back(last_layer_step(BeginnerStep::yellow_corner_ori, 42, full,
                                with_rotations(u_turns(), {"R U2 R' U' R U' R' L' U2 L U L' U L"})));
  return out;
}

const std::vector<StepTables>& tables() {
  static const std::vector<StepTables> t = build_all();
  return t;
}

bool edges_home(const CubieState& s, const std::array<std::uint8_t, 4>& which) {
  for (auto e : which)
    if (s.edge_perm[e] != e || s.edge_ori[e] != 0) return false;
  return true;
}

bool corners_home(const CubieState& s, const std::array<std::uint8_t, 4>& which, bool ori = true) {
  for (auto c : which)
    if (s.corner_perm[c] != c || (ori && s.corner_ori[c] != 0)) return false;
  return true;
}

}  // namespace

std::string_view to_string(BeginnerStep step) {
  switch (step) {
    case BeginnerStep::white_cross: return "white-cross";
    case BeginnerStep::white_corners: return "white-corners";
    case BeginnerStep::second_layer: return "second-layer";
    case BeginnerStep::yellow_cross: return "yellow-cross";
    case BeginnerStep::yellow_edges: return "yellow-edges";
    case BeginnerStep::yellow_corner_perm: return "yellow-corner-perm";
    case BeginnerStep::yellow_corner_ori: return "yellow-corner-ori";
  }
  return "?";
}

bool step_satisfied(BeginnerStep step, const CubieState& s) {
  switch (step) {
    case BeginnerStep::white_cross: return edges_home(s, kCrossEdges);
    case BeginnerStep::white_corners: return edges_home(s, kCrossEdges) && corners_home(s, kBottomCorners);
    case BeginnerStep::second_layer:
      return step_satisfied(BeginnerStep::white_corners, s) && edges_home(s, kMiddleEdges);
    case BeginnerStep::yellow_cross:
      if (!step_satisfied(BeginnerStep::second_layer, s)) return false;
      for (auto e : kTopEdges)
        if (s.edge_ori[e] != 0) return false;
      return true;
    case BeginnerStep::yellow_edges: return step_satisfied(BeginnerStep::second_layer, s) && edges_home(s, kTopEdges);
    case BeginnerStep::yellow_corner_perm:
      return step_satisfied(BeginnerStep::yellow_edges, s) && corners_home(s, kTopCorners, false);
    case BeginnerStep::yellow_corner_ori: return s.is_solved();
  }
  return false;
}

std::vector<StepMoves> step_trace(const CubieState& start) {
  if (!is_valid(start)) throw InvalidState("cannot solve an invalid state");
  std::vector<StepMoves> out;
  CubieState s = start;
  for (std::size_t i = 0; i < kStepBudgets.size(); ++i) {
    const StepTables& st = tables()[i];
    MoveSequence moves;
    for (const Stage& stage : st.stages) {
      const auto it = stage.recipes.find(key_of(s, stage.tracked));
      if (it == stage.recipes.end()) throw std::logic_error(std::string(to_string(st.step)) + ": case not in table");
      s = apply_sequence(s, it->second);
      moves.append(it->second);
    }
    if (!step_satisfied(st.step, s) || static_cast<int>(moves.length()) > kStepBudgets[i].cap)
      throw std::logic_error(std::string(to_string(st.step)) + ": step postcondition or budget violated");
    out.push_back({st.step, std::move(moves)});
  }
  return out;
}

MoveSequence solve_beginner(const CubieState& s) {
  MoveSequence out;
  for (const auto& step : step_trace(s)) out.append(step.moves);
  if (static_cast<int>(out.length()) > kBeginnerTotalCap) throw std::logic_error("beginner solution over the total cap");
  return out;
}

std::vector<CaseTableInfo> case_table_info() {
  std::vector<CaseTableInfo> out;
  for (const StepTables& st : tables()) {
    CaseTableInfo info{st.step, 0, 0, 0, st.piece_cap};
    for (const Stage& stage : st.stages) {
      info.cases += static_cast<int>(stage.recipes.size());
      info.max_stage_cost = std::max(info.max_stage_cost, stage.max_cost);
      info.worst_case += stage.max_cost;
    }
    out.push_back(info);
  }
  return out;
}

}  // namespace demigod
