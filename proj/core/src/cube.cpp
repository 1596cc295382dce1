#include "demigod/cube.hpp"

#include <algorithm>
#include <cctype>

#include "demigod/errors.hpp"

namespace demigod {
namespace {

struct Vec3 {
  int x, y, z;
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

constexpr int dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

// Sticker centres on a cube of half-width 3; face cells sit at -2, 0, 2.
// Net block order is U, L, F, R, B, D.
Vec3 sticker_position(int p) {
  const int block = p / 9;
  const int r = (p % 9) / 3;
  const int c = p % 3;
  switch (block) {
    case 0: return {-2 + 2 * c, 3, -2 + 2 * r};   // U
    case 1: return {-3, 2 - 2 * r, -2 + 2 * c};   // L
    case 2: return {-2 + 2 * c, 2 - 2 * r, 3};    // F
    case 3: return {3, 2 - 2 * r, 2 - 2 * c};     // R
    case 4: return {2 - 2 * c, 2 - 2 * r, -3};    // B
    default: return {-2 + 2 * c, -3, 2 - 2 * r};  // D
  }
}

Vec3 face_normal(Face f) {
  switch (f) {
    case Face::U: return {0, 1, 0};
    case Face::D: return {0, -1, 0};
    case Face::L: return {-1, 0, 0};
    case Face::R: return {1, 0, 0};
    case Face::F: return {0, 0, 1};
    default: return {0, 0, -1};
  }
}

int position_of(const Vec3& v) {
  for (int p = 0; p < kStickerCount; ++p) {
    if (sticker_position(p) == v) return p;
  }
  return -1;
}

// Clockwise quarter turn seen from outside the face: rotation by -90 degrees
// about the outward normal n, v' = n (n.v) - n x v.
std::array<std::uint8_t, kStickerCount> quarter_turn(Face f) {
  const Vec3 n = face_normal(f);
  std::array<std::uint8_t, kStickerCount> dest{};
  for (int p = 0; p < kStickerCount; ++p) {
    const Vec3 v = sticker_position(p);
    if (dot(n, v) <= 0) {
      dest[p] = static_cast<std::uint8_t>(p);
      continue;
    }
    const Vec3 nxv = cross(n, v);
    const int k = dot(n, v);
    const Vec3 w{n.x * k - nxv.x, n.y * k - nxv.y, n.z * k - nxv.z};
    dest[p] = static_cast<std::uint8_t>(position_of(w));
  }
  return dest;
}

const std::array<StickerState, kMoveCount>& sticker_generators() {
  static const auto table = [] {
    std::array<StickerState, kMoveCount> out{};
    for (int f = 0; f < kFaceCount; ++f) {
      const auto dest = quarter_turn(static_cast<Face>(f));
      StickerState s = StickerState::identity();
      for (int t = 0; t < 3; ++t) {
        for (auto& p : s.perm) p = dest[p];
        out[f * 3 + t] = s;
      }
    }
    return out;
  }();
  return table;
}

bool is_ud_home(std::uint8_t home) { return home < 9 || home >= 45; }

// Face block (0..5 in net order) of a 0-based sticker position.
std::uint8_t block_of(std::uint8_t p) { return static_cast<std::uint8_t>(p / 9); }

// Shared corner/edge recognition. `label[pos]` is whatever identifies the
// sticker at pos and `home_label(h)` gives the label a home sticker h carries:
// sticker identity for permutations, face colour for facelet strings.
template <class HomeLabel>
CubieState recognise(const std::array<std::uint8_t, kStickerCount>& label, HomeLabel home_label,
                     bool ud_by_label) {
  const auto& cf = corner_facelets();
  const auto& ef = edge_facelets();
  CubieState c;
  std::array<bool, kCornerCount> corner_seen{};
  for (int i = 0; i < kCornerCount; ++i) {
    int ori = 0;
    for (; ori < 3; ++ori) {
      const std::uint8_t l = label[cf[i][ori]];
      const bool ud = ud_by_label ? (l == 0 || l == 5) : is_ud_home(l);
      if (ud) break;
    }
    if (ori == 3) throw MalformedState("corner slot " + std::to_string(i) + " has no U/D sticker");
    int found = -1;
    for (int j = 0; j < kCornerCount && found < 0; ++j) {
      bool match = true;
      for (int n = 0; n < 3; ++n) {
        if (label[cf[i][(ori + n) % 3]] != home_label(cf[j][n])) match = false;
      }
      if (match) found = j;
    }
    if (found < 0 || corner_seen[found]) {
      throw MalformedState("corner slot " + std::to_string(i) + " matches no unused corner cubie");
    }
    corner_seen[found] = true;
    c.corner_perm[i] = static_cast<std::uint8_t>(found);
    c.corner_ori[i] = static_cast<std::uint8_t>(ori);
  }
  std::array<bool, kEdgeCount> edge_seen{};
  for (int i = 0; i < kEdgeCount; ++i) {
    const std::uint8_t a = label[ef[i][0]];
    const std::uint8_t b = label[ef[i][1]];
    int found = -1;
    int ori = 0;
    for (int j = 0; j < kEdgeCount && found < 0; ++j) {
      if (a == home_label(ef[j][0]) && b == home_label(ef[j][1])) {
        found = j;
        ori = 0;
      } else if (a == home_label(ef[j][1]) && b == home_label(ef[j][0])) {
        found = j;
        ori = 1;
      }
    }
    if (found < 0 || edge_seen[found]) {
      throw MalformedState("edge slot " + std::to_string(i) + " matches no unused edge cubie");
    }
    edge_seen[found] = true;
    c.edge_perm[i] = static_cast<std::uint8_t>(found);
    c.edge_ori[i] = static_cast<std::uint8_t>(ori);
  }
  return c;
}

constexpr std::array<std::uint8_t, 6> kCenters{4, 13, 22, 31, 40, 49};
constexpr std::string_view kNetLetters = "ULFRBD";

}  // namespace

char face_letter(Face f) { return "UDLRFB"[static_cast<int>(f)]; }

std::string to_string(Move m) {
  std::string s(1, face_letter(m.face));
  if (m.turns == 2) s += '2';
  if (m.turns == 3) s += '\'';
  return s;
}

const std::array<Move, kMoveCount>& all_moves() {
  static const auto moves = [] {
    std::array<Move, kMoveCount> out{};
    for (int i = 0; i < kMoveCount; ++i) out[i] = Move::from_index(i);
    return out;
  }();
  return moves;
}

MoveSequence MoveSequence::parse(std::string_view text) {
  MoveSequence seq;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const std::string_view tok = text.substr(i, j - i);
    const auto face_pos = std::string_view("UDLRFB").find(tok[0]);
    if (face_pos == std::string_view::npos) {
      throw ParseFailure("unknown move token '" + std::string(tok) + "'");
    }
    const std::string_view suffix = tok.substr(1);
    int turns = 0;
    if (suffix.empty() || suffix == "1") {
      turns = 1;
    } else if (suffix == "2" || suffix == "2'" || suffix == "2p") {
      turns = 2;
    } else if (suffix == "'" || suffix == "p" || suffix == "3") {
      turns = 3;
    } else {
      throw ParseFailure("unknown move token '" + std::string(tok) + "'");
    }
    seq.push_back({static_cast<Face>(face_pos), static_cast<std::uint8_t>(turns)});
    i = j;
  }
  return seq;
}

std::string MoveSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < moves_.size(); ++i) {
    if (i) out += ' ';
    out += demigod::to_string(moves_[i]);
  }
  return out;
}

void MoveSequence::append(const MoveSequence& other) {
  moves_.insert(moves_.end(), other.moves_.begin(), other.moves_.end());
}

MoveSequence MoveSequence::inverse() const {
  MoveSequence out;
  for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) out.push_back(it->inverse());
  return out;
}

MoveSequence simplify(const MoveSequence& seq) {
  std::vector<Move> stack;
  for (Move m : seq) {
    if (!stack.empty() && stack.back().face == m.face) {
      const int turns = (stack.back().turns + m.turns) % 4;
      stack.pop_back();
      if (turns) stack.push_back({m.face, static_cast<std::uint8_t>(turns)});
    } else {
      stack.push_back(m);
    }
  }
  return MoveSequence(std::move(stack));
}

CubieState compose(const CubieState& a, const CubieState& b) {
  CubieState r;
  for (int i = 0; i < kCornerCount; ++i) {
    const auto from = b.corner_perm[i];
    r.corner_perm[i] = a.corner_perm[from];
    r.corner_ori[i] = static_cast<std::uint8_t>((a.corner_ori[from] + b.corner_ori[i]) % 3);
  }
  for (int i = 0; i < kEdgeCount; ++i) {
    const auto from = b.edge_perm[i];
    r.edge_perm[i] = a.edge_perm[from];
    r.edge_ori[i] = static_cast<std::uint8_t>((a.edge_ori[from] + b.edge_ori[i]) & 1);
  }
  return r;
}

CubieState inverse(const CubieState& c) {
  CubieState r;
  for (int i = 0; i < kCornerCount; ++i) r.corner_perm[c.corner_perm[i]] = static_cast<std::uint8_t>(i);
  for (int i = 0; i < kCornerCount; ++i) {
    r.corner_ori[i] = static_cast<std::uint8_t>((3 - c.corner_ori[r.corner_perm[i]]) % 3);
  }
  for (int i = 0; i < kEdgeCount; ++i) r.edge_perm[c.edge_perm[i]] = static_cast<std::uint8_t>(i);
  for (int i = 0; i < kEdgeCount; ++i) r.edge_ori[i] = c.edge_ori[r.edge_perm[i]];
  return r;
}

const CubieState& move_cube(Move m) {
  static const auto table = [] {
    std::array<CubieState, kMoveCount> out{};
    for (int i = 0; i < kMoveCount; ++i) out[i] = to_cubie(generator_permutation(Move::from_index(i)));
    return out;
  }();
  return table[m.index()];
}

CubieState apply_move(const CubieState& s, Move m) { return compose(s, move_cube(m)); }

CubieState apply_sequence(CubieState s, const MoveSequence& seq) {
  for (Move m : seq) s = apply_move(s, m);
  return s;
}

int permutation_parity(const std::uint8_t* perm, int n) {
  int inversions = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
  }
  return inversions & 1;
}

int corner_parity(const CubieState& c) { return permutation_parity(c.corner_perm.data(), kCornerCount); }
int edge_parity(const CubieState& c) { return permutation_parity(c.edge_perm.data(), kEdgeCount); }

bool is_valid(const CubieState& c) {
  auto is_perm = [](const auto& p) {
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != i) return false;
    }
    return true;
  };
  if (!is_perm(c.corner_perm) || !is_perm(c.edge_perm)) return false;
  int twist = 0;
  int flip = 0;
  for (auto o : c.corner_ori) {
    if (o > 2) return false;
    twist += o;
  }
  for (auto o : c.edge_ori) {
    if (o > 1) return false;
    flip += o;
  }
  return twist % 3 == 0 && flip % 2 == 0 && corner_parity(c) == edge_parity(c);
}

StickerState StickerState::identity() {
  StickerState s;
  for (int i = 0; i < kStickerCount; ++i) s.perm[i] = static_cast<std::uint8_t>(i);
  return s;
}

std::array<std::uint8_t, kStickerCount> StickerState::occupancy() const {
  std::array<std::uint8_t, kStickerCount> occ{};
  for (int h = 0; h < kStickerCount; ++h) occ[perm[h]] = static_cast<std::uint8_t>(h);
  return occ;
}

bool StickerState::is_bijection() const {
  std::array<bool, kStickerCount> seen{};
  for (auto p : perm) {
    if (p >= kStickerCount || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

bool StickerState::centers_fixed() const {
  return std::all_of(kCenters.begin(), kCenters.end(), [&](std::uint8_t c) { return perm[c] == c; });
}

StickerState compose(const StickerState& a, const StickerState& b) {
  StickerState r;
  for (int h = 0; h < kStickerCount; ++h) r.perm[h] = b.perm[a.perm[h]];
  return r;
}

const StickerState& generator_permutation(Move m) { return sticker_generators()[m.index()]; }

CubieState to_cubie(const StickerState& st) {
  if (!st.is_bijection()) throw MalformedState("sticker map is not a bijection");
  if (!st.centers_fixed()) throw MalformedState("a center sticker has moved");
  return recognise(st.occupancy(), [](std::uint8_t h) { return h; }, false);
}

StickerState to_sticker(const CubieState& c) {
  const auto& cf = corner_facelets();
  const auto& ef = edge_facelets();
  StickerState st = StickerState::identity();
  for (int i = 0; i < kCornerCount; ++i) {
    const int j = c.corner_perm[i];
    for (int n = 0; n < 3; ++n) st.perm[cf[j][n]] = cf[i][(n + c.corner_ori[i]) % 3];
  }
  for (int i = 0; i < kEdgeCount; ++i) {
    const int j = c.edge_perm[i];
    for (int n = 0; n < 2; ++n) st.perm[ef[j][n]] = ef[i][(n + c.edge_ori[i]) % 2];
  }
  return st;
}

std::string to_facelets(const StickerState& st) {
  const auto occ = st.occupancy();
  std::string out(kStickerCount, '?');
  for (int p = 0; p < kStickerCount; ++p) out[p] = kNetLetters[block_of(occ[p])];
  return out;
}

std::string to_facelets(const CubieState& c) { return to_facelets(to_sticker(c)); }

CubieState from_facelets(std::string_view facelets) {
  if (facelets.size() != kStickerCount) {
    throw MalformedState("facelet string must have 54 characters, got " + std::to_string(facelets.size()));
  }
  std::array<std::uint8_t, kStickerCount> colour{};
  for (int p = 0; p < kStickerCount; ++p) {
    const auto k = kNetLetters.find(facelets[p]);
    if (k == std::string_view::npos) {
      throw MalformedState(std::string("unknown facelet letter '") + facelets[p] + "'");
    }
    colour[p] = static_cast<std::uint8_t>(k);
  }
  for (auto c : kCenters) {
    if (colour[c] != block_of(c)) throw MalformedState("center at position " + std::to_string(c + 1) + " is wrong");
  }
  // Colour blocks 0 (U) and 5 (D) carry orientation.
  return recognise(colour, [](std::uint8_t h) { return block_of(h); }, true);
}

const std::array<std::array<std::uint8_t, 3>, kCornerCount>& corner_facelets() {
  static constexpr std::array<std::array<std::uint8_t, 3>, kCornerCount> table{{
      {8, 27, 20},   // URF
      {6, 18, 11},   // UFL
      {0, 9, 38},    // ULB
      {2, 36, 29},   // UBR
      {47, 26, 33},  // DFR
      {45, 17, 24},  // DLF
      {51, 44, 15},  // DBL
      {53, 35, 42},  // DRB
  }};
  return table;
}

const std::array<std::array<std::uint8_t, 2>, kEdgeCount>& edge_facelets() {
  static constexpr std::array<std::array<std::uint8_t, 2>, kEdgeCount> table{{
      {5, 28},   // UR
      {7, 19},   // UF
      {3, 10},   // UL
      {1, 37},   // UB
      {50, 34},  // DR
      {46, 25},  // DF
      {48, 16},  // DL
      {52, 43},  // DB
      {23, 30},  // FR
      {21, 14},  // FL
      {41, 12},  // BL
      {39, 32},  // BR
  }};
  return table;
}

}  // namespace demigod
