#pragma once

// The Rubik's cube group in two concrete representations: sticker
// permutations on 54 positions and the cubie (permutation + orientation)
// form used everywhere else.
//
// Sticker positions follow the flat net: U occupies 1..9, L 10..18, F 19..27,
// R 28..36, B 37..45 and D 46..54, each face read row-major as it appears in
// the net (U above F, L/F/R/B left to right, D below F). Internally positions
// are 0-based.
//
// Composition is read left to right: compose(a, b) is "a, then b", so the
// word "R U2" is compose(compose(R, U), U).

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace demigod {

enum class Face : std::uint8_t { U, D, L, R, F, B };

inline constexpr int kFaceCount = 6;
inline constexpr int kMoveCount = 18;
inline constexpr int kStickerCount = 54;
inline constexpr int kCornerCount = 8;
inline constexpr int kEdgeCount = 12;

char face_letter(Face f);

inline constexpr bool opposite_faces(Face a, Face b) {
  return a != b && static_cast<int>(a) / 2 == static_cast<int>(b) / 2;
}

// A face turn by a number of clockwise quarter turns (1, 2 or 3).
struct Move {
  Face face = Face::U;
  std::uint8_t turns = 1;

  constexpr int index() const { return static_cast<int>(face) * 3 + turns - 1; }
  static constexpr Move from_index(int i) {
    return {static_cast<Face>(i / 3), static_cast<std::uint8_t>(i % 3 + 1)};
  }
  constexpr Move inverse() const { return {face, static_cast<std::uint8_t>(4 - turns)}; }

  friend constexpr bool operator==(Move, Move) = default;
};

std::string to_string(Move m);

// The 18 generators in canonical order U, U2, U', D, ..., B'.
const std::array<Move, kMoveCount>& all_moves();

// A word over the generators. Every entry counts as one move (half-turn metric).
class MoveSequence {
 public:
  MoveSequence() = default;
  MoveSequence(std::initializer_list<Move> moves) : moves_(moves) {}
  explicit MoveSequence(std::vector<Move> moves) : moves_(std::move(moves)) {}

  // Whitespace-separated Singmaster tokens. "p" is accepted for the prime
  // suffix, so "Rp" == "R'". Throws ParseFailure.
  static MoveSequence parse(std::string_view text);

  std::string to_string() const;

  std::size_t length() const { return moves_.size(); }
  bool empty() const { return moves_.empty(); }
  const Move& operator[](std::size_t i) const { return moves_[i]; }
  auto begin() const { return moves_.begin(); }
  auto end() const { return moves_.end(); }
  const std::vector<Move>& moves() const { return moves_; }

  void push_back(Move m) { moves_.push_back(m); }
  void append(const MoveSequence& other);
  MoveSequence inverse() const;

  friend bool operator==(const MoveSequence&, const MoveSequence&) = default;

 private:
  std::vector<Move> moves_;
};

// Merges adjacent turns of the same face (R R -> R2, R R' -> nothing). The
// result is never longer than the input and reaches the same state.
MoveSequence simplify(const MoveSequence& seq);

enum Corner : std::uint8_t { URF, UFL, ULB, UBR, DFR, DLF, DBL, DRB };
enum Edge : std::uint8_t { UR, UF, UL, UB, DR, DF, DL, DB, FR, FL, BL, BR };

// corner_perm[slot] is the cubie sitting in that slot; corner_ori[slot] is its
// twist (0..2), measured by where the cubie's U/D sticker sits. Edges likewise
// with flips in 0..1.
struct CubieState {
  std::array<std::uint8_t, kCornerCount> corner_perm{0, 1, 2, 3, 4, 5, 6, 7};
  std::array<std::uint8_t, kCornerCount> corner_ori{};
  std::array<std::uint8_t, kEdgeCount> edge_perm{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  std::array<std::uint8_t, kEdgeCount> edge_ori{};

  static CubieState identity() { return {}; }
  bool is_solved() const { return *this == CubieState{}; }

  friend bool operator==(const CubieState&, const CubieState&) = default;
};

// "a, then b": result.corner_perm[i] = a.corner_perm[b.corner_perm[i]],
// result.corner_ori[i] = a.corner_ori[b.corner_perm[i]] + b.corner_ori[i] (mod 3).
CubieState compose(const CubieState& a, const CubieState& b);
CubieState inverse(const CubieState& c);

// The cubie image of a single generator.
const CubieState& move_cube(Move m);
CubieState apply_move(const CubieState& s, Move m);
CubieState apply_sequence(CubieState s, const MoveSequence& seq);

// 0 for even, 1 for odd.
int permutation_parity(const std::uint8_t* perm, int n);
int corner_parity(const CubieState& c);
int edge_parity(const CubieState& c);

// Corner and edge parities agree, twists sum to 0 mod 3, flips to 0 mod 2.
// Also rejects arrays that are not permutations or carry out-of-range
// orientations.
bool is_valid(const CubieState& c);

// perm[h] is the 0-based position currently holding the sticker whose home
// position is h. The solved cube is the identity.
struct StickerState {
  std::array<std::uint8_t, kStickerCount> perm{};

  static StickerState identity();
  // position -> home sticker found there
  std::array<std::uint8_t, kStickerCount> occupancy() const;
  bool is_bijection() const;
  bool centers_fixed() const;

  friend bool operator==(const StickerState&, const StickerState&) = default;
};

StickerState compose(const StickerState& a, const StickerState& b);

// Sticker permutation of a generator, derived from the cube's geometry:
// sticker at position p moves to position perm[p].
const StickerState& generator_permutation(Move m);

// Throws MalformedState when a corner triple or edge pair is not a physical
// cubie (or a cubie appears twice).
CubieState to_cubie(const StickerState& st);
StickerState to_sticker(const CubieState& c);

// 54 face letters in position order; solved is
// "UUUUUUUUULLLLLLLLLFFFFFFFFFRRRRRRRRRBBBBBBBBBDDDDDDDDD".
std::string to_facelets(const CubieState& c);
std::string to_facelets(const StickerState& st);
// Colour-only parse; throws MalformedState.
CubieState from_facelets(std::string_view facelets);

// 0-based sticker positions of each corner (U/D sticker first, then clockwise)
// and each edge (U/D or F/B sticker first).
const std::array<std::array<std::uint8_t, 3>, kCornerCount>& corner_facelets();
const std::array<std::array<std::uint8_t, 2>, kEdgeCount>& edge_facelets();

}  // namespace demigod
