#pragma once

// Move, symmetry and pruning tables for the two-phase solver.
//
// Phase 1 prunes on (flip, slice placement, twist) with the flip/slice pair
// reduced by the 16 U-D symmetries: 64,430 classes x 2187 twists, 4 bits per
// entry (about 70 MB). Phase 2 prunes on (corner permutation, U/D edge
// permutation) with corners reduced the same way: 2768 classes x 40,320,
// 4 bits per entry (about 56 MB), plus an exact corner x slice-order table.
// Every entry is the exact distance in its projected space, hence admissible.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace demigod {

inline constexpr std::uint32_t kTableFormatVersion = 1;
inline constexpr int kFlipSliceClasses = 64430;
inline constexpr int kCornerClasses = 2768;

// Four bits per entry; 15 marks "unset" during construction.
class NibbleArray {
 public:
  NibbleArray() = default;
  explicit NibbleArray(std::size_t n) : n_(n), data_((n + 1) / 2, 0xFF) {}
  std::size_t size() const { return n_; }
  int get(std::size_t i) const { return (data_[i >> 1] >> ((i & 1) << 2)) & 0xF; }
  void prefetch(std::size_t i) const { __builtin_prefetch(data_.data() + (i >> 1)); }
  void set(std::size_t i, int v) {
    auto& b = data_[i >> 1];
    const int shift = (i & 1) << 2;
    b = static_cast<std::uint8_t>((b & ~(0xF << shift)) | (v << shift));
  }
  std::vector<std::uint8_t>& bytes() { return data_; }
  const std::vector<std::uint8_t>& bytes() const { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> data_;
};

struct PhaseTables {
  // coordinate * 18 + move
  std::vector<std::uint16_t> twist_move, flip_move, slice_sorted_move, corners_move, ud_edges_move;
  // coordinate * 16 + symmetry: coordinate of S c S^-1
  std::vector<std::uint16_t> twist_conj, ud_edges_conj;

  // flipslice = 2048 * slice + flip = S^-1 rep S, with S = flipslice_sym.
  std::vector<std::uint16_t> flipslice_classidx;
  std::vector<std::uint8_t> flipslice_sym;
  std::vector<std::uint32_t> flipslice_rep;
  std::vector<std::uint16_t> flipslice_symstate;  // bit s set iff S^-1 rep S == rep

  std::vector<std::uint16_t> corner_classidx;
  std::vector<std::uint8_t> corner_sym;
  std::vector<std::uint16_t> corner_rep;
  std::vector<std::uint16_t> corner_symstate;

  NibbleArray phase1_prune;           // class * 2187 + conjugated twist
  NibbleArray phase2_prune;           // class * 40320 + conjugated ud_edges
  std::vector<std::uint8_t> cornslice_depth;  // corners * 24 + slice order

  std::size_t phase1_index(int flip, int twist, int slice_sorted) const {
    const int fs = 2048 * (slice_sorted / 24) + flip;
    return std::size_t{flipslice_classidx[fs]} * 2187 + twist_conj[twist * 16 + flipslice_sym[fs]];
  }
  std::size_t phase2_index(int corners, int ud_edges) const {
    return std::size_t{corner_classidx[corners]} * 40320 + ud_edges_conj[ud_edges * 16 + corner_sym[corners]];
  }
  int phase1_depth(int flip, int twist, int slice_sorted) const {
    return phase1_prune.get(phase1_index(flip, twist, slice_sorted));
  }
  int phase2_depth(int corners, int ud_edges) const { return phase2_prune.get(phase2_index(corners, ud_edges)); }
  int cornslice(int corners, int slice_sorted) const { return cornslice_depth[corners * 24 + slice_sorted]; }

  using Progress = std::function<void(const std::string&)>;

  static PhaseTables build(const Progress& progress = {});

  // Cache file inside `dir`.
  static std::filesystem::path cache_path(const std::filesystem::path& dir);
  void save(const std::filesystem::path& file) const;
  // Throws CorruptCache on bad magic, version, layout or checksum; IoFailure
  // if the file cannot be read.
  static PhaseTables load(const std::filesystem::path& file);
  // Loads the cache, rebuilding and rewriting it when missing or corrupt.
  static PhaseTables load_or_build(const std::filesystem::path& dir, const Progress& progress = {});
};

// Directory for the table cache: DEMIGOD_TABLES_DIR if set, else `fallback`.
std::filesystem::path resolve_tables_dir(const std::filesystem::path& fallback);

}  // namespace demigod
