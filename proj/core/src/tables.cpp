#include "demigod/tables.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "demigod/coords.hpp"
#include "demigod/cube.hpp"
#include "demigod/errors.hpp"
#include "demigod/symmetry.hpp"

namespace demigod {
namespace {

static_assert(std::endian::native == std::endian::little, "cache format assumes a little-endian host");

constexpr int kUnset = 15;
constexpr std::array<int, 10> kPhase2Moves{0, 1, 2, 3, 4, 5, 10, 7, 13, 16};  // U1-3 D1-3 L2 R2 F2 B2

template <class Get, class Set>
std::vector<std::uint16_t> move_table(int n, Set set, Get get, bool g1_only = false) {
  std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * kMoveCount, 0);
  for (int i = 0; i < n; ++i) {
    CubieState c;
    set(c, i);
    for (int m = 0; m < kMoveCount; ++m) {
      if (g1_only && std::find(kPhase2Moves.begin(), kPhase2Moves.end(), m) == kPhase2Moves.end()) continue;
      t[std::size_t{static_cast<std::size_t>(i)} * kMoveCount + m] =
          static_cast<std::uint16_t>(get(compose(c, move_cube(Move::from_index(m)))));
    }
  }
  return t;
}

// S c S^-1 for the 16 U-D symmetries.
template <class Get, class Set>
std::vector<std::uint16_t> conj_table(int n, Set set, Get get) {
  std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * sym::kUdCount);
  for (int i = 0; i < n; ++i) {
    CubieState c;
    set(c, i);
    for (int s = 0; s < sym::kUdCount; ++s) {
      const CubieState x = sym::multiply(sym::multiply(sym::cubes()[s], c), sym::cubes()[sym::inverse()[s]]);
      t[static_cast<std::size_t>(i) * sym::kUdCount + s] = static_cast<std::uint16_t>(get(x));
    }
  }
  return t;
}

// Classes of coordinate values under c -> S^-1 c S for the 16 U-D symmetries.
template <class Rep, class Get, class Set>
void classify(int n, Set set, Get get, std::vector<std::uint16_t>& classidx, std::vector<std::uint8_t>& symidx,
              std::vector<Rep>& reps, std::vector<std::uint16_t>& symstate) {
  constexpr std::uint16_t kNone = 0xFFFF;
  classidx.assign(n, kNone);
  symidx.assign(n, 0);
  reps.clear();
  symstate.clear();
  for (int i = 0; i < n; ++i) {
    if (classidx[i] != kNone) continue;
    const auto cls = static_cast<std::uint16_t>(reps.size());
    reps.push_back(static_cast<Rep>(i));
    symstate.push_back(0);
    CubieState c;
    set(c, i);
    for (int s = 0; s < sym::kUdCount; ++s) {
      const int j = get(sym::conjugate(c, s));
      if (classidx[j] == kNone) {
        classidx[j] = cls;
        symidx[j] = static_cast<std::uint8_t>(s);
      }
      if (j == i) symstate.back() |= static_cast<std::uint16_t>(1u << s);
    }
  }
}

// Breadth-first fill of a symmetry-reduced nibble table. `expand(i, f)` calls
// f(j) for each successor j of entry i and stops early when f returns true;
// `twins(j, g)` calls g on the entries equal to j under a self-symmetry.
// Entries further than 14 keep the value 15, read as "at least 15".
template <class Expand, class Twins>
void fill_by_bfs(NibbleArray& table, Expand expand, Twins twins, const PhaseTables::Progress& progress,
                 const char* name) {
  const std::size_t total = table.size();
  table.set(0, 0);
  std::size_t done = 1;
  bool backward = false, stalled = false;
  for (int depth = 0; done < total && depth < kUnset - 1; ++depth) {
    std::size_t frontier = 0;
    for (std::size_t i = 0; i < total; ++i) frontier += table.get(i) == depth;
    backward = backward || frontier > total - done;
    const std::size_t before = done;
    for (std::size_t i = 0; i < total; ++i) {
      if (!backward) {
        if (table.get(i) != depth) continue;
        expand(i, [&](std::size_t j) {
          if (table.get(j) != kUnset) return false;
          table.set(j, depth + 1);
          ++done;
          twins(j, [&](std::size_t k) {
            if (table.get(k) == kUnset) {
              table.set(k, depth + 1);
              ++done;
            }
          });
          return false;
        });
      } else {
        if (table.get(i) != kUnset) continue;
        expand(i, [&](std::size_t j) {
          if (table.get(j) != depth) return false;
          table.set(i, depth + 1);
          ++done;
          return true;  // stop expanding
        });
      }
    }
    if (progress)
      progress(std::string(name) + ": depth " + std::to_string(depth + 1) + " -> " + std::to_string(done - before) +
               (backward ? " (backward)" : ""));
    if (done == before) {
      stalled = true;
      break;
    }
  }
  if (done != total && stalled) throw std::logic_error(std::string(name) + " did not cover every entry");
}

std::uint64_t fnv1a(const std::uint8_t* p, std::size_t n) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

// Describes one serialised table.
struct TableRef {
  const char* name;
  std::uint32_t width_bits;
  std::function<std::uint64_t()> count;
  std::function<std::uint8_t*()> data;
  std::function<std::size_t()> bytes;
  std::function<void(std::uint64_t)> resize;
};

template <class T>
TableRef ref(const char* name, std::vector<T>& v) {
  return {name,
          static_cast<std::uint32_t>(8 * sizeof(T)),
          [&v] { return static_cast<std::uint64_t>(v.size()); },
          [&v] { return reinterpret_cast<std::uint8_t*>(v.data()); },
          [&v] { return v.size() * sizeof(T); },
          [&v](std::uint64_t n) { v.assign(n, T{}); }};
}

TableRef ref(const char* name, NibbleArray& v) {
  return {name,
          4,
          [&v] { return static_cast<std::uint64_t>(v.size()); },
          [&v] { return v.bytes().data(); },
          [&v] { return v.bytes().size(); },
          [&v](std::uint64_t n) { v = NibbleArray(n); }};
}

std::vector<TableRef> layout(PhaseTables& t) {
  return {ref("twist_move", t.twist_move),
          ref("flip_move", t.flip_move),
          ref("slice_sorted_move", t.slice_sorted_move),
          ref("corners_move", t.corners_move),
          ref("ud_edges_move", t.ud_edges_move),
          ref("twist_conj", t.twist_conj),
          ref("ud_edges_conj", t.ud_edges_conj),
          ref("flipslice_classidx", t.flipslice_classidx),
          ref("flipslice_sym", t.flipslice_sym),
          ref("flipslice_rep", t.flipslice_rep),
          ref("flipslice_symstate", t.flipslice_symstate),
          ref("corner_classidx", t.corner_classidx),
          ref("corner_sym", t.corner_sym),
          ref("corner_rep", t.corner_rep),
          ref("corner_symstate", t.corner_symstate),
          ref("phase1_prune", t.phase1_prune),
          ref("phase2_prune", t.phase2_prune),
          ref("cornslice_depth", t.cornslice_depth)};
}

void put_u32(std::string& out, std::uint32_t v) { out.append(reinterpret_cast<const char*>(&v), 4); }
void put_u64(std::string& out, std::uint64_t v) { out.append(reinterpret_cast<const char*>(&v), 8); }

class Reader {
 public:
  explicit Reader(const std::vector<std::uint8_t>& buf) : buf_(buf) {}
  const std::uint8_t* take(std::size_t n) {
    if (buf_.size() - pos_ < n) throw CorruptCache("table cache is truncated");
    const auto* p = buf_.data() + pos_;
    pos_ += n;
    return p;
  }
  std::uint32_t u32() {
    std::uint32_t v;
    std::memcpy(&v, take(4), 4);
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t v;
    std::memcpy(&v, take(8), 8);
    return v;
  }
  bool at_end() const { return pos_ == buf_.size(); }

 private:
  const std::vector<std::uint8_t>& buf_;
  std::size_t pos_ = 0;
};

}  // namespace

PhaseTables PhaseTables::build(const Progress& progress) {
  using namespace coord;
  PhaseTables t;
  auto say = [&](const std::string& s) {
    if (progress) progress(s);
  };

  t.twist_move = move_table(kTwist, set_twist, twist);
  t.flip_move = move_table(kFlip, set_flip, flip);
  t.slice_sorted_move = move_table(kSliceSorted, set_slice_sorted, slice_sorted);
  t.corners_move = move_table(kCorners, set_corners, corners);
  t.ud_edges_move = move_table(kUdEdges, set_ud_edges, ud_edges, true);
  t.twist_conj = conj_table(kTwist, set_twist, twist);
  t.ud_edges_conj = conj_table(kUdEdges, set_ud_edges, ud_edges);
  say("move and conjugation tables done");

  auto set_flipslice = [](CubieState& c, int fs) {
    set_slice_sorted(c, 24 * (fs / kFlip));
    set_flip(c, fs % kFlip);
  };
  auto get_flipslice = [](const CubieState& c) { return kFlip * slice(c) + flip(c); };
  classify(kFlipSlice, set_flipslice, get_flipslice, t.flipslice_classidx, t.flipslice_sym, t.flipslice_rep,
           t.flipslice_symstate);
  classify(kCorners, set_corners, corners, t.corner_classidx, t.corner_sym, t.corner_rep, t.corner_symstate);
  say("symmetry classes: " + std::to_string(t.flipslice_rep.size()) + " flip-slice, " +
      std::to_string(t.corner_rep.size()) + " corner");
  if (t.flipslice_rep.size() != kFlipSliceClasses || t.corner_rep.size() != kCornerClasses)
    throw std::logic_error("unexpected symmetry class count");

  // Exact corner x slice-order distances in G1.
  t.cornslice_depth.assign(static_cast<std::size_t>(kCorners) * kSlicePerm, 0xFF);
  t.cornslice_depth[0] = 0;
  for (int depth = 0, found = 1; found; ++depth) {
    found = 0;
    for (int i = 0; i < kCorners * kSlicePerm; ++i) {
      if (t.cornslice_depth[i] != depth) continue;
      const int c = i / kSlicePerm, s = i % kSlicePerm;
      for (int m : kPhase2Moves) {
        const int j = t.corners_move[c * kMoveCount + m] * kSlicePerm + t.slice_sorted_move[s * kMoveCount + m];
        if (t.cornslice_depth[j] == 0xFF) {
          t.cornslice_depth[j] = static_cast<std::uint8_t>(depth + 1);
          ++found;
        }
      }
    }
  }

  t.phase1_prune = NibbleArray(std::size_t{kFlipSliceClasses} * kTwist);
  fill_by_bfs(
      t.phase1_prune,
      [&](std::size_t idx, auto&& visit) {
        const int cls = static_cast<int>(idx / kTwist), tw = static_cast<int>(idx % kTwist);
        const int fs = static_cast<int>(t.flipslice_rep[cls]);
        const int fl = fs % kFlip, sl = fs / kFlip;
        for (int m = 0; m < kMoveCount; ++m) {
          const int tw1 = t.twist_move[tw * kMoveCount + m];
          const int fl1 = t.flip_move[fl * kMoveCount + m];
          const int sl1 = t.slice_sorted_move[sl * 24 * kMoveCount + m] / 24;
          const int fs1 = kFlip * sl1 + fl1;
          const std::size_t j = std::size_t{t.flipslice_classidx[fs1]} * kTwist +
                                t.twist_conj[tw1 * sym::kUdCount + t.flipslice_sym[fs1]];
          if (visit(j)) return;
        }
      },
      [&](std::size_t j, auto&& fill) {
        const std::size_t cls = j / kTwist;
        const int tw = static_cast<int>(j % kTwist);
        const unsigned mask = t.flipslice_symstate[cls];
        for (int s = 1; s < sym::kUdCount; ++s)
          if (mask >> s & 1) fill(cls * kTwist + t.twist_conj[tw * sym::kUdCount + s]);
      },
      progress, "phase 1 pruning");

  t.phase2_prune = NibbleArray(std::size_t{kCornerClasses} * kUdEdges);
  fill_by_bfs(
      t.phase2_prune,
      [&](std::size_t idx, auto&& visit) {
        const int cls = static_cast<int>(idx / kUdEdges), ud = static_cast<int>(idx % kUdEdges);
        const int co = t.corner_rep[cls];
        for (int m : kPhase2Moves) {
          const int co1 = t.corners_move[co * kMoveCount + m];
          const int ud1 = t.ud_edges_move[ud * kMoveCount + m];
          const std::size_t j = std::size_t{t.corner_classidx[co1]} * kUdEdges +
                                t.ud_edges_conj[ud1 * sym::kUdCount + t.corner_sym[co1]];
          if (visit(j)) return;
        }
      },
      [&](std::size_t j, auto&& fill) {
        const std::size_t cls = j / kUdEdges;
        const int ud = static_cast<int>(j % kUdEdges);
        const unsigned mask = t.corner_symstate[cls];
        for (int s = 1; s < sym::kUdCount; ++s)
          if (mask >> s & 1) fill(cls * kUdEdges + t.ud_edges_conj[ud * sym::kUdCount + s]);
      },
      progress, "phase 2 pruning");

  return t;
}

std::filesystem::path PhaseTables::cache_path(const std::filesystem::path& dir) { return dir / "twophase.dmgd"; }

void PhaseTables::save(const std::filesystem::path& file) const {
  auto& self = const_cast<PhaseTables&>(*this);
  const auto tables = layout(self);
  std::error_code ec;
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path(), ec);
  const auto tmp = std::filesystem::path(file.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure("cannot write " + tmp.string());
    std::string header = "DMGD";
    put_u32(header, kTableFormatVersion);
    put_u32(header, static_cast<std::uint32_t>(tables.size()));
    out.write(header.data(), static_cast<std::streamsize>(header.size()));
    for (const auto& tr : tables) {
      std::string h;
      const std::string name = tr.name;
      put_u32(h, static_cast<std::uint32_t>(name.size()));
      h += name;
      put_u64(h, tr.count());
      put_u32(h, tr.width_bits);
      put_u64(h, tr.bytes());
      out.write(h.data(), static_cast<std::streamsize>(h.size()));
      out.write(reinterpret_cast<const char*>(tr.data()), static_cast<std::streamsize>(tr.bytes()));
      std::string tail;
      put_u64(tail, fnv1a(tr.data(), tr.bytes()));
      out.write(tail.data(), 8);
    }
    if (!out) throw IoFailure("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) throw IoFailure("cannot rename " + tmp.string() + ": " + ec.message());
}

PhaseTables PhaseTables::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary | std::ios::ate);
  if (!in) throw IoFailure("cannot open " + file.string());
  const auto size = static_cast<std::size_t>(in.tellg());
  in.seekg(0);
  std::vector<std::uint8_t> buf(size);
  if (!in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(size)))
    throw IoFailure("cannot read " + file.string());

  Reader r(buf);
  if (std::memcmp(r.take(4), "DMGD", 4) != 0) throw CorruptCache("bad magic in " + file.string());
  if (r.u32() != kTableFormatVersion) throw CorruptCache("unsupported table format version");
  PhaseTables t;
  const auto tables = layout(t);
  if (r.u32() != tables.size()) throw CorruptCache("unexpected table count");
  for (const auto& tr : tables) {
    const std::uint32_t name_len = r.u32();
    const auto* name = r.take(name_len);
    if (std::string(reinterpret_cast<const char*>(name), name_len) != tr.name)
      throw CorruptCache(std::string("expected table ") + tr.name);
    const std::uint64_t count = r.u64();
    if (r.u32() != tr.width_bits) throw CorruptCache(std::string("bad element width for ") + tr.name);
    const std::uint64_t bytes = r.u64();
    if (count > (std::uint64_t{1} << 34)) throw CorruptCache(std::string("implausible size for ") + tr.name);
    tr.resize(count);
    if (bytes != tr.bytes()) throw CorruptCache(std::string("size mismatch for ") + tr.name);
    const auto* payload = r.take(bytes);
    if (fnv1a(payload, bytes) != r.u64()) throw CorruptCache(std::string("checksum mismatch for ") + tr.name);
    std::memcpy(tr.data(), payload, bytes);
  }
  if (!r.at_end()) throw CorruptCache("trailing bytes in table cache");
  if (t.flipslice_rep.size() != kFlipSliceClasses || t.corner_rep.size() != kCornerClasses ||
      t.phase1_prune.size() != std::size_t{kFlipSliceClasses} * coord::kTwist ||
      t.phase2_prune.size() != std::size_t{kCornerClasses} * coord::kUdEdges)
    throw CorruptCache("table dimensions do not match this build");
  return t;
}

PhaseTables PhaseTables::load_or_build(const std::filesystem::path& dir, const Progress& progress) {
  const auto file = cache_path(dir);
  if (std::filesystem::exists(file)) {
    try {
      return load(file);
    } catch (const CorruptCache& e) {
      if (progress) progress(std::string("rebuilding tables: ") + e.what());
    }
  }
  PhaseTables t = build(progress);
  t.save(file);
  return t;
}

std::filesystem::path resolve_tables_dir(const std::filesystem::path& fallback) {
  if (const char* env = std::getenv("DEMIGOD_TABLES_DIR"); env && *env) return env;
  return fallback;
}

}  // namespace demigod
