#include "demigod/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <string_view>

#include "demigod/cube.hpp"
#include "demigod/errors.hpp"

namespace demigod {
namespace {

Permutation invert_perm(const Permutation& a) {
  Permutation inv(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) inv[a[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

bool is_permutation_of(const Permutation& p, std::size_t k) {
  if (p.size() != k) return false;
  std::vector<bool> seen(k);
  for (auto x : p) {
    if (x >= k || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Rational ratio(std::uint64_t num, std::uint64_t den) {
  return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

// Open-addressing set of fixed-width byte strings stored back to back.
class ElementTable {
 public:
  explicit ElementTable(std::size_t width) : width_(width), slots_(1024, kEmpty) {}

  std::size_t size() const { return count_; }
  const std::uint8_t* element(std::uint32_t id) const { return data_.data() + std::size_t{id} * width_; }

  // Returns the id and whether it was newly inserted.
  std::pair<std::uint32_t, bool> insert(const std::uint8_t* e) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    std::size_t s = hash(e) & (slots_.size() - 1);
    while (slots_[s] != kEmpty) {
      if (std::equal(e, e + width_, element(slots_[s]))) return {slots_[s], false};
      s = (s + 1) & (slots_.size() - 1);
    }
    const auto id = static_cast<std::uint32_t>(count_++);
    data_.insert(data_.end(), e, e + width_);
    slots_[s] = id;
    return {id, true};
  }

 private:
  static constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

  std::size_t hash(const std::uint8_t* e) const {
    return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(e), width_));
  }

  void grow() {
    std::vector<std::uint32_t> next(slots_.size() * 2, kEmpty);
    for (std::uint32_t id = 0; id < count_; ++id) {
      std::size_t s = hash(element(id)) & (next.size() - 1);
      while (next[s] != kEmpty) s = (s + 1) & (next.size() - 1);
      next[s] = id;
    }
    slots_.swap(next);
  }

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> data_;
  std::vector<std::uint32_t> slots_;
};

// Lehmer rank of a permutation of 0..n-1.
std::uint32_t perm_rank(const std::uint8_t* p, int n) {
  std::uint32_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += p[j] < p[i];
    r = r * static_cast<std::uint32_t>(n - i) + static_cast<std::uint32_t>(smaller);
  }
  return r;
}

void perm_unrank(std::uint32_t r, std::uint8_t* p, int n) {
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(r % static_cast<std::uint32_t>(n - i));
    r /= static_cast<std::uint32_t>(n - i);
  }
  std::vector<std::uint8_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < n; ++i) {
    p[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
}

}  // namespace

SmallGraph SmallGraph::from_edges(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw DomainError("edge endpoint out of range");
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::uint32_t> offsets{0}, neighbors;
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    neighbors.insert(neighbors.end(), list.begin(), list.end());
    offsets.push_back(static_cast<std::uint32_t>(neighbors.size()));
  }
  return from_adjacency(std::move(offsets), std::move(neighbors));
}

SmallGraph SmallGraph::from_adjacency(std::vector<std::uint32_t> offsets, std::vector<std::uint32_t> neighbors) {
  SmallGraph g;
  g.offsets_ = std::move(offsets);
  g.neighbors_ = std::move(neighbors);
  return g;
}

SmallGraph cycle_graph(std::uint32_t n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return SmallGraph::from_edges(n, e);
}

SmallGraph hypercube_graph(std::uint32_t dim) {
  if (dim < 1 || dim > 24) throw DomainError("hypercube dimension must be in 1..24");
  const std::uint32_t n = 1u << dim;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t b = 0; b < dim; ++b)
      if (!(v >> b & 1)) e.emplace_back(v, v | 1u << b);
  return SmallGraph::from_edges(n, e);
}

SmallGraph complete_graph(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return SmallGraph::from_edges(n, e);
}

SmallGraph clique_path_graph(std::uint32_t n) {
  const auto r = static_cast<std::uint32_t>(std::lround(std::sqrt(static_cast<double>(n))));
  if (n < 4 || r * r != n) throw NotPerfectSquare("n = " + std::to_string(n) + " is not a perfect square >= 4");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  std::uint32_t prev = 0;
  for (std::uint32_t k = 0; k < r; ++k) {
    e.emplace_back(prev, n + k);
    prev = n + k;
  }
  return SmallGraph::from_edges(n + r, e);
}

SmallGraph parse_edge_list(std::istream& in) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::uint32_t n = 0;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    long long u, v;
    if (!(ss >> u)) continue;
    std::string rest;
    if (!(ss >> v) || (ss >> rest) || u < 0 || v < 0 || u > 0xFFFFFFF || v > 0xFFFFFFF)
      throw ParseFailure("expected two non-negative vertex ids", lineno);
    edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    n = std::max<std::uint32_t>(n, static_cast<std::uint32_t>(std::max(u, v)) + 1);
  }
  if (edges.empty()) throw EmptyInput("edge list has no edges");
  return SmallGraph::from_edges(n, edges);
}

bool GroupPresentation::closed_under_inverse() const {
  for (const auto& g : generators)
    if (std::find(generators.begin(), generators.end(), invert_perm(g)) == generators.end()) return false;
  return true;
}

GroupPresentation parse_presentation(std::istream& in, bool add_inverses) {
  GroupPresentation p;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace_if(line.begin(), line.end(), [](char c) { return c == '(' || c == ')' || c == ','; }, ' ');
    std::istringstream ss(line);
    Permutation perm;
    long long x;
    while (ss >> x) {
      if (x < 1 || x > 256) throw ParseFailure("points must lie in 1..256", lineno);
      perm.push_back(static_cast<std::uint8_t>(x - 1));
    }
    if (!ss.eof()) throw ParseFailure("expected integers", lineno);
    if (perm.empty()) continue;
    if (!is_permutation_of(perm, perm.size())) throw ParseFailure("not a permutation", lineno);
    if (!p.generators.empty() && perm.size() != p.generators.front().size())
      throw ParseFailure("generators act on different point sets", lineno);
    p.generators.push_back(std::move(perm));
  }
  if (p.generators.empty()) throw EmptyInput("no generators");
  if (add_inverses) {
    const auto original = p.generators;
    for (const auto& g : original) {
      auto inv = invert_perm(g);
      if (std::find(p.generators.begin(), p.generators.end(), inv) == p.generators.end())
        p.generators.push_back(std::move(inv));
    }
  }
  return p;
}

GroupPresentation cyclic_presentation(std::uint32_t n) {
  if (n < 2 || n > 256) throw DomainError("cyclic group order must be in 2..256");
  Permutation r(n);
  for (std::uint32_t i = 0; i < n; ++i) r[i] = static_cast<std::uint8_t>((i + 1) % n);
  GroupPresentation p{{r}};
  if (invert_perm(r) != r) p.generators.push_back(invert_perm(r));
  return p;
}

GroupPresentation dihedral_presentation(std::uint32_t n) {
  if (n < 3 || n > 256) throw DomainError("dihedral group needs 3..256 points");
  GroupPresentation p = cyclic_presentation(n);
  Permutation s(n);
  for (std::uint32_t i = 0; i < n; ++i) s[i] = static_cast<std::uint8_t>((n - i) % n);
  p.generators.push_back(s);
  return p;
}

GroupPresentation hypercube_presentation(std::uint32_t dim) {
  if (dim < 1 || dim > 24) throw DomainError("hypercube dimension must be in 1..24");
  GroupPresentation p;
  for (std::uint32_t b = 0; b < dim; ++b) {
    Permutation g(2 * dim);
    std::iota(g.begin(), g.end(), 0);
    std::swap(g[2 * b], g[2 * b + 1]);
    p.generators.push_back(g);
  }
  return p;
}

GroupPresentation transposition_presentation(std::uint32_t k) {
  if (k < 2 || k > 256) throw DomainError("symmetric group needs 2..256 points");
  GroupPresentation p;
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = i + 1; j < k; ++j) {
      Permutation g(k);
      std::iota(g.begin(), g.end(), 0);
      std::swap(g[i], g[j]);
      p.generators.push_back(g);
    }
  return p;
}

GroupPresentation pocket_cube_presentation() {
  std::array<int, kStickerCount> point_of;
  point_of.fill(-1);
  int k = 0;
  for (const auto& tri : corner_facelets())
    for (auto pos : tri) point_of[pos] = k++;
  GroupPresentation p;
  for (Face f : {Face::U, Face::R, Face::F}) {
    for (std::uint8_t t = 1; t <= 3; ++t) {
      const auto& st = generator_permutation({f, t});
      Permutation g(k);
      for (const auto& tri : corner_facelets())
        for (auto pos : tri) g[point_of[pos]] = static_cast<std::uint8_t>(point_of[st.perm[pos]]);
      p.generators.push_back(std::move(g));
    }
  }
  return p;
}

SmallGraph build_cayley(const GroupPresentation& p, std::uint64_t cap) {
  if (cap < 1) throw DomainError("cap must be at least 1");
  if (p.generators.empty()) throw EmptyInput("no generators");
  const std::size_t k = p.generators.front().size();
  for (const auto& g : p.generators)
    if (!is_permutation_of(g, k)) throw DomainError("generators must be permutations of the same point set");
  if (!p.closed_under_inverse()) throw NotClosedUnderInverse("generator set is not closed under inverses");

  ElementTable table(k);
  Permutation identity(k);
  std::iota(identity.begin(), identity.end(), 0);
  table.insert(identity.data());

  std::vector<std::uint32_t> offsets{0}, neighbors;
  std::vector<std::uint32_t> row;
  Permutation next(k);
  // Vertices are discovered in BFS order, so processing ids in order is BFS.
  for (std::uint32_t v = 0; v < table.size(); ++v) {
    row.clear();
    for (const auto& g : p.generators) {
      const std::uint8_t* e = table.element(v);
      for (std::size_t i = 0; i < k; ++i) next[i] = g[e[i]];
      const auto [id, fresh] = table.insert(next.data());
      if (fresh && table.size() > cap) throw GroupTooLarge(cap);
      if (id != v) row.push_back(id);
    }
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    neighbors.insert(neighbors.end(), row.begin(), row.end());
    offsets.push_back(static_cast<std::uint32_t>(neighbors.size()));
  }
  SmallGraph g = SmallGraph::from_adjacency(std::move(offsets), std::move(neighbors));
  g.is_cayley = true;
  return g;
}

std::vector<std::uint32_t> bfs_distances(const SmallGraph& g, std::uint32_t source) {
  constexpr std::uint32_t kUnseen = 0xFFFFFFFFu;
  if (source >= g.size()) throw DomainError("source vertex out of range");
  std::vector<std::uint32_t> dist(g.size(), kUnseen), queue;
  queue.reserve(g.size());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t u = queue[head];
    for (const auto* w = g.begin(u); w != g.end(u); ++w) {
      if (dist[*w] == kUnseen) {
        dist[*w] = dist[u] + 1;
        queue.push_back(*w);
      }
    }
  }
  if (queue.size() != g.size()) throw Disconnected("graph is disconnected");
  return dist;
}

DistanceProfile distance_profile(const SmallGraph& g, std::uint32_t source) {
  DistanceProfile p;
  for (auto d : bfs_distances(g, source)) {
    if (d >= p.level_counts.size()) p.level_counts.resize(d + 1);
    ++p.level_counts[d];
    p.total += d;
    p.eccentricity = std::max(p.eccentricity, d);
  }
  return p;
}

std::uint32_t diameter(const SmallGraph& g) {
  std::uint32_t d = 0;
  for (std::uint32_t v = 0; v < g.size(); ++v) d = std::max(d, distance_profile(g, v).eccentricity);
  return d;
}

Rational mean_distance(const SmallGraph& g) {
  if (g.size() < 2) throw DomainError("mean distance needs at least 2 vertices");
  std::uint64_t total = 0;
  for (std::uint32_t v = 0; v < g.size(); ++v) total += distance_profile(g, v).total;
  const std::uint64_t n = g.size();
  return ratio(total, n * (n - 1));
}

Rational mean_distance_from(const SmallGraph& g, std::uint32_t x) {
  if (g.size() < 2) throw DomainError("mean distance needs at least 2 vertices");
  return ratio(distance_profile(g, x).total, g.size() - 1);
}

bool check_vertex_transitive_consistency(const SmallGraph& g) {
  const auto reference = distance_profile(g, 0).level_counts;
  for (std::uint32_t v = 1; v < g.size(); ++v) {
    if (g.degree(v) != g.degree(0)) return false;
    if (distance_profile(g, v).level_counts != reference) return false;
  }
  return true;
}

TheoremCheck verify_demigod_theorem(const SmallGraph& g) {
  if (!g.is_cayley && !check_vertex_transitive_consistency(g)) throw NotDistanceRegular("distance multisets differ between vertices; graph is not vertex-transitive");
  const auto profile = distance_profile(g, 0);
  TheoremCheck r;
  r.diameter = profile.eccentricity;
  r.mean = ratio(profile.total, g.size() - 1);
  r.holds = Rational(r.diameter) < r.mean * Rational(2);
  return r;
}

CliquePathResult clique_path_ratio(std::uint32_t n) {
  const SmallGraph g = clique_path_graph(n);
  CliquePathResult r;
  r.diameter = diameter(g);
  r.mean = mean_distance(g);
  r.ratio = Rational(r.diameter) / r.mean;
  return r;
}

PocketCubeOracle pocket_cube_bfs() {
  // Slots other than DBL, in order; DBL (index 6) never moves under U, R, F.
  constexpr std::array<int, 7> kSlots{URF, UFL, ULB, UBR, DFR, DLF, DRB};
  constexpr std::uint32_t kPerms = 5040, kTwists = 729;
  const std::array<Face, 3> faces{Face::U, Face::R, Face::F};

  auto slot_index = [&](int corner) {
    return static_cast<int>(std::find(kSlots.begin(), kSlots.end(), corner) - kSlots.begin());
  };

  std::vector<std::array<std::uint16_t, 9>> perm_move(kPerms), twist_move(kTwists);
  for (std::uint32_t r = 0; r < kPerms; ++r) {
    std::array<std::uint8_t, 7> p;
    perm_unrank(r, p.data(), 7);
    CubieState c;
    for (int i = 0; i < 7; ++i) c.corner_perm[kSlots[i]] = static_cast<std::uint8_t>(kSlots[p[i]]);
    for (int m = 0; m < 9; ++m) {
      const CubieState n = compose(c, move_cube({faces[m / 3], static_cast<std::uint8_t>(m % 3 + 1)}));
      std::array<std::uint8_t, 7> q;
      for (int i = 0; i < 7; ++i) q[i] = static_cast<std::uint8_t>(slot_index(n.corner_perm[kSlots[i]]));
      perm_move[r][m] = static_cast<std::uint16_t>(perm_rank(q.data(), 7));
    }
  }
  for (std::uint32_t r = 0; r < kTwists; ++r) {
    CubieState c;
    int sum = 0;
    std::uint32_t x = r;
    for (int i = 5; i >= 0; --i) {
      c.corner_ori[kSlots[i]] = static_cast<std::uint8_t>(x % 3);
      sum += x % 3;
      x /= 3;
    }
    c.corner_ori[kSlots[6]] = static_cast<std::uint8_t>((3 - sum % 3) % 3);
    for (int m = 0; m < 9; ++m) {
      const CubieState n = compose(c, move_cube({faces[m / 3], static_cast<std::uint8_t>(m % 3 + 1)}));
      std::uint32_t y = 0;
      for (int i = 0; i < 6; ++i) y = y * 3 + n.corner_ori[kSlots[i]];
      twist_move[r][m] = static_cast<std::uint16_t>(y);
    }
  }

  constexpr std::uint8_t kUnseen = 0xFF;
  std::vector<std::uint8_t> depth(std::size_t{kPerms} * kTwists, kUnseen);
  depth[0] = 0;
  PocketCubeOracle out;
  out.level_counts.push_back(1);
  std::uint64_t total = 0;
  for (std::uint8_t d = 0;; ++d) {
    std::uint64_t found = 0;
    for (std::uint32_t i = 0; i < depth.size(); ++i) {
      if (depth[i] != d) continue;
      const std::uint32_t p = i / kTwists, t = i % kTwists;
      for (int m = 0; m < 9; ++m) {
        const std::uint32_t j = std::uint32_t{perm_move[p][m]} * kTwists + twist_move[t][m];
        if (depth[j] == kUnseen) {
          depth[j] = static_cast<std::uint8_t>(d + 1);
          ++found;
        }
      }
    }
    if (!found) break;
    out.level_counts.push_back(found);
    total += found * (d + 1u);
  }
  out.max_depth = static_cast<std::uint32_t>(out.level_counts.size() - 1);
  for (auto c : out.level_counts) out.states += c;
  out.mean = ratio(total, out.states - 1);
  return out;
}

}  // namespace demigod
