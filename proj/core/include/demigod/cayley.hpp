#pragma once

// Small explicit graphs, Cayley graphs of permutation groups, exact BFS
// distances, and a ranked full-BFS of the 2x2x2 cube.

#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace demigod {

using Rational = boost::rational<std::int64_t>;

// Undirected graph in compressed adjacency form.
class SmallGraph {
 public:
  SmallGraph() = default;
  // Duplicate edges and self-loops are dropped; edges are made symmetric.
  static SmallGraph from_edges(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);
  // Adjacency lists given directly; must already be symmetric.
  static SmallGraph from_adjacency(std::vector<std::uint32_t> offsets, std::vector<std::uint32_t> neighbors);

  std::uint32_t size() const { return static_cast<std::uint32_t>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::size_t edge_count() const { return neighbors_.size() / 2; }
  const std::uint32_t* begin(std::uint32_t v) const { return neighbors_.data() + offsets_[v]; }
  const std::uint32_t* end(std::uint32_t v) const { return neighbors_.data() + offsets_[v + 1]; }
  std::uint32_t degree(std::uint32_t v) const { return offsets_[v + 1] - offsets_[v]; }

  // Set by build_cayley: the graph is vertex-transitive by construction.
  bool is_cayley = false;
  std::vector<std::string> labels;

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> neighbors_;
};

SmallGraph cycle_graph(std::uint32_t n);
SmallGraph hypercube_graph(std::uint32_t dim);
SmallGraph complete_graph(std::uint32_t n);
// A clique on n vertices with a pendant path of sqrt(n) vertices hung off
// vertex 0. NotPerfectSquare unless n is a perfect square >= 4.
SmallGraph clique_path_graph(std::uint32_t n);

// "u v" per line, 0-indexed; blank lines and '#' comments ignored.
SmallGraph parse_edge_list(std::istream& in);

// perm[i] is the image of point i. Elements multiply left to right:
// (a * b)[i] = b[a[i]].
using Permutation = std::vector<std::uint8_t>;

struct GroupPresentation {
  std::vector<Permutation> generators;
  bool closed_under_inverse() const;
};

// One permutation per line in one-line notation, 1-based, e.g. "(2,1,3)" or
// "2 1 3". With add_inverses, missing inverses are appended.
GroupPresentation parse_presentation(std::istream& in, bool add_inverses = false);

GroupPresentation cyclic_presentation(std::uint32_t n);       // Z_n on n points
GroupPresentation dihedral_presentation(std::uint32_t n);     // D_n on n points
GroupPresentation hypercube_presentation(std::uint32_t dim);  // Z_2^dim on 2*dim points
GroupPresentation transposition_presentation(std::uint32_t k);  // S_k, all transpositions
// U, R, F quarter and half turns acting on the 24 corner stickers; the DBL
// corner never moves.
GroupPresentation pocket_cube_presentation();

// BFS closure from the identity. Vertex 0 is the identity.
// Throws NotClosedUnderInverse, GroupTooLarge.
SmallGraph build_cayley(const GroupPresentation& p, std::uint64_t cap);

// Throws Disconnected.
std::vector<std::uint32_t> bfs_distances(const SmallGraph& g, std::uint32_t source);

struct DistanceProfile {
  std::uint32_t eccentricity = 0;
  std::uint64_t total = 0;  // sum of distances to every other vertex
  std::vector<std::uint64_t> level_counts;
};
DistanceProfile distance_profile(const SmallGraph& g, std::uint32_t source);

// All-pairs values.
std::uint32_t diameter(const SmallGraph& g);
Rational mean_distance(const SmallGraph& g);
// sum_v d(x, v) / (|V| - 1).
Rational mean_distance_from(const SmallGraph& g, std::uint32_t x);

// True iff every vertex has the same sorted distance multiset.
bool check_vertex_transitive_consistency(const SmallGraph& g);

struct TheoremCheck {
  std::uint32_t diameter = 0;
  Rational mean;
  bool holds = false;  // D < 2 mu
};

// Cayley graphs are taken as vertex-transitive and measured from vertex 0;
// other graphs must pass check_vertex_transitive_consistency, else
// NotDistanceRegular.
TheoremCheck verify_demigod_theorem(const SmallGraph& g);

struct CliquePathResult {
  std::uint32_t diameter = 0;
  Rational mean;
  Rational ratio;
};
CliquePathResult clique_path_ratio(std::uint32_t n);

// Full BFS of the 2x2x2 cube (DBL fixed) over a ranked index of
// 7! corner permutations times 3^6 twists, one byte per state.
struct PocketCubeOracle {
  std::uint64_t states = 0;
  std::uint32_t max_depth = 0;
  std::vector<std::uint64_t> level_counts;
  Rational mean;  // from the solved state
};
PocketCubeOracle pocket_cube_bfs();

}  // namespace demigod
