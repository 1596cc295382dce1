#include "demigod/cayley.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "demigod/errors.hpp"

namespace demigod {
namespace {

std::vector<std::uint32_t> sorted(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(Cayley, SmallGroupsHaveExpectedOrders) {
  std::istringstream s3("(2,1,3)\n(1,3,2)\n");
  EXPECT_EQ(build_cayley(parse_presentation(s3), 100).size(), 6u);
  EXPECT_EQ(build_cayley(transposition_presentation(4), 100).size(), 24u);
  EXPECT_EQ(build_cayley(dihedral_presentation(7), 100).size(), 14u);
  EXPECT_EQ(build_cayley(hypercube_presentation(5), 100).size(), 32u);
}

TEST(Cayley, CyclicPresentationGivesACycle) {
  const SmallGraph g = build_cayley(cyclic_presentation(12), 100);
  EXPECT_EQ(g.size(), 12u);
  for (std::uint32_t v = 0; v < g.size(); ++v) EXPECT_EQ(g.degree(v), 2u);
  EXPECT_EQ(diameter(g), 6u);
  EXPECT_EQ(mean_distance(g), mean_distance(cycle_graph(12)));
}

TEST(Cayley, Errors) {
  std::istringstream one_way("(2,3,1)\n");
  EXPECT_THROW(build_cayley(parse_presentation(one_way), 100), NotClosedUnderInverse);
  std::istringstream fixed("(2,3,1)\n");
  EXPECT_EQ(build_cayley(parse_presentation(fixed, true), 100).size(), 3u);
  EXPECT_THROW(build_cayley(transposition_presentation(5), 100), GroupTooLarge);
  std::istringstream bad("(1,1,2)\n");
  EXPECT_THROW(parse_presentation(bad), ParseFailure);
}

TEST(Bfs, CycleAndHypercube) {
  EXPECT_EQ(sorted(bfs_distances(cycle_graph(6), 4)), (std::vector<std::uint32_t>{0, 1, 1, 2, 2, 3}));
  const SmallGraph q = hypercube_graph(6);
  for (std::uint32_t src : {0u, 13u, 63u}) {
    const auto d = bfs_distances(q, src);
    for (std::uint32_t v = 0; v < q.size(); ++v) EXPECT_EQ(d[v], static_cast<std::uint32_t>(std::popcount(v ^ src)));
  }
}

TEST(Bfs, Disconnected) {
  const SmallGraph g = SmallGraph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(bfs_distances(g, 0), Disconnected);
  EXPECT_THROW(diameter(g), Disconnected);
}

TEST(ClosedForms, Cycles) {
  for (std::int64_t n = 2; n <= 50; ++n) {
    const SmallGraph g = cycle_graph(static_cast<std::uint32_t>(2 * n));
    EXPECT_EQ(diameter(g), static_cast<std::uint32_t>(n));
    EXPECT_EQ(mean_distance(g), Rational(n * n, 2 * n - 1)) << n;
  }
}

TEST(ClosedForms, Hypercubes) {
  for (std::int64_t n = 2; n <= 10; ++n) {
    const SmallGraph g = hypercube_graph(static_cast<std::uint32_t>(n));
    EXPECT_EQ(mean_distance(g), Rational(n << (n - 1), (std::int64_t{1} << n) - 1)) << n;
    EXPECT_EQ(mean_distance_from(g, 0), mean_distance(g));
  }
}

TEST(VertexTransitivity, Examples) {
  EXPECT_TRUE(check_vertex_transitive_consistency(cycle_graph(7)));
  EXPECT_TRUE(check_vertex_transitive_consistency(build_cayley(transposition_presentation(4), 100)));
  EXPECT_TRUE(check_vertex_transitive_consistency(build_cayley(dihedral_presentation(9), 100)));
  EXPECT_FALSE(check_vertex_transitive_consistency(clique_path_graph(9)));
  EXPECT_THROW(verify_demigod_theorem(clique_path_graph(9)), NotDistanceRegular);
}

TEST(VertexTransitivity, MeanFromAnyVertexMatchesAllPairs) {
  std::vector<SmallGraph> graphs{cycle_graph(9), hypercube_graph(4), complete_graph(6),
                                 build_cayley(transposition_presentation(4), 100),
                                 build_cayley(dihedral_presentation(8), 100)};
  for (const auto& g : graphs) {
    ASSERT_TRUE(check_vertex_transitive_consistency(g));
    for (std::uint32_t v = 0; v < g.size(); ++v) EXPECT_EQ(mean_distance_from(g, v), mean_distance(g));
  }
}

TEST(DemigodTheorem, HoldsOnCayleyGraphs) {
  for (std::uint32_t n = 3; n <= 40; ++n) EXPECT_TRUE(verify_demigod_theorem(cycle_graph(n)).holds) << n;
  for (std::uint32_t n = 2; n <= 8; ++n) EXPECT_TRUE(verify_demigod_theorem(hypercube_graph(n)).holds) << n;
  for (std::uint32_t n = 3; n <= 12; ++n)
    EXPECT_TRUE(verify_demigod_theorem(build_cayley(dihedral_presentation(n), 1000)).holds) << n;
  EXPECT_TRUE(verify_demigod_theorem(build_cayley(transposition_presentation(4), 100)).holds);
  const auto k = verify_demigod_theorem(complete_graph(5));
  EXPECT_EQ(k.diameter, 1u);
  EXPECT_EQ(k.mean, Rational(1));
}

TEST(CliquePath, MatchesFloydWarshallOracle) {
  // D and mu from an all-pairs Floyd-Warshall computation done separately.
  const std::vector<std::tuple<std::uint32_t, std::uint32_t, Rational>> expected{
      {4, 3, Rational(5, 3)},     {9, 4, Rational(59, 33)},    {16, 5, Rational(35, 19)},
      {25, 6, Rational(163, 87)}, {36, 7, Rational(233, 123)}, {49, 8, Rational(21, 11)},
      {64, 9, Rational(409, 213)}};
  Rational previous(0);
  for (const auto& [n, d, mu] : expected) {
    const auto r = clique_path_ratio(n);
    EXPECT_EQ(r.diameter, d);
    EXPECT_EQ(r.mean, mu);
    EXPECT_EQ(r.ratio, Rational(d) / mu);
    EXPECT_GT(r.ratio, previous);
    previous = r.ratio;
  }
  EXPECT_THROW(clique_path_ratio(10), NotPerfectSquare);
  EXPECT_THROW(clique_path_ratio(1), NotPerfectSquare);
}

TEST(EdgeList, Parse) {
  std::istringstream in("# triangle\n0 1\n1 2\n\n2 0\n");
  const SmallGraph g = parse_edge_list(in);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  std::istringstream bad("0 1\n1 x\n");
  try {
    parse_edge_list(bad);
    FAIL();
  } catch (const ParseFailure& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(PocketCube, PresentationFixesOneCorner) {
  const auto p = pocket_cube_presentation();
  ASSERT_EQ(p.generators.size(), 9u);
  EXPECT_TRUE(p.closed_under_inverse());
  // Every generator fixes the same three points (the DBL stickers).
  for (std::uint8_t pt = 0; pt < 24; ++pt) {
    const bool fixed_by_all =
        std::all_of(p.generators.begin(), p.generators.end(), [&](const Permutation& g) { return g[pt] == pt; });
    EXPECT_EQ(fixed_by_all, pt / 3 == 6) << int(pt);
  }
}

TEST(PocketCube, RankedBfsAndCayleyClosureAgree) {
  const auto oracle = pocket_cube_bfs();
  EXPECT_EQ(oracle.states, 3674160u);
  EXPECT_EQ(oracle.states, 5040u * 729u);
  EXPECT_EQ(oracle.max_depth, 11u);
  const std::vector<std::uint64_t> levels{1, 9, 54, 321, 1847, 9992, 50136, 227536, 870072, 1887748, 623800, 2644};
  EXPECT_EQ(oracle.level_counts, levels);
  EXPECT_EQ(oracle.mean, Rational(32169388, 3674159));

  const SmallGraph g = build_cayley(pocket_cube_presentation(), 4000000);
  EXPECT_EQ(g.size(), oracle.states);
  EXPECT_EQ(distance_profile(g, 0).level_counts, levels);
  const auto check = verify_demigod_theorem(g);
  EXPECT_EQ(check.diameter, 11u);
  EXPECT_EQ(check.mean, oracle.mean);
  EXPECT_TRUE(check.holds);
}

}  // namespace
}  // namespace demigod
