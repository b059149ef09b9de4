#include <gtest/gtest.h>

#include "test_support.hpp"
#include "totalchroma/oracle.hpp"

namespace totalchroma {
namespace {

Graph from_pairs(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  Graph g(n);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

TEST(Oracle, SmallTotalChromaticNumbers) {
  EXPECT_EQ(oracle::brute_force_total_chromatic(Graph(1), 5), 1);
  EXPECT_EQ(oracle::brute_force_total_chromatic(from_pairs(2, {{0, 1}}), 5), 3);
  // C_5: 5 is not divisible by 3, so the cycle needs Delta + 2.
  EXPECT_EQ(oracle::brute_force_total_chromatic(from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}), 6), 4);
  EXPECT_EQ(oracle::brute_force_total_chromatic(from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}), 6), 3);
  // K_n has chi_T = n for odd n and n + 1 for even n.
  EXPECT_EQ(oracle::brute_force_total_chromatic(from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), 6), 5);
  EXPECT_EQ(oracle::brute_force_total_chromatic(from_pairs(4, {{0, 1}, {0, 2}, {0, 3}}), 6), 4);
}

TEST(Oracle, CapIsHonoured) {
  EXPECT_FALSE(oracle::brute_force_total_chromatic(from_pairs(2, {{0, 1}}), 2).has_value());
  EXPECT_FALSE(oracle::total_colorable(from_pairs(2, {{0, 1}}), 2));
  EXPECT_TRUE(oracle::total_colorable(from_pairs(2, {{0, 1}}), 3));
}

TEST(Oracle, MaxMatchingSmallCases) {
  EXPECT_EQ(oracle::brute_force_max_matching(from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})), 2U);
  EXPECT_EQ(oracle::brute_force_max_matching(from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})), 2U);
  EXPECT_EQ(oracle::brute_force_max_matching(Graph(3)), 0U);
}

TEST(Oracle, VerifyRainbow) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  PartialEdgeColoring phi(g, 2);
  phi.assign(0, 1);
  phi.assign(1, 1);
  EXPECT_TRUE(oracle::verify_rainbow(phi, std::vector<EdgeId>{}));
  EXPECT_FALSE(oracle::verify_rainbow(phi, std::vector<EdgeId>{0, 1}));
  phi.recolor(1, 2);
  EXPECT_TRUE(oracle::verify_rainbow(phi, std::vector<EdgeId>{0, 1}));
  phi.unassign(1);
  EXPECT_THROW(oracle::verify_rainbow(phi, std::vector<EdgeId>{0, 1}), PreconditionError);
}

TEST(Oracle, GraphCensus) {
  // Numbers of graphs up to isomorphism on n vertices.
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (Vertex n = 0; n <= 7; ++n) EXPECT_EQ(oracle::nonisomorphic_graphs(n).size(), expected[n]) << n;
}

TEST(Oracle, TotalChromaticWithinKnownBounds) {
  testing::Rng rng(14);
  for (int t = 0; t < 40; ++t) {
    const Graph g = testing::random_graph(rng, rng.uniform(1, 7), rng.real());
    const auto delta = static_cast<Color>(g.max_degree());
    const auto chi = oracle::brute_force_total_chromatic(g, delta + 2);
    ASSERT_TRUE(chi.has_value());
    EXPECT_GE(*chi, delta + 1);
    EXPECT_EQ(oracle::brute_force_total_chromatic(g, delta + 2), chi);
  }
}

}  // namespace
}  // namespace totalchroma
