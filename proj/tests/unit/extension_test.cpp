#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"
#include "totalchroma/extension.hpp"
#include "totalchroma/oracle.hpp"

namespace totalchroma {
namespace {

// Total, proper, within the palette, and rainbow on `rainbow`.
std::optional<std::string> audit(const PartialEdgeColoring& phi, const std::vector<EdgeId>& rainbow) {
  const auto colors = testing::snapshot(phi);
  for (std::size_t e = 0; e < colors.size(); ++e)
    if (colors[e] < 1 || colors[e] > phi.palette()) return "edge " + std::to_string(e) + " is uncolored or out of range";
  if (auto bad = testing::edge_clash(phi.host(), colors)) return bad;
  std::set<Color> seen;
  for (EdgeId e : rainbow)
    if (!seen.insert(colors[static_cast<std::size_t>(e)]).second) return "rainbow repeats a color";
  return std::nullopt;
}

TEST(ExtendHypergraph, SingleEdge) {
  Hypergraph h(3);
  const EdgeId e = h.add_edge({0, 1});
  const std::vector<EdgeId> m{e};
  const auto res = extend_hypergraph(h, m, Vertex{2});
  EXPECT_EQ(res.coloring.palette(), 4);
  EXPECT_TRUE(res.coloring.is_colored(e));
  EXPECT_EQ(res.rainbow, m);
}

TEST(ExtendHypergraph, Preconditions) {
  Hypergraph h(6);
  const EdgeId big = h.add_edge({0, 1, 2});
  const EdgeId other = h.add_edge({2, 3, 4});
  h.add_edge({4, 5});
  EXPECT_THROW(extend_hypergraph(h, std::vector<EdgeId>{big, other}, std::nullopt), PreconditionError);
  EXPECT_THROW(extend_hypergraph(h, std::vector<EdgeId>{big}, std::nullopt), PreconditionError);
  Hypergraph g(5);
  const EdgeId m0 = g.add_edge({0, 1, 2});
  g.add_edge({3, 0});
  EXPECT_THROW(extend_hypergraph(g, std::vector<EdgeId>{m0}, Vertex{3}), PreconditionError);
  ExtensionOptions low;
  low.palette = 2;
  EXPECT_THROW(extend_hypergraph(g, std::vector<EdgeId>{m0}, std::nullopt, low), PreconditionError);
}

TEST(ExtendHypergraph, RandomInstances) {
  testing::Rng rng(404);
  for (int t = 0; t < 200; ++t) {
    const int c = rng.uniform(2, 4);
    const auto inst = testing::random_extension_instance(rng, 40, c);
    const auto res = extend_hypergraph(inst.h, inst.matching, inst.x);
    // An edgeless hypergraph needs no colors at all.
    const std::size_t expected_palette =
        inst.h.num_edges() == 0 ? 0 : inst.h.max_degree() + 2 * inst.h.rank() - 1;
    ASSERT_EQ(static_cast<std::size_t>(res.coloring.palette()), expected_palette);
    std::vector<EdgeId> expected = inst.matching;
    if (inst.x)
      for (EdgeId e : inst.h.incident(*inst.x)) expected.push_back(e);
    std::sort(expected.begin(), expected.end());
    ASSERT_EQ(res.rainbow, expected);
    const auto bad = audit(res.coloring, res.rainbow);
    ASSERT_FALSE(bad.has_value()) << "instance " << t << ": " << *bad;
    ASSERT_FALSE(verify_edge_coloring(res.coloring).has_value());
    ASSERT_TRUE(oracle::verify_rainbow(res.coloring, res.rainbow));
  }
}

TEST(ExtendNearBipartite, SingleEdge) {
  Graph g0(2);
  g0.add_edge(0, 1);
  const Vertex a[] = {0};
  Matching m;
  m.edges.push_back({0, 1});
  const auto res = extend_near_bipartite(g0, Bipartition::from_sides(2, a), m, {});
  EXPECT_EQ(res.k, 2);
  EXPECT_TRUE(res.coloring.is_colored(0));
}

TEST(ExtendNearBipartite, SixCycle) {
  Graph g0(6);
  for (Vertex v = 0; v < 6; ++v) g0.add_edge(v, (v + 1) % 6);
  const Vertex a[] = {0, 2, 4};
  Matching m;
  m.edges.push_back({0, 1});
  const std::vector<Vertex> xn{3, 4};
  const auto res = extend_near_bipartite(g0, Bipartition::from_sides(6, a), m, xn);
  // Vertex 3 lies in B and has degree 3 once x is added, so k = k_B + 1 = 4.
  EXPECT_EQ(res.k, 4);
  std::vector<EdgeId> rainbow{*res.graph.find_edge(0, 1), *res.graph.find_edge(res.x, 3),
                              *res.graph.find_edge(res.x, 4)};
  EXPECT_FALSE(audit(res.coloring, rainbow).has_value());
}

TEST(ExtendNearBipartite, RandomInstances) {
  testing::Rng rng(505);
  for (int t = 0; t < 200; ++t) {
    const auto inst = testing::random_near_bipartite_instance(rng, 12);
    const auto res = extend_near_bipartite(inst.g0, inst.bip, inst.m, inst.x_neighbors);
    ASSERT_EQ(res.k, inst.k) << "instance " << t;
    ASSERT_EQ(res.coloring.palette(), inst.k);
    std::vector<EdgeId> rainbow;
    for (const auto& e : inst.m.edges) rainbow.push_back(*res.graph.find_edge(e.u, e.v));
    for (Vertex w : inst.x_neighbors) rainbow.push_back(*res.graph.find_edge(res.x, w));
    const auto bad = audit(res.coloring, rainbow);
    ASSERT_FALSE(bad.has_value()) << "instance " << t << ": " << *bad;
  }
}

TEST(ExtendNearBipartite, Preconditions) {
  Graph g0(4);
  g0.add_edge(0, 1);
  g0.add_edge(0, 2);
  const Vertex a[] = {0, 3};
  const Bipartition bip = Bipartition::from_sides(4, a);
  Matching m;
  m.edges.push_back({0, 1});
  EXPECT_THROW(extend_near_bipartite(g0, bip, m, std::vector<Vertex>{1}), PreconditionError);
  Graph inside(4);
  inside.add_edge(0, 3);
  EXPECT_THROW(extend_near_bipartite(inside, bip, Matching{}, {}), PreconditionError);
  // k = max(Delta, k_B + 1) = 2 but |M| + d(x) = 3.
  Graph sparse(6);
  sparse.add_edge(0, 1);
  sparse.add_edge(2, 3);
  const Vertex a2[] = {0, 2, 4};
  Matching two;
  two.edges = {{0, 1}, {2, 3}};
  EXPECT_THROW(extend_near_bipartite(sparse, Bipartition::from_sides(6, a2), two, std::vector<Vertex>{4}),
               PreconditionError);
}

}  // namespace
}  // namespace totalchroma
