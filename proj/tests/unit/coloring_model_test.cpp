#include <gtest/gtest.h>

#include "test_support.hpp"
#include "totalchroma/equitable.hpp"
#include "totalchroma/io.hpp"
#include "totalchroma/totalizer.hpp"

namespace totalchroma {
namespace {

TEST(MissingColors, IsolatedVertexMissesEverything) {
  Graph g(2);
  const PartialEdgeColoring phi(g, 3);
  EXPECT_EQ(missing_colors(phi, 0).to_vector(), (std::vector<Color>{1, 2, 3}));
}

TEST(MissingColors, TwoColoredEdges) {
  Graph g(3);
  const EdgeId a = g.add_edge(0, 1);
  const EdgeId b = g.add_edge(0, 2);
  PartialEdgeColoring phi(g, 4);
  phi.assign(a, 1);
  phi.assign(b, 3);
  EXPECT_EQ(missing_colors(phi, 0).to_vector(), (std::vector<Color>{2, 4}));
  EXPECT_EQ(phi.colored_degree(0), 2U);
}

TEST(MissingColors, FullStarCenter) {
  Graph g(4);
  for (Vertex v = 1; v < 4; ++v) g.add_edge(0, v);
  PartialEdgeColoring phi(g, 3);
  for (EdgeId e = 0; e < 3; ++e) phi.assign(e, e + 1);
  EXPECT_TRUE(missing_colors(phi, 0).empty());
}

TEST(MissingClass, FourCycleTwoColored) {
  Graph g(4);
  for (Vertex v = 0; v < 4; ++v) g.add_edge(v, (v + 1) % 4);
  PartialEdgeColoring phi(g, 2);
  for (EdgeId e = 0; e < 4; ++e) phi.assign(e, e % 2 + 1);
  EXPECT_TRUE(missing_class(phi, 1).empty());
}

TEST(MissingClass, PathOfTwoEdges) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  PartialEdgeColoring phi(g, 2);
  phi.assign(0, 1);
  phi.assign(1, 2);
  EXPECT_EQ(missing_class(phi, 1), (std::vector<Vertex>{2}));
}

TEST(MissingClass, UncoloredTriangle) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  const PartialEdgeColoring phi(g, 3);
  EXPECT_EQ(missing_class(phi, 1), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_THROW(missing_class(phi, 4), PreconditionError);
}

TEST(MissingClass, ParityOnFullColorings) {
  testing::Rng rng(8);
  for (int t = 0; t < 60; ++t) {
    const Graph g = testing::random_graph(rng, rng.uniform(2, 40), rng.real());
    const auto extra = static_cast<Color>(rng.uniform(1, 3));
    const PartialEdgeColoring phi = vizing_edge_coloring(g, static_cast<Color>(g.max_degree()) + extra);
    for (Color i = 1; i <= phi.palette(); ++i)
      ASSERT_EQ(missing_class(phi, i).size() % 2, static_cast<std::size_t>(g.num_vertices()) % 2);
  }
}

TEST(PartialEdgeColoring, MissingSizeTracksColoredDegree) {
  testing::Rng rng(9);
  for (int t = 0; t < 40; ++t) {
    const auto inst = testing::random_extension_instance(rng, 25, rng.uniform(2, 4));
    const auto k = static_cast<Color>(inst.h.max_degree() + 3);
    PartialEdgeColoring phi = testing::random_partial_coloring(rng, inst.h, k, 0.7);
    for (EdgeId e = 0; e < inst.h.num_edges(); e += 2)
      if (phi.is_colored(e)) phi.unassign(e);
    for (Vertex v = 0; v < inst.h.num_vertices(); ++v) {
      std::size_t colored = 0;
      for (EdgeId e : inst.h.incident(v)) colored += phi.is_colored(e) ? 1 : 0;
      ASSERT_EQ(phi.missing(v).size(), static_cast<std::size_t>(k) - colored);
    }
    EXPECT_FALSE(verify_edge_coloring(phi).has_value());
  }
}

TEST(PartialEdgeColoring, AssignRejectsClashes) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  PartialEdgeColoring phi(g, 2);
  phi.assign(0, 1);
  EXPECT_THROW(phi.assign(1, 1), PreconditionError);
  EXPECT_THROW(phi.assign(1, 3), PreconditionError);
  EXPECT_THROW(phi.assign(0, 2), PreconditionError);
  EXPECT_FALSE(phi.is_colored(1));
}

TEST(VerifyEdgeColoring, FindsClash) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  const Hypergraph h = Hypergraph::from_graph(g);
  const std::vector<Color> colors{2, 2};
  const auto bad = verify_edge_coloring(h, 2, colors);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->at, 1);
  EXPECT_EQ(std::min(bad->first, bad->second), 0);
  EXPECT_EQ(std::max(bad->first, bad->second), 1);
}

TEST(VerifyEdgeColoring, EmptyColoringIsFine) {
  Graph g(4);
  g.add_edge(0, 1);
  EXPECT_FALSE(verify_edge_coloring(PartialEdgeColoring(g, 2)).has_value());
}

TEST(VerifyTotalColoring, SingleEdge) {
  Graph g(2);
  g.add_edge(0, 1);
  TotalColoring ok{3, {1, 2}, {3}};
  EXPECT_FALSE(verify_total_coloring(ok, g, 3).has_value());
  TotalColoring clash{3, {1, 1}, {3}};
  const auto bad = verify_total_coloring(clash, g, 3);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->kind, TotalViolation::Kind::kAdjacentVertices);
  TotalColoring incident{3, {1, 2}, {2}};
  ASSERT_TRUE(verify_total_coloring(incident, g, 3).has_value());
  EXPECT_EQ(verify_total_coloring(incident, g, 3)->kind, TotalViolation::Kind::kIncidence);
  EXPECT_EQ(verify_total_coloring(ok, g, 2)->kind, TotalViolation::Kind::kBudget);
}

TEST(VerifyTotalColoring, GeneralOutputOnFiveCycle) {
  Graph g(5);
  for (Vertex v = 0; v < 5; ++v) g.add_edge(v, (v + 1) % 5);
  EXPECT_FALSE(verify_total_coloring(total_color_general(g), g, 6).has_value());
}

TEST(VerifyTotalColoring, ShapeAndRange) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  EXPECT_EQ(verify_total_coloring(TotalColoring{4, {1, 2}, {3, 4}}, g, 4)->kind, TotalViolation::Kind::kShape);
  EXPECT_EQ(verify_total_coloring(TotalColoring{4, {1, 2, 1}, {3, 5}}, g, 4)->kind, TotalViolation::Kind::kRange);
  EXPECT_EQ(verify_total_coloring(TotalColoring{4, {1, 2, 1}, {3, 3}}, g, 4)->kind,
            TotalViolation::Kind::kAdjacentEdges);
}

TEST(TotalColoringJson, RoundTrip) {
  testing::Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const Graph g = testing::random_graph(rng, rng.uniform(1, 25), rng.real());
    const TotalColoring tc = total_color_general(g);
    const TotalColoring back = total_coloring_from_json(total_coloring_to_json(tc, g), g);
    EXPECT_EQ(back.k, tc.k);
    EXPECT_EQ(back.vertex_colors, tc.vertex_colors);
    EXPECT_EQ(back.edge_colors, tc.edge_colors);
  }
}

}  // namespace
}  // namespace totalchroma
