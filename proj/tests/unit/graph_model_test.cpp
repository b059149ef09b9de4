#include <gtest/gtest.h>

#include "test_support.hpp"
#include "totalchroma/generators.hpp"
#include "totalchroma/io.hpp"

namespace totalchroma {
namespace {

Graph cycle(Vertex n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph complete(Vertex n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

TEST(Complement, CompleteGraphBecomesEmpty) {
  const Graph c = complement(complete(4));
  EXPECT_EQ(c.num_vertices(), 4);
  EXPECT_EQ(c.num_edges(), 0);
}

TEST(Complement, EmptyGraphBecomesTriangle) { EXPECT_EQ(complement(Graph(3)), complete(3)); }

TEST(Complement, FiveCycleIsSelfComplementary) {
  const Graph c = complement(cycle(5));
  EXPECT_EQ(c.num_edges(), 5);
  ASSERT_TRUE(c.regular_degree().has_value());
  EXPECT_EQ(*c.regular_degree(), 2U);
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v) EXPECT_NE(c.has_edge(u, v), cycle(5).has_edge(u, v));
}

TEST(Complement, IsAnInvolution) {
  testing::Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const Graph g = testing::random_graph(rng, rng.uniform(0, 25), rng.real());
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(InducedBipartite, PathKeepsBothEdges) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  const Vertex a[] = {0, 2};
  EXPECT_EQ(induced_bipartite(g, Bipartition::from_sides(3, a)).num_edges(), 2);
}

TEST(InducedBipartite, CompleteFourSplitTwoTwo) {
  const Vertex a[] = {0, 1};
  EXPECT_EQ(induced_bipartite(complete(4), Bipartition::from_sides(4, a)).num_edges(), 4);
}

TEST(InducedBipartite, TriangleWithOneVertexAlone) {
  const Vertex a[] = {0};
  const Graph q = induced_bipartite(complete(3), Bipartition::from_sides(3, a));
  EXPECT_EQ(q.num_edges(), 2);
  EXPECT_TRUE(q.has_edge(0, 1));
  EXPECT_TRUE(q.has_edge(0, 2));
}

TEST(InducedSide, SplitsTheRest) {
  testing::Rng rng(5);
  const Graph g = testing::random_graph(rng, 20, 0.4);
  std::vector<bool> side(20);
  for (std::size_t i = 0; i < side.size(); ++i) side[i] = rng.chance(0.5);
  const Bipartition p(side);
  EXPECT_EQ(induced_bipartite(g, p).num_edges() + induced_side(g, p, true).num_edges() +
                induced_side(g, p, false).num_edges(),
            g.num_edges());
}

TEST(GraphModel, RejectsLoopsAndRepeats) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), PreconditionError);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), PreconditionError);
  EXPECT_THROW(g.add_edge(0, 3), PreconditionError);
  EXPECT_EQ(g.num_edges(), 1);
}

TEST(Hypergraph, RejectsEdgesSharingTwoVertices) {
  Hypergraph h(5);
  h.add_edge({0, 1, 2});
  EXPECT_THROW(h.add_edge({1, 2}), PreconditionError);
  EXPECT_THROW(h.add_edge({3}), PreconditionError);
  EXPECT_THROW(h.add_edge({3, 3}), PreconditionError);
  h.add_edge({2, 3});
  EXPECT_EQ(h.num_edges(), 2);
  EXPECT_TRUE(h.is_simple());
  EXPECT_EQ(h.rank(), 3U);
  EXPECT_EQ(h.neighborhood(2), (std::vector<Vertex>{0, 1, 3}));
}

TEST(GenRandomRegular, FourThreeIsComplete) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) EXPECT_EQ(gen_random_regular(4, 3, seed), complete(4));
}

TEST(GenRandomRegular, SixTwoIsUnionOfCycles) {
  const Graph g = gen_random_regular(6, 2, 9);
  ASSERT_TRUE(g.regular_degree().has_value());
  EXPECT_EQ(*g.regular_degree(), 2U);
  EXPECT_EQ(g.num_edges(), 6);
}

TEST(GenRandomRegular, OddDegreeSumIsInfeasible) {
  EXPECT_THROW(gen_random_regular(5, 3, 1), InfeasibleError);
  EXPECT_THROW(gen_random_regular(4, 4, 1), InfeasibleError);
}

TEST(GenRandomRegular, RegularSimpleAndDeterministic) {
  testing::Rng rng(21);
  for (int t = 0; t < 40; ++t) {
    const Vertex n = rng.uniform(2, 80);
    Vertex r = rng.uniform(0, n - 1);
    if ((static_cast<long long>(n) * r) % 2 != 0) --r;
    const auto seed = static_cast<std::uint64_t>(rng.uniform(0, 1 << 20));
    const Graph g = gen_random_regular(n, r, seed);
    ASSERT_EQ(g.num_vertices(), n);
    for (Vertex v = 0; v < n; ++v) ASSERT_EQ(g.degree(v), static_cast<std::size_t>(r));
    for (const auto& e : g.edges()) ASSERT_NE(e.u, e.v);
    ASSERT_EQ(g, gen_random_regular(n, r, seed));
  }
}

TEST(GraphIo, ParsesPath) {
  const Graph g = parse_graph("p 3 2\ne 0 1\ne 1 2\n");
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
}

TEST(GraphIo, SerializesTriangle) {
  const std::string text = serialize_graph(complete(3));
  EXPECT_EQ(text.rfind("p 3 3", 0), 0U);
  EXPECT_EQ(std::count(text.begin(), text.end(), 'e'), 3);
}

TEST(GraphIo, SelfLoopIsAParseError) {
  EXPECT_THROW(parse_graph("p 1 1\ne 0 0\n"), ParseError);
  try {
    parse_graph("c comment\np 2 1\ne 0 0\n");
    ADD_FAILURE() << "self-loop accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3U);
  }
}

TEST(GraphIo, MalformedInputs) {
  EXPECT_THROW(parse_graph("e 0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("p 2 2\ne 0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("p 2 1\ne 0 5\n"), ParseError);
  EXPECT_THROW(parse_graph("p 2 1\ne 0 x\n"), ParseError);
}

TEST(GraphIo, RoundTrip) {
  testing::Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    const Graph g = testing::random_graph(rng, rng.uniform(0, 30), rng.real());
    EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  }
  testing::Rng hr(4);
  for (int t = 0; t < 30; ++t) {
    const auto inst = testing::random_extension_instance(hr, 20, 3);
    const Hypergraph back = parse_hypergraph(serialize_hypergraph(inst.h));
    ASSERT_EQ(back.num_edges(), inst.h.num_edges());
    for (EdgeId e = 0; e < back.num_edges(); ++e)
      EXPECT_TRUE(std::equal(back.members(e).begin(), back.members(e).end(), inst.h.members(e).begin(),
                             inst.h.members(e).end()));
  }
}

}  // namespace
}  // namespace totalchroma
