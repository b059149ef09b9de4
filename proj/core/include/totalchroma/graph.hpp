#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "totalchroma/types.hpp"

namespace totalchroma {

/// Unordered vertex pair, stored with u < v.
struct EdgeEnds {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;

  static EdgeEnds normalized(Vertex a, Vertex b) { return a < b ? EdgeEnds{a, b} : EdgeEnds{b, a}; }
  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool contains(Vertex w) const { return w == u || w == v; }
  friend bool operator==(const EdgeEnds&, const EdgeEnds&) = default;
  friend auto operator<=>(const EdgeEnds&, const EdgeEnds&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Simple undirected graph on vertices [0, n). Edge ids are dense and follow
/// insertion order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n);

  /// Throws PreconditionError on a loop, a repeated pair, or an id outside [0, n).
  static Graph from_edges(Vertex n, std::span<const EdgeEnds> edges);

  EdgeId add_edge(Vertex u, Vertex v);
  Vertex add_vertex();

  Vertex num_vertices() const { return static_cast<Vertex>(adjacency_.size()); }
  EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }
  const EdgeEnds& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<EdgeEnds>& edges() const { return edges_; }
  std::span<const Incidence> incident(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
  std::size_t max_degree() const;
  std::size_t min_degree() const;
  /// The common degree when the graph is regular (an empty vertex set counts as 0-regular).
  std::optional<std::size_t> regular_degree() const;

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }
  std::vector<Vertex> neighbors(Vertex v) const;

  /// Same vertex count and same edge set, irrespective of edge ids.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  static std::uint64_t key(Vertex u, Vertex v);
  void check_vertex(Vertex v) const;

  std::vector<EdgeEnds> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
};

/// Two-sided vertex partition. `in_a[v]` selects the side of v.
class Bipartition {
 public:
  Bipartition() = default;
  explicit Bipartition(std::vector<bool> in_a) : in_a_(std::move(in_a)) {}
  static Bipartition from_sides(Vertex n, std::span<const Vertex> a_side);

  Vertex num_vertices() const { return static_cast<Vertex>(in_a_.size()); }
  bool in_a(Vertex v) const { return in_a_[static_cast<std::size_t>(v)]; }
  bool in_b(Vertex v) const { return !in_a(v); }
  void assign(Vertex v, bool to_a) { in_a_[static_cast<std::size_t>(v)] = to_a; }
  std::vector<Vertex> side_a() const;
  std::vector<Vertex> side_b() const;
  std::size_t size_a() const;
  std::size_t size_b() const { return in_a_.size() - size_a(); }
  /// Neighbours of v on side A minus neighbours on side B.
  long long degree_imbalance(const Graph& g, Vertex v) const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  std::vector<bool> in_a_;
};

/// Pairwise-disjoint vertex pairs.
struct Matching {
  std::vector<EdgeEnds> edges;

  std::size_t size() const { return edges.size(); }
  bool empty() const { return edges.empty(); }
  /// V(M), sorted.
  std::vector<Vertex> saturated() const;
  /// Partner of every vertex, kNoVertex when unsaturated.
  std::vector<Vertex> mates(Vertex n) const;
  /// True iff the pairs are disjoint and, when `host` is given, all are edges of it.
  bool is_valid(Vertex n, const Graph* host = nullptr) const;
  bool is_perfect(Vertex n) const { return is_valid(n) && 2 * edges.size() == static_cast<std::size_t>(n); }
};

/// Edge {u,v} is present iff u != v and {u,v} is absent from g.
Graph complement(const Graph& g);

/// Q[A,B]: edges of g with exactly one end in each side. Vertex ids are kept.
Graph induced_bipartite(const Graph& g, const Bipartition& p);

/// Edges with both ends on the requested side (Q[A] or Q[B]); vertex ids are kept.
Graph induced_side(const Graph& g, const Bipartition& p, bool side_a);

}  // namespace totalchroma
