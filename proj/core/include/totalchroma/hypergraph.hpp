#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "totalchroma/graph.hpp"
#include "totalchroma/types.hpp"

namespace totalchroma {

/// Simple hypergraph: every edge has at least two members and two distinct
/// edges share at most one vertex. Members are stored contiguously and every
/// vertex keeps its incidence list, so chain and fan scans are O(degree).
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(Vertex n);

  /// Graph edges become size-2 hyperedges with the same ids.
  static Hypergraph from_graph(const Graph& g);

  /// Validates member ids, size >= 2, distinct members, and simplicity against
  /// every existing edge. Throws PreconditionError and leaves the hypergraph
  /// unchanged on failure.
  EdgeId add_edge(std::span<const Vertex> members);
  EdgeId add_edge(std::initializer_list<Vertex> members) {
    return add_edge(std::span<const Vertex>(members.begin(), members.size()));
  }
  Vertex add_vertex();

  Vertex num_vertices() const { return static_cast<Vertex>(incidence_.size()); }
  EdgeId num_edges() const { return static_cast<EdgeId>(offsets_.size()) - 1; }
  std::span<const Vertex> members(EdgeId e) const {
    const auto b = offsets_[static_cast<std::size_t>(e)];
    return {members_.data() + b, offsets_[static_cast<std::size_t>(e) + 1] - b};
  }
  std::size_t edge_size(EdgeId e) const {
    return offsets_[static_cast<std::size_t>(e) + 1] - offsets_[static_cast<std::size_t>(e)];
  }
  bool contains(EdgeId e, Vertex v) const;
  /// Other end of a size-2 edge.
  Vertex other_end(EdgeId e, Vertex v) const {
    auto m = members(e);
    return m[0] == v ? m[1] : m[0];
  }
  std::span<const EdgeId> incident(Vertex v) const { return incidence_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return incidence_[static_cast<std::size_t>(v)].size(); }
  std::size_t max_degree() const;
  /// Largest edge size (0 for an edgeless hypergraph).
  std::size_t rank() const;
  /// N_H(v): vertices sharing an edge with v, sorted, v excluded.
  std::vector<Vertex> neighborhood(Vertex v) const;
  /// Re-checks every invariant from scratch; used by tests after mutation.
  bool is_simple() const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> members_;
  std::vector<std::vector<EdgeId>> incidence_;
};

}  // namespace totalchroma
