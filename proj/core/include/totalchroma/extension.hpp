#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "totalchroma/coloring.hpp"
#include "totalchroma/graph.hpp"
#include "totalchroma/hypergraph.hpp"

namespace totalchroma {

/// Raised when an extension exceeds its step budget or reaches a state the
/// recoloring argument rules out. The message carries the offending state.
class ExtensionFailure : public InternalError {
 public:
  using InternalError::InternalError;
};

struct ExtensionStats {
  std::uint64_t greedy = 0;     // edges colored by the initial greedy pass
  std::uint64_t direct = 0;     // uncolored edges closed by a common missing color
  std::uint64_t shifts = 0;     // shift-then-color moves
  std::uint64_t switches = 0;   // chain switches
  std::uint64_t recolorings = 0;
};

struct ExtensionOptions {
  /// Palette size; defaults to Delta(H) + 2c - 1.
  std::optional<Color> palette;
  /// Permit a palette below Delta(H) + 2c - 1. The run may then fail with
  /// ExtensionFailure.
  bool allow_below_bound = false;
  /// Primitive recolorings allowed before giving up; defaults to 10*k*|E|.
  std::optional<std::uint64_t> step_budget;
};

struct ExtensionResult {
  PartialEdgeColoring coloring;
  /// M together with the edges at x, ascending ids.
  std::vector<EdgeId> rainbow;
  ExtensionStats stats;
};

/// Colors every edge of h so that the matching edges and the edges at x get
/// pairwise distinct colors. Preconditions (checked, PreconditionError):
/// `matching` lists pairwise disjoint edge ids, every other edge has size 2,
/// N(x) avoids V(M), and |M| + d(x) does not exceed the palette. Pass
/// std::nullopt for x when there is no special vertex.
ExtensionResult extend_hypergraph(const Hypergraph& h, std::span<const EdgeId> matching, std::optional<Vertex> x,
                                  const ExtensionOptions& options = {});

struct NearBipartiteResult {
  /// g0 plus the new vertex x (id g0.num_vertices()) and its edges, appended
  /// after g0's edges.
  Graph graph;
  Vertex x = kNoVertex;
  Color k = 0;
  PartialEdgeColoring coloring;
  std::vector<EdgeId> rainbow;
  ExtensionStats stats;
};

/// k = max(Delta(G), k_B + 1) edge-coloring of G = g0 + x in which M and the
/// edges at x are rainbow. g0 must be bipartite with respect to `bip`, M must
/// be a matching of g0, x's neighbours must avoid V(M) and k >= |M| + d(x).
NearBipartiteResult extend_near_bipartite(const Graph& g0, const Bipartition& bip, const Matching& m,
                                          std::span<const Vertex> x_neighbors,
                                          std::optional<std::uint64_t> step_budget = std::nullopt);

/// Lower bound palette for a hypergraph: Delta + 2*rank - 1.
Color hypergraph_extension_palette(const Hypergraph& h);

}  // namespace totalchroma
