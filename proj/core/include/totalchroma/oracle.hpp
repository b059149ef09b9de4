#pragma once

#include <optional>
#include <span>
#include <vector>

#include "totalchroma/coloring.hpp"
#include "totalchroma/graph.hpp"

// Exhaustive reference computations. Nothing here calls into the coloring,
// matching or extension algorithms; only the plain data types are shared.
namespace totalchroma::oracle {

/// Exact total chromatic number by backtracking over the total graph, trying
/// k = Delta+1, Delta+2, ... up to cap. nullopt when it exceeds cap. Graphs
/// with more than 64 vertices plus edges are rejected with PreconditionError.
std::optional<Color> brute_force_total_chromatic(const Graph& g, Color cap);

/// True iff a total coloring with k colors exists.
bool total_colorable(const Graph& g, Color k);

/// Maximum matching size by exhaustive search over vertex subsets (n <= 20).
std::size_t brute_force_max_matching(const Graph& g);

/// True iff the edges of f carry pairwise distinct colors. Throws
/// PreconditionError if a member of f is uncolored.
bool verify_rainbow(const PartialEdgeColoring& phi, std::span<const EdgeId> f);

/// One representative per isomorphism class of graphs on n vertices (n <= 8).
std::vector<Graph> nonisomorphic_graphs(Vertex n);

}  // namespace totalchroma::oracle
