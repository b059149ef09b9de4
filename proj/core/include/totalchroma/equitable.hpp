#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "totalchroma/coloring.hpp"
#include "totalchroma/graph.hpp"

namespace totalchroma {

/// Proper vertex coloring with colors 1..k whose class sizes differ by at most
/// one (Kierstead-Kostochka-Mydlarz-Szemeredi). Requires k >= Delta(g) + 1.
std::vector<Color> equitable_vertex_coloring(const Graph& g, Color k);

/// Proper edge coloring of all edges with k colors (Misra-Gries fan rotation).
/// k defaults to Delta(g) + 1; a smaller k throws PreconditionError.
PartialEdgeColoring vizing_edge_coloring(const Graph& g, Color k = 0);

/// Rebalances a full proper edge coloring of a graph so every class has
/// floor(m/k) or ceil(m/k) edges, by switching alternating paths between the
/// largest and smallest class. Mutates phi.
void balance_class_sizes(PartialEdgeColoring& phi);

struct BalanceStats {
  std::uint64_t switches = 0;
  long long initial_gap = 0;
  long long final_gap = 0;
};

/// Switches alternating paths until the counts |missing^-1(i)| pairwise differ
/// by at most 5, never touching an edge of `rainbow`. phi must color every
/// edge of a graph host, and the rainbow edges must carry distinct colors.
BalanceStats balance_missing(PartialEdgeColoring& phi, std::span<const EdgeId> rainbow);

/// max_i |missing^-1(i)| - min_i |missing^-1(i)|.
long long missing_gap(const PartialEdgeColoring& phi);

}  // namespace totalchroma
