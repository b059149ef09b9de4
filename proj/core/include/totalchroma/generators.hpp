#pragma once

#include <cstdint>

#include "totalchroma/graph.hpp"

namespace totalchroma {

/// Simple r-regular graph on n vertices from the pairing model. Loops and
/// repeated pairs are repaired with random double-edge swaps; the pairing is
/// redrawn when a repair stalls. For r > (n-1)/2 the complement of an
/// (n-1-r)-regular graph is returned instead. Deterministic in `seed`.
///
/// Throws InfeasibleError when n*r is odd or r >= n, and Error when the retry
/// budget runs out.
Graph gen_random_regular(Vertex n, Vertex r, std::uint64_t seed);

/// Erdos-Renyi G(n, p).
Graph gen_gnp(Vertex n, double p, std::uint64_t seed);

}  // namespace totalchroma
