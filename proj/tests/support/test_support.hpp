#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "totalchroma/coloring.hpp"
#include "totalchroma/graph.hpp"
#include "totalchroma/hypergraph.hpp"
#include "totalchroma/matching.hpp"

namespace totalchroma::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  double real() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_); }
  bool chance(double p) { return real() < p; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }
  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), eng_);
  }

 private:
  std::mt19937_64 eng_;
};

Graph random_graph(Rng& rng, Vertex n, double p);

struct ExtensionInstance {
  Hypergraph h;
  std::vector<EdgeId> matching;
  std::optional<Vertex> x;
};

/// Hypergraph with a matching of hyperedges of size <= c (at least one of size
/// c when the matching is nonempty), size-2 edges elsewhere and possibly a
/// special vertex whose neighbours avoid V(M). Meets every precondition of
/// extend_hypergraph at the default palette.
ExtensionInstance random_extension_instance(Rng& rng, Vertex max_n, int c);

struct NearBipartiteInstance {
  Graph g0;
  Bipartition bip;
  Matching m;
  std::vector<Vertex> x_neighbors;
  /// max(Delta(G), k_B + 1) for G = g0 + x, counted here from scratch.
  Color k = 0;
};

NearBipartiteInstance random_near_bipartite_instance(Rng& rng, Vertex max_side);

/// Colors a random subset of edges, each with a random color free at all its
/// members; roughly `fill` of the edges end up colored.
PartialEdgeColoring random_partial_coloring(Rng& rng, const Hypergraph& h, Color k, double fill);

std::vector<Color> snapshot(const PartialEdgeColoring& phi);

/// Random r-regular graph with r close to ratio*n, r < 3n/4, n*r even, and
/// eps = 2r/n - 1.
struct DenseInstance {
  Graph g;
  Vertex r = 0;
  double eps = 0;
};
Vertex dense_degree(Vertex n, double ratio);
DenseInstance dense_instance(Vertex n, double ratio, std::uint64_t seed);

/// Independent properness check: no two edges sharing a vertex carry the same
/// color. Returns a description of the first clash.
std::optional<std::string> edge_clash(const Hypergraph& h, const std::vector<Color>& colors);

/// Every vertex of `host` meets exactly one edge of each color in [lo, hi]
/// among the edges selected by `member`.
std::optional<std::string> colors_are_perfect_matchings(const Graph& host, const std::vector<char>& member,
                                                        const PartialEdgeColoring& phi, Color lo, Color hi);

/// Smallest t with t^den >= m^num, by counting up.
long long ceil_power(long long m, int num, int den);

}  // namespace totalchroma::testing
