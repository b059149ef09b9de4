#pragma once

#include <vector>

#include "totalchroma/graph.hpp"

namespace totalchroma {

/// No perfect matching exists. `violator` is a subset S of side A with
/// |N(S)| < |S|; `neighborhood` is N(S).
class NoPerfectMatching : public Error {
 public:
  NoPerfectMatching(const std::string& what, std::vector<Vertex> violator, std::vector<Vertex> neighborhood)
      : Error(what), violator_(std::move(violator)), neighborhood_(std::move(neighborhood)) {}
  const std::vector<Vertex>& violator() const noexcept { return violator_; }
  const std::vector<Vertex>& neighborhood() const noexcept { return neighborhood_; }

 private:
  std::vector<Vertex> violator_;
  std::vector<Vertex> neighborhood_;
};

/// The complement matching leaves 4 or more vertices unsaturated.
class CoverageShortfall : public Error {
 public:
  CoverageShortfall(const std::string& what, std::size_t unsaturated) : Error(what), unsaturated_(unsaturated) {}
  std::size_t unsaturated() const noexcept { return unsaturated_; }

 private:
  std::size_t unsaturated_;
};

/// Maximum-cardinality matching (Edmonds' blossom algorithm, seeded with a
/// greedy matching). Edges are reported with u < v, sorted.
Matching max_matching(const Graph& g);

/// Perfect matching of a bipartite graph with |A| = |B| (Hopcroft-Karp).
/// Throws PreconditionError if an edge lies inside a side or the sides differ
/// in size, and NoPerfectMatching with a Hall violator otherwise.
Matching bipartite_perfect_matching(const Graph& g, const Bipartition& bip);

/// Maximum matching of the complement of an r-regular graph.
Matching complement_matching(const Graph& g);

/// Complement matching trimmed to cover exactly n-2 (n even) or n-3 (n odd)
/// vertices, dropping edges with the largest vertex ids first. Requires g
/// regular with degree below 3n/4.
Matching spine_matching(const Graph& g);

}  // namespace totalchroma
