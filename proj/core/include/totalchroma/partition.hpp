#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "totalchroma/graph.hpp"

namespace totalchroma {

/// No partition met the degree bound within the restart budget. Carries the
/// partition with the smallest worst imbalance seen.
class RetryExhausted : public Error {
 public:
  RetryExhausted(const std::string& what, Bipartition best, long long max_imbalance)
      : Error(what), best_(std::move(best)), max_imbalance_(max_imbalance) {}
  const Bipartition& best() const noexcept { return best_; }
  long long max_imbalance() const noexcept { return max_imbalance_; }

 private:
  Bipartition best_;
  long long max_imbalance_;
};

struct PartitionOptions {
  std::uint64_t seed = 0;
  int restarts = 20;
  /// Pair flips per restart; 0 selects h^2 * ceil(log2 h) for h = |V|/2.
  std::uint64_t swap_budget = 0;
};

/// floor(h^{2/3}) for h = |V(q)|/2, computed exactly as the largest T with T^3 <= h^2.
long long partition_threshold(Vertex num_vertices);

/// Splits V(q) into equal halves A, B so that every listed pair has one end on
/// each side and |d_A(v) - d_B(v)| <= partition_threshold for every v.
/// Vertices outside the pairs are paired among themselves at random first.
/// Throws PreconditionError when |V(q)| is odd or the pairs overlap, and
/// RetryExhausted when every restart runs out of flips.
Bipartition balanced_partition(const Graph& q, std::span<const EdgeEnds> pairs, const PartitionOptions& options = {});

/// max_v |d_A(v) - d_B(v)|.
long long max_degree_imbalance(const Graph& q, const Bipartition& p);

}  // namespace totalchroma
