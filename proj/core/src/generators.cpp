#include "totalchroma/generators.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace totalchroma {
namespace {

constexpr int kMaxPairingRounds = 64;

std::uint64_t pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

// One pairing-model draw followed by swap repair. Returns false when the
// repair exceeds its budget.
bool try_pairing(Vertex n, Vertex r, std::mt19937_64& rng, std::vector<EdgeEnds>& out) {
  std::vector<Vertex> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(r));
  for (Vertex v = 0; v < n; ++v)
    for (Vertex i = 0; i < r; ++i) stubs.push_back(v);
  std::shuffle(stubs.begin(), stubs.end(), rng);

  const std::size_t m = stubs.size() / 2;
  std::vector<std::pair<Vertex, Vertex>> pairs(m);
  std::unordered_map<std::uint64_t, int> count;
  count.reserve(m * 2);
  for (std::size_t i = 0; i < m; ++i) {
    pairs[i] = {stubs[2 * i], stubs[2 * i + 1]};
    ++count[pair_key(pairs[i].first, pairs[i].second)];
  }
  auto is_bad = [&](std::size_t i) {
    const auto [a, b] = pairs[i];
    return a == b || count[pair_key(a, b)] > 1;
  };

  std::uniform_int_distribution<std::size_t> pick(0, m == 0 ? 0 : m - 1);
  const std::size_t budget = 200 * m + 1000;
  std::size_t attempts = 0;
  for (std::size_t i = 0; i < m; ++i) {
    while (is_bad(i)) {
      if (++attempts > budget) return false;
      const std::size_t j = pick(rng);
      if (j == i) continue;
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (pick(rng) & 1U) std::swap(c, d);
      // Replace {a,b},{c,d} by {a,c},{b,d}.
      if (a == c || b == d) continue;
      if (count.count(pair_key(a, c)) && count[pair_key(a, c)] > 0) continue;
      if (count.count(pair_key(b, d)) && count[pair_key(b, d)] > 0) continue;
      if (pair_key(a, c) == pair_key(b, d)) continue;
      --count[pair_key(a, b)];
      --count[pair_key(c, d)];
      ++count[pair_key(a, c)];
      ++count[pair_key(b, d)];
      pairs[i] = {a, c};
      pairs[j] = {b, d};
      // The swap may have touched an already-checked index j; rescan it later.
      if (j < i && is_bad(j)) i = j;
    }
  }
  out.clear();
  out.reserve(m);
  for (const auto& [a, b] : pairs) out.push_back(EdgeEnds::normalized(a, b));
  return true;
}

}  // namespace

Graph gen_random_regular(Vertex n, Vertex r, std::uint64_t seed) {
  if (n < 0 || r < 0) throw InfeasibleError("vertex count and degree must be non-negative");
  if (n > 0 && r >= n)
    throw InfeasibleError("degree " + std::to_string(r) + " must be below vertex count " + std::to_string(n));
  if ((static_cast<long long>(n) * r) % 2 != 0)
    throw InfeasibleError("n*r = " + std::to_string(static_cast<long long>(n) * r) +
                          " is odd; no r-regular graph exists");
  if (n == 0 || r == 0) return Graph(n);
  if (r > (n - 1) / 2) return complement(gen_random_regular(n, n - 1 - r, seed));

  std::mt19937_64 rng(seed);
  std::vector<EdgeEnds> edges;
  for (int round = 0; round < kMaxPairingRounds; ++round) {
    if (try_pairing(n, r, rng, edges)) {
      std::sort(edges.begin(), edges.end());
      return Graph::from_edges(n, edges);
    }
  }
  throw Error("random regular generation failed after " + std::to_string(kMaxPairingRounds) + " pairings");
}

Graph gen_gnp(Vertex n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(std::clamp(p, 0.0, 1.0));
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace totalchroma
