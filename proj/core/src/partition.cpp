#include "totalchroma/partition.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

namespace totalchroma {
namespace {

struct Attempt {
  std::vector<bool> in_a;
  long long worst = 0;
  bool ok = false;
};

long long excess_sq(long long d, long long t) {
  const long long e = std::max(0LL, (d < 0 ? -d : d) - t);
  return e * e;
}

// Random side per pair, then repeated pair flips that lower the summed squared
// excess over the threshold. Violators are tried worst first.
Attempt attempt(const Graph& q, const std::vector<EdgeEnds>& pairs, long long t, std::uint64_t budget,
                std::mt19937_64& rng) {
  const auto n = static_cast<std::size_t>(q.num_vertices());
  Attempt out;
  out.in_a.assign(n, false);
  std::vector<std::size_t> pair_of(n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const bool flip = (rng() & 1U) != 0;
    out.in_a[static_cast<std::size_t>(flip ? pairs[i].v : pairs[i].u)] = true;
    pair_of[static_cast<std::size_t>(pairs[i].u)] = pair_of[static_cast<std::size_t>(pairs[i].v)] = i;
  }
  std::vector<long long> d(n, 0);
  for (const auto& e : q.edges()) {
    d[static_cast<std::size_t>(e.u)] += out.in_a[static_cast<std::size_t>(e.v)] ? 1 : -1;
    d[static_cast<std::size_t>(e.v)] += out.in_a[static_cast<std::size_t>(e.u)] ? 1 : -1;
  }
  std::vector<long long> delta(n, 0);
  std::vector<Vertex> touched;
  // Change of d when pair i flips: A-end moves to B, B-end moves to A.
  auto stage = [&](std::size_t i) {
    const Vertex a = out.in_a[static_cast<std::size_t>(pairs[i].u)] ? pairs[i].u : pairs[i].v;
    const Vertex b = pairs[i].other(a);
    for (const auto& inc : q.incident(a)) {
      if (delta[static_cast<std::size_t>(inc.neighbor)] == 0) touched.push_back(inc.neighbor);
      delta[static_cast<std::size_t>(inc.neighbor)] -= 2;
    }
    for (const auto& inc : q.incident(b)) {
      if (delta[static_cast<std::size_t>(inc.neighbor)] == 0) touched.push_back(inc.neighbor);
      delta[static_cast<std::size_t>(inc.neighbor)] += 2;
    }
  };
  auto unstage = [&] {
    for (Vertex w : touched) delta[static_cast<std::size_t>(w)] = 0;
    touched.clear();
  };

  std::vector<std::size_t> candidates;
  std::vector<char> seen(pairs.size(), 0);
  std::vector<std::size_t> violators;
  // Best flip among pairs with an end next to w on w's heavy side; pairs.size() if none gains.
  auto best_flip_at = [&](std::size_t w) {
    const bool heavy_a = d[w] > 0;
    candidates.clear();
    for (const auto& inc : q.incident(static_cast<Vertex>(w))) {
      if (out.in_a[static_cast<std::size_t>(inc.neighbor)] != heavy_a) continue;
      const std::size_t i = pair_of[static_cast<std::size_t>(inc.neighbor)];
      if (seen[i]) continue;
      seen[i] = 1;
      candidates.push_back(i);
    }
    for (std::size_t i : candidates) seen[i] = 0;
    std::size_t best = pairs.size();
    long long best_gain = 0;
    for (std::size_t i : candidates) {
      stage(i);
      long long gain = 0;
      for (Vertex x : touched) {
        const auto xi = static_cast<std::size_t>(x);
        gain += excess_sq(d[xi], t) - excess_sq(d[xi] + delta[xi], t);
      }
      unstage();
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    return best;
  };

  for (std::uint64_t step = 0; step < budget; ++step) {
    violators.clear();
    out.worst = 0;
    for (std::size_t v = 0; v < n; ++v) {
      out.worst = std::max(out.worst, std::llabs(d[v]));
      if (std::llabs(d[v]) > t) violators.push_back(v);
    }
    if (violators.empty()) {
      out.ok = true;
      return out;
    }
    std::sort(violators.begin(), violators.end(), [&](std::size_t a, std::size_t b) {
      return std::pair(-std::llabs(d[a]), a) < std::pair(-std::llabs(d[b]), b);
    });
    std::size_t best = pairs.size();
    for (std::size_t w : violators)
      if ((best = best_flip_at(w)) != pairs.size()) break;
    if (best == pairs.size()) return out;
    stage(best);
    for (Vertex w : touched) d[static_cast<std::size_t>(w)] += delta[static_cast<std::size_t>(w)];
    unstage();
    const Vertex a = out.in_a[static_cast<std::size_t>(pairs[best].u)] ? pairs[best].u : pairs[best].v;
    out.in_a[static_cast<std::size_t>(a)] = false;
    out.in_a[static_cast<std::size_t>(pairs[best].other(a))] = true;
  }
  return out;
}

}  // namespace

long long partition_threshold(Vertex num_vertices) {
  const auto h = static_cast<long long>(num_vertices / 2);
  const long long sq = h * h;
  long long t = 0;
  while ((t + 1) * (t + 1) * (t + 1) <= sq) ++t;
  return t;
}

long long max_degree_imbalance(const Graph& q, const Bipartition& p) {
  long long worst = 0;
  for (Vertex v = 0; v < q.num_vertices(); ++v) worst = std::max(worst, std::llabs(p.degree_imbalance(q, v)));
  return worst;
}

Bipartition balanced_partition(const Graph& q, std::span<const EdgeEnds> pairs, const PartitionOptions& options) {
  const Vertex n = q.num_vertices();
  if (n % 2 != 0) throw PreconditionError("balanced_partition needs an even number of vertices");
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<EdgeEnds> all;
  for (const auto& p : pairs) {
    if (p.u < 0 || p.v < 0 || p.u >= n || p.v >= n || p.u == p.v)
      throw PreconditionError("pair {" + std::to_string(p.u) + "," + std::to_string(p.v) + "} is invalid");
    for (Vertex w : {p.u, p.v}) {
      if (used[static_cast<std::size_t>(w)])
        throw PreconditionError("vertex " + std::to_string(w) + " appears in two pairs");
      used[static_cast<std::size_t>(w)] = 1;
    }
    all.push_back(EdgeEnds::normalized(p.u, p.v));
  }
  std::vector<Vertex> loose;
  for (Vertex v = 0; v < n; ++v)
    if (!used[static_cast<std::size_t>(v)]) loose.push_back(v);

  const long long t = partition_threshold(n);
  const auto h = static_cast<std::uint64_t>(std::max<Vertex>(n / 2, 1));
  const std::uint64_t budget =
      options.swap_budget != 0 ? options.swap_budget : h * h * std::max<std::uint64_t>(1, std::bit_width(h));
  Attempt best;
  best.worst = -1;
  for (int round = 0; round < std::max(options.restarts, 1); ++round) {
    std::mt19937_64 rng(options.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(round));
    std::vector<EdgeEnds> round_pairs = all;
    std::vector<Vertex> shuffled = loose;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (std::size_t i = 0; i + 1 < shuffled.size(); i += 2)
      round_pairs.push_back(EdgeEnds::normalized(shuffled[i], shuffled[i + 1]));
    Attempt a = attempt(q, round_pairs, t, budget, rng);
    if (a.ok) return Bipartition(std::move(a.in_a));
    if (best.worst < 0 || a.worst < best.worst) best = std::move(a);
  }
  const long long worst = best.worst;
  throw RetryExhausted("no partition within imbalance " + std::to_string(t) + " after " +
                           std::to_string(options.restarts) + " restarts (best " + std::to_string(worst) + ")",
                       Bipartition(std::move(best.in_a)), worst);
}

}  // namespace totalchroma
