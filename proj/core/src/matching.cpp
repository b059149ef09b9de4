#include "totalchroma/matching.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <string>

namespace totalchroma {
namespace {

// Gabow-style blossom search over an adjacency list; one BFS per exposed root.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(static_cast<std::size_t>(g.num_vertices())),
        match_(n_, kNoVertex),
        parent_(n_),
        base_(n_),
        used_(n_),
        blossom_(n_) {}

  std::vector<Vertex> solve() {
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (match_[idx(v)] != kNoVertex) continue;
      for (const auto& inc : g_.incident(v))
        if (match_[idx(inc.neighbor)] == kNoVertex) {
          match_[idx(v)] = inc.neighbor;
          match_[idx(inc.neighbor)] = v;
          break;
        }
    }
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (match_[idx(v)] != kNoVertex) continue;
      Vertex end = find_path(v);
      while (end != kNoVertex) {
        const Vertex pv = parent_[idx(end)];
        const Vertex ppv = match_[idx(pv)];
        match_[idx(end)] = pv;
        match_[idx(pv)] = end;
        end = ppv;
      }
    }
    return match_;
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[idx(a)];
      seen[idx(a)] = 1;
      if (match_[idx(a)] == kNoVertex) break;
      a = parent_[idx(match_[idx(a)])];
    }
    for (;;) {
      b = base_[idx(b)];
      if (seen[idx(b)]) return b;
      b = parent_[idx(match_[idx(b)])];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[idx(v)] != b) {
      blossom_[idx(base_[idx(v)])] = blossom_[idx(base_[idx(match_[idx(v)])])] = 1;
      parent_[idx(v)] = child;
      child = match_[idx(v)];
      v = parent_[idx(match_[idx(v)])];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNoVertex);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<Vertex>(i);
    used_[idx(root)] = 1;
    std::vector<Vertex> q{root};
    for (std::size_t qh = 0; qh < q.size(); ++qh) {
      const Vertex v = q[qh];
      for (const auto& inc : g_.incident(v)) {
        const Vertex to = inc.neighbor;
        if (base_[idx(v)] == base_[idx(to)] || match_[idx(v)] == to) continue;
        if (to == root || (match_[idx(to)] != kNoVertex && parent_[idx(match_[idx(to)])] != kNoVertex)) {
          const Vertex cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (!blossom_[idx(base_[i])]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = 1;
              q.push_back(static_cast<Vertex>(i));
            }
          }
        } else if (parent_[idx(to)] == kNoVertex) {
          parent_[idx(to)] = v;
          if (match_[idx(to)] == kNoVertex) return to;
          used_[idx(match_[idx(to)])] = 1;
          q.push_back(match_[idx(to)]);
        }
      }
    }
    return kNoVertex;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

Matching from_mates(const std::vector<Vertex>& mate) {
  Matching m;
  for (std::size_t v = 0; v < mate.size(); ++v)
    if (mate[v] != kNoVertex && static_cast<Vertex>(v) < mate[v]) m.edges.push_back({static_cast<Vertex>(v), mate[v]});
  return m;
}

}  // namespace

Matching max_matching(const Graph& g) { return from_mates(Blossom(g).solve()); }

Matching bipartite_perfect_matching(const Graph& g, const Bipartition& bip) {
  if (bip.num_vertices() != g.num_vertices()) throw PreconditionError("bipartition does not cover the graph");
  for (const auto& e : g.edges())
    if (bip.in_a(e.u) == bip.in_a(e.v)) throw PreconditionError("graph is not bipartite for this bipartition");
  const auto side_a = bip.side_a();
  const auto side_b = bip.side_b();
  if (side_a.size() != side_b.size()) throw PreconditionError("sides differ in size");

  const std::size_t n = static_cast<std::size_t>(g.num_vertices());
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<Vertex> mate(n, kNoVertex);
  std::vector<int> dist(n, kInf);

  // Greedy start.
  for (Vertex a : side_a)
    for (const auto& inc : g.incident(a))
      if (mate[static_cast<std::size_t>(inc.neighbor)] == kNoVertex) {
        mate[static_cast<std::size_t>(a)] = inc.neighbor;
        mate[static_cast<std::size_t>(inc.neighbor)] = a;
        break;
      }

  auto bfs = [&] {
    std::queue<Vertex> q;
    bool found = false;
    for (Vertex a : side_a) {
      if (mate[static_cast<std::size_t>(a)] == kNoVertex) {
        dist[static_cast<std::size_t>(a)] = 0;
        q.push(a);
      } else {
        dist[static_cast<std::size_t>(a)] = kInf;
      }
    }
    while (!q.empty()) {
      const Vertex a = q.front();
      q.pop();
      for (const auto& inc : g.incident(a)) {
        const Vertex b = inc.neighbor;
        const Vertex a2 = mate[static_cast<std::size_t>(b)];
        if (a2 == kNoVertex) {
          found = true;
        } else if (dist[static_cast<std::size_t>(a2)] == kInf) {
          dist[static_cast<std::size_t>(a2)] = dist[static_cast<std::size_t>(a)] + 1;
          q.push(a2);
        }
      }
    }
    return found;
  };

  std::vector<std::size_t> it(n, 0);
  std::function<bool(Vertex)> dfs = [&](Vertex a) -> bool {
    auto inc = g.incident(a);
    for (auto& i = it[static_cast<std::size_t>(a)]; i < inc.size(); ++i) {
      const Vertex b = inc[i].neighbor;
      const Vertex a2 = mate[static_cast<std::size_t>(b)];
      if (a2 == kNoVertex ||
          (dist[static_cast<std::size_t>(a2)] == dist[static_cast<std::size_t>(a)] + 1 && dfs(a2))) {
        mate[static_cast<std::size_t>(a)] = b;
        mate[static_cast<std::size_t>(b)] = a;
        ++i;
        return true;
      }
    }
    dist[static_cast<std::size_t>(a)] = kInf;
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (Vertex a : side_a)
      if (mate[static_cast<std::size_t>(a)] == kNoVertex) dfs(a);
  }

  Matching m = from_mates(mate);
  if (2 * m.size() == n) return m;

  // Koenig: A-vertices reachable from exposed A-vertices by alternating paths
  // form a Hall violator.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  for (Vertex a : side_a)
    if (mate[static_cast<std::size_t>(a)] == kNoVertex) {
      seen[static_cast<std::size_t>(a)] = 1;
      stack.push_back(a);
    }
  while (!stack.empty()) {
    const Vertex a = stack.back();
    stack.pop_back();
    for (const auto& inc : g.incident(a)) {
      const Vertex b = inc.neighbor;
      if (seen[static_cast<std::size_t>(b)]) continue;
      seen[static_cast<std::size_t>(b)] = 1;
      const Vertex a2 = mate[static_cast<std::size_t>(b)];
      if (a2 != kNoVertex && !seen[static_cast<std::size_t>(a2)]) {
        seen[static_cast<std::size_t>(a2)] = 1;
        stack.push_back(a2);
      }
    }
  }
  std::vector<Vertex> violator, neighborhood;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (seen[static_cast<std::size_t>(v)]) (bip.in_a(v) ? violator : neighborhood).push_back(v);
  throw NoPerfectMatching("no perfect matching: " + std::to_string(violator.size()) + " vertices of A have only " +
                              std::to_string(neighborhood.size()) + " neighbours",
                          std::move(violator), std::move(neighborhood));
}

Matching complement_matching(const Graph& g) {
  if (!g.regular_degree()) throw PreconditionError("complement_matching needs a regular graph");
  return max_matching(complement(g));
}

Matching spine_matching(const Graph& g) {
  const auto r = g.regular_degree();
  if (!r) throw PreconditionError("spine_matching needs a regular graph");
  const auto n = static_cast<std::size_t>(g.num_vertices());
  if (4 * *r >= 3 * n) throw PreconditionError("spine_matching needs degree below 3n/4");
  Matching m = complement_matching(g);
  const std::size_t unsaturated = n - 2 * m.size();
  if (unsaturated >= 4)
    throw CoverageShortfall("complement matching leaves " + std::to_string(unsaturated) + " vertices unsaturated",
                            unsaturated);
  const std::size_t target = n % 2 == 0 ? (n - 2) / 2 : (n - 3) / 2;
  std::sort(m.edges.begin(), m.edges.end(), [](const EdgeEnds& a, const EdgeEnds& b) {
    return std::pair(a.v, a.u) < std::pair(b.v, b.u);
  });
  m.edges.resize(std::min(target, m.edges.size()));
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

}  // namespace totalchroma
