#include "totalchroma/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace totalchroma::oracle {
namespace {

// Proper coloring of a conflict graph on <= 64 elements, DSatur order.
// Restarts with shuffled tie-breaking and a doubling node limit; a run that
// finishes under its limit is a complete search, so the answer stays exact.
class TotalSearch {
 public:
  TotalSearch(const Graph& g, Color k) : k_(k) {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    const std::size_t total = n + g.edges().size();
    if (total > 64) throw PreconditionError("total graph has more than 64 elements");
    adj_.assign(total, 0);
    auto link = [&](std::size_t a, std::size_t b) {
      adj_[a] |= std::uint64_t{1} << b;
      adj_[b] |= std::uint64_t{1} << a;
    };
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const auto& e = g.edges()[i];
      const std::size_t ei = n + i;
      link(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v));
      link(static_cast<std::size_t>(e.u), ei);
      link(static_cast<std::size_t>(e.v), ei);
      for (std::size_t j = 0; j < i; ++j) {
        const auto& f = g.edges()[j];
        if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) link(ei, n + j);
      }
    }
    rank_.resize(total);
  }

  bool solve() {
    std::mt19937_64 rng(0x5eed);
    for (std::uint64_t limit = 2000;; limit *= 2) {
      std::iota(rank_.begin(), rank_.end(), 0);
      if (limit > 2000) std::shuffle(rank_.begin(), rank_.end(), rng);
      color_.assign(rank_.size(), -1);
      uncolored_ = rank_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank_.size()) - 1;
      nodes_ = 0;
      limit_ = limit;
      const Outcome o = place(0, -1);
      if (o != Outcome::kAborted) return o == Outcome::kFound;
    }
  }

 private:
  enum class Outcome { kFound, kExhausted, kAborted };

  std::uint32_t used_near(std::size_t el) const {
    std::uint32_t mask = 0;
    for (std::uint64_t nb = adj_[el]; nb != 0; nb &= nb - 1) {
      const int c = color_[static_cast<std::size_t>(std::countr_zero(nb))];
      if (c >= 0) mask |= 1U << c;
    }
    return mask;
  }

  Outcome place(std::size_t placed, int max_used) {
    if (placed == color_.size()) return Outcome::kFound;
    if (++nodes_ > limit_) return Outcome::kAborted;
    std::size_t pick = color_.size();
    int best_sat = -1, best_deg = -1;
    std::uint32_t pick_used = 0;
    for (std::size_t el = 0; el < color_.size(); ++el) {
      if (color_[el] >= 0) continue;
      const std::uint32_t used = used_near(el);
      const int sat = std::popcount(used);
      const int deg = std::popcount(adj_[el] & uncolored_);
      if (sat > best_sat || (sat == best_sat && (deg > best_deg || (deg == best_deg && rank_[el] < rank_[pick])))) {
        pick = el;
        best_sat = sat;
        best_deg = deg;
        pick_used = used;
      }
    }
    if (best_sat >= k_) return Outcome::kExhausted;
    // Colors above max_used are interchangeable; try only the first of them.
    const int limit = std::min<int>(k_ - 1, max_used + 1);
    Outcome result = Outcome::kExhausted;
    for (int c = 0; c <= limit; ++c) {
      if (pick_used & (1U << c)) continue;
      color_[pick] = c;
      uncolored_ &= ~(std::uint64_t{1} << pick);
      const Outcome o = place(placed + 1, std::max(max_used, c));
      uncolored_ |= std::uint64_t{1} << pick;
      if (o == Outcome::kFound) return o;
      if (o == Outcome::kAborted) {
        result = o;
        break;
      }
    }
    color_[pick] = -1;
    return result;
  }

  int k_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> color_;
  std::vector<std::size_t> rank_;
  std::uint64_t uncolored_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t limit_ = 0;
};

std::uint64_t code_of(const std::vector<std::uint32_t>& rows, const std::vector<int>& perm) {
  // Upper-triangle bits in the permuted labelling, row-major.
  const std::size_t n = perm.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      code <<= 1;
      if (rows[static_cast<std::size_t>(perm[i])] & (1U << perm[j])) code |= 1;
    }
  return code;
}

// Largest code over labellings that list vertices by a refined degree
// invariant; permutations only act inside invariant classes.
std::uint64_t canonical_code(const std::vector<std::uint32_t>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::pair<std::vector<int>, int>> inv(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<int> key{std::popcount(rows[v])};
    std::vector<int> nd;
    for (std::size_t w = 0; w < n; ++w)
      if (rows[v] & (1U << w)) nd.push_back(std::popcount(rows[w]));
    std::sort(nd.rbegin(), nd.rend());
    key.insert(key.end(), nd.begin(), nd.end());
    inv[v] = {std::move(key), static_cast<int>(v)};
  }
  std::sort(inv.begin(), inv.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::vector<int> perm(n);
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = inv[i].second;
    if (i == 0 || inv[i].first != inv[i - 1].first) starts.push_back(i);
  }
  starts.push_back(n);
  std::uint64_t best = 0;
  // Odometer over the permutations of every class.
  for (;;) {
    best = std::max(best, code_of(rows, perm));
    std::size_t c = 0;
    for (; c + 1 < starts.size(); ++c) {
      auto b = perm.begin() + static_cast<std::ptrdiff_t>(starts[c]);
      auto e = perm.begin() + static_cast<std::ptrdiff_t>(starts[c + 1]);
      if (std::next_permutation(b, e)) break;
    }
    if (c + 1 == starts.size()) return best;
  }
}

// Counting argument that rules out k colors without any search. Color c meets
// each vertex at most once (as its color or on one incident edge), so k colors
// leave k*n - (n + 2m) vertex slots unmet. With n even, a color given to an odd
// number of vertices leaves an odd number of slots unmet. A class of s
// vertices holds floor(s/2) disjoint non-adjacent pairs, so at least
// n - 2*nu(complement) classes are odd.
bool parity_excludes(const Graph& g, Color k) {
  const long long n = g.num_vertices();
  if (n % 2 != 0 || n > 20) return false;
  const long long slack = static_cast<long long>(k) * n - n - 2 * static_cast<long long>(g.num_edges());
  if (slack < 0) return true;
  const auto nu = static_cast<long long>(brute_force_max_matching(complement(g)));
  return n - 2 * nu > slack;
}

}  // namespace

bool total_colorable(const Graph& g, Color k) {
  if (g.num_vertices() == 0) return true;
  if (k <= 0 || k > 32) return false;
  if (parity_excludes(g, k)) return false;
  return TotalSearch(g, k).solve();
}

std::optional<Color> brute_force_total_chromatic(const Graph& g, Color cap) {
  if (g.num_vertices() == 0) return 0;
  const auto start = static_cast<Color>(g.max_degree()) + 1;
  for (Color k = start; k <= cap; ++k)
    if (total_colorable(g, k)) return k;
  return std::nullopt;
}

std::size_t brute_force_max_matching(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  if (n > 20) throw PreconditionError("brute_force_max_matching supports at most 20 vertices");
  std::vector<std::uint32_t> nb(n, 0);
  for (const auto& e : g.edges()) {
    nb[static_cast<std::size_t>(e.u)] |= 1U << e.v;
    nb[static_cast<std::size_t>(e.v)] |= 1U << e.u;
  }
  // best[S]: maximum matching inside the vertex set S; the lowest vertex of S
  // is either left out or matched to a neighbour in S.
  std::vector<std::uint8_t> best(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    const int v = std::countr_zero(s);
    const std::uint32_t rest = s & (s - 1);
    std::uint8_t b = best[rest];
    for (std::uint32_t cand = rest & nb[static_cast<std::size_t>(v)]; cand != 0; cand &= cand - 1) {
      const std::uint32_t w = 1U << std::countr_zero(cand);
      b = std::max<std::uint8_t>(b, static_cast<std::uint8_t>(best[rest & ~w] + 1));
    }
    best[s] = b;
  }
  return best.back();
}

bool verify_rainbow(const PartialEdgeColoring& phi, std::span<const EdgeId> f) {
  std::set<Color> seen;
  for (EdgeId e : f) {
    const Color c = phi.color(e);
    if (c == kUncolored) throw PreconditionError("rainbow member " + std::to_string(e) + " is uncolored");
    if (!seen.insert(c).second) return false;
  }
  return true;
}

std::vector<Graph> nonisomorphic_graphs(Vertex n) {
  if (n < 0 || n > 8) throw PreconditionError("nonisomorphic_graphs supports 0 <= n <= 8");
  std::vector<std::vector<std::uint32_t>> level{std::vector<std::uint32_t>{}};
  for (Vertex size = 1; size <= n; ++size) {
    std::set<std::uint64_t> seen;
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& rows : level) {
      for (std::uint32_t s = 0; s < (1U << (size - 1)); ++s) {
        std::vector<std::uint32_t> grown = rows;
        grown.push_back(s);
        for (Vertex w = 0; w + 1 < size; ++w)
          if (s & (1U << w)) grown[static_cast<std::size_t>(w)] |= 1U << (size - 1);
        if (seen.insert(canonical_code(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (const auto& rows : level) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rows[static_cast<std::size_t>(u)] & (1U << v)) g.add_edge(u, v);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace totalchroma::oracle
