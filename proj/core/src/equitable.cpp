#include "totalchroma/equitable.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "totalchroma/fans_chains.hpp"

namespace totalchroma {
namespace {

// Kierstead-Kostochka-Mydlarz-Szemeredi. The graph is padded with a clique so
// that k divides the vertex count; vertices are inserted one at a time and,
// whenever an insertion breaks properness, the offending vertex is moved to a
// free class and procedure P restores equal class sizes.
//
// N(v, c): neighbours of v in class c. H(a, b): vertices of class a with no
// neighbour in class b, i.e. witnesses that a vertex can move from a to b.
class KkColoring {
 public:
  KkColoring(int n, int k) : n_(n), k_(k), adj_(static_cast<std::size_t>(n)), f_(static_cast<std::size_t>(n)),
                             cls_(static_cast<std::size_t>(k)),
                             nbr_(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 0),
                             wit_(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0) {
    for (int v = 0; v < n; ++v) {
      f_[static_cast<std::size_t>(v)] = v % k;
      cls_[static_cast<std::size_t>(v % k)].push_back(v);
    }
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) H(a, b) = static_cast<int>(cls_[static_cast<std::size_t>(a)].size());
  }

  void insert_edge(int u, int v) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
    const int fu = F(u), fv = F(v);
    ++N(u, fv);
    ++N(v, fu);
    if (fu != fv) {
      if (N(u, fv) == 1) --H(fu, fv);
      if (N(v, fu) == 1) --H(fv, fu);
    }
  }

  // Called after all edges of u to earlier vertices are present.
  void settle(int u) {
    if (N(u, F(u)) == 0) return;
    int y = 0;
    while (N(u, y) != 0) ++y;
    const int x = F(u);
    change_color(u, x, y);
    procedure_p(x, y, std::vector<char>(static_cast<std::size_t>(k_), 0));
  }

  int color_of(int v) const { return f_[static_cast<std::size_t>(v)]; }

 private:
  int& N(int v, int c) { return nbr_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)]; }
  int& H(int a, int b) { return wit_[static_cast<std::size_t>(a) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(b)]; }
  int& F(int v) { return f_[static_cast<std::size_t>(v)]; }
  std::vector<int>& C(int c) { return cls_[static_cast<std::size_t>(c)]; }

  void change_color(int u, int x, int y) {
    if (F(u) != x || x == y) throw InternalError("equitable coloring: inconsistent class move");
    F(u) = y;
    for (int c = 0; c < k_; ++c)
      if (N(u, c) == 0) {
        --H(x, c);
        ++H(y, c);
      }
    for (int v : adj_[static_cast<std::size_t>(u)]) {
      --N(v, x);
      ++N(v, y);
      if (N(v, x) == 0) ++H(F(v), x);
      if (N(v, y) == 1) --H(F(v), y);
    }
    auto& from = C(x);
    from.erase(std::find(from.begin(), from.end(), u));
    C(y).push_back(u);
  }

  // Moves one witness along each hop of `path` (consecutive classes).
  void move_along(const std::vector<int>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const int x = path[i], y = path[i + 1];
      int w = -1;
      for (int c : C(x))
        if (N(c, y) == 0) {
          w = c;
          break;
        }
      if (w < 0) throw InternalError("equitable coloring: missing witness");
      change_color(w, x, y);
    }
  }

  // Path src -> dst following next-hop pointers toward the root `dst`.
  static std::vector<int> path_to_root(int src, int dst, const std::vector<int>& next) {
    std::vector<int> path{src};
    while (path.back() != dst) {
      const int nx = next[static_cast<std::size_t>(path.back())];
      if (nx < 0) throw InternalError("equitable coloring: broken accessibility tree");
      path.push_back(nx);
    }
    return path;
  }

  // Path root -> dst in a tree given by parent pointers.
  static std::vector<int> path_from_root(int root, int dst, const std::vector<int>& parent) {
    std::vector<int> path{dst};
    while (path.back() != root) {
      const int p = parent[static_cast<std::size_t>(path.back())];
      if (p < 0) throw InternalError("equitable coloring: broken reachability tree");
      path.push_back(p);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  // V- is one short, V+ one over; all other classes have the target size.
  void procedure_p(int v_minus, int v_plus, std::vector<char> excluded) {
    std::vector<char> in_a(static_cast<std::size_t>(k_), 0), marked(static_cast<std::size_t>(k_), 0);
    std::vector<int> next(static_cast<std::size_t>(k_), -1);
    std::vector<int> order{v_minus};
    marked[static_cast<std::size_t>(v_minus)] = 1;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
      const int pop = order[qi];
      in_a[static_cast<std::size_t>(pop)] = 1;
      for (int c = 0; c < k_; ++c)
        if (H(c, pop) > 0 && !in_a[static_cast<std::size_t>(c)] && !excluded[static_cast<std::size_t>(c)] &&
            !marked[static_cast<std::size_t>(c)]) {
          next[static_cast<std::size_t>(c)] = pop;
          marked[static_cast<std::size_t>(c)] = 1;
          order.push_back(c);
        }
    }
    if (in_a[static_cast<std::size_t>(v_plus)]) {
      move_along(path_to_root(v_plus, v_minus, next));
      return;
    }

    const int b = k_ - static_cast<int>(std::count(in_a.begin(), in_a.end(), 1));
    std::vector<char> terminal(static_cast<std::size_t>(k_), 0);
    int terminals = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int w1 = *it;
      bool solved = false;
      const std::vector<int> members = C(w1);
      for (int v : members) {
        int x = -1;
        for (int u = 0; u < k_; ++u)
          if (N(v, u) == 0 && in_a[static_cast<std::size_t>(u)] && u != w1) x = u;
        if (x < 0) continue;
        for (int u = 0; u < k_ && !solved; ++u) {
          if (N(v, u) < 1 || in_a[static_cast<std::size_t>(u)]) continue;
          // Solo neighbour of v in class u.
          int y = -1;
          for (int z : adj_[static_cast<std::size_t>(v)])
            if (F(z) == u && N(z, w1) == 1) {
              y = z;
              break;
            }
          if (y < 0) continue;
          change_color(v, w1, x);
          move_along(path_to_root(x, v_minus, next));
          change_color(y, u, w1);
          std::vector<char> excl = excluded;
          for (int c = 0; c < k_; ++c)
            if (in_a[static_cast<std::size_t>(c)]) excl[static_cast<std::size_t>(c)] = 1;
          procedure_p(u, v_plus, std::move(excl));
          solved = true;
        }
        if (solved) break;
      }
      if (solved) return;
      terminal[static_cast<std::size_t>(w1)] = 1;
      ++terminals;
      if (terminals == b) {
        case_two(v_minus, v_plus, in_a, next, terminal, std::move(excluded));
        return;
      }
    }
    throw InternalError("equitable coloring: procedure P found no move");
  }

  void case_two(int v_minus, int v_plus, const std::vector<char>& in_a, const std::vector<int>& next,
                const std::vector<char>& terminal, std::vector<char> excluded) {
    std::vector<char> in_bp(static_cast<std::size_t>(k_), 0), marked(static_cast<std::size_t>(k_), 0);
    std::vector<int> parent(static_cast<std::size_t>(k_), -1);
    std::vector<int> order{v_plus};
    marked[static_cast<std::size_t>(v_plus)] = 1;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
      const int pop = order[qi];
      in_bp[static_cast<std::size_t>(pop)] = 1;
      for (int c = 0; c < k_; ++c)
        if (H(pop, c) > 0 && !in_bp[static_cast<std::size_t>(c)] && !marked[static_cast<std::size_t>(c)]) {
          parent[static_cast<std::size_t>(c)] = pop;
          marked[static_cast<std::size_t>(c)] = 1;
          order.push_back(c);
        }
    }
    std::vector<int> candidates = C(v_plus);
    for (int c = 0; c < k_; ++c)
      if (in_bp[static_cast<std::size_t>(c)])
        candidates.insert(candidates.end(), C(c).begin(), C(c).end());
    std::vector<char> covered(static_cast<std::size_t>(n_), 0);
    std::unordered_map<int, int> covering;
    for (int z : candidates) {
      if (covered[static_cast<std::size_t>(z)] || !in_bp[static_cast<std::size_t>(F(z))]) continue;
      covered[static_cast<std::size_t>(z)] = 1;
      for (int w : adj_[static_cast<std::size_t>(z)]) covered[static_cast<std::size_t>(w)] = 1;
      for (int w : adj_[static_cast<std::size_t>(z)]) {
        if (!terminal[static_cast<std::size_t>(F(w))] || N(z, F(w)) != 1) continue;
        auto [it, fresh] = covering.emplace(w, z);
        if (fresh) continue;
        const int z1 = it->second;
        const int zc = F(z1);
        const int wc = F(w);
        move_along(path_to_root(wc, v_minus, next));
        move_along(path_from_root(v_plus, zc, parent));
        change_color(z1, zc, wc);
        int w_plus = -1;
        for (int c = 0; c < k_; ++c)
          if (N(w, c) == 0 && !in_a[static_cast<std::size_t>(c)]) {
            w_plus = c;
            break;
          }
        if (w_plus < 0) throw InternalError("equitable coloring: no free class outside the accessible set");
        change_color(w, wc, w_plus);
        for (int c = 0; c < k_; ++c)
          if (c != wc && !in_bp[static_cast<std::size_t>(c)]) excluded[static_cast<std::size_t>(c)] = 1;
        procedure_p(wc, w_plus, std::move(excluded));
        return;
      }
    }
    throw InternalError("equitable coloring: no shared solo neighbour in case II");
  }

  int n_;
  int k_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> f_;
  std::vector<std::vector<int>> cls_;
  std::vector<int> nbr_;
  std::vector<int> wit_;
};

}  // namespace

std::vector<Color> equitable_vertex_coloring(const Graph& g, Color k) {
  const Vertex n = g.num_vertices();
  if (k < 1) throw PreconditionError("equitable coloring needs k >= 1");
  if (static_cast<std::size_t>(k) < g.max_degree() + 1)
    throw PreconditionError("k = " + std::to_string(k) + " is below Delta+1 = " + std::to_string(g.max_degree() + 1));
  if (n == 0) return {};
  const int pad = n % k == 0 ? 0 : k - n % k;
  const int total = n + pad;
  KkColoring kk(total, k);
  std::vector<std::vector<int>> later(static_cast<std::size_t>(total));
  for (const auto& e : g.edges()) later[static_cast<std::size_t>(e.v)].push_back(e.u);
  for (int i = n; i < total; ++i)
    for (int j = n; j < i; ++j) later[static_cast<std::size_t>(i)].push_back(j);
  for (int u = 0; u < total; ++u) {
    auto& prev = later[static_cast<std::size_t>(u)];
    std::sort(prev.begin(), prev.end());
    for (int v : prev) kk.insert_edge(v, u);
    kk.settle(u);
  }
  std::vector<Color> out(static_cast<std::size_t>(n));
  std::vector<int> sizes(static_cast<std::size_t>(k), 0);
  for (Vertex v = 0; v < n; ++v) {
    out[static_cast<std::size_t>(v)] = kk.color_of(v) + 1;
    ++sizes[static_cast<std::size_t>(kk.color_of(v))];
  }
  for (const auto& e : g.edges())
    if (out[static_cast<std::size_t>(e.u)] == out[static_cast<std::size_t>(e.v)])
      throw InternalError("equitable coloring produced adjacent vertices with one color");
  const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  if (*hi - *lo > 1) throw InternalError("equitable coloring produced unbalanced classes");
  return out;
}

PartialEdgeColoring vizing_edge_coloring(const Graph& g, Color k) {
  const auto delta = static_cast<Color>(g.max_degree());
  if (k == 0) k = delta + 1;
  if (k < delta + 1) throw PreconditionError("Misra-Gries needs k >= Delta+1");
  PartialEdgeColoring phi(g, k);
  const Hypergraph& h = phi.host();
  std::vector<Vertex> fan;
  std::vector<char> in_fan(static_cast<std::size_t>(g.num_vertices()), 0);
  for (EdgeId e0 = 0; e0 < g.num_edges(); ++e0) {
    const Vertex u = g.edge(e0).u;
    const Vertex v0 = g.edge(e0).v;
    if (Color c = phi.missing(u).smallest_common(phi.missing(v0)); c != kUncolored) {
      phi.assign(e0, c);
      continue;
    }
    // Maximal Vizing fan at u starting with v0.
    fan.assign(1, v0);
    in_fan[static_cast<std::size_t>(v0)] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (Color c : phi.missing(fan.back()).to_vector()) {
        const EdgeId e = phi.edge_with_color(u, c);
        if (e == kNoEdge) continue;
        const Vertex w = h.other_end(e, u);
        if (in_fan[static_cast<std::size_t>(w)]) continue;
        fan.push_back(w);
        in_fan[static_cast<std::size_t>(w)] = 1;
        grew = true;
        break;
      }
    }
    for (Vertex w : fan) in_fan[static_cast<std::size_t>(w)] = 0;
    const Color c = phi.missing(u).smallest();
    const Color d = phi.missing(fan.back()).smallest();
    if (c != d && !phi.is_missing(u, d)) switch_chain(phi, kempe_chain(phi, u, c, d));
    // First fan prefix that is still a fan and whose tip misses d.
    std::size_t tip = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0) {
        const EdgeId e = *g.find_edge(u, fan[i]);
        const Color ci = phi.color(e);
        if (ci == kUncolored || !phi.is_missing(fan[i - 1], ci)) break;
      }
      if (phi.is_missing(fan[i], d)) {
        tip = i;
        break;
      }
    }
    if (tip == fan.size()) throw InternalError("Misra-Gries rotation found no fan tip");
    std::vector<EdgeId> edges(tip + 1);
    std::vector<Color> cols(tip + 1, kUncolored);
    for (std::size_t i = 0; i <= tip; ++i) {
      edges[i] = *g.find_edge(u, fan[i]);
      cols[i] = phi.color(edges[i]);
      phi.unassign(edges[i]);
    }
    for (std::size_t i = 0; i < tip; ++i) phi.assign(edges[i], cols[i + 1]);
    phi.assign(edges[tip], d);
  }
  return phi;
}

void balance_class_sizes(PartialEdgeColoring& phi) {
  const Hypergraph& h = phi.host();
  const Color k = phi.palette();
  if (h.rank() > 2) throw PreconditionError("class balancing needs a graph host");
  if (phi.num_colored() != static_cast<std::size_t>(h.num_edges()))
    throw PreconditionError("class balancing needs every edge colored");
  if (k == 0) return;
  std::vector<long long> size(static_cast<std::size_t>(k) + 1, 0);
  for (Color c : phi.colors()) ++size[static_cast<std::size_t>(c)];
  for (;;) {
    Color big = 1, small = 1;
    for (Color c = 1; c <= k; ++c) {
      if (size[static_cast<std::size_t>(c)] > size[static_cast<std::size_t>(big)]) big = c;
      if (size[static_cast<std::size_t>(c)] < size[static_cast<std::size_t>(small)]) small = c;
    }
    if (size[static_cast<std::size_t>(big)] - size[static_cast<std::size_t>(small)] <= 1) return;
    // Some (big, small) component is a path with one more big edge than small edges.
    bool switched = false;
    for (Vertex v = 0; v < h.num_vertices() && !switched; ++v) {
      if (!phi.is_missing(v, small) || phi.is_missing(v, big)) continue;
      Chain p = kempe_chain(phi, v, big, small);
      long long nb = 0;
      for (EdgeId e : p.edges) nb += phi.color(e) == big ? 1 : -1;
      if (nb != 1) continue;
      switch_chain(phi, p);
      --size[static_cast<std::size_t>(big)];
      ++size[static_cast<std::size_t>(small)];
      switched = true;
    }
    if (!switched) throw InternalError("class balancing found no odd alternating path");
  }
}

long long missing_gap(const PartialEdgeColoring& phi) {
  const Color k = phi.palette();
  if (k == 0) return 0;
  std::vector<long long> cnt(static_cast<std::size_t>(k) + 1, 0);
  for (Vertex v = 0; v < phi.host().num_vertices(); ++v)
    for (Color c : phi.missing(v).to_vector()) ++cnt[static_cast<std::size_t>(c)];
  const auto [lo, hi] = std::minmax_element(cnt.begin() + 1, cnt.end());
  return *hi - *lo;
}

BalanceStats balance_missing(PartialEdgeColoring& phi, std::span<const EdgeId> rainbow) {
  const Hypergraph& h = phi.host();
  const Color k = phi.palette();
  if (h.rank() > 2) throw PreconditionError("missing-color balancing needs a graph host");
  if (phi.num_colored() != static_cast<std::size_t>(h.num_edges()))
    throw PreconditionError("missing-color balancing needs every edge colored");
  if (static_cast<std::size_t>(k) < h.max_degree()) throw PreconditionError("palette below Delta");
  std::vector<char> in_f(static_cast<std::size_t>(h.num_edges()), 0);
  {
    std::vector<char> used(static_cast<std::size_t>(k) + 1, 0);
    for (EdgeId e : rainbow) {
      if (used[static_cast<std::size_t>(phi.color(e))]++) throw PreconditionError("rainbow edges share a color");
      in_f[static_cast<std::size_t>(e)] = 1;
    }
  }
  BalanceStats stats;
  if (k == 0) return stats;
  std::vector<long long> cnt(static_cast<std::size_t>(k) + 1, 0);
  for (Vertex v = 0; v < h.num_vertices(); ++v)
    for (Color c : phi.missing(v).to_vector()) ++cnt[static_cast<std::size_t>(c)];

  auto potential = [&] {
    const auto [lo, hi] = std::minmax_element(cnt.begin() + 1, cnt.end());
    const long long g = *hi - *lo;
    long long pairs = 0;
    for (Color a = 1; a <= k; ++a)
      for (Color b = a + 1; b <= k; ++b)
        if (std::llabs(cnt[static_cast<std::size_t>(a)] - cnt[static_cast<std::size_t>(b)]) == g) ++pairs;
    return std::pair(g, pairs);
  };

  auto pot = potential();
  stats.initial_gap = pot.first;
  while (pot.first >= 6) {
    Color alpha = 1, beta = 1;
    for (Color c = 1; c <= k; ++c) {
      if (cnt[static_cast<std::size_t>(c)] > cnt[static_cast<std::size_t>(alpha)]) alpha = c;
      if (cnt[static_cast<std::size_t>(c)] < cnt[static_cast<std::size_t>(beta)]) beta = c;
    }
    bool done = false;
    std::vector<char> tried(static_cast<std::size_t>(h.num_vertices()), 0);
    for (Vertex x = 0; x < h.num_vertices() && !done; ++x) {
      if (tried[static_cast<std::size_t>(x)] || !phi.is_missing(x, alpha) || phi.is_missing(x, beta)) continue;
      Chain p = kempe_chain(phi, x, alpha, beta);
      for (Vertex end : p.end_vertices) tried[static_cast<std::size_t>(end)] = 1;
      if (p.end_vertices.size() != 2) continue;
      const Vertex y = p.end_vertices[0] == x ? p.end_vertices[1] : p.end_vertices[0];
      if (!phi.is_missing(y, alpha)) continue;
      if (std::any_of(p.edges.begin(), p.edges.end(), [&](EdgeId e) { return in_f[static_cast<std::size_t>(e)] != 0; }))
        continue;
      switch_chain(phi, p);
      cnt[static_cast<std::size_t>(alpha)] -= 2;
      cnt[static_cast<std::size_t>(beta)] += 2;
      ++stats.switches;
      done = true;
    }
    if (!done)
      throw InternalError("missing-color balancing found no switchable path for colors " + std::to_string(alpha) +
                          "/" + std::to_string(beta) + " at gap " + std::to_string(pot.first));
    const auto next = potential();
    if (!(next < pot)) throw InternalError("missing-color balancing potential did not decrease");
    pot = next;
  }
  stats.final_gap = pot.first;
  return stats;
}

}  // namespace totalchroma
