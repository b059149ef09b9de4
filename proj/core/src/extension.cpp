#include "totalchroma/extension.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>

#include "totalchroma/fans_chains.hpp"

namespace totalchroma {
namespace {

// Recoloring loop shared by both extensions. `threshold` is the number of fan
// leaves that may not all miss one color (2c for the hypergraph version, 2 for
// the near-bipartite one); `center_of` picks the fan center of an uncolored edge.
class Extender {
 public:
  Extender(PartialEdgeColoring& phi, std::vector<char> forbidden, std::size_t threshold,
           std::function<Vertex(EdgeId)> center_of, std::uint64_t budget, ExtensionStats& stats)
      : phi_(phi),
        h_(phi.host()),
        forbidden_(std::move(forbidden)),
        threshold_(threshold),
        center_of_(std::move(center_of)),
        budget_(budget),
        stats_(stats),
        color_seen_(static_cast<std::size_t>(phi.palette()) + 1, 0),
        count_(static_cast<std::size_t>(phi.palette()) + 1, 0) {}

  void run() {
    for (EdgeId e = 0; e < h_.num_edges(); ++e)
      while (!phi_.is_colored(e)) step(e);
  }

 private:
  struct Leaf {
    EdgeId edge;
    Vertex vertex;
    int justifier;
  };

  void spend(std::uint64_t n) {
    stats_.recolorings += n;
    if (stats_.recolorings > budget_) fail("step budget of " + std::to_string(budget_) + " recolorings exhausted");
  }

  [[noreturn]] void fail(const std::string& why) const {
    std::ostringstream os;
    os << why << " (palette " << phi_.palette() << ", colored " << phi_.num_colored() << "/" << h_.num_edges()
       << ", direct " << stats_.direct << ", shifts " << stats_.shifts << ", switches " << stats_.switches << ")";
    throw ExtensionFailure(os.str());
  }

  // One move on the uncolored edge e0: color it, shift-and-color inside the
  // fan, or switch a chain (after which the caller retries).
  void step(EdgeId e0) {
    if (h_.edge_size(e0) != 2) fail("uncolored edge " + std::to_string(e0) + " has size above two");
    const Vertex u = center_of_(e0);
    const Vertex v = h_.other_end(e0, u);
    if (Color c = phi_.missing(u).smallest_common(phi_.missing(v)); c != kUncolored) {
      phi_.assign(e0, c);
      ++stats_.direct;
      spend(1);
      return;
    }

    // Grow the maximal multifan at u that avoids forbidden edges, stopping as
    // soon as a leaf shares a missing color with u.
    fan_.clear();
    fan_.push_back({e0, v, -1});
    std::vector<Color> touched;
    int hit = -1;
    for (std::size_t i = 0; i < fan_.size() && hit < 0; ++i) {
      for (Color c : phi_.missing(fan_[i].vertex).to_vector()) {
        if (color_seen_[static_cast<std::size_t>(c)]) continue;
        color_seen_[static_cast<std::size_t>(c)] = 1;
        touched.push_back(c);
        const EdgeId e = phi_.edge_with_color(u, c);
        if (e == kNoEdge || forbidden_[static_cast<std::size_t>(e)] || h_.edge_size(e) != 2) continue;
        const Vertex w = h_.other_end(e, u);
        fan_.push_back({e, w, static_cast<int>(i)});
        if (phi_.missing(u).intersects(phi_.missing(w))) {
          hit = static_cast<int>(fan_.size()) - 1;
          break;
        }
      }
    }
    for (Color c : touched) color_seen_[static_cast<std::size_t>(c)] = 0;

    if (hit >= 0) {
      shift_and_color(u, hit);
      return;
    }
    switch_for_gamma(u);
  }

  void shift_and_color(Vertex u, int hit) {
    std::vector<int> seq;
    for (int j = hit; j > 0; j = fan_[static_cast<std::size_t>(j)].justifier) seq.push_back(j);
    seq.push_back(0);
    std::reverse(seq.begin(), seq.end());
    const std::size_t t = seq.size() - 1;
    std::vector<Color> moved(t + 1, kUncolored);
    for (std::size_t i = 1; i <= t; ++i) {
      const EdgeId e = fan_[static_cast<std::size_t>(seq[i])].edge;
      moved[i] = phi_.color(e);
      phi_.unassign(e);
    }
    for (std::size_t i = 1; i <= t; ++i) phi_.assign(fan_[static_cast<std::size_t>(seq[i - 1])].edge, moved[i]);
    const Leaf& last = fan_[static_cast<std::size_t>(hit)];
    const Color c = phi_.missing(u).smallest_common(phi_.missing(last.vertex));
    if (c == kUncolored) fail("shift left no common missing color at the last leaf");
    phi_.assign(last.edge, c);
    ++stats_.shifts;
    spend(t + 1);
  }

  void switch_for_gamma(Vertex u) {
    std::vector<Color> used;
    for (const Leaf& l : fan_)
      for (Color c : phi_.missing(l.vertex).to_vector())
        if (count_[static_cast<std::size_t>(c)]++ == 0) used.push_back(c);
    Color gamma = kUncolored;
    for (Color c : used)
      if (count_[static_cast<std::size_t>(c)] >= threshold_ && (gamma == kUncolored || c < gamma)) gamma = c;
    for (Color c : used) count_[static_cast<std::size_t>(c)] = 0;
    if (gamma == kUncolored)
      fail("fan at vertex " + std::to_string(u) + " with " + std::to_string(fan_.size()) +
           " leaves has no color missing at " + std::to_string(threshold_) + " leaves");

    const Color alpha = phi_.missing(u).smallest();
    if (alpha == kUncolored || alpha == gamma) fail("center misses no usable color");
    std::vector<Vertex> starts{u};
    for (const Leaf& l : fan_) {
      if (starts.size() > threshold_) break;
      if (phi_.is_missing(l.vertex, gamma)) starts.push_back(l.vertex);
    }
    std::sort(starts.begin(), starts.end());
    for (Vertex s : starts) {
      Chain p = kempe_chain(phi_, s, alpha, gamma);
      const bool clean = std::none_of(p.edges.begin(), p.edges.end(),
                                      [&](EdgeId e) { return forbidden_[static_cast<std::size_t>(e)] != 0; });
      if (!clean) continue;
      switch_chain(phi_, p);
      ++stats_.switches;
      spend(std::max<std::size_t>(1, p.edges.size()));
      return;
    }
    fail("every (" + std::to_string(alpha) + "," + std::to_string(gamma) + ")-chain from the fan at " +
         std::to_string(u) + " meets a rainbow edge");
  }

  PartialEdgeColoring& phi_;
  const Hypergraph& h_;
  std::vector<char> forbidden_;
  std::size_t threshold_;
  std::function<Vertex(EdgeId)> center_of_;
  std::uint64_t budget_;
  ExtensionStats& stats_;
  std::vector<Leaf> fan_;
  std::vector<char> color_seen_;
  std::vector<std::size_t> count_;
};

// Rainbow-colors `rainbow` with 1, 2, ... and first-fit colors everything else.
void initial_coloring(PartialEdgeColoring& phi, const std::vector<EdgeId>& rainbow, ExtensionStats& stats) {
  const Hypergraph& h = phi.host();
  Color next = 1;
  for (EdgeId e : rainbow) phi.assign(e, next++);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (phi.is_colored(e)) continue;
    auto mem = h.members(e);
    ColorSet free = phi.missing(mem[0]);
    for (std::size_t i = 1; i < mem.size(); ++i) free &= phi.missing(mem[i]);
    if (Color c = free.smallest(); c != kUncolored) {
      phi.assign(e, c);
      ++stats.greedy;
    }
  }
}

std::uint64_t default_budget(Color k, EdgeId edges) {
  return 10ULL * static_cast<std::uint64_t>(std::max<Color>(k, 1)) * static_cast<std::uint64_t>(std::max<EdgeId>(edges, 1));
}

}  // namespace

Color hypergraph_extension_palette(const Hypergraph& h) {
  const auto c = static_cast<Color>(h.rank());
  return std::max<Color>(0, static_cast<Color>(h.max_degree()) + 2 * c - 1);
}

ExtensionResult extend_hypergraph(const Hypergraph& h, std::span<const EdgeId> matching, std::optional<Vertex> x,
                                  const ExtensionOptions& options) {
  const Vertex n = h.num_vertices();
  std::vector<char> in_m(static_cast<std::size_t>(h.num_edges()), 0);
  std::vector<char> saturated(static_cast<std::size_t>(n), 0);
  for (EdgeId e : matching) {
    if (e < 0 || e >= h.num_edges()) throw PreconditionError("matching edge id out of range");
    if (in_m[static_cast<std::size_t>(e)]) throw PreconditionError("matching lists edge " + std::to_string(e) + " twice");
    in_m[static_cast<std::size_t>(e)] = 1;
    for (Vertex v : h.members(e)) {
      if (saturated[static_cast<std::size_t>(v)])
        throw PreconditionError("matching edges share vertex " + std::to_string(v));
      saturated[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    if (!in_m[static_cast<std::size_t>(e)] && h.edge_size(e) != 2)
      throw PreconditionError("edge " + std::to_string(e) + " has size " + std::to_string(h.edge_size(e)) +
                              " but is not in the matching");
  std::vector<char> forbidden = in_m;
  if (x) {
    if (*x < 0 || *x >= n) throw PreconditionError("special vertex out of range");
    for (EdgeId e : h.incident(*x)) {
      for (Vertex w : h.members(e))
        if (w != *x && saturated[static_cast<std::size_t>(w)])
          throw PreconditionError("neighbour " + std::to_string(w) + " of x is covered by the matching");
      forbidden[static_cast<std::size_t>(e)] = 1;
    }
  }
  std::vector<EdgeId> rainbow;
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    if (forbidden[static_cast<std::size_t>(e)]) rainbow.push_back(e);

  const Color bound = hypergraph_extension_palette(h);
  const Color k = options.palette.value_or(bound);
  if (k < bound && !options.allow_below_bound)
    throw PreconditionError("palette " + std::to_string(k) + " is below Delta+2c-1 = " + std::to_string(bound));
  if (static_cast<std::size_t>(k) < rainbow.size())
    throw PreconditionError("|M| + d(x) = " + std::to_string(rainbow.size()) + " exceeds the palette " +
                            std::to_string(k));

  ExtensionResult out{PartialEdgeColoring(std::make_shared<const Hypergraph>(h), k), rainbow, {}};
  initial_coloring(out.coloring, rainbow, out.stats);
  const std::size_t c = std::max<std::size_t>(h.rank(), 1);
  auto center_of = [&h](EdgeId e) {
    auto mem = h.members(e);
    return std::min(mem[0], mem[1]);
  };
  Extender engine(out.coloring, std::move(forbidden), 2 * c, center_of,
                  options.step_budget.value_or(default_budget(k, h.num_edges())), out.stats);
  engine.run();
  return out;
}

NearBipartiteResult extend_near_bipartite(const Graph& g0, const Bipartition& bip, const Matching& m,
                                          std::span<const Vertex> x_neighbors,
                                          std::optional<std::uint64_t> step_budget) {
  const Vertex n0 = g0.num_vertices();
  if (bip.num_vertices() != n0) throw PreconditionError("bipartition does not cover g0");
  for (const auto& e : g0.edges())
    if (bip.in_a(e.u) == bip.in_a(e.v))
      throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} lies inside one side");
  if (!m.is_valid(n0, &g0)) throw PreconditionError("M is not a matching of g0");
  std::vector<char> saturated(static_cast<std::size_t>(n0), 0);
  for (const auto& e : m.edges) saturated[static_cast<std::size_t>(e.u)] = saturated[static_cast<std::size_t>(e.v)] = 1;

  NearBipartiteResult out;
  out.graph = g0;
  out.x = out.graph.add_vertex();
  for (Vertex w : x_neighbors) {
    if (w < 0 || w >= n0) throw PreconditionError("x neighbour out of range");
    if (saturated[static_cast<std::size_t>(w)])
      throw PreconditionError("x neighbour " + std::to_string(w) + " is covered by M");
    if (out.graph.has_edge(out.x, w)) throw PreconditionError("x neighbour listed twice");
    out.graph.add_edge(out.x, w);
  }
  const Graph& g = out.graph;
  std::size_t k_b = 0;
  for (Vertex v = 0; v < n0; ++v)
    if (bip.in_b(v)) k_b = std::max(k_b, g.degree(v));
  out.k = static_cast<Color>(std::max(g.max_degree(), k_b + 1));
  const std::size_t need = m.size() + g.degree(out.x);
  if (static_cast<std::size_t>(out.k) < need)
    throw PreconditionError("k = " + std::to_string(out.k) + " is below |M| + d(x) = " + std::to_string(need));

  auto host = std::make_shared<const Hypergraph>(Hypergraph::from_graph(g));
  out.coloring = PartialEdgeColoring(host, out.k);
  std::vector<char> forbidden(static_cast<std::size_t>(g.num_edges()), 0);
  for (const auto& e : m.edges) forbidden[static_cast<std::size_t>(*g.find_edge(e.u, e.v))] = 1;
  for (const auto& inc : g.incident(out.x)) forbidden[static_cast<std::size_t>(inc.edge)] = 1;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (forbidden[static_cast<std::size_t>(e)]) out.rainbow.push_back(e);

  initial_coloring(out.coloring, out.rainbow, out.stats);
  auto center_of = [&g, &bip, x = out.x](EdgeId e) {
    const auto& ends = g.edge(e);
    if (ends.u == x || ends.v == x) return ends.u == x ? ends.v : ends.u;
    return bip.in_a(ends.u) ? ends.u : ends.v;
  };
  Extender engine(out.coloring, std::move(forbidden), 2, center_of,
                  step_budget.value_or(default_budget(out.k, g.num_edges())), out.stats);
  engine.run();
  return out;
}

}  // namespace totalchroma
