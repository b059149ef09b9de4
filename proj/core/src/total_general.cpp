#include <algorithm>
#include <string>

#include "totalchroma/equitable.hpp"
#include "totalchroma/extension.hpp"
#include "totalchroma/totalizer.hpp"

namespace totalchroma {
namespace {

// K_n with n odd: edge {i,j} gets i+j and vertex i gets 2i (mod n), n colors.
// Even n reuses the odd construction on K_{n+1}.
TotalColoring complete_graph_coloring(const Graph& g) {
  const Vertex n = g.num_vertices();
  const Vertex odd = n % 2 == 1 ? n : n + 1;
  TotalColoring tc;
  tc.k = odd;
  tc.vertex_colors.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) tc.vertex_colors[static_cast<std::size_t>(v)] = (2 * v) % odd + 1;
  tc.edge_colors.reserve(g.edges().size());
  for (const auto& e : g.edges()) tc.edge_colors.push_back((e.u + e.v) % odd + 1);
  return tc;
}

}  // namespace

Color general_total_budget(const Graph& g) {
  const auto delta = static_cast<Color>(g.max_degree());
  const Vertex n = g.num_vertices();
  return delta + 2 * ((n + delta) / (delta + 1));
}

TotalColoring total_color_general(const Graph& g) {
  const Vertex n = g.num_vertices();
  if (n == 0) return {};
  const auto delta = static_cast<Color>(g.max_degree());
  const Color budget = general_total_budget(g);
  if (static_cast<std::size_t>(n) <= static_cast<std::size_t>(delta) + 1) return complete_graph_coloring(g);

  const std::vector<Color> classes = equitable_vertex_coloring(g, delta + 1);
  std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(delta) + 1);
  for (Vertex v = 0; v < n; ++v) members[static_cast<std::size_t>(classes[static_cast<std::size_t>(v)] - 1)].push_back(v);

  Hypergraph h = Hypergraph::from_graph(g);
  const Vertex x = h.add_vertex();
  std::vector<EdgeId> matching;
  std::vector<EdgeId> carrier(static_cast<std::size_t>(n), kNoEdge);
  for (const auto& cls : members) {
    if (cls.empty()) continue;
    EdgeId e = kNoEdge;
    if (cls.size() >= 2) {
      e = h.add_edge(cls);
      matching.push_back(e);
    } else {
      e = h.add_edge({cls[0], x});
    }
    for (Vertex v : cls) carrier[static_cast<std::size_t>(v)] = e;
  }

  ExtensionOptions opts;
  opts.palette = budget;
  const ExtensionResult ext = extend_hypergraph(h, matching, x, opts);

  TotalColoring tc;
  tc.k = budget;
  tc.edge_colors.assign(ext.coloring.colors().begin(), ext.coloring.colors().begin() + g.num_edges());
  tc.vertex_colors.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) tc.vertex_colors[static_cast<std::size_t>(v)] = ext.coloring.color(carrier[static_cast<std::size_t>(v)]);
  if (auto bad = verify_total_coloring(tc, g, budget))
    throw InternalError("general total coloring failed verification: " + bad->describe());
  return tc;
}

}  // namespace totalchroma
