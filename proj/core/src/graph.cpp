#include "totalchroma/graph.hpp"

#include <algorithm>
#include <string>

namespace totalchroma {

Graph::Graph(Vertex n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(Vertex n, std::span<const EdgeEnds> edges) {
  Graph g(n);
  g.edges_.reserve(edges.size());
  g.index_.reserve(edges.size());
  for (const auto& e : edges) g.add_edge(e.u, e.v);
  return g;
}

std::uint64_t Graph::key(Vertex u, Vertex v) {
  auto e = EdgeEnds::normalized(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
         static_cast<std::uint32_t>(e.v);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= num_vertices())
    throw PreconditionError("vertex " + std::to_string(v) + " out of range [0, " +
                            std::to_string(num_vertices()) + ")");
}

EdgeId Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  auto [it, inserted] = index_.emplace(key(u, v), num_edges());
  if (!inserted)
    throw PreconditionError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  const EdgeId id = num_edges();
  edges_.push_back(EdgeEnds::normalized(u, v));
  adjacency_[static_cast<std::size_t>(u)].push_back({v, id});
  adjacency_[static_cast<std::size_t>(v)].push_back({u, id});
  return id;
}

Vertex Graph::add_vertex() {
  adjacency_.emplace_back();
  return num_vertices() - 1;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& a : adjacency_) d = std::max(d, a.size());
  return d;
}

std::size_t Graph::min_degree() const {
  if (adjacency_.empty()) return 0;
  std::size_t d = adjacency_.front().size();
  for (const auto& a : adjacency_) d = std::min(d, a.size());
  return d;
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (adjacency_.empty()) return 0;
  const std::size_t d = adjacency_.front().size();
  for (const auto& a : adjacency_)
    if (a.size() != d) return std::nullopt;
  return d;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (u == v || u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return std::nullopt;
  auto it = index_.find(key(u, v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degree(v));
  for (const auto& inc : incident(v)) out.push_back(inc.neighbor);
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  for (const auto& e : a.edges_)
    if (!b.has_edge(e.u, e.v)) return false;
  return true;
}

Bipartition Bipartition::from_sides(Vertex n, std::span<const Vertex> a_side) {
  std::vector<bool> in_a(static_cast<std::size_t>(n), false);
  for (Vertex v : a_side) {
    if (v < 0 || v >= n) throw PreconditionError("bipartition vertex out of range");
    in_a[static_cast<std::size_t>(v)] = true;
  }
  return Bipartition(std::move(in_a));
}

std::vector<Vertex> Bipartition::side_a() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < num_vertices(); ++v)
    if (in_a(v)) out.push_back(v);
  return out;
}

std::vector<Vertex> Bipartition::side_b() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < num_vertices(); ++v)
    if (in_b(v)) out.push_back(v);
  return out;
}

std::size_t Bipartition::size_a() const {
  return static_cast<std::size_t>(std::count(in_a_.begin(), in_a_.end(), true));
}

long long Bipartition::degree_imbalance(const Graph& g, Vertex v) const {
  long long d = 0;
  for (const auto& inc : g.incident(v)) d += in_a(inc.neighbor) ? 1 : -1;
  return d;
}

std::vector<Vertex> Matching::saturated() const {
  std::vector<Vertex> out;
  out.reserve(2 * edges.size());
  for (const auto& e : edges) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> Matching::mates(Vertex n) const {
  std::vector<Vertex> mate(static_cast<std::size_t>(n), kNoVertex);
  for (const auto& e : edges) {
    mate[static_cast<std::size_t>(e.u)] = e.v;
    mate[static_cast<std::size_t>(e.v)] = e.u;
  }
  return mate;
}

bool Matching::is_valid(Vertex n, const Graph* host) const {
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) return false;
    if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) return false;
    used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = true;
    if (host != nullptr && !host->has_edge(e.u, e.v)) return false;
  }
  return true;
}

Graph complement(const Graph& g) {
  const Vertex n = g.num_vertices();
  Graph out(n);
  std::vector<char> mark(static_cast<std::size_t>(n), 0);
  for (Vertex u = 0; u < n; ++u) {
    for (const auto& inc : g.incident(u)) mark[static_cast<std::size_t>(inc.neighbor)] = 1;
    for (Vertex v = u + 1; v < n; ++v)
      if (!mark[static_cast<std::size_t>(v)]) out.add_edge(u, v);
    for (const auto& inc : g.incident(u)) mark[static_cast<std::size_t>(inc.neighbor)] = 0;
  }
  return out;
}

Graph induced_bipartite(const Graph& g, const Bipartition& p) {
  if (p.num_vertices() != g.num_vertices())
    throw PreconditionError("bipartition does not cover the vertex set");
  Graph out(g.num_vertices());
  for (const auto& e : g.edges())
    if (p.in_a(e.u) != p.in_a(e.v)) out.add_edge(e.u, e.v);
  return out;
}

Graph induced_side(const Graph& g, const Bipartition& p, bool side_a) {
  if (p.num_vertices() != g.num_vertices())
    throw PreconditionError("bipartition does not cover the vertex set");
  Graph out(g.num_vertices());
  for (const auto& e : g.edges())
    if (p.in_a(e.u) == side_a && p.in_a(e.v) == side_a) out.add_edge(e.u, e.v);
  return out;
}

}  // namespace totalchroma
