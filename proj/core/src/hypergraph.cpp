#include "totalchroma/hypergraph.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace totalchroma {

Hypergraph::Hypergraph(Vertex n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  incidence_.resize(static_cast<std::size_t>(n));
}

Hypergraph Hypergraph::from_graph(const Graph& g) {
  Hypergraph h(g.num_vertices());
  h.offsets_.reserve(static_cast<std::size_t>(g.num_edges()) + 1);
  h.members_.reserve(2 * static_cast<std::size_t>(g.num_edges()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) h.incidence_[static_cast<std::size_t>(v)].reserve(g.degree(v));
  // A simple graph is already a simple hypergraph; skip the pairwise check.
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& ends = g.edge(e);
    h.members_.push_back(ends.u);
    h.members_.push_back(ends.v);
    h.offsets_.push_back(h.members_.size());
    h.incidence_[static_cast<std::size_t>(ends.u)].push_back(e);
    h.incidence_[static_cast<std::size_t>(ends.v)].push_back(e);
  }
  return h;
}

EdgeId Hypergraph::add_edge(std::span<const Vertex> members) {
  if (members.size() < 2) throw PreconditionError("hyperedge needs at least two members");
  std::vector<Vertex> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("hyperedge lists a vertex twice");
  for (Vertex v : sorted)
    if (v < 0 || v >= num_vertices())
      throw PreconditionError("hyperedge member " + std::to_string(v) + " out of range");
  std::unordered_map<EdgeId, int> shared;
  for (Vertex v : sorted)
    for (EdgeId f : incident(v))
      if (++shared[f] >= 2)
        throw PreconditionError("hyperedge shares two vertices with edge " + std::to_string(f) +
                                " (hypergraph must stay simple)");
  const EdgeId id = num_edges();
  members_.insert(members_.end(), members.begin(), members.end());
  offsets_.push_back(members_.size());
  for (Vertex v : members) incidence_[static_cast<std::size_t>(v)].push_back(id);
  return id;
}

Vertex Hypergraph::add_vertex() {
  incidence_.emplace_back();
  return num_vertices() - 1;
}

bool Hypergraph::contains(EdgeId e, Vertex v) const {
  auto m = members(e);
  return std::find(m.begin(), m.end(), v) != m.end();
}

std::size_t Hypergraph::max_degree() const {
  std::size_t d = 0;
  for (const auto& inc : incidence_) d = std::max(d, inc.size());
  return d;
}

std::size_t Hypergraph::rank() const {
  std::size_t c = 0;
  for (EdgeId e = 0; e < num_edges(); ++e) c = std::max(c, edge_size(e));
  return c;
}

std::vector<Vertex> Hypergraph::neighborhood(Vertex v) const {
  std::vector<Vertex> out;
  for (EdgeId e : incident(v))
    for (Vertex w : members(e))
      if (w != v) out.push_back(w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Hypergraph::is_simple() const {
  for (EdgeId e = 0; e < num_edges(); ++e) {
    auto m = members(e);
    if (m.size() < 2) return false;
    std::vector<Vertex> s(m.begin(), m.end());
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  }
  for (Vertex v = 0; v < num_vertices(); ++v) {
    auto inc = incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        int common = 0;
        for (Vertex w : members(inc[i]))
          if (contains(inc[j], w)) ++common;
        if (common > 1) return false;
      }
  }
  return true;
}

}  // namespace totalchroma
