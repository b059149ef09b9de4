#include "totalchroma/fans_chains.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace totalchroma {

bool Chain::contains_edge(EdgeId e) const { return std::find(edges.begin(), edges.end(), e) != edges.end(); }

bool Chain::is_end(Vertex v) const { return std::binary_search(end_vertices.begin(), end_vertices.end(), v); }

Chain kempe_chain(const PartialEdgeColoring& phi, Vertex v, Color alpha, Color gamma) {
  const Color k = phi.palette();
  if (alpha == gamma) throw PreconditionError("chain colors must differ");
  if (alpha < 1 || alpha > k || gamma < 1 || gamma > k) throw PreconditionError("chain color outside palette");
  if (v < 0 || v >= phi.host().num_vertices()) throw PreconditionError("chain start out of range");
  if (!phi.is_missing(v, alpha) && !phi.is_missing(v, gamma))
    throw PreconditionError("vertex " + std::to_string(v) + " sees both chain colors");

  const Hypergraph& h = phi.host();
  Chain p{alpha, gamma, v, {}, {}, {}};
  std::unordered_set<Vertex> seen{v};
  std::unordered_set<EdgeId> taken;
  std::vector<Vertex> queue{v};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Vertex w = queue[qi];
    for (Color c : {alpha, gamma}) {
      const EdgeId e = phi.edge_with_color(w, c);
      if (e == kNoEdge || !taken.insert(e).second) continue;
      p.edges.push_back(e);
      for (Vertex z : h.members(e))
        if (seen.insert(z).second) queue.push_back(z);
    }
  }
  p.vertices = std::move(queue);
  std::sort(p.vertices.begin(), p.vertices.end());
  for (Vertex w : p.vertices) {
    const int deg = (phi.is_missing(w, alpha) ? 0 : 1) + (phi.is_missing(w, gamma) ? 0 : 1);
    if (deg == 1) p.end_vertices.push_back(w);
  }
  return p;
}

void switch_chain(PartialEdgeColoring& phi, const Chain& p) {
  for (EdgeId e : p.edges) {
    const Color c = phi.color(e);
    if (c != p.alpha && c != p.gamma)
      throw PreconditionError("edge " + std::to_string(e) + " of the chain is not colored alpha or gamma");
  }
  // Maximality: every alpha/gamma edge at a chain vertex belongs to the chain.
  std::unordered_set<EdgeId> members(p.edges.begin(), p.edges.end());
  for (Vertex w : p.vertices)
    for (Color c : {p.alpha, p.gamma}) {
      const EdgeId e = phi.edge_with_color(w, c);
      if (e != kNoEdge && !members.count(e)) throw PreconditionError("chain is not maximal");
    }
  std::vector<Color> old(p.edges.size());
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    old[i] = phi.color(p.edges[i]);
    phi.unassign(p.edges[i]);
  }
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const Color target = old[i] == p.alpha ? p.gamma : p.alpha;
    try {
      phi.assign(p.edges[i], target);
    } catch (const PreconditionError& err) {
      throw InternalError(std::string("chain switch produced an improper coloring: ") + err.what());
    }
  }
}

int Multifan::index_of(Vertex leaf) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].leaf == leaf) return static_cast<int>(i);
  return -1;
}

namespace {

bool fan_edge_ok(const PartialEdgeColoring& phi, Vertex center, EdgeId e) {
  const Hypergraph& h = phi.host();
  return e >= 0 && e < h.num_edges() && h.edge_size(e) == 2 && h.contains(e, center);
}

int earliest_justifier(const PartialEdgeColoring& phi, const Multifan& fan, std::size_t upto, Color c) {
  for (std::size_t j = 0; j < upto; ++j)
    if (phi.is_missing(fan.entries[j].leaf, c)) return static_cast<int>(j);
  return -1;
}

}  // namespace

bool is_multifan(const PartialEdgeColoring& phi, const Multifan& fan) {
  if (fan.entries.empty()) return false;
  std::unordered_set<EdgeId> used;
  for (std::size_t i = 0; i < fan.entries.size(); ++i) {
    const auto& en = fan.entries[i];
    if (!fan_edge_ok(phi, fan.center, en.edge)) return false;
    if (phi.host().other_end(en.edge, fan.center) != en.leaf) return false;
    if (!used.insert(en.edge).second) return false;
    if (i == 0) {
      if (phi.is_colored(en.edge)) return false;
      continue;
    }
    if (!phi.is_colored(en.edge)) return false;
    if (earliest_justifier(phi, fan, i, phi.color(en.edge)) < 0) return false;
  }
  return true;
}

Multifan build_multifan(const PartialEdgeColoring& phi, EdgeId e0, Vertex center, const EdgeFilter& filter) {
  const Hypergraph& h = phi.host();
  if (e0 < 0 || e0 >= h.num_edges()) throw PreconditionError("fan edge out of range");
  if (phi.is_colored(e0)) throw PreconditionError("first fan edge must be uncolored");
  if (!fan_edge_ok(phi, center, e0)) throw PreconditionError("first fan edge must have size two and contain the center");

  Multifan fan{center, {{e0, h.other_end(e0, center), -1}}};
  ColorSet reach = phi.missing(fan.entries[0].leaf);
  std::vector<char> in_fan(static_cast<std::size_t>(h.num_edges()), 0);
  in_fan[static_cast<std::size_t>(e0)] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (EdgeId e : h.incident(center)) {
      if (in_fan[static_cast<std::size_t>(e)] || !phi.is_colored(e) || h.edge_size(e) != 2) continue;
      if (filter && !filter(e)) continue;
      const Color c = phi.color(e);
      if (!reach.contains(c)) continue;
      const Vertex leaf = h.other_end(e, center);
      fan.entries.push_back({e, leaf, earliest_justifier(phi, fan, fan.entries.size(), c)});
      in_fan[static_cast<std::size_t>(e)] = 1;
      reach |= phi.missing(leaf);
      grew = true;
    }
  }
  return fan;
}

Multifan restrict_to_clean_sequences(const PartialEdgeColoring& phi, const Multifan& fan,
                                     std::span<const EdgeId> forbidden) {
  std::unordered_set<EdgeId> bad(forbidden.begin(), forbidden.end());
  const std::size_t p = fan.entries.size();
  std::vector<char> keep(p, 0);
  std::vector<int> remap(p, -1);
  Multifan out{fan.center, {}};
  for (std::size_t i = 0; i < p; ++i) {
    const auto& en = fan.entries[i];
    int just = -1;
    if (i == 0) {
      keep[i] = 1;
    } else if (!bad.count(en.edge)) {
      const Color c = phi.color(en.edge);
      for (std::size_t j = 0; j < i && just < 0; ++j)
        if (keep[j] && phi.is_missing(fan.entries[j].leaf, c)) just = remap[j];
      keep[i] = just >= 0;
    }
    if (!keep[i]) continue;
    remap[i] = static_cast<int>(out.entries.size());
    out.entries.push_back({en.edge, en.leaf, i == 0 ? -1 : just});
  }
  return out;
}

bool is_linear_sequence(const PartialEdgeColoring& phi, const Multifan& fan, const LinearSequence& seq) {
  if (seq.empty() || seq[0] != 0) return false;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] <= seq[i - 1] || seq[i] >= static_cast<int>(fan.size())) return false;
    const Color c = phi.color(fan.edge(static_cast<std::size_t>(seq[i])));
    if (c == kUncolored || !phi.is_missing(fan.leaf(static_cast<std::size_t>(seq[i - 1])), c)) return false;
  }
  return true;
}

std::vector<LinearSequence> linear_sequences(const PartialEdgeColoring& phi, const Multifan& fan, std::size_t cap) {
  std::vector<LinearSequence> out;
  LinearSequence cur{0};
  std::function<void()> dfs = [&] {
    if (out.size() >= cap) return;
    const int last = cur.back();
    for (int j = last + 1; j < static_cast<int>(fan.size()); ++j) {
      const Color c = phi.color(fan.edge(static_cast<std::size_t>(j)));
      if (!phi.is_missing(fan.leaf(static_cast<std::size_t>(last)), c)) continue;
      cur.push_back(j);
      out.push_back(cur);
      dfs();
      cur.pop_back();
      if (out.size() >= cap) return;
    }
  };
  dfs();
  return out;
}

LinearSequence sequence_to(const Multifan& fan, int i) {
  LinearSequence seq;
  for (int j = i; j >= 0; j = fan.entries[static_cast<std::size_t>(j)].justifier) {
    seq.push_back(j);
    if (j == 0) break;
  }
  std::reverse(seq.begin(), seq.end());
  if (seq.empty() || seq.front() != 0) throw PreconditionError("justifier chain does not reach entry 0");
  return seq;
}

void shift(PartialEdgeColoring& phi, const Multifan& fan, const LinearSequence& seq, int h) {
  if (!is_linear_sequence(phi, fan, seq)) throw PreconditionError("not a linear sequence of the fan");
  if (phi.is_colored(fan.edge(0))) throw PreconditionError("first fan edge must be uncolored");
  const int t = static_cast<int>(seq.size()) - 1;
  if (h < 1 || h > t) throw PreconditionError("shift length outside 1..t");
  std::vector<Color> moved(static_cast<std::size_t>(h) + 1);
  for (int i = 1; i <= h; ++i) {
    const EdgeId e = fan.edge(static_cast<std::size_t>(seq[static_cast<std::size_t>(i)]));
    moved[static_cast<std::size_t>(i)] = phi.color(e);
    phi.unassign(e);
  }
  for (int i = 1; i <= h; ++i) {
    const EdgeId e = fan.edge(static_cast<std::size_t>(seq[static_cast<std::size_t>(i - 1)]));
    try {
      phi.assign(e, moved[static_cast<std::size_t>(i)]);
    } catch (const PreconditionError& err) {
      throw InternalError(std::string("shift produced an improper coloring: ") + err.what());
    }
  }
}

}  // namespace totalchroma
