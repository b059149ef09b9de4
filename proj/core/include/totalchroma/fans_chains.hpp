#pragma once

#include <functional>
#include <span>
#include <vector>

#include "totalchroma/coloring.hpp"

namespace totalchroma {

/// Connected component of the sub-hypergraph formed by edges colored alpha or
/// gamma that contains `start`.
struct Chain {
  Color alpha = kUncolored;
  Color gamma = kUncolored;
  Vertex start = kNoVertex;
  /// Discovery (breadth-first) order.
  std::vector<EdgeId> edges;
  /// Sorted.
  std::vector<Vertex> vertices;
  /// Vertices meeting exactly one chain edge, sorted.
  std::vector<Vertex> end_vertices;

  bool contains_edge(EdgeId e) const;
  bool is_end(Vertex v) const;
};

/// Throws PreconditionError unless alpha != gamma, both are in the palette and
/// v misses at least one of them.
Chain kempe_chain(const PartialEdgeColoring& phi, Vertex v, Color alpha, Color gamma);

/// Swaps alpha and gamma on every edge of p, in place. Throws
/// PreconditionError (leaving phi untouched) if p is not a maximal chain of phi.
void switch_chain(PartialEdgeColoring& phi, const Chain& p);

struct FanEntry {
  EdgeId edge = kNoEdge;
  Vertex leaf = kNoVertex;
  /// Earliest index j with color(edge) missing at leaf j; -1 for entry 0.
  int justifier = -1;
};

/// (r, e0, s0, e1, s1, ..., ep, sp) with ei = r si.
struct Multifan {
  Vertex center = kNoVertex;
  std::vector<FanEntry> entries;

  std::size_t size() const { return entries.size(); }
  Vertex leaf(std::size_t i) const { return entries[i].leaf; }
  EdgeId edge(std::size_t i) const { return entries[i].edge; }
  /// Position of a leaf, or -1.
  int index_of(Vertex leaf) const;
};

/// Index list (0 = l0, l1, ..., lt) into a multifan.
using LinearSequence = std::vector<int>;

using EdgeFilter = std::function<bool(EdgeId)>;

/// Definition check: e0 uncolored, every edge a distinct size-2 edge at the
/// center, and every later edge justified by an earlier leaf.
bool is_multifan(const PartialEdgeColoring& phi, const Multifan& fan);

/// Greedy closure at `center` starting from the uncolored edge e0: scans the
/// center's colored size-2 edges by ascending id and appends every one whose
/// color is missing at some current leaf, repeating until nothing changes.
/// Edges rejected by `filter` are never used.
Multifan build_multifan(const PartialEdgeColoring& phi, EdgeId e0, Vertex center, const EdgeFilter& filter = {});

/// Keeps exactly the entries lying on a linear sequence with no forbidden edge.
Multifan restrict_to_clean_sequences(const PartialEdgeColoring& phi, const Multifan& fan,
                                     std::span<const EdgeId> forbidden);

bool is_linear_sequence(const PartialEdgeColoring& phi, const Multifan& fan, const LinearSequence& seq);

/// Every linear sequence of the fan with at least one step, up to `cap` of them.
std::vector<LinearSequence> linear_sequences(const PartialEdgeColoring& phi, const Multifan& fan,
                                             std::size_t cap = 100000);

/// The sequence ending at entry i obtained by following justifiers back to 0.
LinearSequence sequence_to(const Multifan& fan, int i);

/// Recolors e_{l(i-1)} with phi(e_{l(i)}) for i = 1..h, in place. Afterwards e0
/// is colored and e_{l(h)} is not. Throws PreconditionError if seq is not a
/// linear sequence of fan or h is outside 1..t.
void shift(PartialEdgeColoring& phi, const Multifan& fan, const LinearSequence& seq, int h);

}  // namespace totalchroma
