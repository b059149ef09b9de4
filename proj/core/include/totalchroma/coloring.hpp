#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "totalchroma/graph.hpp"
#include "totalchroma/hypergraph.hpp"
#include "totalchroma/types.hpp"

namespace totalchroma {

/// Subset of the palette {1..k}, stored as a packed bitset.
class ColorSet {
 public:
  ColorSet() = default;
  explicit ColorSet(Color k, bool full = false);

  Color palette() const { return k_; }
  bool contains(Color c) const {
    if (c < 1 || c > k_) return false;
    const auto i = static_cast<std::size_t>(c);
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void insert(Color c) {
    const auto i = static_cast<std::size_t>(c);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void erase(Color c) {
    const auto i = static_cast<std::size_t>(c);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  std::size_t size() const;
  bool empty() const;
  /// Smallest member, or kUncolored when empty.
  Color smallest() const;
  /// Smallest member of this ∩ other, or kUncolored.
  Color smallest_common(const ColorSet& other) const;
  bool intersects(const ColorSet& other) const { return smallest_common(other) != kUncolored; }
  ColorSet& operator|=(const ColorSet& other);
  ColorSet& operator&=(const ColorSet& other);
  std::vector<Color> to_vector() const;
  /// Grows the palette; new colors start absent.
  void resize(Color k);

  friend bool operator==(const ColorSet&, const ColorSet&) = default;

 private:
  Color k_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Partial proper k-edge-coloring of a hypergraph (graphs enter through
/// Hypergraph::from_graph). Every mutation keeps the per-vertex color->edge
/// table and the missing-color bitsets in sync, so lookups are O(1).
class PartialEdgeColoring {
 public:
  PartialEdgeColoring() = default;
  PartialEdgeColoring(std::shared_ptr<const Hypergraph> host, Color k);
  PartialEdgeColoring(const Hypergraph& host, Color k)
      : PartialEdgeColoring(std::make_shared<const Hypergraph>(host), k) {}
  PartialEdgeColoring(const Graph& host, Color k)
      : PartialEdgeColoring(std::make_shared<const Hypergraph>(Hypergraph::from_graph(host)), k) {}

  const Hypergraph& host() const { return *host_; }
  const std::shared_ptr<const Hypergraph>& host_ptr() const { return host_; }
  Color palette() const { return k_; }

  Color color(EdgeId e) const { return colors_[static_cast<std::size_t>(e)]; }
  bool is_colored(EdgeId e) const { return color(e) != kUncolored; }
  std::span<const Color> colors() const { return colors_; }
  std::size_t num_colored() const { return num_colored_; }

  /// Colors an uncolored edge. Throws PreconditionError if c is outside the
  /// palette, the edge is already colored, or a member already sees c.
  void assign(EdgeId e, Color c);
  void unassign(EdgeId e);
  void recolor(EdgeId e, Color c);

  /// The edge at v colored c, or kNoEdge.
  EdgeId edge_with_color(Vertex v, Color c) const {
    return at_[static_cast<std::size_t>(v) * stride_ + static_cast<std::size_t>(c)];
  }
  bool is_missing(Vertex v, Color c) const { return missing_[static_cast<std::size_t>(v)].contains(c); }
  const ColorSet& missing(Vertex v) const { return missing_[static_cast<std::size_t>(v)]; }
  std::size_t colored_degree(Vertex v) const {
    return static_cast<std::size_t>(k_) - missing_[static_cast<std::size_t>(v)].size();
  }

  /// Adds colors k+1..new_k, all missing everywhere.
  void extend_palette(Color new_k);

 private:
  std::shared_ptr<const Hypergraph> host_;
  Color k_ = 0;
  std::size_t stride_ = 1;
  std::vector<Color> colors_;
  std::vector<EdgeId> at_;
  std::vector<ColorSet> missing_;
  std::size_t num_colored_ = 0;
};

/// Two edges sharing `at` with the same color, or an out-of-palette color on `first`.
struct Violation {
  EdgeId first = kNoEdge;
  EdgeId second = kNoEdge;
  Vertex at = kNoVertex;
  Color color = kUncolored;
  std::string describe() const;
};

/// Independent properness check over raw colors (0 = uncolored). Scans
/// vertices in ascending order and their incident edges in incidence order.
std::optional<Violation> verify_edge_coloring(const Hypergraph& h, Color k, std::span<const Color> colors);
std::optional<Violation> verify_edge_coloring(const PartialEdgeColoring& phi);

ColorSet missing_colors(const PartialEdgeColoring& phi, Vertex v);
/// Vertices missing color i, ascending. Throws PreconditionError for i outside {1..k}.
std::vector<Vertex> missing_class(const PartialEdgeColoring& phi, Color i);

/// Joint vertex and edge coloring. `edge_colors` follows the graph's edge ids.
struct TotalColoring {
  Color k = 0;
  std::vector<Color> vertex_colors;
  std::vector<Color> edge_colors;

  /// Number of distinct colors actually used.
  Color colors_used() const;
};

struct TotalViolation {
  enum class Kind { kShape, kRange, kBudget, kAdjacentVertices, kAdjacentEdges, kIncidence };
  Kind kind = Kind::kShape;
  /// Vertex or edge ids involved, depending on kind.
  std::int64_t a = -1;
  std::int64_t b = -1;
  std::string describe() const;
};

/// Ok iff every color lies in {1..k}, k <= budget, and the three adjacency
/// families are respected. Reports the first violation found.
std::optional<TotalViolation> verify_total_coloring(const TotalColoring& tc, const Graph& g, Color budget);

}  // namespace totalchroma
