#include "totalchroma/coloring.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace totalchroma {

ColorSet::ColorSet(Color k, bool full) : k_(k), words_(static_cast<std::size_t>(k) / 64 + 1, 0) {
  if (k < 0) throw PreconditionError("negative palette size");
  if (full)
    for (Color c = 1; c <= k; ++c) insert(c);
}

std::size_t ColorSet::size() const {
  std::size_t s = 0;
  for (auto w : words_) s += static_cast<std::size_t>(std::popcount(w));
  return s;
}

bool ColorSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Color ColorSet::smallest() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return static_cast<Color>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
  return kUncolored;
}

Color ColorSet::smallest_common(const ColorSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t w = words_[i] & other.words_[i];
    if (w != 0) return static_cast<Color>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
  }
  return kUncolored;
}

ColorSet& ColorSet::operator|=(const ColorSet& other) {
  if (other.k_ > k_) resize(other.k_);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ColorSet& ColorSet::operator&=(const ColorSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  return *this;
}

std::vector<Color> ColorSet::to_vector() const {
  std::vector<Color> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<Color>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

void ColorSet::resize(Color k) {
  if (k < k_) throw PreconditionError("ColorSet cannot shrink");
  k_ = k;
  words_.resize(static_cast<std::size_t>(k) / 64 + 1, 0);
}

PartialEdgeColoring::PartialEdgeColoring(std::shared_ptr<const Hypergraph> host, Color k)
    : host_(std::move(host)), k_(k) {
  if (!host_) throw PreconditionError("coloring needs a host");
  if (k < 0) throw PreconditionError("negative palette size");
  stride_ = static_cast<std::size_t>(k) + 1;
  colors_.assign(static_cast<std::size_t>(host_->num_edges()), kUncolored);
  at_.assign(static_cast<std::size_t>(host_->num_vertices()) * stride_, kNoEdge);
  missing_.assign(static_cast<std::size_t>(host_->num_vertices()), ColorSet(k, true));
}

void PartialEdgeColoring::assign(EdgeId e, Color c) {
  if (c < 1 || c > k_)
    throw PreconditionError("color " + std::to_string(c) + " outside palette 1.." + std::to_string(k_));
  if (is_colored(e)) throw PreconditionError("edge " + std::to_string(e) + " is already colored");
  for (Vertex v : host_->members(e))
    if (!is_missing(v, c))
      throw PreconditionError("color " + std::to_string(c) + " already present at vertex " + std::to_string(v) +
                              " (edge " + std::to_string(edge_with_color(v, c)) + ")");
  colors_[static_cast<std::size_t>(e)] = c;
  for (Vertex v : host_->members(e)) {
    at_[static_cast<std::size_t>(v) * stride_ + static_cast<std::size_t>(c)] = e;
    missing_[static_cast<std::size_t>(v)].erase(c);
  }
  ++num_colored_;
}

void PartialEdgeColoring::unassign(EdgeId e) {
  const Color c = color(e);
  if (c == kUncolored) return;
  for (Vertex v : host_->members(e)) {
    at_[static_cast<std::size_t>(v) * stride_ + static_cast<std::size_t>(c)] = kNoEdge;
    missing_[static_cast<std::size_t>(v)].insert(c);
  }
  colors_[static_cast<std::size_t>(e)] = kUncolored;
  --num_colored_;
}

void PartialEdgeColoring::recolor(EdgeId e, Color c) {
  const Color old = color(e);
  unassign(e);
  try {
    assign(e, c);
  } catch (...) {
    if (old != kUncolored) assign(e, old);
    throw;
  }
}

void PartialEdgeColoring::extend_palette(Color new_k) {
  if (new_k < k_) throw PreconditionError("palette cannot shrink");
  if (new_k == k_) return;
  const std::size_t new_stride = static_cast<std::size_t>(new_k) + 1;
  std::vector<EdgeId> at(static_cast<std::size_t>(host_->num_vertices()) * new_stride, kNoEdge);
  for (std::size_t v = 0; v < missing_.size(); ++v) {
    std::copy_n(at_.begin() + static_cast<std::ptrdiff_t>(v * stride_), stride_,
                at.begin() + static_cast<std::ptrdiff_t>(v * new_stride));
    missing_[v].resize(new_k);
    for (Color c = k_ + 1; c <= new_k; ++c) missing_[v].insert(c);
  }
  at_ = std::move(at);
  stride_ = new_stride;
  k_ = new_k;
}

std::string Violation::describe() const {
  if (second == kNoEdge)
    return "edge " + std::to_string(first) + " has color " + std::to_string(color) + " outside the palette";
  return "edges " + std::to_string(first) + " and " + std::to_string(second) + " share vertex " +
         std::to_string(at) + " and color " + std::to_string(color);
}

std::optional<Violation> verify_edge_coloring(const Hypergraph& h, Color k, std::span<const Color> colors) {
  if (colors.size() != static_cast<std::size_t>(h.num_edges()))
    return Violation{kNoEdge, kNoEdge, kNoVertex, kUncolored};
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const Color c = colors[static_cast<std::size_t>(e)];
    if (c != kUncolored && (c < 1 || c > k)) return Violation{e, kNoEdge, kNoVertex, c};
  }
  std::vector<EdgeId> seen(static_cast<std::size_t>(k) + 1, kNoEdge);
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    for (EdgeId e : h.incident(v)) {
      const Color c = colors[static_cast<std::size_t>(e)];
      if (c == kUncolored) continue;
      auto& slot = seen[static_cast<std::size_t>(c)];
      if (slot != kNoEdge) return Violation{slot, e, v, c};
      slot = e;
    }
    for (EdgeId e : h.incident(v)) seen[static_cast<std::size_t>(colors[static_cast<std::size_t>(e)])] = kNoEdge;
  }
  return std::nullopt;
}

std::optional<Violation> verify_edge_coloring(const PartialEdgeColoring& phi) {
  return verify_edge_coloring(phi.host(), phi.palette(), phi.colors());
}

ColorSet missing_colors(const PartialEdgeColoring& phi, Vertex v) {
  if (v < 0 || v >= phi.host().num_vertices()) throw PreconditionError("vertex out of range");
  return phi.missing(v);
}

std::vector<Vertex> missing_class(const PartialEdgeColoring& phi, Color i) {
  if (i < 1 || i > phi.palette())
    throw PreconditionError("color " + std::to_string(i) + " outside palette 1.." + std::to_string(phi.palette()));
  std::vector<Vertex> out;
  for (Vertex v = 0; v < phi.host().num_vertices(); ++v)
    if (phi.is_missing(v, i)) out.push_back(v);
  return out;
}

Color TotalColoring::colors_used() const {
  std::vector<Color> all(vertex_colors);
  all.insert(all.end(), edge_colors.begin(), edge_colors.end());
  std::sort(all.begin(), all.end());
  return static_cast<Color>(std::unique(all.begin(), all.end()) - all.begin());
}

std::string TotalViolation::describe() const {
  const auto sa = std::to_string(a);
  const auto sb = std::to_string(b);
  switch (kind) {
    case Kind::kShape:
      return "coloring does not match the graph (vertex or edge count differs)";
    case Kind::kRange:
      return (b == 0 ? "vertex " : "edge ") + sa + " has a color outside 1..k";
    case Kind::kBudget:
      return "palette size " + sa + " exceeds budget " + sb;
    case Kind::kAdjacentVertices:
      return "adjacent vertices " + sa + " and " + sb + " share a color";
    case Kind::kAdjacentEdges:
      return "edges " + sa + " and " + sb + " share an endpoint and a color";
    case Kind::kIncidence:
      return "vertex " + sa + " has the same color as incident edge " + sb;
  }
  return "unknown violation";
}

std::optional<TotalViolation> verify_total_coloring(const TotalColoring& tc, const Graph& g, Color budget) {
  using K = TotalViolation::Kind;
  if (tc.vertex_colors.size() != static_cast<std::size_t>(g.num_vertices()) ||
      tc.edge_colors.size() != static_cast<std::size_t>(g.num_edges()))
    return TotalViolation{K::kShape};
  if (tc.k > budget) return TotalViolation{K::kBudget, tc.k, budget};
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const Color c = tc.vertex_colors[static_cast<std::size_t>(v)];
    if (c < 1 || c > tc.k) return TotalViolation{K::kRange, v, 0};
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Color c = tc.edge_colors[static_cast<std::size_t>(e)];
    if (c < 1 || c > tc.k) return TotalViolation{K::kRange, e, 1};
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& ends = g.edge(e);
    if (tc.vertex_colors[static_cast<std::size_t>(ends.u)] == tc.vertex_colors[static_cast<std::size_t>(ends.v)])
      return TotalViolation{K::kAdjacentVertices, ends.u, ends.v};
  }
  std::vector<EdgeId> seen(static_cast<std::size_t>(tc.k) + 1, kNoEdge);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const Color vc = tc.vertex_colors[static_cast<std::size_t>(v)];
    for (const auto& inc : g.incident(v)) {
      const Color c = tc.edge_colors[static_cast<std::size_t>(inc.edge)];
      if (c == vc) return TotalViolation{K::kIncidence, v, inc.edge};
      auto& slot = seen[static_cast<std::size_t>(c)];
      if (slot != kNoEdge) return TotalViolation{K::kAdjacentEdges, std::min(slot, inc.edge), std::max(slot, inc.edge)};
      slot = inc.edge;
    }
    for (const auto& inc : g.incident(v)) seen[static_cast<std::size_t>(tc.edge_colors[static_cast<std::size_t>(inc.edge)])] = kNoEdge;
  }
  return std::nullopt;
}

}  // namespace totalchroma
