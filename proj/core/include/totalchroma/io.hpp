#pragma once

#include <string>
#include <string_view>

#include "totalchroma/coloring.hpp"
#include "totalchroma/graph.hpp"
#include "totalchroma/hypergraph.hpp"

namespace totalchroma {

/// Edge-list text: `p <n> <m>` followed by m lines `e <u> <v>`, 0-based ids.
/// Lines starting with `c` and blank lines are skipped. Every defect throws
/// ParseError with the 1-based line number.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

/// `ph <n> <m>` followed by m lines `he <v1> <v2> ...`.
Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);

/// {"k": .., "vertex_colors": [...], "edge_colors": [[u,v,c], ...]}.
/// Edge triples are written in edge-id order.
std::string total_coloring_to_json(const TotalColoring& tc, const Graph& g);
/// Edge triples are matched to g by endpoints; vertex_colors may be absent
/// (then every vertex gets 0, which verification rejects).
TotalColoring total_coloring_from_json(std::string_view text, const Graph& g);

/// Same shape without vertex colors; uncolored edges are omitted.
std::string edge_coloring_to_json(const PartialEdgeColoring& phi);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace totalchroma
