#include "totalchroma/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace totalchroma {
namespace {

using nlohmann::json;

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t b = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > b) out.push_back(line.substr(b, i - b));
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError("expected an integer, got '" + std::string(tok) + "'", line);
  return v;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++lineno;
    auto toks = split_ws(line);
    if (!toks.empty() && toks[0] != "c") fn(toks, lineno);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

struct Header {
  long long n = 0;
  long long m = 0;
  std::size_t line = 0;
};

Header read_header(const std::vector<std::string_view>& toks, std::size_t line, std::string_view tag) {
  if (toks.size() != 3) throw ParseError("header must be '" + std::string(tag) + " <n> <m>'", line);
  Header h{to_int(toks[1], line), to_int(toks[2], line), line};
  if (h.n < 0 || h.m < 0) throw ParseError("negative count in header", line);
  if (h.n > (1LL << 30)) throw ParseError("vertex count too large", line);
  return h;
}

Vertex checked_vertex(std::string_view tok, long long n, std::size_t line) {
  const long long v = to_int(tok, line);
  if (v < 0 || v >= n)
    throw ParseError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")", line);
  return static_cast<Vertex>(v);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<Header> header;
  Graph g;
  long long edges = 0;
  std::size_t last_line = 0;
  for_each_line(text, [&](const std::vector<std::string_view>& toks, std::size_t line) {
    last_line = line;
    if (toks[0] == "p") {
      if (header) throw ParseError("second header line", line);
      header = read_header(toks, line, "p");
      g = Graph(static_cast<Vertex>(header->n));
      return;
    }
    if (toks[0] != "e") throw ParseError("unknown line type '" + std::string(toks[0]) + "'", line);
    if (!header) throw ParseError("edge line before the 'p' header", line);
    if (toks.size() != 3) throw ParseError("edge line must be 'e <u> <v>'", line);
    const Vertex u = checked_vertex(toks[1], header->n, line);
    const Vertex v = checked_vertex(toks[2], header->n, line);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line);
    if (g.has_edge(u, v))
      throw ParseError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}", line);
    if (++edges > header->m) throw ParseError("more edge lines than the header declares", line);
    g.add_edge(u, v);
  });
  if (!header) throw ParseError("missing 'p <n> <m>' header", 0);
  if (edges != header->m)
    throw ParseError("header declares " + std::to_string(header->m) + " edges, found " + std::to_string(edges),
                     last_line);
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) os << "e " << e.u << ' ' << e.v << '\n';
  return os.str();
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::optional<Header> header;
  Hypergraph h;
  long long edges = 0;
  std::size_t last_line = 0;
  for_each_line(text, [&](const std::vector<std::string_view>& toks, std::size_t line) {
    last_line = line;
    if (toks[0] == "ph") {
      if (header) throw ParseError("second header line", line);
      header = read_header(toks, line, "ph");
      h = Hypergraph(static_cast<Vertex>(header->n));
      return;
    }
    if (toks[0] != "he") throw ParseError("unknown line type '" + std::string(toks[0]) + "'", line);
    if (!header) throw ParseError("edge line before the 'ph' header", line);
    std::vector<Vertex> members;
    for (std::size_t i = 1; i < toks.size(); ++i) members.push_back(checked_vertex(toks[i], header->n, line));
    if (++edges > header->m) throw ParseError("more edge lines than the header declares", line);
    try {
      h.add_edge(members);
    } catch (const PreconditionError& err) {
      throw ParseError(err.what(), line);
    }
  });
  if (!header) throw ParseError("missing 'ph <n> <m>' header", 0);
  if (edges != header->m)
    throw ParseError("header declares " + std::to_string(header->m) + " edges, found " + std::to_string(edges),
                     last_line);
  return h;
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream os;
  os << "ph " << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    os << "he";
    for (Vertex v : h.members(e)) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

std::string total_coloring_to_json(const TotalColoring& tc, const Graph& g) {
  json j;
  j["k"] = tc.k;
  j["vertex_colors"] = tc.vertex_colors;
  json edges = json::array();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& ends = g.edge(e);
    const Color c = static_cast<std::size_t>(e) < tc.edge_colors.size() ? tc.edge_colors[static_cast<std::size_t>(e)]
                                                                        : kUncolored;
    edges.push_back({ends.u, ends.v, c});
  }
  j["edge_colors"] = std::move(edges);
  return j.dump() + "\n";
}

TotalColoring total_coloring_from_json(std::string_view text, const Graph& g) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what(), 0);
  }
  TotalColoring tc;
  try {
    tc.k = j.at("k").get<Color>();
    if (j.contains("vertex_colors")) {
      tc.vertex_colors = j.at("vertex_colors").get<std::vector<Color>>();
    } else {
      tc.vertex_colors.assign(static_cast<std::size_t>(g.num_vertices()), kUncolored);
    }
    tc.edge_colors.assign(static_cast<std::size_t>(g.num_edges()), kUncolored);
    for (const auto& triple : j.at("edge_colors")) {
      if (!triple.is_array() || triple.size() != 3) throw ParseError("edge_colors entries must be [u,v,c]", 0);
      const auto u = triple[0].get<Vertex>();
      const auto v = triple[1].get<Vertex>();
      auto id = g.find_edge(u, v);
      if (!id) throw ParseError("colored pair {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge", 0);
      tc.edge_colors[static_cast<std::size_t>(*id)] = triple[2].get<Color>();
    }
  } catch (const json::exception& err) {
    throw ParseError(std::string("malformed coloring: ") + err.what(), 0);
  }
  return tc;
}

std::string edge_coloring_to_json(const PartialEdgeColoring& phi) {
  json j;
  j["k"] = phi.palette();
  json edges = json::array();
  for (EdgeId e = 0; e < phi.host().num_edges(); ++e) {
    if (!phi.is_colored(e)) continue;
    json entry = json::array();
    for (Vertex v : phi.host().members(e)) entry.push_back(v);
    entry.push_back(phi.color(e));
    edges.push_back(std::move(entry));
  }
  j["edge_colors"] = std::move(edges);
  return j.dump() + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace totalchroma
