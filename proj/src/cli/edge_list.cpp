#include "wnc/cli/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "wnc/cluster.hpp"

namespace wnc::cli {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

std::optional<std::int64_t> parse_int(const std::string& tok) {
  std::int64_t value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

SignedGraph parse_edge_list(std::istream& in) {
  std::optional<std::pair<std::int64_t, std::int64_t>> header;
  std::vector<EdgeInput> edges;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto tok = split(line);

    if (!header) {
      if (tok.size() != 2) throw ParseError(line_no, "expected header `n m`");
      const auto n = parse_int(tok[0]);
      const auto m = parse_int(tok[1]);
      if (!n || !m || *n < 0 || *m < 0) {
        throw ParseError(line_no, "header needs two nonnegative integers");
      }
      if (*n > std::numeric_limits<VertexId>::max()) {
        throw ParseError(line_no, "vertex count " + tok[0] + " is too large");
      }
      header.emplace(*n, *m);
      edges.reserve(static_cast<std::size_t>(std::min<std::int64_t>(*m, 1 << 20)));
      continue;
    }

    if (static_cast<std::int64_t>(edges.size()) == header->second) {
      throw ParseError(line_no, "more edge lines than the declared " +
                                    std::to_string(header->second));
    }
    if (tok.size() != 3) throw ParseError(line_no, "expected edge line `u v s`");
    const auto u = parse_int(tok[0]);
    const auto v = parse_int(tok[1]);
    if (!u || !v) throw ParseError(line_no, "edge endpoints must be integers");
    const auto sign = tok[2].size() == 1 ? parse_sign(tok[2][0]) : std::nullopt;
    if (!sign) throw ParseError(line_no, "edge sign must be + or -, got `" + tok[2] + "`");
    for (auto x : {*u, *v}) {
      if (x < 0 || x >= header->first) {
        throw ParseError(line_no, VertexOutOfRange(x, header->first).what());
      }
    }
    if (*u == *v) throw ParseError(line_no, LoopEdge(*u).what());
    edges.push_back({*u, *v, *sign});
  }
  if (!header) throw ParseError(line_no + 1, "missing header `n m`");
  if (static_cast<std::int64_t>(edges.size()) != header->second) {
    throw ParseError(line_no + 1, "expected " + std::to_string(header->second) +
                                      " edge lines, found " + std::to_string(edges.size()));
  }
  return build_graph(static_cast<std::size_t>(header->first), edges);
}

SignedGraph read_edge_list(const std::filesystem::path& path) {
  if (path == "-") return parse_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_edge_list(in);
}

std::string serialize_edge_list(const SignedGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << sign_char(e.sign) << '\n';
  return out.str();
}

std::string to_dot(const SignedGraph& g) {
  const Partition clusters = canonical_clustering(g);
  std::ostringstream out;
  out << "graph signed_graph {\n";
  out << "  node [style=filled];\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const int c = clusters.cluster_of(static_cast<VertexId>(v));
    // Golden-ratio hue steps keep neighbouring cluster ids visually apart.
    const double hue = std::fmod(c * 0.6180339887498949, 1.0);
    char color[32];
    std::snprintf(color, sizeof color, "%.4f 0.450 0.950", hue);
    out << "  " << v << " [fillcolor=\"" << color << "\", comment=\"cluster " << c << "\"];\n";
  }
  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(static_cast<EdgeId>(id));
    out << "  " << e.u << " -- " << e.v << " [id=\"e" << id << "\", ";
    out << (e.positive() ? "style=solid" : "style=dashed, label=\"-\"") << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace wnc::cli
