#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "wnc/core.hpp"

namespace wnc::cli {

// Edge-list text format:
//
//   # optional comment lines
//   n m
//   u v s      (m lines, 0 <= u,v < n, u != v, s in {+,-})
//
// Blank lines are ignored. Repeated lines are parallel edges; edge ids follow
// line order.

/// Throws ParseError with the offending line number.
SignedGraph parse_edge_list(std::istream& in);

/// Reads `path`, or standard input when path is "-".
SignedGraph read_edge_list(const std::filesystem::path& path);

std::string serialize_edge_list(const SignedGraph& g);

/// Undirected DOT: positive edges solid, negative edges dashed and labelled
/// "-", nodes filled by canonical cluster. Ordered by vertex id, then edge id.
std::string to_dot(const SignedGraph& g);

}  // namespace wnc::cli
