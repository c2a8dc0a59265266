#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "edgeideal/graph.hpp"

namespace edgeideal {

// Edge-list text format:
//   # comment lines are ignored (blank lines too)
//   <n>
//   <u> <v>      one edge per line, 0 <= u, v < n, u != v, no duplicates
//
// format_edge_list writes n followed by the sorted edges, so parse/format
// round-trips byte for byte on canonical input.

/// Throws ParseError carrying the 1-based line number.
Graph parse_edge_list(std::string_view text);
Graph parse_edge_list(std::istream& in);
Graph read_graph(const std::filesystem::path& path);

std::string format_edge_list(const Graph& g);
void write_graph(const Graph& g, const std::filesystem::path& path);

}  // namespace edgeideal
