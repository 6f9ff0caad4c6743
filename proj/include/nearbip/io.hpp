#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "nearbip/graph.hpp"
#include "nearbip/reduction.hpp"
#include "nearbip/vertex_set.hpp"

namespace nearbip {

// Edge-list document:
//   n <count>
//   u v        one line per edge
// Text after '#' and blank lines are ignored. Serialization writes
// each edge once as "u v" with u < v, sorted lexicographically.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

// Vertex-set file: whitespace-separated vertex ids, '#' starts a comment
// that runs to the end of the line.
VertexSet parse_vertex_set(std::istream& in, std::size_t n);
std::string format_vertex_set(const VertexSet& s);

// Assignment file: one "v<i>=0" or "v<i>=1" line per variable, '#' comment
// lines allowed. Every variable in 1..variables must appear exactly once.
Assignment parse_assignment(std::istream& in, std::size_t variables);
std::string format_assignment(const Assignment& value);

// Coordinate map, one line per vertex in id order:
//   <id> <clause> <row> <col> true|false     block cell
//   <id> <clause> <row> <col> dominating     dominating row
//   <id> 0 0 0 v0
std::string serialize_coordinate_map(const HphiInstance& h);

/// Connected graph of diameter exactly 2 drawn from G(n, p) by rejection.
/// p starts at 0.5 and rises by 0.02 (up to 0.95) after each rejection
/// caused by a disconnected or too-sparse sample. Deterministic per seed.
/// Throws PreconditionError for n < 3, where no such graph exists.
Graph random_diameter_two_graph(std::size_t n, std::uint64_t seed);

}  // namespace nearbip
