#pragma once

#include <filesystem>
#include <iosfwd>

#include "taulab/graph.hpp"

namespace taulab {

// Edge-list text format:
//
//   n <count>
//   u v
//   u v
//   ...
//
// ASCII decimal, one edge per line with u < v, every line newline-terminated.
// Blank lines are tolerated on input; nothing else is.

void write_edgelist(std::ostream& out, const Graph& g);
void write_edgelist(const std::filesystem::path& path, const Graph& g);

/// Throws ParseError on a malformed line, an out-of-range vertex, a self-loop
/// or a duplicate edge.
Graph read_edgelist(std::istream& in);
Graph read_edgelist(const std::filesystem::path& path);

}  // namespace taulab
