#pragma once

#include <filesystem>
#include <iosfwd>

#include "taulab/coloring.hpp"

namespace taulab {

// Coloring text format, version 1:
//
//   taulab-coloring 1
//   n <vertices> classes <count>
//   class <index> <edges> <label>
//   u v
//   ...
//
// One "class" line per class, in order, followed by its edges (u < v).
// Labels are written with label_text. The host graph is the union of the
// classes on the stated vertex count.
inline constexpr int kColoringFormatVersion = 1;

void write_coloring(std::ostream& out, const Coloring& c);
void write_coloring(const std::filesystem::path& path, const Coloring& c);
/// Throws ParseError on malformed input, including an unknown version.
Coloring read_coloring(std::istream& in);
Coloring read_coloring(const std::filesystem::path& path);

}  // namespace taulab
