#pragma once

#include "broomlab/coloring.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace broomlab {

inline constexpr const char* kColoringMagic = "broomlab-coloring v1";

/// Writes the canonical form of cg. Each comment becomes a trailing `# ` line.
void write_coloring(std::ostream& out, const ColoredGraph& cg,
                    const std::vector<std::string>& comments = {});

/// Reads one coloring. Throws Error with a loader-specific code on a
/// malformed header, an edge line that fails to parse or is out of range,
/// unsorted or duplicate edges, colors outside 1..C, non-canonical color
/// order, or an improper coloring. Comment lines after the edges are skipped.
ColoredGraph read_coloring(std::istream& in);

/// Reads exactly the header and m edge lines, leaving the stream positioned
/// after the last edge line; used for colorings embedded in other files.
ColoredGraph read_embedded_coloring(std::istream& in);

void save_coloring(const std::filesystem::path& path, const ColoredGraph& cg,
                   const std::vector<std::string>& comments = {});
ColoredGraph load_coloring(const std::filesystem::path& path);

std::string to_coloring_string(const ColoredGraph& cg,
                               const std::vector<std::string>& comments = {});
ColoredGraph from_coloring_string(const std::string& text);

}  // namespace broomlab
