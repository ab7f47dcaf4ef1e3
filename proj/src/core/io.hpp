#pragma once

#include <optional>
#include <string>

#include "core/graph.hpp"
#include "core/oracle.hpp"

namespace xic {

// Text formats. Both documents are line oriented, UTF-8, base-10 integers;
// blank lines and lines starting with '#' are ignored. The graph document is
//
//   x_count <n>
//   y_count <n>
//   multi <0|1>          (optional, default 0)
//   edges <m>
//   <x> <y>              (m lines, 0-based indices)
//
// and the coloring document is
//
//   colors <m>
//   <c>                  (m lines, positive integers)
//   max_color <k>        (must equal the maximum entry)

BipartiteGraph parse_graph(const std::string& text);
std::string emit_graph(const BipartiteGraph& g);

EdgeColoring parse_coloring(const std::string& text);
std::string emit_coloring(const EdgeColoring& coloring);

/// Graphviz document with the two parts on opposite ranks; when a coloring is
/// given, edges carry their color as a label and a cycling hue.
std::string emit_dot(const BipartiteGraph& g,
                     const EdgeColoring* coloring = nullptr);

/// Resumable search state: generator parameters plus progress, versioned by a
/// magic first line.
std::string emit_frontier(const GeneratorSpec& spec, const SearchReport& report);

struct Frontier {
  GeneratorSpec spec;
  SearchReport report;
};

Frontier parse_frontier(const std::string& text);

}  // namespace xic
