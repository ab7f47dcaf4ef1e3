#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/graph.hpp"
#include "core/interval.hpp"

namespace xic {

struct PaletteGroup {
  std::vector<Color> palette;        // sorted
  std::vector<VertexId> x_vertices;  // ascending
};

/// Distinct palettes over X vertices of positive degree, ordered
/// lexicographically by palette. Throws not_proper on an improper coloring.
std::vector<PaletteGroup> x_palettes(const BipartiteGraph& g,
                                     const EdgeColoring& coloring);

/// Converts any proper coloring into an X-interval one: each palette group's
/// edge-induced subgraph has uniform X-degree equal to the palette size p and
/// Y-degrees at most p, so a Konig coloring of it is X-interval with p
/// colors; groups are stacked in disjoint windows of width p. Total colors
/// are at most max_x_degree * (#distinct X palettes).
ColorResult interval_from_palettes(const BipartiteGraph& g,
                                   const EdgeColoring& coloring);

struct PaletteIndex {
  std::uint32_t all_vertices = 0;  // distinct palettes over X and Y
  std::uint32_t x_side = 0;        // distinct palettes over X only
};

/// Exact palette minima by exhaustive search over proper colorings with at
/// most |E| colors, canonicalized by first use. Desk scale only: returns
/// nullopt beyond 16 edges or when the node budget runs out.
std::optional<PaletteIndex> palette_index_bruteforce(
    const BipartiteGraph& g, std::uint64_t node_budget = 50'000'000);

}  // namespace xic
