#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "core/graph.hpp"
#include "core/interval.hpp"

namespace xic {

struct EdgeProvenance {
  enum class Kind { original, copy, cross, loop };
  Kind kind = Kind::original;
  EdgeId g_edge = 0;  // meaningful for original/copy
};

struct DoubledGraph {
  LoopedMultigraph h;
  std::vector<EdgeProvenance> provenance;  // one entry per h edge
};

constexpr std::uint64_t kDefaultSearchBudget = 40'000'000;

/// Pads G and a mirror copy into a 6-regular looped multigraph: every vertex
/// of odd degree d gets an edge to its mirror plus 3-(d+1)/2 loops; every
/// vertex of even degree d gets 3-d/2 loops. Requires max degree at most 6
/// and no X vertex of degree 3.
DoubledGraph build_doubled(const BipartiteGraph& g);

struct TwoFactorization {
  std::array<std::vector<EdgeId>, 3> factors;
};

/// Splits a 6-regular looped multigraph into three spanning 2-regular
/// subgraphs: orient an Eulerian circuit per component, Konig-3-color the
/// out/in split graph, pull the color classes back.
TwoFactorization petersen_two_factorization(const LoopedMultigraph& h);

/// Colors factor i alternately with {2i-1, 2i} around each of its cycles.
/// Odd cycles place their single alternation break at a cross edge (loops are
/// singleton cycles); the restriction to original edges stays proper.
EdgeColoring alternate_color_factors(const LoopedMultigraph& h,
                                     const TwoFactorization& factorization,
                                     const std::vector<EdgeProvenance>& prov);

/// Extracts the colors of the original edges from a coloring of the doubled
/// graph.
EdgeColoring restrict_to_original(const BipartiteGraph& g,
                                  const DoubledGraph& doubled,
                                  const EdgeColoring& h_coloring);

/// The five palettes the doubling pipeline can leave non-interval, and the
/// colors to shift by +6 at such a vertex. Returns nullopt for any other
/// palette.
std::optional<std::vector<Color>> bad_palette_shift(
    const std::vector<Color>& palette);

/// Applies the shift table vertex by vertex. Shifted colors land in {7..10},
/// disjoint from {1..6}, so properness is preserved globally.
EdgeColoring recolor_bad_palettes(const BipartiteGraph& g,
                                  const EdgeColoring& base);

/// Whole pipeline for graphs whose X-degrees avoid 3: at most 10 colors.
ColorResult interval_color_deg6_restricted(const BipartiteGraph& g);

/// Backtracking search for a proper coloring with at most 7 colors that is
/// interval at every X vertex, for graphs with uniform X-degree 3 and
/// Y-degrees at most 6. Absence (budget exhausted) is a value, not an error.
std::optional<EdgeColoring> interval7_search_36(
    const BipartiteGraph& g, std::uint64_t node_budget = kDefaultSearchBudget);

/// Composition for max degree up to 6: degree-3 X vertices are colored by the
/// 7-color search in {1..7}, the rest by the restricted pipeline shifted into
/// {8..17}. If the search gives up, the degree-3 class falls back to the
/// biregular method (bound 28 total) and fallback is set.
ColorResult interval_color_delta6(
    const BipartiteGraph& g, std::uint64_t search_budget = kDefaultSearchBudget);

}  // namespace xic
