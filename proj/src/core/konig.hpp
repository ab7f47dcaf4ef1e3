#pragma once

#include "core/graph.hpp"

namespace xic {

/// Proper edge coloring of a bipartite multigraph with at most max_degree
/// colors. Edges are inserted in list order; when the smallest color missing
/// at x differs from the smallest missing at y, the alternating two-color
/// path starting at y is flipped first. Deterministic.
EdgeColoring konig_edge_color(const BipartiteGraph& g);

}  // namespace xic
