#pragma once

#include <vector>

#include "core/graph.hpp"

namespace xic {

/// Hypergraph over the Y side of a bipartite graph: one hyperedge per X
/// vertex, holding that vertex's neighborhood as a multiset. The degree of a
/// vertex counts hyperedge multiplicity (a hyperedge containing v twice adds
/// 2), which keeps the accounting sound for multigraph inputs.
struct Hypergraph {
  VertexId vertex_count = 0;
  std::vector<std::vector<VertexId>> hyperedges;  // each sorted, multiset
  std::vector<VertexId> origin;  // hyperedge position -> source X vertex

  /// Max hyperedge size, counting multiplicity.
  std::uint32_t rank() const;
  /// Max vertex degree, counting multiplicity.
  std::uint32_t max_degree() const;
};

Hypergraph from_neighborhoods(const BipartiteGraph& g);

struct HyperedgeColoring {
  std::vector<Color> colors;  // one per hyperedge
  Color max_color = 0;
};

/// Greedy proper coloring in hyperedge list order: each hyperedge takes the
/// smallest color unused among already-colored hyperedges sharing a vertex.
/// Uses at most rank*(max_degree-1)+1 colors.
HyperedgeColoring greedy_edge_color(const Hypergraph& h);

}  // namespace xic
