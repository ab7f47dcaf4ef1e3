#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/errors.hpp"

namespace xic {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Color = std::uint32_t;  // proper edge colors are 1-based; 0 marks "unset"

struct Edge {
  VertexId x = 0;
  VertexId y = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Bipartite (multi)graph with parts X and Y. Edges are addressed by their
/// position in the edge list, so parallel edges need no separate identity and
/// every coloring is a positional vector. Immutable after construction.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(VertexId x_count, VertexId y_count, std::vector<Edge> edges,
                 bool allow_multi = false);

  VertexId x_count() const { return x_count_; }
  VertexId y_count() const { return y_count_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool allow_multi() const { return allow_multi_; }

  std::uint32_t x_degree(VertexId x) const { return x_deg_[x]; }
  std::uint32_t y_degree(VertexId y) const { return y_deg_[y]; }
  const std::vector<std::uint32_t>& x_degrees() const { return x_deg_; }
  const std::vector<std::uint32_t>& y_degrees() const { return y_deg_; }
  std::uint32_t max_degree() const;
  std::uint32_t max_x_degree() const;

  /// True if some (x,y) pair occurs more than once.
  bool has_parallel_edges() const;

  /// Edge positions incident to each X vertex, in edge-list order.
  std::vector<std::vector<EdgeId>> x_incidence() const;
  std::vector<std::vector<EdgeId>> y_incidence() const;

 private:
  VertexId x_count_ = 0;
  VertexId y_count_ = 0;
  bool allow_multi_ = false;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> x_deg_;
  std::vector<std::uint32_t> y_deg_;
};

struct DegreeProfile {
  std::vector<std::uint32_t> x_degrees;
  std::vector<std::uint32_t> y_degrees;
  std::uint32_t max_degree = 0;    // over all vertices
  std::uint32_t max_x_degree = 0;  // over X only
};

DegreeProfile degree_profile(const BipartiteGraph& g);

/// Undirected multigraph where loops are allowed. A loop contributes 2 to the
/// degree of its vertex. Used by internal constructions only.
class LoopedMultigraph {
 public:
  LoopedMultigraph() = default;
  LoopedMultigraph(VertexId vertex_count,
                   std::vector<std::pair<VertexId, VertexId>> edges);

  VertexId vertex_count() const { return vertex_count_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
  const std::pair<VertexId, VertexId>& edge(EdgeId e) const { return edges_[e]; }
  bool is_loop(EdgeId e) const { return edges_[e].first == edges_[e].second; }
  VertexId other_end(EdgeId e, VertexId v) const {
    const auto& [a, b] = edges_[e];
    return v == a ? b : a;
  }
  std::uint32_t degree(VertexId v) const { return deg_[v]; }
  bool is_regular(std::uint32_t d) const;

 private:
  VertexId vertex_count_ = 0;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::uint32_t> deg_;
};

/// One color per edge position; colors are positive, max_color is the largest
/// entry (0 for the empty coloring).
struct EdgeColoring {
  std::vector<Color> colors;
  Color max_color = 0;
};

/// Validates entries are positive and computes max_color.
EdgeColoring make_coloring(std::vector<Color> colors);

struct VerificationReport {
  bool proper = true;
  bool interval_at_x = true;
  std::vector<VertexId> violating_vertices;  // X vertices with a palette gap
  std::vector<std::pair<EdgeId, EdgeId>> violating_edge_pairs;  // same color, shared endpoint
  bool ok() const { return proper && interval_at_x; }
};

/// Checks properness on both sides and the interval condition on X.
/// Throws ErrorCode::length_mismatch if the coloring does not align with the
/// edge list.
VerificationReport verify_coloring(const BipartiteGraph& g,
                                   const EdgeColoring& coloring);

struct SubgraphMap {
  std::vector<VertexId> x_to_parent;
  std::vector<VertexId> y_to_parent;
  std::vector<EdgeId> edge_to_parent;
};

struct Subgraph {
  BipartiteGraph graph;
  SubgraphMap map;
};

/// Subgraph spanned by all edges whose X endpoint is selected. Selected X
/// vertices are kept (compacted, original order) even when isolated; Y
/// vertices are kept only when they carry at least one selected edge.
Subgraph edge_induced_subgraph(const BipartiteGraph& g,
                               const std::vector<bool>& select_x);

/// Copies a subgraph coloring back into parent edge positions, shifting every
/// color by `offset`.
void write_lifted(const SubgraphMap& map, const std::vector<Color>& sub_colors,
                  Color offset, std::vector<Color>& parent_colors);

std::vector<bool> x_vertices_of_degree(const BipartiteGraph& g,
                                       std::uint32_t d);

}  // namespace xic
