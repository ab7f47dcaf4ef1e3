#include "core/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace xic {

BipartiteGraph::BipartiteGraph(VertexId x_count, VertexId y_count,
                               std::vector<Edge> edges, bool allow_multi)
    : x_count_(x_count),
      y_count_(y_count),
      allow_multi_(allow_multi),
      edges_(std::move(edges)),
      x_deg_(x_count, 0),
      y_deg_(y_count, 0) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.x >= x_count_ || e.y >= y_count_) {
      throw Error(ErrorCode::index_out_of_range,
                  "edge " + std::to_string(i) + " = (" + std::to_string(e.x) +
                      "," + std::to_string(e.y) + ") out of range for " +
                      std::to_string(x_count_) + "+" + std::to_string(y_count_) +
                      " vertices");
    }
    ++x_deg_[e.x];
    ++y_deg_[e.y];
  }
  if (!allow_multi_ && has_parallel_edges()) {
    throw Error(ErrorCode::duplicate_edge,
                "duplicate edge in a graph without multi-edge support");
  }
}

std::uint32_t BipartiteGraph::max_degree() const {
  std::uint32_t m = 0;
  for (std::uint32_t d : x_deg_) m = std::max(m, d);
  for (std::uint32_t d : y_deg_) m = std::max(m, d);
  return m;
}

std::uint32_t BipartiteGraph::max_x_degree() const {
  std::uint32_t m = 0;
  for (std::uint32_t d : x_deg_) m = std::max(m, d);
  return m;
}

bool BipartiteGraph::has_parallel_edges() const {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(edges_.size());
  for (const Edge& e : edges_) pairs.emplace_back(e.x, e.y);
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end();
}

std::vector<std::vector<EdgeId>> BipartiteGraph::x_incidence() const {
  std::vector<std::vector<EdgeId>> inc(x_count_);
  for (EdgeId e = 0; e < edge_count(); ++e) inc[edges_[e].x].push_back(e);
  return inc;
}

std::vector<std::vector<EdgeId>> BipartiteGraph::y_incidence() const {
  std::vector<std::vector<EdgeId>> inc(y_count_);
  for (EdgeId e = 0; e < edge_count(); ++e) inc[edges_[e].y].push_back(e);
  return inc;
}

DegreeProfile degree_profile(const BipartiteGraph& g) {
  return DegreeProfile{g.x_degrees(), g.y_degrees(), g.max_degree(),
                       g.max_x_degree()};
}

LoopedMultigraph::LoopedMultigraph(
    VertexId vertex_count, std::vector<std::pair<VertexId, VertexId>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)),
      deg_(vertex_count, 0) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& [a, b] = edges_[i];
    if (a >= vertex_count_ || b >= vertex_count_) {
      throw Error(ErrorCode::index_out_of_range,
                  "multigraph edge " + std::to_string(i) + " out of range");
    }
    if (a > b) std::swap(a, b);
    if (a == b) {
      deg_[a] += 2;  // a loop counts twice
    } else {
      ++deg_[a];
      ++deg_[b];
    }
  }
}

bool LoopedMultigraph::is_regular(std::uint32_t d) const {
  return std::all_of(deg_.begin(), deg_.end(),
                     [d](std::uint32_t v) { return v == d; });
}

EdgeColoring make_coloring(std::vector<Color> colors) {
  Color max = 0;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] == 0) {
      throw Error(ErrorCode::invalid_argument,
                  "color at position " + std::to_string(i) +
                      " must be a positive integer");
    }
    max = std::max(max, colors[i]);
  }
  return EdgeColoring{std::move(colors), max};
}

namespace {

void collect_clashes(const std::vector<std::vector<EdgeId>>& incidence,
                     const std::vector<Color>& colors,
                     std::set<std::pair<EdgeId, EdgeId>>& clashes) {
  for (const auto& edges : incidence) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        if (colors[edges[i]] == colors[edges[j]]) {
          clashes.emplace(edges[i], edges[j]);
        }
      }
    }
  }
}

}  // namespace

VerificationReport verify_coloring(const BipartiteGraph& g,
                                   const EdgeColoring& coloring) {
  if (coloring.colors.size() != g.edge_count()) {
    throw Error(ErrorCode::length_mismatch,
                "coloring has " + std::to_string(coloring.colors.size()) +
                    " entries for " + std::to_string(g.edge_count()) +
                    " edges");
  }
  VerificationReport report;

  std::set<std::pair<EdgeId, EdgeId>> clashes;  // dedups parallel-edge pairs
  const auto x_inc = g.x_incidence();
  collect_clashes(x_inc, coloring.colors, clashes);
  collect_clashes(g.y_incidence(), coloring.colors, clashes);
  report.violating_edge_pairs.assign(clashes.begin(), clashes.end());
  report.proper = report.violating_edge_pairs.empty();

  for (VertexId x = 0; x < g.x_count(); ++x) {
    if (x_inc[x].empty()) continue;  // isolated vertices are vacuously interval
    std::vector<Color> palette;
    palette.reserve(x_inc[x].size());
    for (EdgeId e : x_inc[x]) palette.push_back(coloring.colors[e]);
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    if (palette.back() - palette.front() + 1 != palette.size()) {
      report.violating_vertices.push_back(x);
    }
  }
  report.interval_at_x = report.violating_vertices.empty();
  return report;
}

Subgraph edge_induced_subgraph(const BipartiteGraph& g,
                               const std::vector<bool>& select_x) {
  if (select_x.size() != g.x_count()) {
    throw Error(ErrorCode::invalid_argument,
                "selection mask size does not match X");
  }
  Subgraph sub;
  std::vector<VertexId> x_new(g.x_count(), 0), y_new(g.y_count(), 0);
  std::vector<bool> y_used(g.y_count(), false);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (select_x[g.edge(e).x]) y_used[g.edge(e).y] = true;
  }
  for (VertexId x = 0; x < g.x_count(); ++x) {
    if (select_x[x]) {
      x_new[x] = static_cast<VertexId>(sub.map.x_to_parent.size());
      sub.map.x_to_parent.push_back(x);
    }
  }
  for (VertexId y = 0; y < g.y_count(); ++y) {
    if (y_used[y]) {
      y_new[y] = static_cast<VertexId>(sub.map.y_to_parent.size());
      sub.map.y_to_parent.push_back(y);
    }
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (select_x[g.edge(e).x]) {
      edges.push_back(Edge{x_new[g.edge(e).x], y_new[g.edge(e).y]});
      sub.map.edge_to_parent.push_back(e);
    }
  }
  sub.graph = BipartiteGraph(
      static_cast<VertexId>(sub.map.x_to_parent.size()),
      static_cast<VertexId>(sub.map.y_to_parent.size()), std::move(edges),
      g.allow_multi());
  return sub;
}

void write_lifted(const SubgraphMap& map, const std::vector<Color>& sub_colors,
                  Color offset, std::vector<Color>& parent_colors) {
  if (sub_colors.size() != map.edge_to_parent.size()) {
    throw Error(ErrorCode::length_mismatch,
                "subgraph coloring does not align with its edge map");
  }
  for (std::size_t i = 0; i < sub_colors.size(); ++i) {
    parent_colors[map.edge_to_parent[i]] = sub_colors[i] + offset;
  }
}

std::vector<bool> x_vertices_of_degree(const BipartiteGraph& g,
                                       std::uint32_t d) {
  std::vector<bool> mask(g.x_count(), false);
  for (VertexId x = 0; x < g.x_count(); ++x) mask[x] = g.x_degree(x) == d;
  return mask;
}

}  // namespace xic
