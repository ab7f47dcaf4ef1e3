#include "core/hypergraph.hpp"

#include <algorithm>
#include <string>

namespace xic {

std::uint32_t Hypergraph::rank() const {
  std::size_t r = 0;
  for (const auto& he : hyperedges) r = std::max(r, he.size());
  return static_cast<std::uint32_t>(r);
}

std::uint32_t Hypergraph::max_degree() const {
  std::vector<std::uint32_t> deg(vertex_count, 0);
  for (const auto& he : hyperedges) {
    for (VertexId v : he) ++deg[v];
  }
  std::uint32_t m = 0;
  for (std::uint32_t d : deg) m = std::max(m, d);
  return m;
}

Hypergraph from_neighborhoods(const BipartiteGraph& g) {
  Hypergraph h;
  h.vertex_count = g.y_count();
  h.hyperedges.resize(g.x_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    h.hyperedges[g.edge(e).x].push_back(g.edge(e).y);
  }
  for (auto& he : h.hyperedges) std::sort(he.begin(), he.end());
  h.origin.resize(g.x_count());
  for (VertexId x = 0; x < g.x_count(); ++x) h.origin[x] = x;
  return h;
}

HyperedgeColoring greedy_edge_color(const Hypergraph& h) {
  for (const auto& he : h.hyperedges) {
    for (VertexId v : he) {
      if (v >= h.vertex_count) {
        throw Error(ErrorCode::index_out_of_range,
                    "hyperedge vertex " + std::to_string(v) + " out of range");
      }
    }
  }

  // supports (dedup) and, per vertex, the hyperedges containing it
  std::vector<std::vector<VertexId>> support(h.hyperedges.size());
  std::vector<std::vector<std::uint32_t>> at_vertex(h.vertex_count);
  for (std::size_t i = 0; i < h.hyperedges.size(); ++i) {
    support[i] = h.hyperedges[i];
    support[i].erase(std::unique(support[i].begin(), support[i].end()),
                     support[i].end());
    for (VertexId v : support[i]) at_vertex[v].push_back(static_cast<std::uint32_t>(i));
  }

  HyperedgeColoring out;
  out.colors.assign(h.hyperedges.size(), 0);
  std::vector<std::uint32_t> blocked;  // color -> stamp
  for (std::size_t i = 0; i < h.hyperedges.size(); ++i) {
    const auto stamp = static_cast<std::uint32_t>(i + 1);
    for (VertexId v : support[i]) {
      for (std::uint32_t j : at_vertex[v]) {
        const Color c = out.colors[j];
        if (c != 0) {
          if (blocked.size() <= c) blocked.resize(c + 1, 0);
          blocked[c] = stamp;
        }
      }
    }
    Color c = 1;
    while (c < blocked.size() && blocked[c] == stamp) ++c;
    out.colors[i] = c;
    out.max_color = std::max(out.max_color, c);
  }
  return out;
}

}  // namespace xic
