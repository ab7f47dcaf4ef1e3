#pragma once

// Shared test utilities: tiny-graph builders, brute-force oracles, and
// seeded instance generators used across the suites.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/hypergraph.hpp"
#include "core/rng.hpp"

namespace xic_test {

using xic::BipartiteGraph;
using xic::Color;
using xic::Edge;
using xic::EdgeColoring;
using xic::VertexId;

inline BipartiteGraph make(std::uint32_t nx, std::uint32_t ny,
                           std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs,
                           bool multi = false) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [x, y] : pairs) edges.push_back(Edge{x, y});
  return BipartiteGraph(nx, ny, std::move(edges), multi);
}

inline bool same_graph(const BipartiteGraph& a, const BipartiteGraph& b) {
  return a.x_count() == b.x_count() && a.y_count() == b.y_count() &&
         a.allow_multi() == b.allow_multi() && a.edges() == b.edges();
}

// Brute-force part-preserving isomorphism; intended for graphs with at most
// ~6 vertices per side.
inline bool isomorphic(const BipartiteGraph& a, const BipartiteGraph& b) {
  if (a.x_count() != b.x_count() || a.y_count() != b.y_count() ||
      a.edge_count() != b.edge_count()) {
    return false;
  }
  std::vector<std::pair<VertexId, VertexId>> target;
  for (const Edge& e : b.edges()) target.emplace_back(e.x, e.y);
  std::sort(target.begin(), target.end());

  std::vector<VertexId> xp(a.x_count()), yp(a.y_count());
  std::iota(xp.begin(), xp.end(), 0);
  do {
    std::iota(yp.begin(), yp.end(), 0);
    do {
      std::vector<std::pair<VertexId, VertexId>> mapped;
      for (const Edge& e : a.edges()) mapped.emplace_back(xp[e.x], yp[e.y]);
      std::sort(mapped.begin(), mapped.end());
      if (mapped == target) return true;
    } while (std::next_permutation(yp.begin(), yp.end()));
  } while (std::next_permutation(xp.begin(), xp.end()));
  return false;
}

// Random graph with every X-degree drawn from {1,2,4,5,6} and Y-degrees at
// most 6 (the shape the degree-6 machinery accepts). With allow_multi the
// stub pairing may produce parallel edges; otherwise it resamples until
// simple and falls back to a perfect matching if that keeps failing.
inline BipartiteGraph random_restricted_graph(std::uint64_t seed,
                                              bool allow_multi) {
  static const std::uint32_t kDegrees[] = {1, 2, 4, 5, 6};
  xic::Rng rng(seed);
  const std::uint32_t n_x = 2 + static_cast<std::uint32_t>(rng.below(5));
  std::vector<std::uint32_t> degrees(n_x);
  std::uint32_t total = 0;
  for (auto& d : degrees) {
    d = kDegrees[rng.below(5)];
    total += d;
  }
  const std::uint32_t n_y = std::max<std::uint32_t>(6, (total + 3) / 4);

  std::vector<VertexId> pool;
  for (VertexId y = 0; y < n_y; ++y) pool.insert(pool.end(), 6, y);

  for (int attempt = 0; attempt < 500; ++attempt) {
    rng.shuffle(pool);
    std::vector<Edge> edges;
    std::size_t cursor = 0;
    for (VertexId x = 0; x < n_x; ++x) {
      for (std::uint32_t k = 0; k < degrees[x]; ++k) {
        edges.push_back(Edge{x, pool[cursor++]});
      }
    }
    if (!allow_multi) {
      std::set<std::pair<VertexId, VertexId>> dedup;
      bool simple = true;
      for (const Edge& e : edges) {
        simple = simple && dedup.emplace(e.x, e.y).second;
      }
      if (!simple) continue;
    }
    return BipartiteGraph(n_x, n_y, std::move(edges), allow_multi);
  }
  // matching fallback: degrees all 1 are still in the allowed set
  std::vector<Edge> edges;
  for (VertexId x = 0; x < n_x; ++x) edges.push_back(Edge{x, x});
  return BipartiteGraph(n_x, n_x, std::move(edges), allow_multi);
}

// Random graph on at most 12+12 vertices with max degree exactly 6.
inline BipartiteGraph random_delta6_graph(std::uint64_t seed) {
  for (std::uint64_t round = 0;; ++round) {
    const std::uint64_t s = xic::mix_seed(seed, round);
    xic::Rng rng(s);
    const std::uint32_t nx = 8 + static_cast<std::uint32_t>(rng.below(5));
    const std::uint32_t ny = 8 + static_cast<std::uint32_t>(rng.below(5));
    const double density = 0.45 + 0.05 * static_cast<double>(rng.below(4));
    BipartiteGraph g = xic::random_bipartite(nx, ny, 6, density, s);
    if (g.max_degree() == 6) return g;
  }
}

// Random hypergraph with rank at most max_rank and vertex degrees (counting
// multiplicity) at most max_degree.
inline xic::Hypergraph random_hypergraph(std::uint64_t seed,
                                         std::uint32_t vertex_count,
                                         std::uint32_t edge_count,
                                         std::uint32_t max_rank,
                                         std::uint32_t max_degree) {
  xic::Rng rng(seed);
  xic::Hypergraph h;
  h.vertex_count = vertex_count;
  std::vector<std::uint32_t> degree(vertex_count, 0);
  for (std::uint32_t i = 0; i < edge_count; ++i) {
    const std::uint32_t size = 1 + static_cast<std::uint32_t>(rng.below(max_rank));
    std::vector<VertexId> edge;
    for (std::uint32_t k = 0; k < size; ++k) {
      std::vector<VertexId> open;
      for (VertexId v = 0; v < vertex_count; ++v) {
        if (degree[v] < max_degree) open.push_back(v);
      }
      if (open.empty()) break;
      const VertexId v = open[rng.below(open.size())];
      edge.push_back(v);
      ++degree[v];
    }
    if (edge.empty()) continue;
    std::sort(edge.begin(), edge.end());
    h.hyperedges.push_back(std::move(edge));
  }
  return h;
}

// Exhaustive pairwise-intersection properness check (the independent oracle
// for the greedy bound tests).
inline bool hypergraph_coloring_proper(const xic::Hypergraph& h,
                                       const std::vector<Color>& colors) {
  for (std::size_t i = 0; i < h.hyperedges.size(); ++i) {
    for (std::size_t j = i + 1; j < h.hyperedges.size(); ++j) {
      if (colors[i] != colors[j]) continue;
      for (VertexId v : h.hyperedges[i]) {
        if (std::find(h.hyperedges[j].begin(), h.hyperedges[j].end(), v) !=
            h.hyperedges[j].end()) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace xic_test
