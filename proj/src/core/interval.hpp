#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/graph.hpp"

namespace xic {

enum class Method {
  biregular,
  general,
  multigraph,
  delta6_restricted,
  delta6,
  palette,
};

const char* method_name(Method m);

struct BoundCertificate {
  Method method = Method::general;
  std::uint32_t guaranteed_bound = 0;
  std::uint32_t colors_used = 0;
  bool verified = false;
};

struct ColorResult {
  EdgeColoring coloring;
  BoundCertificate certificate;
  bool fallback = false;  // only meaningful for Method::delta6
};

/// Edge-disjoint subgraphs covering the whole edge set; every X vertex of
/// positive degree sits in exactly one part together with all its edges.
struct Decomposition {
  std::vector<std::vector<EdgeId>> parts;     // edge positions, parent order
  std::vector<std::int32_t> x_assignment;     // X vertex -> part, -1 if none
};

/// Guarantees the certificates promise, as closed-form functions of the
/// degree parameters.
std::uint32_t guarantee_biregular(std::uint32_t a, std::uint32_t b);
std::uint32_t guarantee_general(std::uint32_t delta);
std::uint32_t guarantee_multigraph(std::uint32_t delta);

/// Splits a simple graph whose X-degrees all equal `a` and whose Y-degrees
/// are at most `b` into at most `b` parts of max degree at most `a`: the
/// neighborhood hypergraph is greedy-colored with at most a*(b-1)+1 colors
/// and colors are bundled into blocks of `a` consecutive values.
Decomposition biregular_decompose(const BipartiteGraph& g, std::uint32_t a,
                                  std::uint32_t b);

/// X-interval coloring with at most a*b colors for a simple graph with
/// uniform X-degree a and Y-degrees at most b (b inferred from the graph when
/// not supplied). Part i is colored into the block {(i-1)a+1, ..., ia}, so
/// every X palette is a full block.
ColorResult interval_color_biregular(const BipartiteGraph& g,
                                     std::optional<std::uint32_t> b = {});

/// X-interval coloring of an arbitrary simple bipartite graph with at most
/// delta^2*(delta+1)/2 colors: one biregular pass per X-degree class, each
/// inside a reserved window of width d*delta; empty classes reserve nothing.
ColorResult interval_color_general(const BipartiteGraph& g);

/// Multigraph variant. Color bundling breaks on parallel edges, so each
/// hyperedge color class becomes its own part (a disjoint union of X-stars);
/// the per-class cost is d*(d*(delta-1)+1), degree 4 in delta overall.
ColorResult interval_color_multigraph(const BipartiteGraph& g);

bool decomposition_is_valid(const BipartiteGraph& g, const Decomposition& d,
                            std::uint32_t a, std::uint32_t b);

}  // namespace xic
