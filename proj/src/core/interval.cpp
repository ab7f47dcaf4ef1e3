#include "core/interval.hpp"

#include <algorithm>
#include <string>

#include "core/hypergraph.hpp"
#include "core/konig.hpp"

namespace xic {

const char* method_name(Method m) {
  switch (m) {
    case Method::biregular: return "biregular";
    case Method::general: return "general";
    case Method::multigraph: return "multigraph";
    case Method::delta6_restricted: return "delta6_restricted";
    case Method::delta6: return "delta6";
    case Method::palette: return "palette";
  }
  return "unknown";
}

std::uint32_t guarantee_biregular(std::uint32_t a, std::uint32_t b) {
  return a * b;
}

std::uint32_t guarantee_general(std::uint32_t delta) {
  return delta * delta * (delta + 1) / 2;
}

std::uint32_t guarantee_multigraph(std::uint32_t delta) {
  std::uint32_t total = 0;
  for (std::uint32_t d = 1; d <= delta; ++d) {
    total += d * (d * (delta - 1) + 1);
  }
  return total;
}

namespace {

std::uint32_t uniform_x_degree_or_throw(const BipartiteGraph& g) {
  std::uint32_t a = g.x_count() == 0 ? 0 : g.x_degree(0);
  for (VertexId x = 0; x < g.x_count(); ++x) {
    if (g.x_degree(x) != a) {
      throw Error(ErrorCode::precondition_violated,
                  "X-degrees are not uniform: vertex 0 has degree " +
                      std::to_string(a) + ", vertex " + std::to_string(x) +
                      " has degree " + std::to_string(g.x_degree(x)));
    }
  }
  return a;
}

void require_simple(const BipartiteGraph& g, const char* op) {
  if (g.has_parallel_edges()) {
    throw Error(ErrorCode::precondition_violated,
                std::string(op) + " requires a simple graph");
  }
}

}  // namespace

Decomposition biregular_decompose(const BipartiteGraph& g, std::uint32_t a,
                                  std::uint32_t b) {
  require_simple(g, "biregular_decompose");
  for (VertexId x = 0; x < g.x_count(); ++x) {
    if (g.x_degree(x) != a) {
      throw Error(ErrorCode::precondition_violated,
                  "X vertex " + std::to_string(x) + " has degree " +
                      std::to_string(g.x_degree(x)) + ", expected " +
                      std::to_string(a));
    }
  }
  for (VertexId y = 0; y < g.y_count(); ++y) {
    if (g.y_degree(y) > b) {
      throw Error(ErrorCode::precondition_violated,
                  "Y vertex " + std::to_string(y) + " has degree " +
                      std::to_string(g.y_degree(y)) + " > " +
                      std::to_string(b));
    }
  }

  Decomposition out;
  out.x_assignment.assign(g.x_count(), -1);
  if (a == 0 || g.edge_count() == 0) return out;

  const Hypergraph h = from_neighborhoods(g);
  const HyperedgeColoring hc = greedy_edge_color(h);
  // Two hyperedges meeting at y get distinct colors, so a block of `a`
  // consecutive colors puts at most `a` stars on any Y vertex.
  const std::uint32_t part_count = (hc.max_color + a - 1) / a;
  out.parts.resize(part_count);
  for (VertexId x = 0; x < g.x_count(); ++x) {
    out.x_assignment[x] = static_cast<std::int32_t>((hc.colors[x] - 1) / a);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out.parts[out.x_assignment[g.edge(e).x]].push_back(e);
  }
  return out;
}

bool decomposition_is_valid(const BipartiteGraph& g, const Decomposition& d,
                            std::uint32_t a, std::uint32_t b) {
  if (d.parts.size() > b) return false;
  if (d.x_assignment.size() != g.x_count()) return false;
  std::vector<std::int32_t> edge_part(g.edge_count(), -1);
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    std::vector<std::uint32_t> xd(g.x_count(), 0), yd(g.y_count(), 0);
    for (EdgeId e : d.parts[i]) {
      if (e >= g.edge_count() || edge_part[e] != -1) return false;
      edge_part[e] = static_cast<std::int32_t>(i);
      if (++xd[g.edge(e).x] > a || ++yd[g.edge(e).y] > a) return false;
      if (d.x_assignment[g.edge(e).x] != static_cast<std::int32_t>(i)) {
        return false;
      }
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (edge_part[e] == -1) return false;
  }
  for (VertexId x = 0; x < g.x_count(); ++x) {
    if (g.x_degree(x) >= 1 && d.x_assignment[x] < 0) return false;
  }
  return true;
}

ColorResult interval_color_biregular(const BipartiteGraph& g,
                                     std::optional<std::uint32_t> b_opt) {
  require_simple(g, "interval_color_biregular");
  const std::uint32_t a = uniform_x_degree_or_throw(g);
  std::uint32_t b_actual = 0;
  for (VertexId y = 0; y < g.y_count(); ++y) {
    b_actual = std::max(b_actual, g.y_degree(y));
  }
  const std::uint32_t b = b_opt.value_or(b_actual);
  if (b_actual > b) {
    throw Error(ErrorCode::precondition_violated,
                "maximum Y-degree " + std::to_string(b_actual) + " exceeds " +
                    std::to_string(b));
  }

  ColorResult result;
  result.certificate.method = Method::biregular;
  result.certificate.guaranteed_bound = guarantee_biregular(a, b);
  result.coloring.colors.assign(g.edge_count(), 0);
  if (g.edge_count() == 0) {
    result.certificate.verified = true;
    return result;
  }

  const Decomposition dec = biregular_decompose(g, a, b);
  std::vector<bool> mask(g.x_count(), false);
  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    std::fill(mask.begin(), mask.end(), false);
    for (VertexId x = 0; x < g.x_count(); ++x) {
      mask[x] = dec.x_assignment[x] == static_cast<std::int32_t>(i);
    }
    const Subgraph part = edge_induced_subgraph(g, mask);
    const EdgeColoring part_coloring = konig_edge_color(part.graph);
    write_lifted(part.map, part_coloring.colors,
                 static_cast<Color>(i) * a, result.coloring.colors);
  }
  result.coloring = make_coloring(std::move(result.coloring.colors));
  result.certificate.colors_used = result.coloring.max_color;
  result.certificate.verified = verify_coloring(g, result.coloring).ok();
  return result;
}

ColorResult interval_color_general(const BipartiteGraph& g) {
  require_simple(g, "interval_color_general");
  const std::uint32_t delta = g.max_degree();

  ColorResult result;
  result.certificate.method = Method::general;
  result.certificate.guaranteed_bound = guarantee_general(delta);
  result.coloring.colors.assign(g.edge_count(), 0);
  if (g.edge_count() == 0) {
    result.certificate.verified = true;
    return result;
  }

  Color offset = 0;
  for (std::uint32_t d = 1; d <= delta; ++d) {
    const std::vector<bool> mask = x_vertices_of_degree(g, d);
    if (std::none_of(mask.begin(), mask.end(), [](bool v) { return v; })) {
      continue;
    }
    const Subgraph sub = edge_induced_subgraph(g, mask);
    const ColorResult cls = interval_color_biregular(sub.graph, delta);
    write_lifted(sub.map, cls.coloring.colors, offset, result.coloring.colors);
    offset += d * delta;  // nonempty classes reserve their full window
  }
  result.coloring = make_coloring(std::move(result.coloring.colors));
  result.certificate.colors_used = result.coloring.max_color;
  result.certificate.verified = verify_coloring(g, result.coloring).ok();
  return result;
}

ColorResult interval_color_multigraph(const BipartiteGraph& g) {
  const std::uint32_t delta = g.max_degree();

  ColorResult result;
  result.certificate.method = Method::multigraph;
  result.certificate.guaranteed_bound = guarantee_multigraph(delta);
  result.coloring.colors.assign(g.edge_count(), 0);
  if (g.edge_count() == 0) {
    result.certificate.verified = true;
    return result;
  }

  Color offset = 0;
  for (std::uint32_t d = 1; d <= delta; ++d) {
    const std::vector<bool> mask = x_vertices_of_degree(g, d);
    if (std::none_of(mask.begin(), mask.end(), [](bool v) { return v; })) {
      continue;
    }
    const Subgraph sub = edge_induced_subgraph(g, mask);
    const Hypergraph h = from_neighborhoods(sub.graph);
    const HyperedgeColoring hc = greedy_edge_color(h);

    // One part per hyperedge color: its stars are vertex-disjoint, so the
    // part has max degree d and takes d colors under Konig.
    std::vector<Color> sub_colors(sub.graph.edge_count(), 0);
    std::vector<bool> class_mask(sub.graph.x_count(), false);
    for (Color c = 1; c <= hc.max_color; ++c) {
      std::fill(class_mask.begin(), class_mask.end(), false);
      for (VertexId x = 0; x < sub.graph.x_count(); ++x) {
        class_mask[x] = hc.colors[x] == c;
      }
      const Subgraph part = edge_induced_subgraph(sub.graph, class_mask);
      const EdgeColoring part_coloring = konig_edge_color(part.graph);
      write_lifted(part.map, part_coloring.colors, (c - 1) * d, sub_colors);
    }
    write_lifted(sub.map, sub_colors, offset, result.coloring.colors);
    offset += d * (d * (delta - 1) + 1);
  }
  result.coloring = make_coloring(std::move(result.coloring.colors));
  result.certificate.colors_used = result.coloring.max_color;
  result.certificate.verified = verify_coloring(g, result.coloring).ok();
  return result;
}

}  // namespace xic
