#include "core/palette.hpp"

#include <algorithm>
#include <map>

#include "core/konig.hpp"

namespace xic {

std::vector<PaletteGroup> x_palettes(const BipartiteGraph& g,
                                     const EdgeColoring& coloring) {
  if (!verify_coloring(g, coloring).proper) {
    throw Error(ErrorCode::not_proper,
                "palette extraction needs a proper coloring");
  }
  std::map<std::vector<Color>, std::vector<VertexId>> groups;
  const auto x_inc = g.x_incidence();
  for (VertexId x = 0; x < g.x_count(); ++x) {
    if (x_inc[x].empty()) continue;
    std::vector<Color> palette;
    palette.reserve(x_inc[x].size());
    for (EdgeId e : x_inc[x]) palette.push_back(coloring.colors[e]);
    std::sort(palette.begin(), palette.end());
    groups[palette].push_back(x);
  }
  std::vector<PaletteGroup> out;
  out.reserve(groups.size());
  for (auto& [palette, vertices] : groups) {
    out.push_back(PaletteGroup{palette, std::move(vertices)});
  }
  return out;
}

ColorResult interval_from_palettes(const BipartiteGraph& g,
                                   const EdgeColoring& coloring) {
  const std::vector<PaletteGroup> groups = x_palettes(g, coloring);

  ColorResult result;
  result.certificate.method = Method::palette;
  result.certificate.guaranteed_bound =
      g.max_x_degree() * static_cast<std::uint32_t>(groups.size());
  result.coloring.colors.assign(g.edge_count(), 0);

  Color offset = 0;
  std::vector<bool> mask(g.x_count(), false);
  for (const PaletteGroup& group : groups) {
    std::fill(mask.begin(), mask.end(), false);
    for (VertexId x : group.x_vertices) mask[x] = true;
    const Subgraph sub = edge_induced_subgraph(g, mask);
    // All X vertices here share a palette, hence a degree p; distinct colors
    // at a Y vertex come from that palette, so Y-degrees are at most p too.
    const EdgeColoring sub_coloring = konig_edge_color(sub.graph);
    write_lifted(sub.map, sub_coloring.colors, offset, result.coloring.colors);
    offset += static_cast<Color>(group.palette.size());
  }
  result.coloring = make_coloring(std::move(result.coloring.colors));
  result.certificate.colors_used = result.coloring.max_color;
  result.certificate.verified = verify_coloring(g, result.coloring).ok();
  return result;
}

namespace {

struct BruteForceState {
  const BipartiteGraph& g;
  std::vector<std::vector<EdgeId>> x_inc;
  std::vector<std::vector<EdgeId>> y_inc;
  std::vector<std::uint64_t> x_mask;
  std::vector<std::uint64_t> y_mask;
  std::vector<Color> colors;
  Color cap = 0;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  bool exhausted = false;
  std::uint32_t best_all = 0;
  std::uint32_t best_x = 0;

  explicit BruteForceState(const BipartiteGraph& graph)
      : g(graph),
        x_inc(graph.x_incidence()),
        y_inc(graph.y_incidence()),
        x_mask(graph.x_count(), 0),
        y_mask(graph.y_count(), 0),
        colors(graph.edge_count(), 0) {}

  static std::uint32_t distinct(std::vector<std::uint64_t>& masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return static_cast<std::uint32_t>(masks.size());
  }

  void leaf() {
    std::vector<std::uint64_t> all;
    all.reserve(x_mask.size() + y_mask.size());
    all.insert(all.end(), x_mask.begin(), x_mask.end());
    all.insert(all.end(), y_mask.begin(), y_mask.end());
    best_all = std::min(best_all, distinct(all));
    std::vector<std::uint64_t> xs(x_mask);
    best_x = std::min(best_x, distinct(xs));
  }

  void search(EdgeId e, Color max_used) {
    if (e == g.edge_count()) {
      leaf();
      return;
    }
    const VertexId x = g.edge(e).x;
    const VertexId y = g.edge(e).y;
    const Color limit = std::min<Color>(max_used + 1, cap);
    for (Color c = 1; c <= limit; ++c) {
      if (exhausted) return;
      if (++nodes > budget) {
        exhausted = true;
        return;
      }
      const std::uint64_t bit = 1ULL << c;
      if ((x_mask[x] & bit) || (y_mask[y] & bit)) continue;
      x_mask[x] |= bit;
      y_mask[y] |= bit;
      colors[e] = c;
      search(e + 1, std::max(max_used, c));
      x_mask[x] &= ~bit;
      y_mask[y] &= ~bit;
      colors[e] = 0;
    }
  }
};

}  // namespace

std::optional<PaletteIndex> palette_index_bruteforce(const BipartiteGraph& g,
                                                     std::uint64_t node_budget) {
  if (g.edge_count() > 16) return std::nullopt;
  if (g.edge_count() == 0) {
    // only the empty palette can occur
    const std::uint32_t any = g.x_count() + g.y_count() > 0 ? 1 : 0;
    return PaletteIndex{any, g.x_count() > 0 ? 1u : 0u};
  }
  BruteForceState state(g);
  state.cap = g.edge_count();
  state.budget = node_budget;
  state.best_all = g.x_count() + g.y_count();
  state.best_x = g.x_count();
  state.search(0, 0);
  if (state.exhausted) return std::nullopt;
  return PaletteIndex{state.best_all, state.best_x};
}

}  // namespace xic
