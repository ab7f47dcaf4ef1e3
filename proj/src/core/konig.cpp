#include "core/konig.hpp"

#include <limits>
#include <vector>

namespace xic {

namespace {
constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

Color smallest_missing(const std::vector<EdgeId>& slots) {
  Color c = 1;
  while (c <= slots.size() && slots[c - 1] != kNoEdge) ++c;
  return c;
}
}  // namespace

EdgeColoring konig_edge_color(const BipartiteGraph& g) {
  const std::uint32_t delta = g.max_degree();
  EdgeColoring out;
  out.colors.assign(g.edge_count(), 0);
  if (g.edge_count() == 0) return out;

  // slot[v][c-1] = edge currently colored c at v
  std::vector<std::vector<EdgeId>> at_x(g.x_count(),
                                        std::vector<EdgeId>(delta, kNoEdge));
  std::vector<std::vector<EdgeId>> at_y(g.y_count(),
                                        std::vector<EdgeId>(delta, kNoEdge));

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const VertexId x = g.edge(e).x;
    const VertexId y = g.edge(e).y;
    const Color alpha = smallest_missing(at_x[x]);
    const Color beta = smallest_missing(at_y[y]);
    if (alpha != beta) {
      // Trace the alpha/beta path from y against the pre-flip tables. It is a
      // simple path: y misses beta, every vertex holds at most one edge per
      // color, and it cannot reach x (the edge into x would have to be alpha,
      // which x misses).
      std::vector<EdgeId> path;
      bool on_y = true;
      VertexId v = y;
      Color want = alpha;
      while (true) {
        const EdgeId pe = on_y ? at_y[v][want - 1] : at_x[v][want - 1];
        if (pe == kNoEdge) break;
        path.push_back(pe);
        v = on_y ? g.edge(pe).x : g.edge(pe).y;
        on_y = !on_y;
        want = want == alpha ? beta : alpha;
      }
      for (EdgeId pe : path) {
        const Color c = out.colors[pe];
        at_x[g.edge(pe).x][c - 1] = kNoEdge;
        at_y[g.edge(pe).y][c - 1] = kNoEdge;
      }
      for (EdgeId pe : path) {
        const Color c = out.colors[pe] == alpha ? beta : alpha;
        out.colors[pe] = c;
        at_x[g.edge(pe).x][c - 1] = pe;
        at_y[g.edge(pe).y][c - 1] = pe;
      }
    }
    out.colors[e] = alpha;
    at_x[x][alpha - 1] = e;
    at_y[y][alpha - 1] = e;
    out.max_color = std::max(out.max_color, alpha);
  }
  return out;
}

}  // namespace xic
