#include <doctest.h>

#include <set>

#include "core/konig.hpp"
#include "helpers.hpp"

using namespace xic;
using xic_test::make;

namespace {

std::set<Color> palette_at_x(const BipartiteGraph& g, const EdgeColoring& c,
                             VertexId x) {
  std::set<Color> palette;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).x == x) palette.insert(c.colors[e]);
  }
  return palette;
}

}  // namespace

TEST_CASE("small instances") {
  const BipartiteGraph c4 = make(2, 2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const EdgeColoring cc = konig_edge_color(c4);
  CHECK(cc.max_color <= 2);
  CHECK(verify_coloring(c4, cc).proper);

  const BipartiteGraph k33 = xic::complete_bipartite(3, 3);
  const EdgeColoring kc = konig_edge_color(k33);
  CHECK(kc.max_color == 3);
  CHECK(verify_coloring(k33, kc).proper);
  for (VertexId x = 0; x < 3; ++x) {
    CHECK(palette_at_x(k33, kc, x) == std::set<Color>{1, 2, 3});
  }

  const BipartiteGraph dbl = make(1, 1, {{0, 0}, {0, 0}}, true);
  const EdgeColoring dc = konig_edge_color(dbl);
  CHECK(verify_coloring(dbl, dc).proper);
  CHECK(std::set<Color>(dc.colors.begin(), dc.colors.end()) ==
        std::set<Color>{1, 2});
}

TEST_CASE("proper, at most max_degree colors, palettes as large as degrees") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const BipartiteGraph g = random_bipartite(7, 6, 5, 0.6, seed);
    const EdgeColoring c = konig_edge_color(g);
    CHECK(verify_coloring(g, c).proper);
    CHECK(c.max_color <= g.max_degree());
    // proper => palette size equals degree at every vertex
    for (VertexId x = 0; x < g.x_count(); ++x) {
      CHECK(palette_at_x(g, c, x).size() == g.x_degree(x));
    }
  }
}

TEST_CASE("multigraphs are handled") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const BipartiteGraph g = xic_test::random_restricted_graph(seed, true);
    const EdgeColoring c = konig_edge_color(g);
    CHECK(verify_coloring(g, c).proper);
    CHECK(c.max_color <= g.max_degree());
  }
}

TEST_CASE("uniform-degree regular graphs come out X-interval") {
  // when all X-degrees equal the max degree, every X palette is full
  const std::optional<BipartiteGraph> g = random_biregular(3, 3, 5, 11);
  REQUIRE(g.has_value());
  const EdgeColoring c = konig_edge_color(*g);
  const VerificationReport r = verify_coloring(*g, c);
  CHECK(r.proper);
  CHECK(r.interval_at_x);
  for (VertexId x = 0; x < g->x_count(); ++x) {
    CHECK(palette_at_x(*g, c, x) == std::set<Color>{1, 2, 3});
  }
}
