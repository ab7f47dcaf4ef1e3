#include <doctest.h>

#include <set>

#include "core/konig.hpp"
#include "core/oracle.hpp"
#include "core/palette.hpp"
#include "helpers.hpp"

using namespace xic;
using xic_test::make;

TEST_CASE("x_palettes groups vertices by palette") {
  const BipartiteGraph k33 = xic::complete_bipartite(3, 3);
  const auto groups = x_palettes(k33, konig_edge_color(k33));
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].palette == std::vector<Color>{1, 2, 3});
  CHECK(groups[0].x_vertices == std::vector<VertexId>{0, 1, 2});

  const BipartiteGraph matching = make(3, 3, {{0, 0}, {1, 1}, {2, 2}});
  const auto mg = x_palettes(matching, make_coloring({1, 1, 1}));
  REQUIRE(mg.size() == 1);
  CHECK(mg[0].palette == std::vector<Color>{1});

  // mixed degrees force at least as many palettes as distinct degrees
  const BipartiteGraph mixed = make(2, 3, {{0, 0}, {1, 0}, {1, 1}, {1, 2}});
  const auto groups2 = x_palettes(mixed, konig_edge_color(mixed));
  std::set<std::uint32_t> degrees;
  for (VertexId x = 0; x < mixed.x_count(); ++x) {
    degrees.insert(mixed.x_degree(x));
  }
  CHECK(groups2.size() >= degrees.size());

  const BipartiteGraph vee = make(2, 1, {{0, 0}, {1, 0}});
  try {
    x_palettes(vee, make_coloring({1, 1}));
    FAIL("expected not-proper error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_proper);
  }
}

TEST_CASE("palette conversion produces certified X-interval colorings") {
  SUBCASE("regular input keeps one window") {
    const std::optional<BipartiteGraph> g = random_biregular(3, 3, 6, 2);
    REQUIRE(g.has_value());
    const ColorResult r = interval_from_palettes(*g, konig_edge_color(*g));
    CHECK(r.certificate.verified);
    CHECK(r.certificate.colors_used <= 3);
  }

  SUBCASE("two palettes with max X-degree 3 stay within 6") {
    // degree-3 and degree-2 X vertices: K33 plus a degree-2 vertex
    const BipartiteGraph g = make(
        4, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2},
               {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}});
    const EdgeColoring base = konig_edge_color(g);
    const auto groups = x_palettes(g, base);
    const ColorResult r = interval_from_palettes(g, base);
    CHECK(r.certificate.verified);
    CHECK(r.certificate.colors_used <=
          g.max_x_degree() * static_cast<std::uint32_t>(groups.size()));
  }

  SUBCASE("random instances: verified and within max_x_degree * palettes") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      const BipartiteGraph g = random_bipartite(7, 7, 5, 0.55, seed);
      if (g.edge_count() == 0) continue;
      const EdgeColoring base = konig_edge_color(g);
      const auto groups = x_palettes(g, base);
      const ColorResult r = interval_from_palettes(g, base);
      CHECK(r.certificate.verified);
      CHECK(r.certificate.colors_used <=
            g.max_x_degree() * static_cast<std::uint32_t>(groups.size()));
    }
  }

  SUBCASE("group windows are disjoint") {
    const BipartiteGraph g = random_bipartite(6, 6, 4, 0.6, 13);
    const EdgeColoring base = konig_edge_color(g);
    const auto groups = x_palettes(g, base);
    const ColorResult r = interval_from_palettes(g, base);
    const auto converted = x_palettes(g, r.coloring);
    // palettes of converted groups of different sizes never share colors
    for (const auto& ga : converted) {
      for (const auto& gb : converted) {
        if (ga.palette.size() == gb.palette.size()) continue;
        std::set<Color> inter;
        std::set_intersection(ga.palette.begin(), ga.palette.end(),
                              gb.palette.begin(), gb.palette.end(),
                              std::inserter(inter, inter.begin()));
        CHECK(inter.empty());
      }
    }
    CHECK(groups.size() >= 1);
  }
}

TEST_CASE("palette index by exhaustive search") {
  SUBCASE("one palette for complete regular bipartite graphs") {
    const auto idx = palette_index_bruteforce(xic::complete_bipartite(3, 3));
    REQUIRE(idx.has_value());
    CHECK(idx->all_vertices == 1);
    CHECK(idx->x_side == 1);
  }

  SUBCASE("a single edge has one palette") {
    const auto idx = palette_index_bruteforce(make(1, 1, {{0, 0}}));
    REQUIRE(idx.has_value());
    CHECK(idx->all_vertices == 1);
    CHECK(idx->x_side == 1);
  }

  SUBCASE("the two-edge path") {
    // center on the Y side: every proper coloring uses two colors, giving
    // palettes {a}, {b}, {a,b} over all vertices and {a}, {b} over X
    const BipartiteGraph path = make(2, 1, {{0, 0}, {1, 0}});
    const auto idx = palette_index_bruteforce(path);
    REQUIRE(idx.has_value());
    CHECK(idx->all_vertices == 3);
    CHECK(idx->x_side == 2);

    // center on the X side: one X palette
    const BipartiteGraph flipped = make(1, 2, {{0, 0}, {0, 1}});
    const auto fidx = palette_index_bruteforce(flipped);
    REQUIRE(fidx.has_value());
    CHECK(fidx->all_vertices == 3);
    CHECK(fidx->x_side == 1);
  }

  SUBCASE("regular graphs: one palette and conversion within max degree") {
    const std::optional<BipartiteGraph> g = random_biregular(2, 2, 4, 21);
    REQUIRE(g.has_value());
    const auto idx = palette_index_bruteforce(*g);
    REQUIRE(idx.has_value());
    CHECK(idx->all_vertices == 1);
    const ColorResult r = interval_from_palettes(*g, konig_edge_color(*g));
    CHECK(r.certificate.colors_used <= 2);
  }

  SUBCASE("budget exhaustion is absence, not an error") {
    const auto idx = palette_index_bruteforce(xic::complete_bipartite(3, 3), 5);
    CHECK_FALSE(idx.has_value());
  }
}
