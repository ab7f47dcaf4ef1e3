#include <doctest.h>

#include "core/io.hpp"
#include "helpers.hpp"

using namespace xic;
using xic_test::make;

TEST_CASE("graph documents") {
  SUBCASE("a minimal document parses") {
    const BipartiteGraph g = parse_graph("x_count 1\ny_count 1\nedges 1\n0 0\n");
    CHECK(g.x_count() == 1);
    CHECK(g.edge_count() == 1);
  }

  SUBCASE("comments and blank lines are ignored") {
    const BipartiteGraph g = parse_graph(
        "# a graph\n\nx_count 2\ny_count 2\n# flags\nmulti 1\nedges 2\n0 0\n"
        "0 0\n");
    CHECK(g.allow_multi());
    CHECK(g.edge_count() == 2);
  }

  SUBCASE("emit then parse is the identity on graphs") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const BipartiteGraph g = random_bipartite(6, 5, 4, 0.5, seed);
      CHECK(xic_test::same_graph(g, parse_graph(emit_graph(g))));
    }
    const BipartiteGraph multi = make(2, 2, {{0, 0}, {0, 0}, {1, 1}}, true);
    CHECK(xic_test::same_graph(multi, parse_graph(emit_graph(multi))));
  }

  SUBCASE("parse then emit is the identity on canonical text") {
    const std::string text = emit_graph(xic::complete_bipartite(3, 3));
    CHECK(emit_graph(parse_graph(text)) == text);
  }

  SUBCASE("errors carry line and column") {
    try {
      parse_graph("x_count 1\ny_count 1\nedges 1\n0 7\n");
      FAIL("expected parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
      CHECK(e.column() == 3);
    }
    try {
      parse_graph("x_count nope\n");
      FAIL("expected parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
    }
    CHECK_THROWS_AS(parse_graph("x_count 1\ny_count 1\nedges 1\n0 0\nextra\n"),
                    ParseError);
  }
}

TEST_CASE("coloring documents") {
  const EdgeColoring c = make_coloring({1, 2, 1, 2});
  const std::string text = emit_coloring(c);
  const EdgeColoring back = parse_coloring(text);
  CHECK(back.colors == c.colors);
  CHECK(back.max_color == c.max_color);
  CHECK(emit_coloring(back) == text);

  try {
    parse_coloring("colors 2\n1\n2\nmax_color 5\n");
    FAIL("expected parse error");
  } catch (const ParseError&) {
  }
  CHECK_THROWS_AS(parse_coloring("colors 1\n0\nmax_color 0\n"), ParseError);
}

TEST_CASE("dot export") {
  CHECK(emit_dot(make(0, 0, {})).find("graph xic {") == 0);

  const BipartiteGraph c4 = make(2, 2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const EdgeColoring cc = make_coloring({1, 2, 1, 2});
  const std::string dot = emit_dot(c4, &cc);
  CHECK(dot.find("label=\"1\"") != std::string::npos);
  CHECK(dot.find("label=\"2\"") != std::string::npos);

  const BipartiteGraph dbl = make(1, 1, {{0, 0}, {0, 0}}, true);
  const std::string mdot = emit_dot(dbl);
  std::size_t parallels = 0, at = 0;
  while ((at = mdot.find("x0 -- y0", at)) != std::string::npos) {
    ++parallels;
    at += 1;
  }
  CHECK(parallels == 2);
}

TEST_CASE("frontier round trip") {
  GeneratorSpec spec;
  spec.mode = GeneratorSpec::Mode::enumerate_all;
  spec.n_x = 3;
  spec.n_y = 3;
  spec.max_edges = 5;
  const SearchReport report = extremal_search(spec, UINT64_MAX);
  REQUIRE(report.completed);

  const std::string text = emit_frontier(spec, report);
  const Frontier back = parse_frontier(text);
  CHECK(back.spec.n_x == spec.n_x);
  CHECK(back.spec.max_edges == spec.max_edges);
  CHECK(back.report.graphs_examined == report.graphs_examined);
  CHECK(back.report.completed == report.completed);
  REQUIRE(back.report.witness.has_value());
  CHECK(back.report.witness->chi == report.witness->chi);
  CHECK(xic_test::same_graph(back.report.witness->graph,
                             report.witness->graph));

  CHECK_THROWS_AS(parse_frontier("bogus\n"), ParseError);
}
