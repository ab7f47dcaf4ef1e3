// Acceptance suite: one line per criterion, every bound pinned in code.
// Usage: xicolor_acceptance <path-to-cli-binary>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "core/degree_six.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/hypergraph.hpp"
#include "core/interval.hpp"
#include "core/io.hpp"
#include "core/konig.hpp"
#include "core/oracle.hpp"
#include "core/palette.hpp"
#include "core/rng.hpp"
#include "../helpers.hpp"

namespace fs = std::filesystem;
using namespace xic;

namespace {

constexpr std::uint64_t kSeedBase = 20260810;

struct Outcome {
  bool pass = true;
  std::string detail;
  double seconds = 0.0;
};

struct Context {
  std::string cli;
  fs::path scratch;
};

int run_cli(const Context& ctx, const std::string& args) {
  const std::string cmd = ctx.cli + " " + args + " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  if (raw == -1) return -1;
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spit(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

// --- criterion 1: biregular bound, exercised through the CLI ---

Outcome criterion_biregular(const Context& ctx) {
  Outcome out;
  std::uint32_t done = 0;
  for (std::uint32_t i = 0; i < 100; ++i) {
    const std::uint32_t a = i % 5 + 1;
    const std::uint32_t b = (i / 5) % 5 + 1;
    const std::uint32_t n_x = b * (i % 4 + 1);  // divisibility by design
    std::optional<BipartiteGraph> g;
    for (std::uint64_t round = 0; round < 50 && !g.has_value(); ++round) {
      g = random_biregular(a, b, n_x, mix_seed(kSeedBase + i, round));
    }
    if (!g.has_value()) {
      out.pass = false;
      out.detail = "could not sample a simple biregular instance";
      return out;
    }
    const fs::path gf = ctx.scratch / ("c1_" + std::to_string(i) + ".xg");
    const fs::path cf = ctx.scratch / ("c1_" + std::to_string(i) + ".col");
    spit(gf, emit_graph(*g));
    const int rc = run_cli(ctx, "color --method biregular --in " + gf.string() +
                                    " --out " + cf.string());
    if (rc != 0) {
      out.pass = false;
      out.detail = "CLI exit " + std::to_string(rc) + " on instance " +
                   std::to_string(i);
      return out;
    }
    const EdgeColoring coloring = parse_coloring(slurp(cf));
    const VerificationReport v = verify_coloring(*g, coloring);
    if (!v.ok() || coloring.max_color > a * b) {
      out.pass = false;
      out.detail = "instance " + std::to_string(i) + " used " +
                   std::to_string(coloring.max_color) + " > " +
                   std::to_string(a * b);
      return out;
    }
    ++done;
  }
  out.detail = std::to_string(done) + "/100 within a*b colors";
  return out;
}

// --- criterion 2: cubic bound on arbitrary simple graphs ---

Outcome criterion_general(const Context&) {
  Outcome out;
  for (std::uint32_t i = 0; i < 100; ++i) {
    const std::uint32_t n_x = 5 + (i * 3) % 16;
    const std::uint32_t n_y = 5 + (i * 5) % 16;
    const std::uint32_t cap = 1 + i % 8;
    const double density = 0.08 + 0.045 * (i % 10);
    const BipartiteGraph g =
        random_bipartite(n_x, n_y, cap, density, kSeedBase + 1000 + i);
    if (g.edge_count() > 200) {
      out.pass = false;
      out.detail = "generator exceeded the 200-edge cap";
      return out;
    }
    const std::uint32_t delta = g.max_degree();
    const ColorResult r = interval_color_general(g);
    if (!r.certificate.verified ||
        r.certificate.colors_used > delta * delta * (delta + 1) / 2) {
      out.pass = false;
      out.detail = "instance " + std::to_string(i) + " broke the cubic bound";
      return out;
    }
  }
  out.detail = "100/100 within delta^2(delta+1)/2";
  return out;
}

// --- criterion 3: restricted degree-6 pipeline within 10 colors ---

Outcome criterion_restricted(const Context&) {
  Outcome out;
  for (std::uint32_t i = 0; i < 50; ++i) {
    const BipartiteGraph g =
        xic_test::random_restricted_graph(kSeedBase + 2000 + i, i % 2 == 1);
    const ColorResult r = interval_color_deg6_restricted(g);
    if (!r.certificate.verified || r.certificate.colors_used > 10) {
      out.pass = false;
      out.detail = "instance " + std::to_string(i) + " used " +
                   std::to_string(r.certificate.colors_used) + " > 10";
      return out;
    }
  }
  out.detail = "50/50 within 10 colors (25 of them multigraphs)";
  return out;
}

// --- criterion 4: composition within 17 colors at max degree 6 ---

Outcome criterion_delta6(const Context&) {
  Outcome out;
  std::uint32_t fallbacks = 0;
  for (std::uint32_t i = 0; i < 30; ++i) {
    const BipartiteGraph g = xic_test::random_delta6_graph(kSeedBase + 3000 + i);
    const ColorResult r = interval_color_delta6(g);
    const std::uint32_t cap = r.fallback ? 28 : 17;
    if (!r.certificate.verified || r.certificate.colors_used > cap) {
      out.pass = false;
      out.detail = "instance " + std::to_string(i) + " used " +
                   std::to_string(r.certificate.colors_used) + " > " +
                   std::to_string(cap);
      return out;
    }
    if (r.fallback) ++fallbacks;
  }
  out.pass = fallbacks == 0;
  out.detail = fallbacks == 0
                   ? "30/30 within 17 colors, no fallback"
                   : std::to_string(fallbacks) +
                         " fallback case(s), each verified within 28";
  return out;
}

// --- criterion 5: palette conversion bound ---

Outcome criterion_palette(const Context&) {
  Outcome out;
  std::uint32_t done = 0;
  for (std::uint32_t i = 0; done < 50; ++i) {
    const std::uint32_t n_x = 4 + i % 8;
    const std::uint32_t n_y = 4 + (i * 3) % 8;
    const std::uint32_t cap = 2 + i % 5;
    const BipartiteGraph g =
        random_bipartite(n_x, n_y, cap, 0.5, kSeedBase + 4000 + i);
    if (g.edge_count() == 0) continue;
    ++done;
    const EdgeColoring base = konig_edge_color(g);
    const auto groups = x_palettes(g, base);
    const ColorResult r = interval_from_palettes(g, base);
    const std::uint64_t cap_colors =
        static_cast<std::uint64_t>(g.max_x_degree()) * groups.size();
    if (!r.certificate.verified || r.certificate.colors_used > cap_colors) {
      out.pass = false;
      out.detail = "instance " + std::to_string(i) +
                   " exceeded max_x_degree * palettes";
      return out;
    }
  }
  out.detail = "50/50 within max_x_degree * #X-palettes";
  return out;
}

// --- criterion 6: the exact oracle never loses to a construction ---

Outcome criterion_oracle_dominance(const Context&) {
  Outcome out;
  BipartiteEnumerator en(8, 8, 8, /*cores_only=*/true);
  std::uint64_t graphs = 0, comparisons = 0;
  while (auto g = en.next()) {
    ++graphs;
    const std::uint32_t delta = g->max_degree();
    const auto exact =
        exact_chi_int(*g, std::max(guarantee_general(delta), 1u));
    if (!exact.has_value()) {
      out.pass = false;
      out.detail = "oracle found no coloring within the certified bound";
      return out;
    }
    if (g->edge_count() > 0 && !verify_coloring(*g, exact->coloring).ok()) {
      out.pass = false;
      out.detail = "oracle witness failed verification";
      return out;
    }

    std::vector<ColorResult> results;
    results.push_back(interval_color_general(*g));
    results.push_back(interval_color_multigraph(*g));
    if (g->edge_count() > 0) {
      results.push_back(interval_from_palettes(*g, konig_edge_color(*g)));
    }
    bool uniform = true;
    for (VertexId x = 0; x < g->x_count(); ++x) {
      uniform = uniform && g->x_degree(x) == g->x_degree(0);
    }
    if (uniform) results.push_back(interval_color_biregular(*g));
    if (delta <= 6) results.push_back(interval_color_delta6(*g));
    bool restricted = delta <= 6;
    for (VertexId x = 0; x < g->x_count() && restricted; ++x) {
      restricted = g->x_degree(x) != 3;
    }
    if (restricted) results.push_back(interval_color_deg6_restricted(*g));

    for (const ColorResult& r : results) {
      ++comparisons;
      if (!r.certificate.verified || exact->chi > r.certificate.colors_used) {
        out.pass = false;
        out.detail = "a construction beat the oracle on graph " +
                     std::to_string(graphs);
        return out;
      }
    }
  }
  out.detail = std::to_string(graphs) + " graphs, " +
               std::to_string(comparisons) + " method comparisons";
  return out;
}

// --- criterion 7: regular graphs need exactly their degree ---

Outcome criterion_regular(const Context&) {
  Outcome out;
  std::uint32_t solved = 0;
  for (std::uint32_t d = 1; d <= 4; ++d) {
    for (std::uint32_t n : {4u, 6u, 8u}) {
      for (std::uint64_t variant = 0; variant < 2; ++variant) {
        std::optional<BipartiteGraph> g;
        for (std::uint64_t round = 0; round < 50 && !g.has_value(); ++round) {
          g = random_biregular(
              d, d, n,
              mix_seed(kSeedBase + 5000 + d * 100 + n + variant, round));
        }
        if (!g.has_value()) {
          out.pass = false;
          out.detail = "sampling failed";
          return out;
        }
        const auto exact = exact_chi_int(*g, guarantee_general(d));
        if (!exact.has_value() || exact->chi != d) {
          out.pass = false;
          out.detail = "a " + std::to_string(d) + "-regular graph needed " +
                       (exact ? std::to_string(exact->chi) : "none");
          return out;
        }
        ++solved;
      }
    }
  }
  out.detail = std::to_string(solved) + " regular instances, all exact at d";
  return out;
}

// --- criterion 8: 2-factorizations of doubled graphs ---

Outcome criterion_two_factorization(const Context&) {
  Outcome out;
  for (std::uint32_t i = 0; i < 50; ++i) {
    const BipartiteGraph g =
        xic_test::random_restricted_graph(kSeedBase + 6000 + i, i % 2 == 0);
    const DoubledGraph doubled = build_doubled(g);
    const TwoFactorization f = petersen_two_factorization(doubled.h);
    std::size_t covered = 0;
    for (const auto& factor : f.factors) {
      covered += factor.size();
      std::vector<std::uint32_t> deg(doubled.h.vertex_count(), 0);
      for (EdgeId e : factor) {
        deg[doubled.h.edge(e).first] += doubled.h.is_loop(e) ? 2 : 1;
        if (!doubled.h.is_loop(e)) ++deg[doubled.h.edge(e).second];
      }
      for (VertexId v = 0; v < doubled.h.vertex_count(); ++v) {
        if (deg[v] != 2) {
          out.pass = false;
          out.detail = "factor not 2-regular on instance " + std::to_string(i);
          return out;
        }
      }
    }
    if (covered != doubled.h.edge_count()) {
      out.pass = false;
      out.detail = "factors do not partition the edges";
      return out;
    }
    const EdgeColoring h_coloring =
        alternate_color_factors(doubled.h, f, doubled.provenance);
    const EdgeColoring base = restrict_to_original(g, doubled, h_coloring);
    if (!verify_coloring(g, base).proper) {
      out.pass = false;
      out.detail = "restriction not proper on instance " + std::to_string(i);
      return out;
    }
  }
  out.detail = "50/50 spanning 2-regular factors, proper restrictions";
  return out;
}

// --- criterion 9: greedy hypergraph bound ---

Outcome criterion_hypergraph(const Context&) {
  Outcome out;
  for (std::uint32_t i = 0; i < 200; ++i) {
    const Hypergraph h =
        xic_test::random_hypergraph(kSeedBase + 7000 + i, 12, 20, 5, 6);
    const HyperedgeColoring c = greedy_edge_color(h);
    if (!xic_test::hypergraph_coloring_proper(h, c.colors)) {
      out.pass = false;
      out.detail = "greedy produced an improper coloring";
      return out;
    }
    const std::uint32_t k = h.rank();
    const std::uint32_t delta = h.max_degree();
    if (delta > 0 && c.max_color > k * (delta - 1) + 1) {
      out.pass = false;
      out.detail = "greedy exceeded rank*(degree-1)+1";
      return out;
    }
  }
  out.detail = "200/200 proper and within rank*(degree-1)+1";
  return out;
}

// --- criterion 10: I/O round trips and the CLI exit-code contract ---

Outcome criterion_io_cli(const Context& ctx) {
  Outcome out;
  for (std::uint32_t i = 0; i < 100; ++i) {
    BipartiteGraph g = i % 4 == 0
                           ? xic_test::random_restricted_graph(
                                 kSeedBase + 8000 + i, true)
                           : random_bipartite(2 + i % 9, 2 + (i * 7) % 9,
                                              1 + i % 5, 0.5,
                                              kSeedBase + 8000 + i);
    const BipartiteGraph back = parse_graph(emit_graph(g));
    if (!xic_test::same_graph(g, back)) {
      out.pass = false;
      out.detail = "round trip broke on instance " + std::to_string(i);
      return out;
    }
    if (emit_graph(back) != emit_graph(g)) {
      out.pass = false;
      out.detail = "emitted text is not canonical";
      return out;
    }
  }

  const fs::path k33 = ctx.scratch / "c10_k33.xg";
  const fs::path mixed = ctx.scratch / "c10_mixed.xg";
  const fs::path col = ctx.scratch / "c10.col";
  const fs::path bad = ctx.scratch / "c10_bad.col";
  const fs::path frontier = ctx.scratch / "c10.frontier";
  spit(mixed,
       emit_graph(xic_test::make(2, 3, {{0, 0}, {1, 0}, {1, 1}, {1, 2}})));

  struct Step {
    std::string args;
    int expected;
  };
  const std::vector<Step> steps = {
      {"gen --kind complete --m 3 --n 3 -o " + k33.string(), 0},
      {"gen --kind bogus", 2},
      {"gen --kind biregular --a 2 --b 3 --nx 2", 3},  // divisibility
      {"color --method general --in " + k33.string() + " --out " +
           col.string(),
       0},
      {"color --method biregular --in " + mixed.string(), 3},
      {"color --in " + ctx.scratch.string() + "/does_not_exist.xg", 2},
      {"verify --graph " + k33.string() + " --coloring " + col.string(), 0},
      {"exact --in " + k33.string(), 0},
      {"decompose --in " + k33.string(), 0},
      {"decompose --in " + mixed.string(), 3},
      {"search --mode enumerate --nx 2 --ny 2 --max-edges 3 --frontier " +
           frontier.string(),
       0},
      {"search --frontier " + frontier.string(), 0},  // resume a finished run
      {"verify --graph " + k33.string(), 2},          // missing required flag
  };
  for (const Step& step : steps) {
    const int rc = run_cli(ctx, step.args);
    if (rc != step.expected) {
      out.pass = false;
      out.detail = "`" + step.args + "` exited " + std::to_string(rc) +
                   ", expected " + std::to_string(step.expected);
      return out;
    }
  }

  // tamper with the coloring: duplicate a color at a shared vertex
  EdgeColoring tampered = parse_coloring(slurp(col));
  tampered.colors[1] = tampered.colors[0];
  tampered.max_color =
      *std::max_element(tampered.colors.begin(), tampered.colors.end());
  spit(bad, emit_coloring(tampered));
  const int rc = run_cli(ctx, "verify --graph " + k33.string() +
                                  " --coloring " + bad.string());
  if (rc != 1) {
    out.pass = false;
    out.detail = "tampered verify exited " + std::to_string(rc);
    return out;
  }

  out.detail = "100 round trips, " + std::to_string(steps.size() + 1) +
               " CLI exit-code checks";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: xicolor_acceptance <path-to-xicolor-cli>\n";
    return 2;
  }
  Context ctx;
  ctx.cli = argv[1];
  ctx.scratch = fs::temp_directory_path() /
                ("xic_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(ctx.scratch);

  struct Entry {
    int number;
    const char* name;
    double limit;
    std::function<Outcome(const Context&)> run;
  };
  const std::vector<Entry> criteria = {
      {1, "biregular bound (a*b colors via CLI)", 10.0, criterion_biregular},
      {2, "cubic bound on arbitrary graphs", 30.0, criterion_general},
      {3, "restricted degree-6 bound (10 colors)", 30.0, criterion_restricted},
      {4, "degree-6 composition (17 colors)", 60.0, criterion_delta6},
      {5, "palette conversion bound", 10.0, criterion_palette},
      {6, "oracle dominance over all small graphs", 300.0,
       criterion_oracle_dominance},
      {7, "regular graphs are exact at their degree", 60.0, criterion_regular},
      {8, "2-factorization of doubled graphs", 10.0,
       criterion_two_factorization},
      {9, "greedy hypergraph bound", 5.0, criterion_hypergraph},
      {10, "round-trip I/O and CLI exit codes", 5.0, criterion_io_cli},
  };

  int failures = 0;
  for (const Entry& entry : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome = entry.run(ctx);
    outcome.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    const bool in_time = outcome.seconds < entry.limit;
    const bool pass = outcome.pass && in_time;
    std::printf("[%s] %2d %s: %s (%.2fs / %.0fs)\n", pass ? "PASS" : "FAIL",
                entry.number, entry.name, outcome.detail.c_str(),
                outcome.seconds, entry.limit);
    if (!pass) ++failures;
  }

  std::error_code ec;
  fs::remove_all(ctx.scratch, ec);

  if (failures == 0) {
    std::printf("all %zu criteria passed\n", criteria.size());
  } else {
    std::printf("%d criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
