#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/graph.hpp"

namespace xic {

// Exhaustive search for an X-interval coloring with colors inside {1..t}:
// every X vertex gets a start position (its palette is then a forced run of
// consecutive colors) and edges are extended by backtracking with properness
// at Y as the only remaining constraint.
enum class SolveOutcome { found, unsat, budget };

struct SolveStats {
  std::uint64_t nodes = 0;
};

SolveOutcome solve_x_interval(const BipartiteGraph& g, std::uint32_t t,
                              std::uint64_t node_budget, SolveStats& stats,
                              std::vector<Color>* out);

struct ExactResult {
  std::uint32_t chi = 0;
  EdgeColoring coloring;
};

/// Smallest t in [max_degree, t_max] admitting an X-interval t-coloring, with
/// a witness; nullopt if there is none up to t_max. The empty graph yields
/// chi = 0.
std::optional<ExactResult> exact_chi_int(const BipartiteGraph& g,
                                         std::uint32_t t_max);

/// Budgeted variant used by the search harness. `exhausted` reports that the
/// node budget ran out before the answer was settled.
std::optional<ExactResult> exact_chi_int_budgeted(const BipartiteGraph& g,
                                                  std::uint32_t t_max,
                                                  std::uint64_t node_budget,
                                                  std::uint64_t& nodes_spent,
                                                  bool& exhausted);

struct GeneratorSpec {
  enum class Mode { enumerate_all, random };
  Mode mode = Mode::enumerate_all;
  std::uint32_t n_x = 0;
  std::uint32_t n_y = 0;
  std::uint32_t max_edges = 0;   // enumerate_all
  std::uint32_t max_degree = 0;  // random
  double density = 0.0;          // random
  std::uint64_t seed = 0;        // random
  std::uint64_t count = 0;       // random: number of graphs
  bool acyclic_only = false;
};

struct SearchWitness {
  BipartiteGraph graph;
  EdgeColoring coloring;
  std::uint32_t chi = 0;
  std::uint32_t delta = 0;
};

struct SearchReport {
  std::uint64_t graphs_examined = 0;
  std::uint64_t budget_spent = 0;
  std::uint64_t position = 0;  // graphs consumed from the generator stream
  bool completed = false;
  std::optional<SearchWitness> witness;

  // chi / delta^2 of the worst graph seen; 0 before any witness
  double max_ratio() const;
};

/// Runs exact_chi_int over the generated stream, tracking the largest
/// chi/delta^2 ratio. Deterministic given the spec; resumable by passing the
/// report of an exhausted run back in. A run whose budget expires returns
/// completed = false with the partial report.
SearchReport extremal_search(const GeneratorSpec& spec,
                             std::uint64_t node_budget,
                             std::optional<SearchReport> resume = {});

}  // namespace xic
