#include "core/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "core/generators.hpp"
#include "core/interval.hpp"
#include "core/rng.hpp"

namespace xic {

namespace {

class XIntervalSolver {
 public:
  XIntervalSolver(const BipartiteGraph& g, std::uint32_t t,
                  std::uint64_t budget, SolveStats& stats)
      : g_(g), t_(t), budget_(budget), stats_(stats) {
    x_inc_ = g.x_incidence();
    // decreasing degree, then index: hard vertices first
    for (VertexId x = 0; x < g.x_count(); ++x) {
      if (g.x_degree(x) > 0) order_.push_back(x);
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&g](VertexId a, VertexId b) {
                       return g.x_degree(a) > g.x_degree(b);
                     });
    y_used_.assign(static_cast<std::size_t>(g.y_count()) * (t + 1), 0);
    colors_.assign(g.edge_count(), 0);
  }

  SolveOutcome run(std::vector<Color>* out) {
    for (VertexId y = 0; y < g_.y_count(); ++y) {
      if (g_.y_degree(y) > t_) return SolveOutcome::unsat;
    }
    for (VertexId x : order_) {
      if (g_.x_degree(x) > t_) return SolveOutcome::unsat;
    }
    if (place_vertex(0)) {
      if (out != nullptr) *out = colors_;
      return SolveOutcome::found;
    }
    return exhausted_ ? SolveOutcome::budget : SolveOutcome::unsat;
  }

 private:
  bool tick() {
    if (++stats_.nodes > budget_) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  bool y_free(VertexId y, Color c) const {
    return y_used_[static_cast<std::size_t>(y) * (t_ + 1) + c] == 0;
  }

  void set_y(VertexId y, Color c, std::uint8_t v) {
    y_used_[static_cast<std::size_t>(y) * (t_ + 1) + c] = v;
  }

  bool place_vertex(std::size_t idx) {
    if (idx == order_.size()) return true;
    const VertexId x = order_[idx];
    const std::uint32_t d = g_.x_degree(x);
    for (Color start = 1; start + d - 1 <= t_; ++start) {
      if (!tick()) return false;
      if (place_edges(idx, x, start, 0u)) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  // Colors the edges of x within {start .. start+d-1}. slot_mask tracks the
  // palette slots already taken at x; the next edge is the one with the
  // fewest feasible colors (fail first), ties by position.
  bool place_edges(std::size_t idx, VertexId x, Color start,
                   std::uint32_t slot_mask) {
    const auto& edges = x_inc_[x];
    const std::uint32_t d = static_cast<std::uint32_t>(edges.size());
    EdgeId pick = 0;
    std::uint32_t pick_options = UINT32_MAX;
    bool any_unassigned = false;
    for (EdgeId e : edges) {
      if (colors_[e] != 0) continue;
      any_unassigned = true;
      std::uint32_t options = 0;
      for (std::uint32_t s = 0; s < d; ++s) {
        if ((slot_mask >> s) & 1u) continue;
        if (y_free(g_.edge(e).y, start + s)) ++options;
      }
      if (options < pick_options) {
        pick_options = options;
        pick = e;
        if (options == 0) break;
      }
    }
    if (!any_unassigned) return place_vertex(idx + 1);
    if (pick_options == 0) return false;

    const VertexId y = g_.edge(pick).y;
    for (std::uint32_t s = 0; s < d; ++s) {
      if ((slot_mask >> s) & 1u) continue;
      const Color c = start + s;
      if (!y_free(y, c)) continue;
      if (!tick()) return false;
      colors_[pick] = c;
      set_y(y, c, 1);
      if (place_edges(idx, x, start, slot_mask | (1u << s))) return true;
      colors_[pick] = 0;
      set_y(y, c, 0);
      if (exhausted_) return false;
    }
    return false;
  }

  const BipartiteGraph& g_;
  std::uint32_t t_;
  std::uint64_t budget_;
  SolveStats& stats_;
  std::vector<std::vector<EdgeId>> x_inc_;
  std::vector<VertexId> order_;
  std::vector<std::uint8_t> y_used_;
  std::vector<Color> colors_;
  bool exhausted_ = false;
};

}  // namespace

SolveOutcome solve_x_interval(const BipartiteGraph& g, std::uint32_t t,
                              std::uint64_t node_budget, SolveStats& stats,
                              std::vector<Color>* out) {
  XIntervalSolver solver(g, t, node_budget, stats);
  return solver.run(out);
}

std::optional<ExactResult> exact_chi_int(const BipartiteGraph& g,
                                         std::uint32_t t_max) {
  std::uint64_t spent = 0;
  bool exhausted = false;
  return exact_chi_int_budgeted(g, t_max, UINT64_MAX, spent, exhausted);
}

std::optional<ExactResult> exact_chi_int_budgeted(const BipartiteGraph& g,
                                                  std::uint32_t t_max,
                                                  std::uint64_t node_budget,
                                                  std::uint64_t& nodes_spent,
                                                  bool& exhausted) {
  exhausted = false;
  nodes_spent = 0;
  if (g.edge_count() == 0) {
    return ExactResult{0, EdgeColoring{}};
  }
  const std::uint32_t delta = g.max_degree();
  if (t_max < delta) {
    throw Error(ErrorCode::invalid_argument,
                "t_max " + std::to_string(t_max) +
                    " is below the trivial lower bound " +
                    std::to_string(delta));
  }
  // any X-interval coloring is proper, so no t below max_degree can work
  for (std::uint32_t t = delta; t <= t_max; ++t) {
    const std::uint64_t remaining =
        node_budget == UINT64_MAX ? UINT64_MAX : node_budget - nodes_spent;
    SolveStats stats;
    std::vector<Color> colors;
    const SolveOutcome outcome =
        solve_x_interval(g, t, remaining, stats, &colors);
    nodes_spent += stats.nodes;
    if (outcome == SolveOutcome::budget) {
      exhausted = true;
      return std::nullopt;
    }
    if (outcome == SolveOutcome::found) {
      return ExactResult{t, make_coloring(std::move(colors))};
    }
  }
  return std::nullopt;
}

double SearchReport::max_ratio() const {
  if (!witness.has_value() || witness->delta == 0) return 0.0;
  return static_cast<double>(witness->chi) /
         (static_cast<double>(witness->delta) * witness->delta);
}

namespace {

bool is_acyclic(const BipartiteGraph& g) {
  const VertexId n = g.x_count() + g.y_count();
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : g.edges()) {
    const VertexId a = find(e.x);
    const VertexId b = find(g.x_count() + e.y);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

class StreamSource {
 public:
  StreamSource(const GeneratorSpec& spec)
      : spec_(spec),
        enumerator_(spec.mode == GeneratorSpec::Mode::enumerate_all
                        ? std::optional<BipartiteEnumerator>(
                              BipartiteEnumerator(spec.n_x, spec.n_y,
                                                  spec.max_edges))
                        : std::nullopt) {}

  void skip(std::uint64_t n) {
    for (std::uint64_t i = 0; i < n; ++i) next();
  }

  std::optional<BipartiteGraph> next() {
    if (spec_.mode == GeneratorSpec::Mode::enumerate_all) {
      return enumerator_->next();
    }
    if (index_ >= spec_.count) return std::nullopt;
    const std::uint64_t seed = mix_seed(spec_.seed, index_);
    ++index_;
    return random_bipartite(spec_.n_x, spec_.n_y, spec_.max_degree,
                            spec_.density, seed);
  }

 private:
  GeneratorSpec spec_;
  std::optional<BipartiteEnumerator> enumerator_;
  std::uint64_t index_ = 0;
};

// strict comparison of chi_a/delta_a^2 > chi_b/delta_b^2 in exact arithmetic
bool ratio_greater(std::uint32_t chi_a, std::uint32_t delta_a,
                   std::uint32_t chi_b, std::uint32_t delta_b) {
  const std::uint64_t lhs = static_cast<std::uint64_t>(chi_a) * delta_b * delta_b;
  const std::uint64_t rhs = static_cast<std::uint64_t>(chi_b) * delta_a * delta_a;
  return lhs > rhs;
}

}  // namespace

SearchReport extremal_search(const GeneratorSpec& spec,
                             std::uint64_t node_budget,
                             std::optional<SearchReport> resume) {
  SearchReport report = resume.value_or(SearchReport{});
  report.completed = false;

  StreamSource source(spec);
  source.skip(report.position);

  // node_budget limits this invocation; report.budget_spent accumulates
  // across resumed runs
  std::uint64_t run_spent = 0;
  while (true) {
    std::optional<BipartiteGraph> g = source.next();
    if (!g.has_value()) {
      report.completed = true;
      return report;
    }
    if (spec.acyclic_only && !is_acyclic(*g)) {
      ++report.position;
      continue;
    }
    const std::uint32_t delta = g->max_degree();
    const std::uint32_t t_max = std::max(guarantee_general(delta), 1u);
    const std::uint64_t remaining =
        node_budget > run_spent ? node_budget - run_spent : 0;
    std::uint64_t spent = 0;
    bool exhausted = false;
    std::optional<ExactResult> result =
        exact_chi_int_budgeted(*g, t_max, remaining, spent, exhausted);
    run_spent += spent;
    report.budget_spent += spent;
    if (exhausted) {
      return report;  // position still points at this graph; resume redoes it
    }
    if (!result.has_value()) {
      throw Error(ErrorCode::internal_error,
                  "no X-interval coloring within the guaranteed bound");
    }
    ++report.graphs_examined;
    ++report.position;
    if (delta > 0) {
      if (!report.witness.has_value() ||
          ratio_greater(result->chi, delta, report.witness->chi,
                        report.witness->delta)) {
        report.witness =
            SearchWitness{*g, result->coloring, result->chi, delta};
      }
    }
  }
}

}  // namespace xic
