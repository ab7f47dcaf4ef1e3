#include "xicolor/xicolor.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "core/degree_six.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/interval.hpp"
#include "core/io.hpp"
#include "core/konig.hpp"
#include "core/oracle.hpp"
#include "core/palette.hpp"

struct xic_graph {
  xic::BipartiteGraph g;
};
struct xic_coloring {
  xic::EdgeColoring c;
};
struct xic_verify_report {
  xic::VerificationReport r;
};
struct xic_decomposition {
  xic::Decomposition d;
};
struct xic_enumerator {
  xic::BipartiteEnumerator e;
};

namespace {

thread_local std::string g_last_error;

xic_status status_of(const xic::Error& err) {
  using xic::ErrorCode;
  switch (err.code()) {
    case ErrorCode::invalid_argument: return XIC_ERR_INVALID_ARGUMENT;
    case ErrorCode::index_out_of_range: return XIC_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::duplicate_edge: return XIC_ERR_DUPLICATE_EDGE;
    case ErrorCode::length_mismatch: return XIC_ERR_LENGTH_MISMATCH;
    case ErrorCode::precondition_violated: return XIC_ERR_PRECONDITION;
    case ErrorCode::not_proper: return XIC_ERR_NOT_PROPER;
    case ErrorCode::infeasible_degrees: return XIC_ERR_INFEASIBLE_DEGREES;
    case ErrorCode::parse_error: return XIC_ERR_PARSE;
    case ErrorCode::budget_exhausted: return XIC_ERR_BUDGET_EXHAUSTED;
    case ErrorCode::io_error: return XIC_ERR_IO;
    case ErrorCode::internal_error: return XIC_ERR_INTERNAL;
  }
  return XIC_ERR_INTERNAL;
}

xic_status fail(xic_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
xic_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const xic::Error& err) {
    return fail(status_of(err), err.what());
  } catch (const std::bad_alloc&) {
    return fail(XIC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& ex) {
    return fail(XIC_ERR_INTERNAL, ex.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

xic::ColorResult run_method(const xic::BipartiteGraph& g, xic_method method,
                            std::uint64_t budget);

// smallest applicable a-priori guarantee; ties break in enum order
xic_method pick_auto(const xic::BipartiteGraph& g) {
  const std::uint32_t delta = g.max_degree();
  const bool simple = !g.has_parallel_edges();
  bool uniform_x = true;
  for (xic::VertexId x = 0; x < g.x_count(); ++x) {
    uniform_x = uniform_x && g.x_degree(x) == g.x_degree(0);
  }
  bool restricted_ok = delta <= 6;
  for (xic::VertexId x = 0; x < g.x_count() && restricted_ok; ++x) {
    restricted_ok = g.x_degree(x) != 3;
  }

  xic_method best = XIC_METHOD_MULTIGRAPH;
  std::uint64_t best_bound = xic::guarantee_multigraph(delta);
  auto consider = [&](xic_method m, std::uint64_t bound) {
    if (bound < best_bound || (bound == best_bound && m < best)) {
      best = m;
      best_bound = bound;
    }
  };
  if (simple && uniform_x && g.x_count() > 0) {
    consider(XIC_METHOD_BIREGULAR,
             xic::guarantee_biregular(g.x_degree(0), delta));
  }
  if (simple) consider(XIC_METHOD_GENERAL, xic::guarantee_general(delta));
  if (restricted_ok) consider(XIC_METHOD_DELTA6_RESTRICTED, 10);
  if (delta <= 6) consider(XIC_METHOD_DELTA6, 17);
  if (g.edge_count() > 0) {
    const auto konig = xic::konig_edge_color(g);
    const auto groups = xic::x_palettes(g, konig);
    consider(XIC_METHOD_PALETTE, static_cast<std::uint64_t>(g.max_x_degree()) *
                                     groups.size());
  }
  return best;
}

xic::ColorResult run_method(const xic::BipartiteGraph& g, xic_method method,
                            std::uint64_t budget) {
  switch (method) {
    case XIC_METHOD_BIREGULAR:
      return xic::interval_color_biregular(g);
    case XIC_METHOD_GENERAL:
      return xic::interval_color_general(g);
    case XIC_METHOD_MULTIGRAPH:
      return xic::interval_color_multigraph(g);
    case XIC_METHOD_DELTA6_RESTRICTED:
      return xic::interval_color_deg6_restricted(g);
    case XIC_METHOD_DELTA6:
      return xic::interval_color_delta6(
          g, budget == 0 ? xic::kDefaultSearchBudget : budget);
    case XIC_METHOD_PALETTE:
      return xic::interval_from_palettes(g, xic::konig_edge_color(g));
    case XIC_METHOD_AUTO:
      return run_method(g, pick_auto(g), budget);
  }
  throw xic::Error(xic::ErrorCode::invalid_argument, "unknown method");
}

xic_method method_enum(xic::Method m) {
  switch (m) {
    case xic::Method::biregular: return XIC_METHOD_BIREGULAR;
    case xic::Method::general: return XIC_METHOD_GENERAL;
    case xic::Method::multigraph: return XIC_METHOD_MULTIGRAPH;
    case xic::Method::delta6_restricted: return XIC_METHOD_DELTA6_RESTRICTED;
    case xic::Method::delta6: return XIC_METHOD_DELTA6;
    case xic::Method::palette: return XIC_METHOD_PALETTE;
  }
  return XIC_METHOD_GENERAL;
}

}  // namespace

extern "C" {

const char* xic_status_name(xic_status status) {
  switch (status) {
    case XIC_OK: return "ok";
    case XIC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case XIC_ERR_INDEX_OUT_OF_RANGE: return "index_out_of_range";
    case XIC_ERR_DUPLICATE_EDGE: return "duplicate_edge";
    case XIC_ERR_LENGTH_MISMATCH: return "length_mismatch";
    case XIC_ERR_PRECONDITION: return "precondition_violated";
    case XIC_ERR_NOT_PROPER: return "not_proper";
    case XIC_ERR_INFEASIBLE_DEGREES: return "infeasible_degrees";
    case XIC_ERR_PARSE: return "parse_error";
    case XIC_ERR_NOT_FOUND: return "not_found";
    case XIC_ERR_BUDGET_EXHAUSTED: return "budget_exhausted";
    case XIC_ERR_IO: return "io_error";
    case XIC_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* xic_last_error(void) { return g_last_error.c_str(); }

void xic_graph_free(xic_graph* g) { delete g; }
void xic_coloring_free(xic_coloring* c) { delete c; }
void xic_verify_report_free(xic_verify_report* r) { delete r; }
void xic_decomposition_free(xic_decomposition* d) { delete d; }
void xic_enumerator_free(xic_enumerator* e) { delete e; }
void xic_string_free(char* s) { delete[] s; }

xic_status xic_graph_create(uint32_t x_count, uint32_t y_count,
                            const uint32_t* edge_x, const uint32_t* edge_y,
                            size_t edge_count, int allow_multi,
                            xic_graph** out) {
  if (out == nullptr || (edge_count > 0 && (edge_x == nullptr || edge_y == nullptr))) {
    return fail(XIC_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    std::vector<xic::Edge> edges(edge_count);
    for (size_t i = 0; i < edge_count; ++i) {
      edges[i] = xic::Edge{edge_x[i], edge_y[i]};
    }
    *out = new xic_graph{
        xic::BipartiteGraph(x_count, y_count, std::move(edges),
                            allow_multi != 0)};
    return XIC_OK;
  });
}

uint32_t xic_graph_x_count(const xic_graph* g) { return g->g.x_count(); }
uint32_t xic_graph_y_count(const xic_graph* g) { return g->g.y_count(); }
size_t xic_graph_edge_count(const xic_graph* g) { return g->g.edge_count(); }

xic_status xic_graph_edge(const xic_graph* g, size_t index, uint32_t* x,
                          uint32_t* y) {
  if (g == nullptr || x == nullptr || y == nullptr) {
    return fail(XIC_ERR_INVALID_ARGUMENT, "null argument");
  }
  if (index >= g->g.edge_count()) {
    return fail(XIC_ERR_INDEX_OUT_OF_RANGE, "edge index out of range");
  }
  *x = g->g.edge(static_cast<xic::EdgeId>(index)).x;
  *y = g->g.edge(static_cast<xic::EdgeId>(index)).y;
  return XIC_OK;
}

int xic_graph_is_multi(const xic_graph* g) { return g->g.allow_multi() ? 1 : 0; }
uint32_t xic_graph_x_degree(const xic_graph* g, uint32_t x) {
  return x < g->g.x_count() ? g->g.x_degree(x) : 0;
}
uint32_t xic_graph_y_degree(const xic_graph* g, uint32_t y) {
  return y < g->g.y_count() ? g->g.y_degree(y) : 0;
}
uint32_t xic_graph_max_degree(const xic_graph* g) { return g->g.max_degree(); }
uint32_t xic_graph_max_x_degree(const xic_graph* g) {
  return g->g.max_x_degree();
}

xic_status xic_graph_parse(const char* text, xic_graph** out) {
  if (text == nullptr || out == nullptr) {
    return fail(XIC_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = new xic_graph{xic::parse_graph(text)};
    return XIC_OK;
  });
}

xic_status xic_graph_emit(const xic_graph* g, char** out_text) {
  if (g == nullptr || out_text == nullptr) {
    return fail(XIC_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out_text = copy_string(xic::emit_graph(g->g));
    return XIC_OK;
  });
}

xic_status xic_graph_emit_dot(const xic_graph* g, const xic_coloring* coloring,
                              char** out_text) {
  if (g == nullptr || out_text == nullptr) {
    return fail(XIC_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out_text = copy_string(
        xic::emit_dot(g->g, coloring == nullptr ? nullptr : &coloring->c));
    return XIC_OK;
  });
}

xic_status xic_coloring_create(const uint32_t* colors, size_t count,
                               xic_coloring** out) {
  if (out == nullptr || (count > 0 && colors == nullptr)) {
    return fail(XIC_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    std::vector<xic::Color> values(colors, colors + count);
    *out = new xic_coloring{xic::make_coloring(std::move(values))};
    return XIC_OK;
  });
}

size_t xic_coloring_size(const xic_coloring* c) { return c->c.colors.size(); }
uint32_t xic_coloring_at(const xic_coloring* c, size_t index) {
  return index < c->c.colors.size() ? c->c.colors[index] : 0;
}
uint32_t xic_coloring_max_color(const xic_coloring* c) {
  return c->c.max_color;
}

xic_status xic_coloring_parse(const char* text, xic_coloring** out) {
  if (text == nullptr || out == nullptr) {
    return fail(XIC_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = new xic_coloring{xic::parse_coloring(text)};
    return XIC_OK;
  });
}

xic_status xic_coloring_emit(const xic_coloring* c, char** out_text) {
  if (c == nullptr || out_text == nullptr) {
    return fail(XIC_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out_text = copy_string(xic::emit_coloring(c->c));
    return XIC_OK;
  });
}

xic_status xic_verify(const xic_graph* g, const xic_coloring* c,
                      xic_verify_report** out) {
  if (g == nullptr || c == nullptr || out == nullptr) {
    return fail(XIC_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = new xic_verify_report{xic::verify_coloring(g->g, c->c)};
    return XIC_OK;
  });
}

int xic_verify_report_proper(const xic_verify_report* r) {
  return r->r.proper ? 1 : 0;
}
int xic_verify_report_interval_at_x(const xic_verify_report* r) {
  return r->r.interval_at_x ? 1 : 0;
}
size_t xic_verify_report_vertex_count(const xic_verify_report* r) {
  return r->r.violating_vertices.size();
}
uint32_t xic_verify_report_vertex_at(const xic_verify_report* r, size_t i) {
  return i < r->r.violating_vertices.size() ? r->r.violating_vertices[i] : 0;
}
size_t xic_verify_report_pair_count(const xic_verify_report* r) {
  return r->r.violating_edge_pairs.size();
}
xic_status xic_verify_report_pair_at(const xic_verify_report* r, size_t i,
                                     uint32_t* edge_a, uint32_t* edge_b) {
  if (r == nullptr || edge_a == nullptr || edge_b == nullptr) {
    return fail(XIC_ERR_INVALID_ARGUMENT, "null argument");
  }
  if (i >= r->r.violating_edge_pairs.size()) {
    return fail(XIC_ERR_INDEX_OUT_OF_RANGE, "pair index out of range");
  }
  *edge_a = r->r.violating_edge_pairs[i].first;
  *edge_b = r->r.violating_edge_pairs[i].second;
  return XIC_OK;
}

const char* xic_method_name(xic_method method) {
  switch (method) {
    case XIC_METHOD_BIREGULAR: return "biregular";
    case XIC_METHOD_GENERAL: return "general";
    case XIC_METHOD_MULTIGRAPH: return "multigraph";
    case XIC_METHOD_DELTA6_RESTRICTED: return "delta6_restricted";
    case XIC_METHOD_DELTA6: return "delta6";
    case XIC_METHOD_PALETTE: return "palette";
    case XIC_METHOD_AUTO: return "auto";
  }
  return "unknown";
}

xic_status xic_color(const xic_graph* g, xic_method method,
                     uint64_t search_budget, xic_coloring** out,
                     xic_certificate* cert) {
  if (g == nullptr || out == nullptr) {
    return fail(XIC_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    xic::ColorResult result = run_method(g->g, method, search_budget);
    if (cert != nullptr) {
      cert->method = method_enum(result.certificate.method);
      cert->guaranteed_bound = result.certificate.guaranteed_bound;
      cert->colors_used = result.certificate.colors_used;
      cert->verified = result.certificate.verified ? 1 : 0;
      cert->fallback = result.fallback ? 1 : 0;
    }
    *out = new xic_coloring{std::move(result.coloring)};
    return XIC_OK;
  });
}

xic_status xic_decompose(const xic_graph* g, uint32_t a, uint32_t b,
                         xic_decomposition** out) {
  if (g == nullptr || out == nullptr) {
    return fail(XIC_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = new xic_decomposition{xic::biregular_decompose(g->g, a, b)};
    return XIC_OK;
  });
}

size_t xic_decomposition_part_count(const xic_decomposition* d) {
  return d->d.parts.size();
}
size_t xic_decomposition_part_size(const xic_decomposition* d, size_t part) {
  return part < d->d.parts.size() ? d->d.parts[part].size() : 0;
}
xic_status xic_decomposition_part_edge(const xic_decomposition* d, size_t part,
                                       size_t index, uint32_t* edge) {
  if (d == nullptr || edge == nullptr) {
    return fail(XIC_ERR_INVALID_ARGUMENT, "null argument");
  }
  if (part >= d->d.parts.size() || index >= d->d.parts[part].size()) {
    return fail(XIC_ERR_INDEX_OUT_OF_RANGE, "part edge index out of range");
  }
  *edge = d->d.parts[part][index];
  return XIC_OK;
}
int32_t xic_decomposition_x_part(const xic_decomposition* d, uint32_t x) {
  return x < d->d.x_assignment.size() ? d->d.x_assignment[x] : -1;
}

xic_status xic_exact_chi_int(const xic_graph* g, uint32_t t_max, uint32_t* chi,
                             xic_coloring** witness) {
  if (g == nullptr || chi == nullptr) {
    return fail(XIC_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const uint32_t bound =
        t_max == 0 ? std::max(xic::guarantee_general(g->g.max_degree()), 1u)
                   : t_max;
    std::optional<xic::ExactResult> result = xic::exact_chi_int(g->g, bound);
    if (!result.has_value()) {
      return fail(XIC_ERR_NOT_FOUND,
                  "no X-interval coloring with at most " +
                      std::to_string(bound) + " colors");
    }
    *chi = result->chi;
    if (witness != nullptr) {
      *witness = new xic_coloring{std::move(result->coloring)};
    }
    return XIC_OK;
  });
}

xic_status xic_gen_complete(uint32_t m, uint32_t n, xic_graph** out) {
  if (out == nullptr) return fail(XIC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new xic_graph{xic::complete_bipartite(m, n)};
    return XIC_OK;
  });
}

xic_status xic_gen_biregular(uint32_t a, uint32_t b, uint32_t n_x,
                             uint64_t seed, xic_graph** out) {
  if (out == nullptr) return fail(XIC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::optional<xic::BipartiteGraph> g =
        xic::random_biregular(a, b, n_x, seed);
    if (!g.has_value()) {
      return fail(XIC_ERR_NOT_FOUND,
                  "no simple realization found within the retry limit");
    }
    *out = new xic_graph{std::move(*g)};
    return XIC_OK;
  });
}

xic_status xic_gen_random(uint32_t n_x, uint32_t n_y, uint32_t max_degree,
                          double density, uint64_t seed, xic_graph** out) {
  if (out == nullptr) return fail(XIC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new xic_graph{
        xic::random_bipartite(n_x, n_y, max_degree, density, seed)};
    return XIC_OK;
  });
}

xic_status xic_enumerator_create(uint32_t n_x, uint32_t n_y,
                                 uint32_t max_edges, xic_enumerator** out) {
  if (out == nullptr) return fail(XIC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new xic_enumerator{xic::BipartiteEnumerator(n_x, n_y, max_edges)};
    return XIC_OK;
  });
}

xic_status xic_enumerator_next(xic_enumerator* e, xic_graph** out) {
  if (e == nullptr || out == nullptr) {
    return fail(XIC_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    std::optional<xic::BipartiteGraph> g = e->e.next();
    if (!g.has_value()) {
      return fail(XIC_ERR_NOT_FOUND, "end of enumeration");
    }
    *out = new xic_graph{std::move(*g)};
    return XIC_OK;
  });
}

xic_status xic_extremal_search(const xic_search_params* params,
                               const char* frontier_in, uint64_t node_budget,
                               xic_search_report* report,
                               xic_graph** witness_graph,
                               xic_coloring** witness_coloring,
                               char** frontier_out) {
  if (report == nullptr || (params == nullptr && frontier_in == nullptr)) {
    return fail(XIC_ERR_INVALID_ARGUMENT,
                "need generator parameters or a frontier to resume");
  }
  return guarded([&] {
    xic::GeneratorSpec spec;
    std::optional<xic::SearchReport> resume;
    if (frontier_in != nullptr) {
      xic::Frontier f = xic::parse_frontier(frontier_in);
      spec = f.spec;
      resume = std::move(f.report);
    } else {
      spec.mode = params->random_mode != 0
                      ? xic::GeneratorSpec::Mode::random
                      : xic::GeneratorSpec::Mode::enumerate_all;
      spec.n_x = params->n_x;
      spec.n_y = params->n_y;
      spec.max_edges = params->max_edges;
      spec.max_degree = params->max_degree;
      spec.density = params->density;
      spec.seed = params->seed;
      spec.count = params->count;
      spec.acyclic_only = params->acyclic_only != 0;
    }
    xic::SearchReport result =
        xic::extremal_search(spec, node_budget, std::move(resume));

    report->graphs_examined = result.graphs_examined;
    report->budget_spent = result.budget_spent;
    report->position = result.position;
    report->completed = result.completed ? 1 : 0;
    report->has_witness = result.witness.has_value() ? 1 : 0;
    report->witness_chi = result.witness ? result.witness->chi : 0;
    report->witness_delta = result.witness ? result.witness->delta : 0;
    report->max_ratio = result.max_ratio();
    if (frontier_out != nullptr) {
      *frontier_out = copy_string(xic::emit_frontier(spec, result));
    }
    if (witness_graph != nullptr && result.witness.has_value()) {
      *witness_graph = new xic_graph{result.witness->graph};
    }
    if (witness_coloring != nullptr && result.witness.has_value()) {
      *witness_coloring = new xic_coloring{result.witness->coloring};
    }
    if (!result.completed) {
      return fail(XIC_ERR_BUDGET_EXHAUSTED,
                  "node budget exhausted; resume from the frontier");
    }
    return XIC_OK;
  });
}

const char* xic_version(void) { return "1.0.0"; }

}  // extern "C"
