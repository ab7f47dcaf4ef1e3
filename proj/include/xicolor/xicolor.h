/* xicolor - one-sided interval edge colorings of bipartite graphs.
 *
 * C API over the C++ core: opaque handles, status codes, caller-owned
 * strings released with xic_string_free. All functions returning xic_status
 * leave their outputs untouched on failure; a human-readable detail for the
 * last failure on the calling thread is available via xic_last_error().
 */
#ifndef XICOLOR_XICOLOR_H
#define XICOLOR_XICOLOR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum xic_status {
  XIC_OK = 0,
  XIC_ERR_INVALID_ARGUMENT = 1,
  XIC_ERR_INDEX_OUT_OF_RANGE = 2,
  XIC_ERR_DUPLICATE_EDGE = 3,
  XIC_ERR_LENGTH_MISMATCH = 4,
  XIC_ERR_PRECONDITION = 5,
  XIC_ERR_NOT_PROPER = 6,
  XIC_ERR_INFEASIBLE_DEGREES = 7,
  XIC_ERR_PARSE = 8,
  XIC_ERR_NOT_FOUND = 9, /* a requested object does not exist (not a fault) */
  XIC_ERR_BUDGET_EXHAUSTED = 10,
  XIC_ERR_IO = 11,
  XIC_ERR_INTERNAL = 12
} xic_status;

const char* xic_status_name(xic_status status);
const char* xic_last_error(void);

typedef struct xic_graph xic_graph;
typedef struct xic_coloring xic_coloring;
typedef struct xic_verify_report xic_verify_report;
typedef struct xic_decomposition xic_decomposition;
typedef struct xic_enumerator xic_enumerator;

void xic_graph_free(xic_graph* g);
void xic_coloring_free(xic_coloring* c);
void xic_verify_report_free(xic_verify_report* r);
void xic_decomposition_free(xic_decomposition* d);
void xic_enumerator_free(xic_enumerator* e);
void xic_string_free(char* s);

/* ---- graphs ---- */

xic_status xic_graph_create(uint32_t x_count, uint32_t y_count,
                            const uint32_t* edge_x, const uint32_t* edge_y,
                            size_t edge_count, int allow_multi,
                            xic_graph** out);
uint32_t xic_graph_x_count(const xic_graph* g);
uint32_t xic_graph_y_count(const xic_graph* g);
size_t xic_graph_edge_count(const xic_graph* g);
xic_status xic_graph_edge(const xic_graph* g, size_t index, uint32_t* x,
                          uint32_t* y);
int xic_graph_is_multi(const xic_graph* g);
uint32_t xic_graph_x_degree(const xic_graph* g, uint32_t x);
uint32_t xic_graph_y_degree(const xic_graph* g, uint32_t y);
uint32_t xic_graph_max_degree(const xic_graph* g);
uint32_t xic_graph_max_x_degree(const xic_graph* g);

xic_status xic_graph_parse(const char* text, xic_graph** out);
xic_status xic_graph_emit(const xic_graph* g, char** out_text);
/* coloring may be NULL for an unstyled drawing */
xic_status xic_graph_emit_dot(const xic_graph* g, const xic_coloring* coloring,
                              char** out_text);

/* ---- colorings ---- */

xic_status xic_coloring_create(const uint32_t* colors, size_t count,
                               xic_coloring** out);
size_t xic_coloring_size(const xic_coloring* c);
uint32_t xic_coloring_at(const xic_coloring* c, size_t index);
uint32_t xic_coloring_max_color(const xic_coloring* c);
xic_status xic_coloring_parse(const char* text, xic_coloring** out);
xic_status xic_coloring_emit(const xic_coloring* c, char** out_text);

/* ---- verification ---- */

xic_status xic_verify(const xic_graph* g, const xic_coloring* c,
                      xic_verify_report** out);
int xic_verify_report_proper(const xic_verify_report* r);
int xic_verify_report_interval_at_x(const xic_verify_report* r);
size_t xic_verify_report_vertex_count(const xic_verify_report* r);
uint32_t xic_verify_report_vertex_at(const xic_verify_report* r, size_t i);
size_t xic_verify_report_pair_count(const xic_verify_report* r);
xic_status xic_verify_report_pair_at(const xic_verify_report* r, size_t i,
                                     uint32_t* edge_a, uint32_t* edge_b);

/* ---- certified coloring methods ---- */

typedef enum xic_method {
  XIC_METHOD_BIREGULAR = 0,
  XIC_METHOD_GENERAL = 1,
  XIC_METHOD_MULTIGRAPH = 2,
  XIC_METHOD_DELTA6_RESTRICTED = 3,
  XIC_METHOD_DELTA6 = 4,
  XIC_METHOD_PALETTE = 5,
  XIC_METHOD_AUTO = 6 /* smallest applicable guarantee wins */
} xic_method;

const char* xic_method_name(xic_method method);

typedef struct xic_certificate {
  xic_method method;
  uint32_t guaranteed_bound;
  uint32_t colors_used;
  int verified;
  int fallback; /* delta6 only: the 7-color search gave up */
} xic_certificate;

/* search_budget applies to the delta6 pipeline; 0 picks the built-in
 * default. */
xic_status xic_color(const xic_graph* g, xic_method method,
                     uint64_t search_budget, xic_coloring** out,
                     xic_certificate* cert);

/* ---- decomposition ---- */

xic_status xic_decompose(const xic_graph* g, uint32_t a, uint32_t b,
                         xic_decomposition** out);
size_t xic_decomposition_part_count(const xic_decomposition* d);
size_t xic_decomposition_part_size(const xic_decomposition* d, size_t part);
xic_status xic_decomposition_part_edge(const xic_decomposition* d, size_t part,
                                       size_t index, uint32_t* edge);
/* part of an X vertex, or -1 when it has no edges */
int32_t xic_decomposition_x_part(const xic_decomposition* d, uint32_t x);

/* ---- exact oracle ---- */

/* t_max = 0 selects the certified general upper bound. Returns
 * XIC_ERR_NOT_FOUND when no X-interval coloring with at most t_max colors
 * exists. witness may be NULL. */
xic_status xic_exact_chi_int(const xic_graph* g, uint32_t t_max, uint32_t* chi,
                             xic_coloring** witness);

/* ---- generators ---- */

xic_status xic_gen_complete(uint32_t m, uint32_t n, xic_graph** out);
/* XIC_ERR_INFEASIBLE_DEGREES when b does not divide a*n_x;
 * XIC_ERR_NOT_FOUND when resampling cannot reach a simple graph. */
xic_status xic_gen_biregular(uint32_t a, uint32_t b, uint32_t n_x,
                             uint64_t seed, xic_graph** out);
xic_status xic_gen_random(uint32_t n_x, uint32_t n_y, uint32_t max_degree,
                          double density, uint64_t seed, xic_graph** out);

xic_status xic_enumerator_create(uint32_t n_x, uint32_t n_y,
                                 uint32_t max_edges, xic_enumerator** out);
/* XIC_ERR_NOT_FOUND at the end of the stream */
xic_status xic_enumerator_next(xic_enumerator* e, xic_graph** out);

/* ---- extremal search ---- */

typedef struct xic_search_params {
  int random_mode; /* 0: enumerate all graphs up to the caps; 1: random */
  uint32_t n_x;
  uint32_t n_y;
  uint32_t max_edges;  /* enumerate mode */
  uint32_t max_degree; /* random mode */
  double density;      /* random mode */
  uint64_t seed;       /* random mode */
  uint64_t count;      /* random mode: number of graphs */
  int acyclic_only;
} xic_search_params;

typedef struct xic_search_report {
  uint64_t graphs_examined;
  uint64_t budget_spent;
  uint64_t position;
  int completed;
  int has_witness;
  uint32_t witness_chi;
  uint32_t witness_delta;
  double max_ratio; /* witness_chi / witness_delta^2 */
} xic_search_report;

/* Runs (or resumes, when frontier_in is non-NULL) an extremal search for
 * large chi'_int(G,X) / max_degree^2 ratios. On XIC_ERR_BUDGET_EXHAUSTED the
 * outputs are still filled and frontier_out can seed a later resume. params
 * may be NULL when frontier_in carries the generator description. witness_*
 * and frontier_out may be NULL. */
xic_status xic_extremal_search(const xic_search_params* params,
                               const char* frontier_in, uint64_t node_budget,
                               xic_search_report* report,
                               xic_graph** witness_graph,
                               xic_coloring** witness_coloring,
                               char** frontier_out);

const char* xic_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* XICOLOR_XICOLOR_H */
