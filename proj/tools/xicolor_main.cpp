// Command-line front end. Everything goes through the public C API.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xicolor/xicolor.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

int exit_code_for(xic_status status) {
  switch (status) {
    case XIC_OK:
      return kExitOk;
    case XIC_ERR_PRECONDITION:
    case XIC_ERR_INFEASIBLE_DEGREES:
      return kExitPrecondition;
    default:
      return kExitUsage;
  }
}

int report_failure(xic_status status) {
  std::cerr << "error: " << xic_status_name(status) << ": " << xic_last_error()
            << "\n";
  return exit_code_for(status);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return out.good();
}

struct GraphHandle {
  xic_graph* g = nullptr;
  ~GraphHandle() { xic_graph_free(g); }
};

struct ColoringHandle {
  xic_coloring* c = nullptr;
  ~ColoringHandle() { xic_coloring_free(c); }
};

struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { xic_string_free(s); }
};

int load_graph(const std::string& path, GraphHandle& handle) {
  const auto text = read_file(path);
  if (!text.has_value()) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return kExitUsage;
  }
  const xic_status status = xic_graph_parse(text->c_str(), &handle.g);
  if (status != XIC_OK) return report_failure(status);
  return kExitOk;
}

int load_coloring(const std::string& path, ColoringHandle& handle) {
  const auto text = read_file(path);
  if (!text.has_value()) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return kExitUsage;
  }
  const xic_status status = xic_coloring_parse(text->c_str(), &handle.c);
  if (status != XIC_OK) return report_failure(status);
  return kExitOk;
}

int emit_graph_output(xic_graph* g, const std::string& out_path,
                      const std::string& dot_path) {
  {
    StringHandle text;
    const xic_status status = xic_graph_emit(g, &text.s);
    if (status != XIC_OK) return report_failure(status);
    if (!write_output(out_path, text.s)) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
  }
  if (!dot_path.empty()) {
    StringHandle dot;
    const xic_status status = xic_graph_emit_dot(g, nullptr, &dot.s);
    if (status != XIC_OK) return report_failure(status);
    if (!write_output(dot_path, dot.s)) {
      std::cerr << "error: cannot write '" << dot_path << "'\n";
      return kExitUsage;
    }
  }
  return kExitOk;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("XICOLOR_SEARCH_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 0;  // 0 lets the library pick its default
}

struct GenOptions {
  std::string kind;
  std::uint32_t m = 1, n = 1;
  std::uint32_t a = 1, b = 1, nx = 1, ny = 1;
  std::uint32_t max_degree = 3, max_edges = 3;
  double density = 0.5;
  std::uint64_t seed = 1;
  std::uint64_t limit = 0;
  std::string out, dot;
};

int run_gen(const GenOptions& opt) {
  if (opt.kind == "enumerate") {
    xic_enumerator* en = nullptr;
    xic_status status =
        xic_enumerator_create(opt.nx, opt.ny, opt.max_edges, &en);
    if (status != XIC_OK) return report_failure(status);
    std::ostringstream all;
    std::uint64_t emitted = 0;
    while (opt.limit == 0 || emitted < opt.limit) {
      GraphHandle g;
      status = xic_enumerator_next(en, &g.g);
      if (status == XIC_ERR_NOT_FOUND) break;
      if (status != XIC_OK) {
        xic_enumerator_free(en);
        return report_failure(status);
      }
      StringHandle text;
      status = xic_graph_emit(g.g, &text.s);
      if (status != XIC_OK) {
        xic_enumerator_free(en);
        return report_failure(status);
      }
      if (emitted > 0) all << "\n";
      all << text.s;
      ++emitted;
    }
    xic_enumerator_free(en);
    if (!write_output(opt.out, all.str())) {
      std::cerr << "error: cannot write '" << opt.out << "'\n";
      return kExitUsage;
    }
    std::cerr << "enumerated " << emitted << " graphs\n";
    return kExitOk;
  }

  GraphHandle g;
  xic_status status = XIC_ERR_INVALID_ARGUMENT;
  if (opt.kind == "complete") {
    status = xic_gen_complete(opt.m, opt.n, &g.g);
  } else if (opt.kind == "biregular") {
    status = xic_gen_biregular(opt.a, opt.b, opt.nx, opt.seed, &g.g);
  } else if (opt.kind == "random") {
    status = xic_gen_random(opt.nx, opt.ny, opt.max_degree, opt.density,
                            opt.seed, &g.g);
  } else {
    std::cerr << "error: unknown generator kind '" << opt.kind << "'\n";
    return kExitUsage;
  }
  if (status != XIC_OK) return report_failure(status);
  return emit_graph_output(g.g, opt.out, opt.dot);
}

std::optional<xic_method> method_from_name(const std::string& name) {
  if (name == "auto") return XIC_METHOD_AUTO;
  if (name == "biregular") return XIC_METHOD_BIREGULAR;
  if (name == "general") return XIC_METHOD_GENERAL;
  if (name == "multigraph") return XIC_METHOD_MULTIGRAPH;
  if (name == "delta6") return XIC_METHOD_DELTA6;
  if (name == "delta6_restricted") return XIC_METHOD_DELTA6_RESTRICTED;
  if (name == "palette") return XIC_METHOD_PALETTE;
  return std::nullopt;
}

void print_certificate(const xic_certificate& cert) {
  std::cout << "method " << xic_method_name(cert.method) << "\n";
  std::cout << "guaranteed_bound " << cert.guaranteed_bound << "\n";
  std::cout << "colors_used " << cert.colors_used << "\n";
  std::cout << "verified " << (cert.verified ? "true" : "false") << "\n";
  std::cout << "fallback " << (cert.fallback ? "true" : "false") << "\n";
}

int run_color(const std::string& in, const std::string& method_name,
              std::uint64_t budget, const std::string& out,
              const std::string& dot) {
  const auto method = method_from_name(method_name);
  if (!method.has_value()) {
    std::cerr << "error: unknown method '" << method_name << "'\n";
    return kExitUsage;
  }
  GraphHandle g;
  if (const int rc = load_graph(in, g); rc != kExitOk) return rc;

  ColoringHandle coloring;
  xic_certificate cert{};
  xic_status status = xic_color(g.g, *method, budget, &coloring.c, &cert);
  if (status != XIC_OK) return report_failure(status);
  print_certificate(cert);

  // independent re-check before claiming success
  xic_verify_report* report = nullptr;
  status = xic_verify(g.g, coloring.c, &report);
  if (status != XIC_OK) return report_failure(status);
  const bool ok = xic_verify_report_proper(report) != 0 &&
                  xic_verify_report_interval_at_x(report) != 0;
  xic_verify_report_free(report);
  if (!ok) {
    std::cerr << "error: produced coloring failed verification\n";
    return kExitVerificationFailure;
  }

  if (!out.empty()) {
    StringHandle text;
    status = xic_coloring_emit(coloring.c, &text.s);
    if (status != XIC_OK) return report_failure(status);
    if (!write_output(out, text.s)) {
      std::cerr << "error: cannot write '" << out << "'\n";
      return kExitUsage;
    }
  }
  if (!dot.empty()) {
    StringHandle text;
    status = xic_graph_emit_dot(g.g, coloring.c, &text.s);
    if (status != XIC_OK) return report_failure(status);
    if (!write_output(dot, text.s)) {
      std::cerr << "error: cannot write '" << dot << "'\n";
      return kExitUsage;
    }
  }
  return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& coloring_path,
               bool proper_only) {
  GraphHandle g;
  if (const int rc = load_graph(graph_path, g); rc != kExitOk) return rc;
  ColoringHandle c;
  if (const int rc = load_coloring(coloring_path, c); rc != kExitOk) return rc;

  xic_verify_report* report = nullptr;
  const xic_status status = xic_verify(g.g, c.c, &report);
  if (status != XIC_OK) return report_failure(status);

  const bool proper = xic_verify_report_proper(report) != 0;
  const bool interval = xic_verify_report_interval_at_x(report) != 0;
  std::cout << "proper " << (proper ? "true" : "false") << "\n";
  std::cout << "interval_at_x " << (interval ? "true" : "false") << "\n";
  const size_t pairs = xic_verify_report_pair_count(report);
  for (size_t i = 0; i < pairs; ++i) {
    uint32_t a = 0, b = 0;
    xic_verify_report_pair_at(report, i, &a, &b);
    std::cout << "clash " << a << " " << b << "\n";
  }
  const size_t vertices = xic_verify_report_vertex_count(report);
  for (size_t i = 0; i < vertices; ++i) {
    std::cout << "gap_at_x " << xic_verify_report_vertex_at(report, i) << "\n";
  }
  xic_verify_report_free(report);

  const bool ok = proper && (proper_only || interval);
  return ok ? kExitOk : kExitVerificationFailure;
}

int run_exact(const std::string& in, std::uint32_t t_max,
              const std::string& out) {
  GraphHandle g;
  if (const int rc = load_graph(in, g); rc != kExitOk) return rc;

  uint32_t chi = 0;
  ColoringHandle witness;
  const xic_status status = xic_exact_chi_int(g.g, t_max, &chi, &witness.c);
  if (status == XIC_ERR_NOT_FOUND) {
    std::cout << "chi_int none\n";
    return kExitOk;
  }
  if (status != XIC_OK) return report_failure(status);
  std::cout << "chi_int " << chi << "\n";
  if (!out.empty()) {
    StringHandle text;
    const xic_status emit_status = xic_coloring_emit(witness.c, &text.s);
    if (emit_status != XIC_OK) return report_failure(emit_status);
    if (!write_output(out, text.s)) {
      std::cerr << "error: cannot write '" << out << "'\n";
      return kExitUsage;
    }
  }
  return kExitOk;
}

int run_decompose(const std::string& in, std::uint32_t a, std::uint32_t b) {
  GraphHandle g;
  if (const int rc = load_graph(in, g); rc != kExitOk) return rc;

  if (a == 0) {
    // infer the uniform X-degree
    const uint32_t nx = xic_graph_x_count(g.g);
    a = nx > 0 ? xic_graph_x_degree(g.g, 0) : 0;
  }
  if (b == 0) {
    for (uint32_t y = 0; y < xic_graph_y_count(g.g); ++y) {
      b = std::max(b, xic_graph_y_degree(g.g, y));
    }
  }

  xic_decomposition* dec = nullptr;
  const xic_status status = xic_decompose(g.g, a, b, &dec);
  if (status != XIC_OK) return report_failure(status);

  const size_t parts = xic_decomposition_part_count(dec);
  std::cout << "a " << a << "\n";
  std::cout << "b " << b << "\n";
  std::cout << "parts " << parts << "\n";
  for (size_t p = 0; p < parts; ++p) {
    const size_t size = xic_decomposition_part_size(dec, p);
    std::cout << "part " << p << " size " << size << " edges";
    for (size_t i = 0; i < size; ++i) {
      uint32_t e = 0;
      xic_decomposition_part_edge(dec, p, i, &e);
      std::cout << " " << e;
    }
    std::cout << "\n";
  }
  std::cout << "x_assignment";
  for (uint32_t x = 0; x < xic_graph_x_count(g.g); ++x) {
    std::cout << " " << xic_decomposition_x_part(dec, x);
  }
  std::cout << "\n";
  xic_decomposition_free(dec);
  return kExitOk;
}

struct SearchOptions {
  std::string mode = "enumerate";
  std::uint32_t nx = 3, ny = 3, max_edges = 5;
  std::uint32_t max_degree = 3;
  double density = 0.5;
  std::uint64_t seed = 1, count = 10;
  std::uint64_t budget = 0;
  std::string frontier;
  bool acyclic_only = false;
};

int run_search(const SearchOptions& opt) {
  xic_search_params params{};
  params.random_mode = opt.mode == "random" ? 1 : 0;
  params.n_x = opt.nx;
  params.n_y = opt.ny;
  params.max_edges = opt.max_edges;
  params.max_degree = opt.max_degree;
  params.density = opt.density;
  params.seed = opt.seed;
  params.count = opt.count;
  params.acyclic_only = opt.acyclic_only ? 1 : 0;

  std::optional<std::string> frontier_text;
  if (!opt.frontier.empty()) {
    frontier_text = read_file(opt.frontier);  // absent file = fresh start
  }

  std::uint64_t budget = opt.budget;
  if (budget == 0) budget = default_budget();
  if (budget == 0) budget = UINT64_MAX;

  xic_search_report report{};
  GraphHandle witness_graph;
  ColoringHandle witness_coloring;
  StringHandle frontier_out;
  const xic_status status = xic_extremal_search(
      frontier_text.has_value() ? nullptr : &params,
      frontier_text.has_value() ? frontier_text->c_str() : nullptr, budget,
      &report, &witness_graph.g, &witness_coloring.c, &frontier_out.s);
  if (status != XIC_OK && status != XIC_ERR_BUDGET_EXHAUSTED) {
    return report_failure(status);
  }

  std::cout << "graphs_examined " << report.graphs_examined << "\n";
  std::cout << "budget_spent " << report.budget_spent << "\n";
  std::cout << "position " << report.position << "\n";
  std::cout << "completed " << (report.completed ? "true" : "false") << "\n";
  if (report.has_witness) {
    std::cout << "max_ratio " << report.max_ratio << " (chi "
              << report.witness_chi << ", delta " << report.witness_delta
              << ")\n";
    StringHandle text;
    if (xic_graph_emit(witness_graph.g, &text.s) == XIC_OK) {
      std::cout << "witness\n" << text.s;
    }
  }
  if (!opt.frontier.empty() && frontier_out.s != nullptr) {
    if (!write_output(opt.frontier, frontier_out.s)) {
      std::cerr << "error: cannot write '" << opt.frontier << "'\n";
      return kExitUsage;
    }
  }
  if (status == XIC_ERR_BUDGET_EXHAUSTED) {
    std::cerr << "budget exhausted"
              << (opt.frontier.empty() ? "" : "; frontier saved") << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-sided interval edge colorings of bipartite graphs"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate graphs");
  gen_cmd->add_option("--kind", gen.kind, "complete|biregular|random|enumerate")
      ->required();
  gen_cmd->add_option("--m", gen.m, "X size (complete)");
  gen_cmd->add_option("--n", gen.n, "Y size (complete)");
  gen_cmd->add_option("--a", gen.a, "X-degree (biregular)");
  gen_cmd->add_option("--b", gen.b, "Y-degree (biregular)");
  gen_cmd->add_option("--nx", gen.nx, "X vertex count");
  gen_cmd->add_option("--ny", gen.ny, "Y vertex count");
  gen_cmd->add_option("--max-degree", gen.max_degree, "degree cap (random)");
  gen_cmd->add_option("--max-edges", gen.max_edges, "edge cap (enumerate)");
  gen_cmd->add_option("--density", gen.density, "edge density (random)");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--limit", gen.limit, "stop after this many graphs");
  gen_cmd->add_option("-o,--out", gen.out, "output file (default stdout)");
  gen_cmd->add_option("--dot", gen.dot, "also write a graphviz drawing");

  std::string color_in, color_method = "auto", color_out, color_dot;
  std::uint64_t color_budget = 0;
  CLI::App* color_cmd =
      app.add_subcommand("color", "produce a certified X-interval coloring");
  color_cmd->add_option("--in", color_in, "graph file")->required();
  color_cmd->add_option("--method", color_method,
                        "auto|biregular|general|multigraph|delta6|"
                        "delta6_restricted|palette");
  color_cmd->add_option("--budget", color_budget,
                        "search node budget (delta6)");
  color_cmd->add_option("--out", color_out, "coloring output file");
  color_cmd->add_option("--dot", color_dot, "colored graphviz drawing");

  std::string verify_graph, verify_coloring;
  bool proper_only = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a coloring");
  verify_cmd->add_option("--graph", verify_graph, "graph file")->required();
  verify_cmd->add_option("--coloring", verify_coloring, "coloring file")
      ->required();
  verify_cmd->add_flag("--proper-only", proper_only,
                       "do not require the interval condition");

  std::string exact_in, exact_out;
  std::uint32_t exact_tmax = 0;
  CLI::App* exact_cmd =
      app.add_subcommand("exact", "exact minimum by exhaustive search");
  exact_cmd->add_option("--in", exact_in, "graph file")->required();
  exact_cmd->add_option("--t-max", exact_tmax,
                        "largest color count to try (default: certified bound)");
  exact_cmd->add_option("--out", exact_out, "witness coloring output file");

  std::string dec_in;
  std::uint32_t dec_a = 0, dec_b = 0;
  CLI::App* dec_cmd =
      app.add_subcommand("decompose", "degree-bounded decomposition");
  dec_cmd->add_option("--in", dec_in, "graph file")->required();
  dec_cmd->add_option("--a", dec_a, "uniform X-degree (default: inferred)");
  dec_cmd->add_option("--b", dec_b, "Y-degree cap (default: max Y-degree)");

  SearchOptions search;
  CLI::App* search_cmd =
      app.add_subcommand("search", "extremal ratio search over many graphs");
  search_cmd->add_option("--mode", search.mode, "enumerate|random");
  search_cmd->add_option("--nx", search.nx, "X vertex count");
  search_cmd->add_option("--ny", search.ny, "Y vertex count");
  search_cmd->add_option("--max-edges", search.max_edges, "edge cap");
  search_cmd->add_option("--max-degree", search.max_degree, "degree cap");
  search_cmd->add_option("--density", search.density, "edge density");
  search_cmd->add_option("--seed", search.seed, "random seed");
  search_cmd->add_option("--count", search.count, "number of random graphs");
  search_cmd->add_option("--budget", search.budget,
                         "total node budget (default: XICOLOR_SEARCH_BUDGET)");
  search_cmd->add_option("--frontier", search.frontier,
                         "resume/save file for interrupted runs");
  search_cmd->add_flag("--acyclic-only", search.acyclic_only,
                       "skip graphs containing cycles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  if (gen_cmd->parsed()) return run_gen(gen);
  if (color_cmd->parsed()) {
    return run_color(color_in, color_method, color_budget, color_out,
                     color_dot);
  }
  if (verify_cmd->parsed()) {
    return run_verify(verify_graph, verify_coloring, proper_only);
  }
  if (exact_cmd->parsed()) return run_exact(exact_in, exact_tmax, exact_out);
  if (dec_cmd->parsed()) return run_decompose(dec_in, dec_a, dec_b);
  if (search_cmd->parsed()) return run_search(search);
  return kExitUsage;
}
