#include "core/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace xic {

namespace {

// Line-oriented reader tracking 1-based positions for error reports.
class LineReader {
 public:
  explicit LineReader(const std::string& text) : text_(text) {}

  // next non-blank, non-comment line; nullopt at end of input
  std::optional<std::string> next() {
    while (pos_ < text_.size()) {
      const std::size_t end = text_.find('\n', pos_);
      const std::size_t stop = end == std::string::npos ? text_.size() : end;
      std::string line = text_.substr(pos_, stop - pos_);
      pos_ = stop + (end == std::string::npos ? 0 : 1);
      if (end == std::string::npos) pos_ = text_.size();
      ++line_no_;
      const std::size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return line;
    }
    return std::nullopt;
  }

  std::size_t line_no() const { return line_no_; }
  bool at_end() {
    const std::size_t save_pos = pos_;
    const std::size_t save_line = line_no_;
    const bool end = !next().has_value();
    pos_ = save_pos;
    line_no_ = save_line;
    return end;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

struct Token {
  std::string value;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    tokens.push_back(Token{line.substr(start, i - start), start + 1});
  }
  return tokens;
}

std::uint64_t parse_uint(const Token& token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto* begin = token.value.data();
  const auto* end = begin + token.value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("expected a nonnegative integer, got '" + token.value +
                         "'",
                     line_no, token.column);
  }
  return value;
}

// "key <uint>" line
std::uint64_t expect_field(LineReader& reader, const std::string& key) {
  const auto line = reader.next();
  if (!line.has_value()) {
    throw ParseError("expected '" + key + "', got end of input",
                     reader.line_no() + 1, 1);
  }
  const auto tokens = tokenize(*line);
  if (tokens.empty() || tokens[0].value != key) {
    throw ParseError("expected '" + key + "'", reader.line_no(),
                     tokens.empty() ? 1 : tokens[0].column);
  }
  if (tokens.size() != 2) {
    throw ParseError("'" + key + "' takes exactly one value", reader.line_no(),
                     tokens.size() > 2 ? tokens[2].column : tokens[0].column);
  }
  return parse_uint(tokens[1], reader.line_no());
}

bool parse_flag(const Token& token, std::size_t line_no) {
  if (token.value == "0" || token.value == "false") return false;
  if (token.value == "1" || token.value == "true") return true;
  throw ParseError("expected 0/1/true/false, got '" + token.value + "'",
                   line_no, token.column);
}

BipartiteGraph parse_graph_body(LineReader& reader) {
  const auto x_count = expect_field(reader, "x_count");
  const auto y_count = expect_field(reader, "y_count");

  bool multi = false;
  auto line = reader.next();
  if (!line.has_value()) {
    throw ParseError("expected 'multi' or 'edges', got end of input",
                     reader.line_no() + 1, 1);
  }
  auto tokens = tokenize(*line);
  if (!tokens.empty() && tokens[0].value == "multi") {
    if (tokens.size() != 2) {
      throw ParseError("'multi' takes exactly one value", reader.line_no(),
                       tokens[0].column);
    }
    multi = parse_flag(tokens[1], reader.line_no());
    line = reader.next();
    if (!line.has_value()) {
      throw ParseError("expected 'edges', got end of input",
                       reader.line_no() + 1, 1);
    }
    tokens = tokenize(*line);
  }
  if (tokens.empty() || tokens[0].value != "edges") {
    throw ParseError("expected 'edges'", reader.line_no(),
                     tokens.empty() ? 1 : tokens[0].column);
  }
  if (tokens.size() != 2) {
    throw ParseError("'edges' takes exactly one value", reader.line_no(),
                     tokens[0].column);
  }
  const auto edge_count = parse_uint(tokens[1], reader.line_no());

  std::vector<Edge> edges;
  edges.reserve(edge_count);
  for (std::uint64_t i = 0; i < edge_count; ++i) {
    const auto edge_line = reader.next();
    if (!edge_line.has_value()) {
      throw ParseError("expected " + std::to_string(edge_count) +
                           " edges, got " + std::to_string(i),
                       reader.line_no() + 1, 1);
    }
    const auto pair = tokenize(*edge_line);
    if (pair.size() != 2) {
      throw ParseError("expected '<x> <y>'", reader.line_no(),
                       pair.empty() ? 1 : pair[0].column);
    }
    const auto x = parse_uint(pair[0], reader.line_no());
    const auto y = parse_uint(pair[1], reader.line_no());
    if (x >= x_count || y >= y_count) {
      throw ParseError("edge index out of range", reader.line_no(),
                       x >= x_count ? pair[0].column : pair[1].column);
    }
    edges.push_back(
        Edge{static_cast<VertexId>(x), static_cast<VertexId>(y)});
  }
  return BipartiteGraph(static_cast<VertexId>(x_count),
                        static_cast<VertexId>(y_count), std::move(edges),
                        multi);
}

EdgeColoring parse_coloring_body(LineReader& reader) {
  const auto count = expect_field(reader, "colors");
  std::vector<Color> colors;
  colors.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto line = reader.next();
    if (!line.has_value()) {
      throw ParseError("expected " + std::to_string(count) + " colors, got " +
                           std::to_string(i),
                       reader.line_no() + 1, 1);
    }
    const auto tokens = tokenize(*line);
    if (tokens.size() != 1) {
      throw ParseError("expected one color per line", reader.line_no(),
                       tokens.empty() ? 1 : tokens[0].column);
    }
    const auto c = parse_uint(tokens[0], reader.line_no());
    if (c == 0) {
      throw ParseError("colors are positive integers", reader.line_no(),
                       tokens[0].column);
    }
    colors.push_back(static_cast<Color>(c));
  }
  const auto declared = expect_field(reader, "max_color");
  EdgeColoring out = make_coloring(std::move(colors));
  if (declared != out.max_color) {
    throw ParseError("max_color " + std::to_string(declared) +
                         " does not match the maximum entry " +
                         std::to_string(out.max_color),
                     reader.line_no(), 1);
  }
  return out;
}

void expect_end(LineReader& reader, const char* what) {
  const auto extra = reader.next();
  if (extra.has_value()) {
    throw ParseError(std::string("unexpected content after ") + what,
                     reader.line_no(), 1);
  }
}

}  // namespace

BipartiteGraph parse_graph(const std::string& text) {
  LineReader reader(text);
  BipartiteGraph g = parse_graph_body(reader);
  expect_end(reader, "the edge list");
  return g;
}

std::string emit_graph(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "x_count " << g.x_count() << "\n";
  out << "y_count " << g.y_count() << "\n";
  if (g.allow_multi()) out << "multi 1\n";
  out << "edges " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) out << e.x << " " << e.y << "\n";
  return out.str();
}

EdgeColoring parse_coloring(const std::string& text) {
  LineReader reader(text);
  EdgeColoring c = parse_coloring_body(reader);
  expect_end(reader, "max_color");
  return c;
}

std::string emit_coloring(const EdgeColoring& coloring) {
  std::ostringstream out;
  out << "colors " << coloring.colors.size() << "\n";
  for (Color c : coloring.colors) out << c << "\n";
  out << "max_color " << coloring.max_color << "\n";
  return out.str();
}

std::string emit_dot(const BipartiteGraph& g, const EdgeColoring* coloring) {
  if (coloring != nullptr && coloring->colors.size() != g.edge_count()) {
    throw Error(ErrorCode::length_mismatch,
                "coloring does not align with the edge list");
  }
  std::ostringstream out;
  out << "graph xic {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  out << "  { rank=source;";
  for (VertexId x = 0; x < g.x_count(); ++x) out << " x" << x << ";";
  out << " }\n";
  out << "  { rank=sink;";
  for (VertexId y = 0; y < g.y_count(); ++y) out << " y" << y << ";";
  out << " }\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "  x" << g.edge(e).x << " -- y" << g.edge(e).y;
    if (coloring != nullptr) {
      const Color c = coloring->colors[e];
      char hue[16];
      std::snprintf(hue, sizeof hue, "%.3f",
                    static_cast<double>((c - 1) % 12) / 12.0);
      out << " [label=\"" << c << "\", color=\"" << hue << " 0.700 0.700\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {
constexpr const char* kFrontierMagic = "xic-frontier 1";
}

std::string emit_frontier(const GeneratorSpec& spec,
                          const SearchReport& report) {
  std::ostringstream out;
  out << kFrontierMagic << "\n";
  out << "mode "
      << (spec.mode == GeneratorSpec::Mode::enumerate_all ? "enumerate"
                                                          : "random")
      << "\n";
  out << "n_x " << spec.n_x << "\n";
  out << "n_y " << spec.n_y << "\n";
  out << "max_edges " << spec.max_edges << "\n";
  out << "max_degree " << spec.max_degree << "\n";
  char density[64];
  std::snprintf(density, sizeof density, "%a", spec.density);
  out << "density " << density << "\n";
  out << "seed " << spec.seed << "\n";
  out << "count " << spec.count << "\n";
  out << "acyclic_only " << (spec.acyclic_only ? 1 : 0) << "\n";
  out << "position " << report.position << "\n";
  out << "graphs_examined " << report.graphs_examined << "\n";
  out << "budget_spent " << report.budget_spent << "\n";
  out << "completed " << (report.completed ? 1 : 0) << "\n";
  out << "witness " << (report.witness.has_value() ? 1 : 0) << "\n";
  if (report.witness.has_value()) {
    out << "chi " << report.witness->chi << "\n";
    out << "delta " << report.witness->delta << "\n";
    out << emit_graph(report.witness->graph);
    out << emit_coloring(report.witness->coloring);
  }
  return out.str();
}

Frontier parse_frontier(const std::string& text) {
  LineReader reader(text);
  const auto magic = reader.next();
  if (!magic.has_value() || *magic != kFrontierMagic) {
    throw ParseError("not a frontier file (bad magic header)", 1, 1);
  }
  Frontier f;
  const auto mode_line = reader.next();
  if (!mode_line.has_value()) throw ParseError("expected 'mode'", 2, 1);
  const auto mode_tokens = tokenize(*mode_line);
  if (mode_tokens.size() != 2 || mode_tokens[0].value != "mode") {
    throw ParseError("expected 'mode enumerate|random'", reader.line_no(), 1);
  }
  if (mode_tokens[1].value == "enumerate") {
    f.spec.mode = GeneratorSpec::Mode::enumerate_all;
  } else if (mode_tokens[1].value == "random") {
    f.spec.mode = GeneratorSpec::Mode::random;
  } else {
    throw ParseError("unknown mode '" + mode_tokens[1].value + "'",
                     reader.line_no(), mode_tokens[1].column);
  }
  f.spec.n_x = static_cast<std::uint32_t>(expect_field(reader, "n_x"));
  f.spec.n_y = static_cast<std::uint32_t>(expect_field(reader, "n_y"));
  f.spec.max_edges =
      static_cast<std::uint32_t>(expect_field(reader, "max_edges"));
  f.spec.max_degree =
      static_cast<std::uint32_t>(expect_field(reader, "max_degree"));
  const auto density_line = reader.next();
  if (!density_line.has_value()) {
    throw ParseError("expected 'density'", reader.line_no() + 1, 1);
  }
  const auto density_tokens = tokenize(*density_line);
  if (density_tokens.size() != 2 || density_tokens[0].value != "density") {
    throw ParseError("expected 'density <value>'", reader.line_no(), 1);
  }
  f.spec.density = std::strtod(density_tokens[1].value.c_str(), nullptr);
  f.spec.seed = expect_field(reader, "seed");
  f.spec.count = expect_field(reader, "count");
  f.spec.acyclic_only = expect_field(reader, "acyclic_only") != 0;
  f.report.position = expect_field(reader, "position");
  f.report.graphs_examined = expect_field(reader, "graphs_examined");
  f.report.budget_spent = expect_field(reader, "budget_spent");
  f.report.completed = expect_field(reader, "completed") != 0;
  const bool has_witness = expect_field(reader, "witness") != 0;
  if (has_witness) {
    SearchWitness w;
    w.chi = static_cast<std::uint32_t>(expect_field(reader, "chi"));
    w.delta = static_cast<std::uint32_t>(expect_field(reader, "delta"));
    w.graph = parse_graph_body(reader);
    w.coloring = parse_coloring_body(reader);
    f.report.witness = std::move(w);
  }
  expect_end(reader, "the frontier");
  return f;
}

}  // namespace xic
