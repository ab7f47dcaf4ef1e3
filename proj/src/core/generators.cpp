#include "core/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "core/rng.hpp"

namespace xic {

BipartiteGraph complete_bipartite(std::uint32_t m, std::uint32_t n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) * n);
  for (VertexId x = 0; x < m; ++x) {
    for (VertexId y = 0; y < n; ++y) edges.push_back(Edge{x, y});
  }
  return BipartiteGraph(m, n, std::move(edges));
}

std::optional<BipartiteGraph> random_biregular(std::uint32_t a,
                                               std::uint32_t b,
                                               std::uint32_t n_x,
                                               std::uint64_t seed) {
  if (b == 0) {
    if (a == 0 || n_x == 0) return BipartiteGraph(n_x, 0, {});
    throw Error(ErrorCode::infeasible_degrees,
                "Y-degree 0 cannot absorb any X stubs");
  }
  const std::uint64_t stubs = static_cast<std::uint64_t>(a) * n_x;
  if (stubs % b != 0) {
    throw Error(ErrorCode::infeasible_degrees,
                std::to_string(a) + "*" + std::to_string(n_x) +
                    " is not divisible by " + std::to_string(b));
  }
  const std::uint32_t n_y = static_cast<std::uint32_t>(stubs / b);
  if (a == 0) return BipartiteGraph(n_x, n_y, {});
  if (a > n_y || b > n_x) return std::nullopt;  // no simple realization

  std::vector<VertexId> x_stubs, y_stubs;
  for (VertexId x = 0; x < n_x; ++x) {
    x_stubs.insert(x_stubs.end(), a, x);
  }
  for (VertexId y = 0; y < n_y; ++y) {
    y_stubs.insert(y_stubs.end(), b, y);
  }

  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    rng.shuffle(y_stubs);
    std::set<std::pair<VertexId, VertexId>> dedup;
    bool simple = true;
    for (std::size_t i = 0; i < x_stubs.size() && simple; ++i) {
      simple = dedup.emplace(x_stubs[i], y_stubs[i]).second;
    }
    if (!simple) continue;
    std::vector<Edge> edges;
    edges.reserve(x_stubs.size());
    for (std::size_t i = 0; i < x_stubs.size(); ++i) {
      edges.push_back(Edge{x_stubs[i], y_stubs[i]});
    }
    return BipartiteGraph(n_x, n_y, std::move(edges));
  }
  return std::nullopt;
}

BipartiteGraph random_bipartite(std::uint32_t n_x, std::uint32_t n_y,
                                std::uint32_t max_degree, double density,
                                std::uint64_t seed) {
  density = std::clamp(density, 0.0, 1.0);
  const std::uint64_t all = static_cast<std::uint64_t>(n_x) * n_y;
  const auto target =
      static_cast<std::uint64_t>(density * static_cast<double>(all) + 0.5);

  std::vector<std::pair<VertexId, VertexId>> candidates;
  candidates.reserve(all);
  for (VertexId x = 0; x < n_x; ++x) {
    for (VertexId y = 0; y < n_y; ++y) candidates.emplace_back(x, y);
  }
  Rng rng(seed);
  rng.shuffle(candidates);

  std::vector<std::uint32_t> xd(n_x, 0), yd(n_y, 0);
  std::vector<Edge> edges;
  for (const auto& [x, y] : candidates) {
    if (edges.size() >= target) break;
    if (xd[x] < max_degree && yd[y] < max_degree) {
      ++xd[x];
      ++yd[y];
      edges.push_back(Edge{x, y});
    }
  }
  return BipartiteGraph(n_x, n_y, std::move(edges));
}

namespace {

std::uint32_t permute_bits(std::uint32_t mask, const std::vector<std::uint8_t>& perm) {
  std::uint32_t out = 0;
  for (std::size_t j = 0; j < perm.size(); ++j) {
    if ((mask >> j) & 1u) out |= 1u << perm[j];
  }
  return out;
}

const std::vector<std::vector<std::uint8_t>>& permutations_of(std::uint32_t b) {
  static std::vector<std::vector<std::vector<std::uint8_t>>> cache(1);
  while (cache.size() <= b) {
    std::vector<std::uint8_t> id(cache.size());
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<std::uint8_t>> perms;
    do {
      perms.push_back(id);
    } while (std::next_permutation(id.begin(), id.end()));
    cache.push_back(std::move(perms));
  }
  return cache[b];
}

// canonical: no column permutation yields a lexicographically larger
// descending row-mask sequence
bool is_canonical(const std::vector<std::uint32_t>& rows, std::uint32_t b) {
  std::vector<std::uint32_t> mapped(rows.size());
  for (const auto& perm : permutations_of(b)) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      mapped[i] = permute_bits(rows[i], perm);
    }
    std::sort(mapped.begin(), mapped.end(), std::greater<>());
    if (mapped > rows) return false;
  }
  return true;
}

// All canonical cores with `a` rows over `b` columns, no empty row or column,
// at most max_edges edges total. Rows are non-increasing masks.
void generate_cores(std::uint32_t a, std::uint32_t b, std::uint32_t max_edges,
                    std::vector<std::uint32_t>& rows,
                    std::uint32_t edges_left, std::uint32_t cover,
                    std::vector<std::vector<std::uint32_t>>& out) {
  if (rows.size() == a) {
    if (cover == (1u << b) - 1 && is_canonical(rows, b)) out.push_back(rows);
    return;
  }
  const std::uint32_t remaining_rows = a - static_cast<std::uint32_t>(rows.size());
  const std::uint32_t upper = rows.empty() ? (1u << b) - 1 : rows.back();
  for (std::uint32_t mask = upper; mask >= 1; --mask) {
    const auto pc = static_cast<std::uint32_t>(std::popcount(mask));
    if (pc + (remaining_rows - 1) > edges_left) continue;
    const std::uint32_t uncovered =
        static_cast<std::uint32_t>(std::popcount(((1u << b) - 1) & ~(cover | mask)));
    if (uncovered > edges_left - pc) continue;
    rows.push_back(mask);
    generate_cores(a, b, max_edges, rows, edges_left - pc, cover | mask, out);
    rows.pop_back();
  }
}

}  // namespace

BipartiteEnumerator::BipartiteEnumerator(std::uint32_t n_x, std::uint32_t n_y,
                                         std::uint32_t max_edges,
                                         bool cores_only)
    : n_x_(n_x), n_y_(n_y), max_edges_(max_edges), cores_only_(cores_only) {
  if (n_y > 16) {
    throw Error(ErrorCode::invalid_argument,
                "enumeration supports at most 16 Y vertices");
  }
}

bool BipartiteEnumerator::advance_block() {
  // support pairs in lexicographic order: (1,1), (1,2), ..., (n_x, n_y)
  while (true) {
    if (b_ < n_y_) {
      ++b_;
    } else if (a_ < n_x_) {
      ++a_;
      b_ = 1;
    } else {
      return false;
    }
    if (a_ == 0 || b_ == 0 || a_ > n_x_ || b_ > n_y_) continue;
    if (a_ > max_edges_ || b_ > max_edges_) continue;
    block_.clear();
    block_pos_ = 0;
    std::vector<std::uint32_t> rows;
    generate_cores(a_, b_, max_edges_, rows, max_edges_, 0, block_);
    if (!block_.empty()) return true;
  }
}

std::optional<BipartiteGraph> BipartiteEnumerator::next() {
  if (done_) return std::nullopt;
  if (!emitted_empty_) {
    emitted_empty_ = true;
    ++position_;
    return BipartiteGraph(cores_only_ ? 0 : n_x_, cores_only_ ? 0 : n_y_, {});
  }
  while (block_pos_ >= block_.size()) {
    if (!advance_block()) {
      done_ = true;
      return std::nullopt;
    }
  }
  const std::vector<std::uint32_t>& rows = block_[block_pos_++];
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < rows.size(); ++i) {
    for (std::uint32_t j = 0; j < b_; ++j) {
      if ((rows[i] >> j) & 1u) edges.push_back(Edge{i, j});
    }
  }
  ++position_;
  return BipartiteGraph(cores_only_ ? a_ : n_x_, cores_only_ ? b_ : n_y_,
                        std::move(edges));
}

void BipartiteEnumerator::skip(std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) next();
}

}  // namespace xic
