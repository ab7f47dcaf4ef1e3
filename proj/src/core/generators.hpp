#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/graph.hpp"

namespace xic {

/// K_{m,n}; edges in row-major order.
BipartiteGraph complete_bipartite(std::uint32_t m, std::uint32_t n);

/// Simple (a,b)-biregular graph on n_x X vertices via configuration-model
/// stub pairing, resampled until simple (at most 1000 tries). Requires b to
/// divide a*n_x; nullopt when the retries run out. Deterministic per seed.
std::optional<BipartiteGraph> random_biregular(std::uint32_t a,
                                               std::uint32_t b,
                                               std::uint32_t n_x,
                                               std::uint64_t seed);

/// Uniformly shuffled candidate pairs accepted while both endpoint degrees
/// stay below max_degree, until round(density * n_x * n_y) edges are placed.
BipartiteGraph random_bipartite(std::uint32_t n_x, std::uint32_t n_y,
                                std::uint32_t max_degree, double density,
                                std::uint64_t seed);

/// Streams all simple bipartite graphs on exactly (n_x, n_y) vertices with at
/// most max_edges edges, one per isomorphism class under part-preserving
/// vertex permutations. With cores_only, isolated vertices are dropped: each
/// graph is emitted on exactly its support.
class BipartiteEnumerator {
 public:
  BipartiteEnumerator(std::uint32_t n_x, std::uint32_t n_y,
                      std::uint32_t max_edges, bool cores_only = false);

  std::optional<BipartiteGraph> next();
  std::uint64_t position() const { return position_; }
  void skip(std::uint64_t n);

 private:
  bool advance_block();

  std::uint32_t n_x_;
  std::uint32_t n_y_;
  std::uint32_t max_edges_;
  bool cores_only_;
  std::uint32_t a_ = 1;
  std::uint32_t b_ = 0;
  bool emitted_empty_ = false;
  bool done_ = false;
  std::vector<std::vector<std::uint32_t>> block_;  // canonical mask rows
  std::size_t block_pos_ = 0;
  std::uint64_t position_ = 0;
};

}  // namespace xic
