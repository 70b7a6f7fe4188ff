#pragma once

// Labelled small-graph enumeration. A graph on n vertices is encoded as a
// bitmask over vertex pairs in graph6 bit order: bit k is the k-th pair of
// (0,1), (0,2), (1,2), (0,3), ...

#include <cstdint>
#include <vector>

#include "edgegp/graph.hpp"
#include "edgegp/rng.hpp"

namespace edgegp {

inline constexpr std::size_t kMaxEnumerationOrder = 7;

inline std::size_t pair_count(std::size_t n) { return choose2(n); }

inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1u) g.add_edge(i, j);
  return g;
}

inline bool mask_connected(std::size_t n, std::uint64_t mask) {
  if (n <= 1) return true;
  if (n > kMaxEnumerationOrder)
    throw Error(ErrorCode::BadParameters, "enumeration order must be in 1..7");
  std::uint32_t adj[kMaxEnumerationOrder] = {};
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1u) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::size_t v = 0; v < n; ++v)
      if ((frontier >> v) & 1u) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1;
}

inline void check_order(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw Error(ErrorCode::BadParameters, "enumeration order must be in 1..7");
}

/// Masks of all connected labelled graphs on n vertices, in increasing order.
inline std::vector<std::uint64_t> connected_masks(std::size_t n) {
  check_order(n);
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (mask_connected(n, mask)) out.push_back(mask);
  return out;
}

inline std::vector<Graph> enumerate_connected(std::size_t n) {
  std::vector<Graph> out;
  for (auto mask : connected_masks(n)) out.push_back(graph_from_mask(n, mask));
  return out;
}

/// k connected labelled graphs drawn uniformly (with replacement) by
/// rejection from all labelled graphs on n vertices.
inline std::vector<std::uint64_t> sample_connected_masks(std::size_t n, std::size_t k,
                                                         std::uint64_t seed) {
  check_order(n);
  Xorshift64Star rng(seed);
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  std::vector<std::uint64_t> out;
  out.reserve(k);
  while (out.size() < k) {
    const auto mask = rng.below(total);
    if (mask_connected(n, mask)) out.push_back(mask);
  }
  return out;
}

}  // namespace edgegp
