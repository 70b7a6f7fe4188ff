#pragma once

#include <limits>
#include <vector>

#include "edgegp/graph.hpp"

namespace edgegp {

inline constexpr std::uint32_t kInfinity = std::numeric_limits<std::uint32_t>::max();

/// All-pairs hop distances; unreachable pairs hold kInfinity.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), dist_(n * n, kInfinity) {}

  std::size_t order() const { return n_; }
  std::uint32_t operator()(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  std::uint32_t& at(Vertex u, Vertex v) { return dist_[u * n_ + v]; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> dist_;
};

inline std::vector<std::uint32_t> bfs(const Graph& g, Vertex source) {
  std::vector<std::uint32_t> dist(g.order(), kInfinity);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : g.neighbors(x))
      if (dist[y] == kInfinity) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

inline DistanceMatrix apsp(const Graph& g) {
  DistanceMatrix d(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto row = bfs(g, s);
    for (Vertex t = 0; t < g.order(); ++t) d.at(s, t) = row[t];
  }
  return d;
}

/// Largest distance, or kInfinity when some pair is unreachable.
inline std::uint32_t diameter(const DistanceMatrix& d) {
  std::uint32_t best = 0;
  for (Vertex u = 0; u < d.order(); ++u)
    for (Vertex v = u + 1; v < d.order(); ++v) {
      if (d(u, v) == kInfinity) return kInfinity;
      best = std::max(best, d(u, v));
    }
  return best;
}

}  // namespace edgegp
