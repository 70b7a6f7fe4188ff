#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgegp/error.hpp"

namespace edgegp {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;  // u < v

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool has(Vertex w) const { return w == u || w == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with dense vertex ids 0..n-1 and edge ids 0..m-1
/// assigned in insertion order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count)
      : adj_(vertex_count), index_(vertex_count * vertex_count, kNoEdge) {}

  static Graph from_edges(std::size_t vertex_count,
                          std::span<const std::pair<Vertex, Vertex>> edges) {
    Graph g(vertex_count);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }
  static Graph from_edges(std::size_t vertex_count,
                          std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    return from_edges(vertex_count, std::span(edges.begin(), edges.size()));
  }

  EdgeId add_edge(Vertex a, Vertex b) {
    if (a == b) throw Error(ErrorCode::Loop, "loop at vertex " + std::to_string(a));
    if (a >= order() || b >= order())
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge " + std::to_string(a) + " " + std::to_string(b) +
                      " exceeds vertex count " + std::to_string(order()));
    if (adjacent(a, b))
      throw Error(ErrorCode::DuplicateEdge,
                  "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({std::min(a, b), std::max(a, b)});
    insert_sorted(adj_[a], b);
    insert_sorted(adj_[b], a);
    index_[a * order() + b] = id;
    index_[b * order() + a] = id;
    return id;
  }

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& nb : adj_) best = std::max(best, nb.size());
    return best;
  }

  bool adjacent(Vertex u, Vertex v) const {
    return u < order() && v < order() && index_[u * order() + v] != kNoEdge;
  }

  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const {
    if (!adjacent(u, v)) return std::nullopt;
    return index_[u * order() + v];
  }

  /// Edge ids incident to v, ordered by neighbor id.
  std::vector<EdgeId> incident_edges(Vertex v) const {
    std::vector<EdgeId> out;
    out.reserve(adj_[v].size());
    for (Vertex w : adj_[v]) out.push_back(index_[v * order() + w]);
    return out;
  }

  /// Connected components as sorted vertex lists, ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components() const {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(order(), 0);
    for (Vertex s = 0; s < order(); ++s) {
      if (seen[s]) continue;
      std::vector<Vertex> comp{s};
      seen[s] = 1;
      for (std::size_t head = 0; head < comp.size(); ++head)
        for (Vertex w : adj_[comp[head]])
          if (!seen[w]) {
            seen[w] = 1;
            comp.push_back(w);
          }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  bool is_connected() const { return order() <= 1 || components().size() == 1; }

  /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  /// Edges keep the relative order they have in this graph.
  Graph induced(std::span<const Vertex> vertices) const {
    std::vector<std::int64_t> local(order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<std::int64_t>(i);
    Graph h(vertices.size());
    for (const Edge& e : edges_)
      if (local[e.u] >= 0 && local[e.v] >= 0)
        h.add_edge(static_cast<Vertex>(local[e.u]), static_cast<Vertex>(local[e.v]));
    return h;
  }

  /// Graph with vertex w removed; remaining vertices keep their relative order.
  Graph without_vertex(Vertex w) const {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < order(); ++v)
      if (v != w) keep.push_back(v);
    return induced(keep);
  }

  /// Same vertex count and same edge set; edge order is ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    for (const Edge& e : a.edges_)
      if (!b.adjacent(e.u, e.v)) return false;
    return true;
  }

 private:
  static constexpr EdgeId kNoEdge = ~EdgeId{0};

  static void insert_sorted(std::vector<Vertex>& list, Vertex x) {
    list.insert(std::upper_bound(list.begin(), list.end(), x), x);
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<EdgeId> index_;
};

inline std::size_t choose2(std::size_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

}  // namespace edgegp
