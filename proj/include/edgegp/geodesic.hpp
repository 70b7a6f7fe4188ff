#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <unordered_set>
#include <vector>

#include "edgegp/distance.hpp"
#include "edgegp/graph.hpp"

namespace edgegp {

using ConflictTriple = std::array<EdgeId, 3>;  // strictly increasing

namespace detail {

inline bool finite_sum_equals(std::uint32_t target, std::uint32_t a, std::uint32_t b,
                              std::uint32_t extra) {
  if (target == kInfinity || a == kInfinity || b == kInfinity) return false;
  return std::uint64_t{target} == std::uint64_t{a} + b + extra;
}

/// Some shortest path traverses edge x and then edge y.
inline bool ordered_pair_on_geodesic(const Edge& x, const Edge& y, const DistanceMatrix& d) {
  for (int ox = 0; ox < 2; ++ox)
    for (int oy = 0; oy < 2; ++oy) {
      const Vertex a1 = ox ? x.v : x.u, b1 = ox ? x.u : x.v;
      const Vertex a2 = oy ? y.v : y.u, b2 = oy ? y.u : y.v;
      if (finite_sum_equals(d(a1, b2), d(b1, a2), 0, 2)) return true;
    }
  return false;
}

}  // namespace detail

/// True iff some shortest path contains all three edges: for an ordering and
/// orientation (a1,b1), (a2,b2), (a3,b3) the walk a1 b1 ~ a2 b2 ~ a3 b3 with
/// shortest connectors has length d(a1, b3).
inline bool on_common_geodesic(const Edge& e1, const Edge& e2, const Edge& e3,
                               const DistanceMatrix& d) {
  if (e1 == e2 || e1 == e3 || e2 == e3)
    throw Error(ErrorCode::NonDistinctEdges, "on_common_geodesic needs three distinct edges");
  const std::array<const Edge*, 3> in{&e1, &e2, &e3};
  std::array<int, 3> perm{0, 1, 2};
  do {
    const Edge& x = *in[perm[0]];
    const Edge& y = *in[perm[1]];
    const Edge& z = *in[perm[2]];
    for (int mask = 0; mask < 8; ++mask) {
      const Vertex a1 = (mask & 1) ? x.v : x.u, b1 = (mask & 1) ? x.u : x.v;
      const Vertex a2 = (mask & 2) ? y.v : y.u, b2 = (mask & 2) ? y.u : y.v;
      const Vertex a3 = (mask & 4) ? z.v : z.u, b3 = (mask & 4) ? z.u : z.v;
      if (detail::finite_sum_equals(d(a1, b3), d(b1, a2), d(b2, a3), 3)) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// The 3-uniform conflict hypergraph on E(G) with a per-pair index.
class ConflictSet {
 public:
  ConflictSet() = default;
  explicit ConflictSet(std::size_t edge_count)
      : m_(edge_count), thirds_(edge_count * edge_count), degree_(edge_count, 0) {}

  void insert(ConflictTriple t) {
    std::sort(t.begin(), t.end());
    if (!keys_.insert(key(t)).second) return;
    triples_.push_back(t);
    auto link = [&](EdgeId a, EdgeId b, EdgeId c) {
      thirds_[a * m_ + b].push_back(c);
      thirds_[b * m_ + a].push_back(c);
    };
    link(t[0], t[1], t[2]);
    link(t[0], t[2], t[1]);
    link(t[1], t[2], t[0]);
    for (EdgeId e : t) ++degree_[e];
  }

  bool contains(EdgeId a, EdgeId b, EdgeId c) const {
    ConflictTriple t{a, b, c};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2] || t[2] >= m_) return false;
    return keys_.contains(key(t));
  }

  /// Edges that complete a conflict together with a and b.
  std::span<const EdgeId> thirds(EdgeId a, EdgeId b) const { return thirds_[a * m_ + b]; }

  /// Number of triples containing e.
  std::size_t degree(EdgeId e) const { return degree_[e]; }

  std::size_t edge_count() const { return m_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  /// Triples in lexicographic order.
  std::vector<ConflictTriple> sorted_triples() const {
    auto out = triples_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::uint64_t key(const ConflictTriple& t) const {
    return (std::uint64_t{t[0]} * m_ + t[1]) * m_ + t[2];
  }

  std::size_t m_ = 0;
  std::vector<ConflictTriple> triples_;
  std::unordered_set<std::uint64_t> keys_;
  std::vector<std::vector<EdgeId>> thirds_;
  std::vector<std::size_t> degree_;
};

/// Every edge triple lying on a common geodesic. O(m^3) triple checks.
inline ConflictSet build_conflicts(const Graph& g, const DistanceMatrix& d) {
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedInput, "build_conflicts");
  const std::size_t m = g.size();
  ConflictSet cs(m);
  const auto edges = g.edges();
  for (EdgeId i = 0; i < m; ++i)
    for (EdgeId j = i + 1; j < m; ++j) {
      // A conflicting triple needs each of its pairs on a common geodesic.
      if (!detail::ordered_pair_on_geodesic(edges[i], edges[j], d) &&
          !detail::ordered_pair_on_geodesic(edges[j], edges[i], d))
        continue;
      for (EdgeId k = j + 1; k < m; ++k)
        if (on_common_geodesic(edges[i], edges[j], edges[k], d)) cs.insert({i, j, k});
    }
  return cs;
}

inline ConflictSet build_conflicts(const Graph& g) { return build_conflicts(g, apsp(g)); }

/// No conflict triple lies inside `x`. Repeated ids are treated as one.
inline bool is_general_position(const ConflictSet& cs, std::span<const EdgeId> x) {
  std::vector<char> in(cs.edge_count(), 0);
  std::vector<EdgeId> members;
  for (EdgeId e : x) {
    if (e >= cs.edge_count())
      throw Error(ErrorCode::UnknownEdge, "edge id " + std::to_string(e));
    if (!in[e]) members.push_back(e);
    in[e] = 1;
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      for (EdgeId r : cs.thirds(members[i], members[j]))
        if (in[r]) return false;
  return true;
}

inline bool is_general_position(const Graph& g, std::span<const EdgeId> x) {
  for (EdgeId e : x)
    if (e >= g.size()) throw Error(ErrorCode::UnknownEdge, "edge id " + std::to_string(e));
  return is_general_position(build_conflicts(g), x);
}

/// All shortest u,v-paths as vertex sequences. Exponential in general;
/// meant for small graphs.
inline std::vector<std::vector<Vertex>> enumerate_geodesics(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order())
    throw Error(ErrorCode::VertexOutOfRange, "enumerate_geodesics");
  const auto to_v = bfs(g, v);
  if (to_v[u] == kInfinity) throw Error(ErrorCode::Unreachable, "no u,v-path");
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path{u};
  auto extend = [&](auto&& self, Vertex x) -> void {
    if (x == v) {
      out.push_back(path);
      return;
    }
    for (Vertex y : g.neighbors(x))
      if (to_v[y] + 1 == to_v[x]) {
        path.push_back(y);
        self(self, y);
        path.pop_back();
      }
  };
  extend(extend, u);
  return out;
}

}  // namespace edgegp
