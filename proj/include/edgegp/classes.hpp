#pragma once

// Recognisers, closed-form values and generators for the graph families with
// known edge general position numbers.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgegp/blocks.hpp"
#include "edgegp/distance.hpp"
#include "edgegp/geodesic.hpp"
#include "edgegp/isomorphism.hpp"
#include "edgegp/paths.hpp"
#include "edgegp/rng.hpp"
#include "edgegp/solver.hpp"

namespace edgegp {

// ---------------------------------------------------------------------------
// Elementary predicates

inline std::size_t leaf_count(const Graph& g) {
  std::size_t c = 0;
  for (Vertex v = 0; v < g.order(); ++v) c += g.degree(v) == 1;
  return c;
}

/// Edges with an end vertex of degree 1. Equals leaf_count except for K2.
inline std::size_t pendant_edge_count(const Graph& g) {
  std::size_t c = 0;
  for (const Edge& e : g.edges()) c += g.degree(e.u) == 1 || g.degree(e.v) == 1;
  return c;
}

inline bool is_tree(const Graph& g) { return g.order() >= 1 && g.is_connected() && g.size() + 1 == g.order(); }

inline bool is_path_graph(const Graph& g) { return is_tree(g) && g.max_degree() <= 2; }

inline bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order() || !g.is_connected()) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

inline bool is_complete_graph(const Graph& g) { return g.size() == choose2(g.order()); }

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Length of a shortest cycle, by BFS from every vertex; nullopt for forests.
inline std::optional<std::size_t> girth(const Graph& g) {
  std::optional<std::size_t> best;
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<std::uint32_t> dist(g.order(), kInfinity);
    std::vector<Vertex> parent(g.order(), s);
    std::vector<Vertex> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == kInfinity) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          const std::size_t len = std::size_t{dist[x]} + dist[y] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Families with gp_e = m - 1

/// Pendant edge leaf-attach whose removal leaves a diameter-2 graph H in
/// which `attach` misses at least one other vertex.
struct G1Witness {
  EdgeId special_edge;
  Vertex leaf;
  Vertex attach;
};

/// Central edge x1x2 with common neighbours A and private neighbours B1, B2.
struct G2Witness {
  EdgeId central_edge;
  Vertex x1;
  Vertex x2;
  std::vector<Vertex> common;     // A, induces G0
  std::vector<Vertex> private1;   // B1, induces G1
  std::vector<Vertex> private2;   // B2, induces G2
};

inline std::optional<G1Witness> in_family_G1(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedInput, "in_family_G1");
  if (g.order() < 4) return std::nullopt;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (g.degree(w) != 1) continue;
    const Vertex u = g.neighbors(w)[0];
    const Graph h = g.without_vertex(w);
    const Vertex u_in_h = u > w ? u - 1 : u;
    if (diameter(apsp(h)) != 2) continue;
    if (h.degree(u_in_h) + 2 > h.order()) continue;
    return G1Witness{*g.edge_id(w, u), w, u};
  }
  return std::nullopt;
}

/// Central edges are tried in edge-id order with x1 the smaller end. Both
/// private sides must be non-empty.
inline std::optional<G2Witness> in_family_G2(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedInput, "in_family_G2");
  if (g.order() < 4) return std::nullopt;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Vertex x1 = g.edge(e).u, x2 = g.edge(e).v;
    // part: 0 = A, 1 = B1, 2 = B2, 3 = central, -1 = unassigned
    std::vector<int> part(g.order(), -1);
    part[x1] = part[x2] = 3;
    G2Witness w{e, x1, x2, {}, {}, {}};
    for (Vertex v = 0; v < g.order(); ++v) {
      if (part[v] == 3) continue;
      const bool a1 = g.adjacent(v, x1), a2 = g.adjacent(v, x2);
      if (a1 && a2) {
        part[v] = 0;
        w.common.push_back(v);
      } else if (a1) {
        part[v] = 1;
        w.private1.push_back(v);
      } else if (a2) {
        part[v] = 2;
        w.private2.push_back(v);
      }
    }
    if (std::find(part.begin(), part.end(), -1) != part.end()) continue;
    if (w.private1.empty() || w.private2.empty()) continue;
    bool cross = false;
    for (const Edge& f : g.edges())
      if (part[f.u] != 3 && part[f.v] != 3 && part[f.u] != part[f.v]) {
        cross = true;
        break;
      }
    if (!cross) return w;
  }
  return std::nullopt;
}

/// H with a new last vertex joined to u.
inline Graph realize_G1(const Graph& h, Vertex u) {
  Graph g(h.order() + 1);
  for (const Edge& e : h.edges()) g.add_edge(e.u, e.v);
  g.add_edge(u, static_cast<Vertex>(h.order()));
  return g;
}

/// K2 on {0, 1} joined completely to G0, vertex 0 joined to G1 and vertex 1
/// joined to G2; the parts follow in that order.
inline Graph realize_G2(const Graph& g0, const Graph& g1, const Graph& g2) {
  Graph g(2 + g0.order() + g1.order() + g2.order());
  g.add_edge(0, 1);
  Vertex base = 2;
  auto place = [&](const Graph& part, bool to_x1, bool to_x2) {
    for (const Edge& e : part.edges()) g.add_edge(base + e.u, base + e.v);
    for (Vertex v = 0; v < part.order(); ++v) {
      if (to_x1) g.add_edge(0, base + v);
      if (to_x2) g.add_edge(1, base + v);
    }
    base += static_cast<Vertex>(part.order());
  };
  place(g0, true, true);
  place(g1, true, false);
  place(g2, false, true);
  return g;
}

inline bool replay(const Graph& g, const G1Witness& w) {
  const Graph h = g.without_vertex(w.leaf);
  return is_isomorphic(realize_G1(h, w.attach > w.leaf ? w.attach - 1 : w.attach), g);
}

inline bool replay(const Graph& g, const G2Witness& w) {
  return is_isomorphic(realize_G2(g.induced(w.common), g.induced(w.private1), g.induced(w.private2)),
                       g);
}

// ---------------------------------------------------------------------------
// Block-graph classes

/// Block graph in which every thick block is pendant and its cut vertex has
/// exactly one neighbour outside the block. Trees qualify.
inline bool is_thick_leaved_tree(const Graph& g, const BlockDecomposition& d) {
  if (!d.block_graph) return false;
  for (const Block& b : d.blocks) {
    if (!b.thick) continue;
    if (!b.pendant) return false;
    const auto w = *std::find_if(b.vertices.begin(), b.vertices.end(),
                                 [&](Vertex v) { return d.is_cut(v); });
    if (g.degree(w) != b.vertices.size()) return false;
  }
  // Collapsing each thick block to its cut vertex leaves only K2 blocks, so
  // the remainder is a tree.
  return true;
}

inline bool is_thick_leaved_tree(const Graph& g) {
  return is_thick_leaved_tree(g, decompose_blocks(g));
}

/// Sum of C(n(B), 2) over the simplicial blocks.
inline std::size_t thick_leaved_value(const BlockDecomposition& d) {
  std::size_t total = 0;
  for (const Block& b : d.blocks)
    if (b.simplicial) total += choose2(b.vertices.size());
  return total;
}

inline BlockBounds block_bounds(const Graph& g) { return block_bounds(decompose_blocks(g)); }

// ---------------------------------------------------------------------------
// Classification

struct ClassificationResult {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  bool is_path = false;
  bool is_cycle = false;
  bool is_tree = false;
  bool is_complete = false;
  bool is_block_graph = false;
  bool is_thick_leaved = false;
  bool is_bipartite = false;
  std::uint32_t diameter = 0;
  std::size_t leaf_count = 0;
  std::optional<std::size_t> girth;
  std::optional<G1Witness> membership_G1;
  std::optional<G2Witness> membership_G2;
  std::optional<BlockBounds> block_bounds;
};

inline ClassificationResult classify(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedInput, "classify");
  const auto d = decompose_blocks(g);
  ClassificationResult c;
  c.n = g.order();
  c.m = g.size();
  c.max_degree = g.max_degree();
  c.is_path = is_path_graph(g);
  c.is_cycle = is_cycle_graph(g);
  c.is_tree = is_tree(g);
  c.is_complete = is_complete_graph(g);
  c.is_block_graph = d.block_graph;
  c.is_thick_leaved = is_thick_leaved_tree(g, d);
  c.is_bipartite = is_bipartite(g);
  c.diameter = diameter(apsp(g));
  c.leaf_count = leaf_count(g);
  c.girth = girth(g);
  c.membership_G1 = in_family_G1(g);
  c.membership_G2 = in_family_G2(g);
  if (d.block_graph) c.block_bounds = block_bounds(d);
  return c;
}

// ---------------------------------------------------------------------------
// Closed-form values

/// Witness of size 4 for C_n, n >= 6: two adjacent edges and the two adjacent
/// edges starting half way round.
inline std::vector<EdgeId> long_cycle_witness(const Graph& g) {
  std::vector<EdgeId> around;
  Vertex prev = 0, cur = g.neighbors(0)[0];
  around.push_back(*g.edge_id(0, cur));
  while (cur != 0) {
    const auto nb = g.neighbors(cur);
    const Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
    around.push_back(*g.edge_id(cur, nxt));
    prev = cur;
    cur = nxt;
  }
  const std::size_t h = g.order() / 2;
  std::vector<EdgeId> w{around[0], around[1], around[h], around[h + 1]};
  std::sort(w.begin(), w.end());
  return w;
}

/// Value and witness from the first rule that applies: diameter at most 2,
/// tree, cycle, thick-leaved tree, block graph (solved on its reduction).
inline std::optional<GpeResult> fastpath_result(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedInput, "gpe_fastpath");
  GpeResult r;
  if (diameter(apsp(g)) <= 2) {
    r.method = "fastpath:diam2";
    r.witness.resize(g.size());
    std::iota(r.witness.begin(), r.witness.end(), EdgeId{0});
  } else if (is_tree(g)) {
    r.method = "fastpath:tree";
    for (EdgeId e = 0; e < g.size(); ++e)
      if (g.degree(g.edge(e).u) == 1 || g.degree(g.edge(e).v) == 1) r.witness.push_back(e);
  } else if (is_cycle_graph(g)) {
    r.method = "fastpath:cycle";
    if (g.order() <= 5) {
      r.witness.resize(g.size());
      std::iota(r.witness.begin(), r.witness.end(), EdgeId{0});
    } else {
      r.witness = long_cycle_witness(g);
    }
  } else {
    const auto d = decompose_blocks(g);
    if (!d.block_graph) return std::nullopt;
    r.bounds = block_bounds(d);
    if (is_thick_leaved_tree(g, d)) {
      r.method = "fastpath:thick_leaved";
      r.witness = d.simplicial_edges;
      if (r.witness.size() != thick_leaved_value(d))
        throw std::logic_error("simplicial edge count differs from thick-leaved formula");
    } else {
      r.method = "fastpath:block_reduction";
      const auto red = reduce_tracked(g);
      const auto inner = gpe_exact(red.graph);
      for (EdgeId e : inner.witness) r.witness.push_back(red.origin[e]);
      std::sort(r.witness.begin(), r.witness.end());
      r.lower_bound_used = inner.lower_bound_used;
    }
  }
  r.value = r.witness.size();
  return r;
}

struct FastPathValue {
  std::size_t value;
  std::string tag;
};

inline std::optional<FastPathValue> gpe_fastpath(const Graph& g) {
  auto r = fastpath_result(g);
  if (!r) return std::nullopt;
  return FastPathValue{r->value, r->method};
}

/// False only when gpe == 4 and G breaks the degree/bipartite conditions
/// that every graph with value 4 satisfies.
inline bool necessary_gpe4_check(const Graph& g, std::size_t gpe) {
  if (gpe != 4) return true;
  const auto delta = g.max_degree();
  return delta <= 4 && (delta < 4 || is_bipartite(g));
}

// ---------------------------------------------------------------------------
// Generators

enum class Family {
  Path,
  Cycle,
  Complete,
  Star,
  ChainGk,
  ChainEvenCycles,
  CliquePendantPaths,
  RandomTree,
  RandomBlockGraph,
  RandomThickLeaved,
};

inline constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::Path, "path"},
    {Family::Cycle, "cycle"},
    {Family::Complete, "complete"},
    {Family::Star, "star"},
    {Family::ChainGk, "chain_Gk"},
    {Family::ChainEvenCycles, "chain_even_cycles"},
    {Family::CliquePendantPaths, "clique_pendant_paths"},
    {Family::RandomTree, "random_tree"},
    {Family::RandomBlockGraph, "random_block_graph"},
    {Family::RandomThickLeaved, "random_thick_leaved"},
};

inline std::optional<Family> parse_family(std::string_view name) {
  for (auto [f, s] : kFamilyNames)
    if (s == name) return f;
  return std::nullopt;
}

inline std::string_view to_string(Family f) {
  for (auto [g, s] : kFamilyNames)
    if (g == f) return s;
  return "unknown";
}

/// Family tag with integer parameters:
///   path n | cycle n | complete n | star leaves | chain_Gk k
///   chain_even_cycles len... | clique_pendant_paths n k len_1..len_k
///   random_tree n | random_block_graph blocks max_clique
///   random_thick_leaved tree_n [max_clique=6]
struct FamilySpec {
  Family family = Family::Path;
  std::vector<std::uint64_t> params;
  std::uint64_t seed = 0;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParameters, what);
}

/// Grows g by a clique on `anchor` plus `extra` new vertices.
inline void attach_clique(std::vector<std::pair<Vertex, Vertex>>& edges, Vertex& next,
                          Vertex anchor, std::size_t extra) {
  std::vector<Vertex> members{anchor};
  for (std::size_t i = 0; i < extra; ++i) members.push_back(next++);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) edges.emplace_back(members[i], members[j]);
}

inline Graph chain_of_even_cycles(std::span<const std::uint64_t> lengths) {
  require(!lengths.empty(), "chain needs at least one cycle");
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex next = 1;
  Vertex shared = 0;
  for (auto len : lengths) {
    require(len >= 4 && len % 2 == 0 && len <= 60, "cycle lengths must be even, 4..60");
    std::vector<Vertex> ring(len);
    ring[0] = shared;
    for (std::size_t i = 1; i < len; ++i) ring[i] = next++;
    for (std::size_t i = 0; i < len; ++i) edges.emplace_back(ring[i], ring[(i + 1) % len]);
    shared = ring[len / 2];
  }
  return Graph::from_edges(next, edges);
}

inline Graph random_tree(std::size_t n, Xorshift64Star& rng) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(static_cast<Vertex>(rng.below(v)), v);
  return g;
}

}  // namespace detail

inline Graph generate(const FamilySpec& spec) {
  using detail::require;
  const auto& p = spec.params;
  auto arity = [&](std::size_t lo, std::size_t hi) {
    require(p.size() >= lo && p.size() <= hi,
            std::string(to_string(spec.family)) + ": wrong number of parameters");
  };
  Xorshift64Star rng(spec.seed);
  switch (spec.family) {
    case Family::Path: {
      arity(1, 1);
      require(p[0] >= 1 && p[0] <= 4096, "path: 1 <= n <= 4096");
      Graph g(p[0]);
      for (Vertex v = 1; v < p[0]; ++v) g.add_edge(v - 1, v);
      return g;
    }
    case Family::Cycle: {
      arity(1, 1);
      require(p[0] >= 3 && p[0] <= 4096, "cycle: 3 <= n <= 4096");
      Graph g(p[0]);
      for (Vertex v = 1; v < p[0]; ++v) g.add_edge(v - 1, v);
      g.add_edge(static_cast<Vertex>(p[0] - 1), 0);
      return g;
    }
    case Family::Complete: {
      arity(1, 1);
      require(p[0] >= 1 && p[0] <= 256, "complete: 1 <= n <= 256");
      Graph g(p[0]);
      for (Vertex v = 0; v < p[0]; ++v)
        for (Vertex w = v + 1; w < p[0]; ++w) g.add_edge(v, w);
      return g;
    }
    case Family::Star: {
      arity(1, 1);
      require(p[0] >= 1 && p[0] <= 4096, "star: 1 <= leaves <= 4096");
      Graph g(p[0] + 1);
      for (Vertex v = 1; v <= p[0]; ++v) g.add_edge(0, v);
      return g;
    }
    case Family::ChainGk: {
      arity(1, 1);
      require(p[0] >= 1 && p[0] <= 1000, "chain_Gk: 1 <= k <= 1000");
      std::vector<std::uint64_t> fours(p[0], 4);
      return detail::chain_of_even_cycles(fours);
    }
    case Family::ChainEvenCycles:
      arity(1, 1000);
      return detail::chain_of_even_cycles(p);
    case Family::CliquePendantPaths: {
      require(p.size() >= 2, "clique_pendant_paths: n k len_1..len_k");
      const auto n = p[0], k = p[1];
      require(n >= 2 && n <= 256 && k <= n, "clique_pendant_paths: 2 <= n <= 256, k <= n");
      require(p.size() == 2 + k, "clique_pendant_paths: expected k path lengths");
      std::vector<std::pair<Vertex, Vertex>> edges;
      Vertex next = static_cast<Vertex>(n);
      for (Vertex v = 0; v < n; ++v)
        for (Vertex w = v + 1; w < n; ++w) edges.emplace_back(v, w);
      for (Vertex i = 0; i < k; ++i) {
        const auto len = p[2 + i];
        require(len >= 1 && len <= 4096, "clique_pendant_paths: path length >= 1");
        Vertex at = i;
        for (std::uint64_t s = 0; s < len; ++s) {
          edges.emplace_back(at, next);
          at = next++;
        }
      }
      return Graph::from_edges(next, edges);
    }
    case Family::RandomTree:
      arity(1, 1);
      require(p[0] >= 1 && p[0] <= 4096, "random_tree: 1 <= n <= 4096");
      return detail::random_tree(p[0], rng);
    case Family::RandomBlockGraph: {
      arity(2, 2);
      require(p[0] >= 1 && p[0] <= 1000, "random_block_graph: 1 <= blocks <= 1000");
      require(p[1] >= 2 && p[1] <= 16, "random_block_graph: 2 <= max_clique <= 16");
      std::vector<std::pair<Vertex, Vertex>> edges;
      Vertex next = 1;
      detail::attach_clique(edges, next, 0, rng.between(2, p[1]) - 1);
      for (std::uint64_t b = 1; b < p[0]; ++b) {
        const auto anchor = static_cast<Vertex>(rng.below(next));
        detail::attach_clique(edges, next, anchor, rng.between(2, p[1]) - 1);
      }
      return Graph::from_edges(next, edges);
    }
    case Family::RandomThickLeaved: {
      arity(1, 2);
      const auto max_clique = p.size() > 1 ? p[1] : 6;
      require(p[0] >= 2 && p[0] <= 4096, "random_thick_leaved: 2 <= tree_n <= 4096");
      require(max_clique >= 2 && max_clique <= 16, "random_thick_leaved: 2 <= max_clique <= 16");
      const Graph tree = detail::random_tree(p[0], rng);
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (const Edge& e : tree.edges()) edges.emplace_back(e.u, e.v);
      Vertex next = static_cast<Vertex>(tree.order());
      for (Vertex v = 0; v < tree.order(); ++v) {
        if (tree.degree(v) != 1 || !rng.coin()) continue;
        detail::attach_clique(edges, next, v, rng.between(2, max_clique) - 1);
      }
      return Graph::from_edges(next, edges);
    }
  }
  throw Error(ErrorCode::BadParameters, "unknown family");
}

}  // namespace edgegp
