#pragma once

// Internal and pendant paths, and the block-graph reduction that contracts
// internal paths and shortens pendant paths to a single edge.

#include <algorithm>
#include <numeric>
#include <vector>

#include "edgegp/blocks.hpp"
#include "edgegp/graph.hpp"

namespace edgegp {

/// Vertex sequence p1..pk with edge ids e1..e(k-1).
struct GraphPath {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return vertices.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
};

struct PathsCatalog {
  std::vector<GraphPath> internal_paths;
  std::vector<GraphPath> pendant_paths;
};

/// Maximal paths that start at a vertex of degree >= 3 and run through
/// degree-2 vertices. Internal paths end at another vertex of degree >= 3,
/// pendant paths at a leaf. Each internal path is reported once, oriented
/// from its smaller end vertex; closed walks back to the start are skipped.
inline PathsCatalog find_paths(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedInput, "find_paths");
  PathsCatalog out;
  for (Vertex a = 0; a < g.order(); ++a) {
    if (g.degree(a) < 3) continue;
    for (Vertex first : g.neighbors(a)) {
      GraphPath p{{a}, {}};
      Vertex prev = a;
      Vertex cur = first;
      p.vertices.push_back(cur);
      p.edges.push_back(*g.edge_id(prev, cur));
      while (g.degree(cur) == 2 && cur != a) {
        const auto nb = g.neighbors(cur);
        const Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
        p.edges.push_back(*g.edge_id(cur, nxt));
        p.vertices.push_back(nxt);
        prev = cur;
        cur = nxt;
      }
      if (cur == a) continue;
      if (g.degree(cur) == 1) {
        out.pendant_paths.push_back(std::move(p));
      } else if (g.degree(cur) >= 3) {
        // Walks found from both ends; keep the orientation that starts low.
        // Two distinct paths with identical ends are told apart by their edges.
        if (a < cur) {
          out.internal_paths.push_back(std::move(p));
        }
      }
    }
  }
  return out;
}

/// True when every edge of the path is a bridge of g.
inline bool is_bridge_path(const GraphPath& p, const std::vector<char>& bridges) {
  return std::all_of(p.edges.begin(), p.edges.end(), [&](EdgeId e) { return bridges[e] != 0; });
}

/// Reduced graph plus, for each of its edges, the id of the edge of the input
/// it descends from.
struct Reduction {
  Graph graph;
  std::vector<EdgeId> origin;
};

enum class ReduceOrder { Ascending, Descending };

namespace detail {

/// Rebuilds g keeping only vertices with keep[v] and redirecting vertex v to
/// rep[v]; vertices are re-indexed densely in id order and edges keep their
/// relative order.
inline Reduction rebuild(const Graph& g, const std::vector<EdgeId>& origin,
                         const std::vector<Vertex>& rep, const std::vector<char>& drop_vertex,
                         const std::vector<char>& drop_edge) {
  std::vector<Vertex> new_id(g.order(), 0);
  Vertex next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!drop_vertex[v]) new_id[v] = next++;
  Reduction r{Graph(next), {}};
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (drop_edge[e]) continue;
    const Vertex a = new_id[rep[g.edge(e).u]];
    const Vertex b = new_id[rep[g.edge(e).v]];
    r.graph.add_edge(a, b);
    r.origin.push_back(origin[e]);
  }
  return r;
}

}  // namespace detail

/// Reduction of a connected block graph, tracking where each edge came from.
///
/// Steps run to a fixpoint: first every pendant path with more than one edge
/// is cut back to its first edge; then a single internal path is contracted
/// (ends identified, interior removed, merged vertex keeps the smaller id).
/// Only internal paths made of bridges are contracted; an edge or a two-edge
/// detour inside a complete block is not a separate path of the block tree.
inline Reduction reduce_tracked(const Graph& input, ReduceOrder order = ReduceOrder::Ascending) {
  if (!input.is_connected()) throw Error(ErrorCode::DisconnectedInput, "reduce");
  Reduction cur{input, std::vector<EdgeId>(input.size())};
  std::iota(cur.origin.begin(), cur.origin.end(), EdgeId{0});
  if (!decompose_blocks(input).block_graph)
    throw Error(ErrorCode::NotBlockGraph, "reduce expects a block graph");

  while (true) {
    const Graph& g = cur.graph;
    const auto paths = find_paths(g);
    std::vector<Vertex> rep(g.order());
    std::iota(rep.begin(), rep.end(), Vertex{0});
    std::vector<char> drop_vertex(g.order(), 0), drop_edge(g.size(), 0);

    bool changed = false;
    for (const GraphPath& p : paths.pendant_paths) {
      if (p.length() <= 2) continue;
      for (std::size_t i = 2; i < p.vertices.size(); ++i) drop_vertex[p.vertices[i]] = 1;
      for (std::size_t i = 1; i < p.edges.size(); ++i) drop_edge[p.edges[i]] = 1;
      changed = true;
    }
    if (changed) {
      cur = detail::rebuild(g, cur.origin, rep, drop_vertex, drop_edge);
      continue;
    }

    const auto bridges = bridge_mask(g, decompose_blocks(g));
    std::vector<const GraphPath*> candidates;
    for (const GraphPath& p : paths.internal_paths)
      if (is_bridge_path(p, bridges)) candidates.push_back(&p);
    if (candidates.empty()) break;

    auto key = [](const GraphPath* p) {
      return std::tuple(std::min(p->front(), p->back()), p->length(), p->vertices);
    };
    const GraphPath* pick =
        order == ReduceOrder::Ascending
            ? *std::min_element(candidates.begin(), candidates.end(),
                                [&](auto* a, auto* b) { return key(a) < key(b); })
            : *std::max_element(candidates.begin(), candidates.end(),
                                [&](auto* a, auto* b) { return key(a) < key(b); });
    const Vertex keep = std::min(pick->front(), pick->back());
    const Vertex gone = std::max(pick->front(), pick->back());
    rep[gone] = keep;
    drop_vertex[gone] = 1;
    for (std::size_t i = 1; i + 1 < pick->vertices.size(); ++i) drop_vertex[pick->vertices[i]] = 1;
    for (EdgeId e : pick->edges) drop_edge[e] = 1;
    cur = detail::rebuild(g, cur.origin, rep, drop_vertex, drop_edge);
  }
  return cur;
}

inline Graph reduce(const Graph& g) { return reduce_tracked(g).graph; }

}  // namespace edgegp
