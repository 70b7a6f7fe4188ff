#pragma once

#include <algorithm>
#include <vector>

#include "edgegp/graph.hpp"

namespace edgegp {

struct Block {
  std::vector<Vertex> vertices;  // sorted
  std::vector<EdgeId> edges;     // sorted
  std::size_t cut_count = 0;
  std::size_t simplicial_count = 0;  // vertices of the block that are simplicial in G
  bool thick = false;                // at least three vertices
  bool pendant = false;              // exactly one cut vertex
  bool complete = false;
  bool simplicial = false;           // holds at least one simplicial vertex
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<Vertex> cut_vertices;         // sorted
  std::vector<Vertex> simplicial_vertices;  // sorted
  std::vector<EdgeId> simplicial_edges;     // sorted
  std::vector<std::size_t> edge_block;      // block index of each edge
  bool block_graph = false;                 // every block complete

  std::size_t s() const { return simplicial_vertices.size(); }
  std::size_t s_prime() const { return simplicial_edges.size(); }

  /// Sum over simplicial blocks of C(b_i, 2) - C(b_i - s_i, 2). Counts the
  /// simplicial edges exactly when every block is complete.
  std::size_t s_prime_by_blocks() const {
    std::size_t total = 0;
    for (const Block& b : blocks)
      if (b.simplicial)
        total += choose2(b.vertices.size()) - choose2(b.vertices.size() - b.simplicial_count);
    return total;
  }

  bool is_cut(Vertex v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
  }
};

inline bool is_simplicial_vertex(const Graph& g, Vertex v) {
  const auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!g.adjacent(nb[i], nb[j])) return false;
  return true;
}

namespace detail {

/// Biconnected components by the lowpoint method with an explicit edge stack.
/// Returns the edge sets of the blocks and marks cut vertices.
inline std::vector<std::vector<EdgeId>> biconnected_edge_sets(const Graph& g,
                                                              std::vector<char>& is_cut) {
  const std::size_t n = g.order();
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  std::vector<std::uint32_t> disc(n, kUnseen), low(n, 0);
  std::vector<std::size_t> next(n, 0);
  std::vector<EdgeId> parent_edge(n, ~EdgeId{0});
  std::vector<EdgeId> edge_stack;
  std::vector<std::vector<EdgeId>> out;
  is_cut.assign(n, 0);
  std::uint32_t clock = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnseen) continue;
    std::size_t root_children = 0;
    std::vector<Vertex> call{root};
    disc[root] = low[root] = clock++;
    while (!call.empty()) {
      const Vertex v = call.back();
      const auto nb = g.neighbors(v);
      if (next[v] < nb.size()) {
        const Vertex w = nb[next[v]++];
        const EdgeId e = *g.edge_id(v, w);
        if (e == parent_edge[v]) continue;
        if (disc[w] == kUnseen) {
          edge_stack.push_back(e);
          parent_edge[w] = e;
          disc[w] = low[w] = clock++;
          if (v == root) ++root_children;
          call.push_back(w);
        } else if (disc[w] < disc[v]) {
          edge_stack.push_back(e);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      call.pop_back();
      if (call.empty()) break;
      const Vertex u = call.back();
      low[u] = std::min(low[u], low[v]);
      if (low[v] >= disc[u]) {
        if (u != root) is_cut[u] = 1;
        std::vector<EdgeId> block;
        const EdgeId tree_edge = parent_edge[v];
        while (true) {
          const EdgeId top = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(top);
          if (top == tree_edge) break;
        }
        std::sort(block.begin(), block.end());
        out.push_back(std::move(block));
      }
    }
    if (root_children >= 2) is_cut[root] = 1;
  }
  return out;
}

}  // namespace detail

/// Blocks, cut vertices and simplicial objects of a connected graph.
inline BlockDecomposition decompose_blocks(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedInput, "decompose_blocks");
  BlockDecomposition d;
  std::vector<char> is_cut;
  auto edge_sets = detail::biconnected_edge_sets(g, is_cut);

  std::vector<char> simplicial(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    simplicial[v] = is_simplicial_vertex(g, v) ? 1 : 0;
    if (simplicial[v]) d.simplicial_vertices.push_back(v);
    if (is_cut[v]) d.cut_vertices.push_back(v);
  }
  for (EdgeId e = 0; e < g.size(); ++e)
    if (simplicial[g.edge(e).u] || simplicial[g.edge(e).v]) d.simplicial_edges.push_back(e);

  if (g.order() == 1) edge_sets.emplace_back();  // K1 is a single edgeless block

  d.edge_block.assign(g.size(), 0);
  d.block_graph = true;
  for (auto& edges : edge_sets) {
    Block b;
    if (edges.empty()) {
      b.vertices = {0};
    } else {
      for (EdgeId e : edges) {
        b.vertices.push_back(g.edge(e).u);
        b.vertices.push_back(g.edge(e).v);
        d.edge_block[e] = d.blocks.size();
      }
      std::sort(b.vertices.begin(), b.vertices.end());
      b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    }
    b.edges = std::move(edges);
    for (Vertex v : b.vertices) {
      b.cut_count += is_cut[v];
      b.simplicial_count += simplicial[v];
    }
    b.thick = b.vertices.size() >= 3;
    b.pendant = b.cut_count == 1;
    b.complete = b.edges.size() == choose2(b.vertices.size());
    b.simplicial = b.simplicial_count > 0;
    d.block_graph = d.block_graph && b.complete;
    d.blocks.push_back(std::move(b));
  }
  std::sort(d.blocks.begin(), d.blocks.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  for (std::size_t i = 0; i < d.blocks.size(); ++i)
    for (EdgeId e : d.blocks[i].edges) d.edge_block[e] = i;
  if (d.block_graph && d.s_prime() != d.s_prime_by_blocks())
    throw std::logic_error("simplicial edge count disagrees with per-block count");
  return d;
}

inline bool is_block_graph(const Graph& g) { return decompose_blocks(g).block_graph; }

/// Edges whose removal disconnects the graph.
inline std::vector<char> bridge_mask(const Graph& g, const BlockDecomposition& d) {
  std::vector<char> bridge(g.size(), 0);
  for (const Block& b : d.blocks)
    if (b.edges.size() == 1) bridge[b.edges.front()] = 1;
  return bridge;
}

}  // namespace edgegp
