#pragma once

// Hand-transcribed test graphs. Vertex x_i of each drawing is vertex i-1.

#include <utility>
#include <vector>

#include "edgegp/graph.hpp"

namespace edgegp::fixtures {

inline Graph from_one_based(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [u, v] : edges)
    if (!g.adjacent(u - 1, v - 1)) g.add_edge(u - 1, v - 1);
  return g;
}

/// Petersen graph (outer 5-cycle x1..x5, inner pentagram x6..x10) with the
/// pendant edge x4x11.
inline Graph z1() {
  return from_one_based(11, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                             {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6},
                             {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
                             {4, 11}});
}

/// Central edge x10x2; common neighbours x1,x15,x7,x8,x9 induce P3 u P2,
/// x11..x14 (private to x10) induce C4, x3..x6 (private to x2) induce K2 u 2K1.
inline Graph z2() {
  return from_one_based(15, {{1, 2},   {2, 3},   {2, 4},   {4, 5},   {5, 2},   {2, 6},
                             {2, 7},   {7, 8},   {8, 9},   {9, 10},  {10, 11}, {11, 12},
                             {12, 13}, {13, 14}, {14, 10}, {10, 9},  {9, 2},   {10, 8},
                             {8, 2},   {10, 7},  {7, 2},   {10, 15}, {15, 2},  {10, 1},
                             {1, 2},   {1, 15},  {10, 2},  {10, 11}, {10, 12}, {10, 13},
                             {10, 14}, {11, 14}});
}

/// Chain of five 4-cycles.
inline Graph g5() {
  return from_one_based(16, {{1, 2},  {2, 3},  {3, 4},   {4, 5},   {6, 7},   {7, 8},  {8, 9},
                             {9, 10}, {10, 11}, {11, 8}, {8, 12},  {12, 6},  {5, 13}, {13, 3},
                             {3, 14}, {14, 1}, {5, 15},  {15, 6},  {6, 16},  {16, 5}});
}

/// K4 on x2,x3,x7,x8 joined by the bridge x3x4 to the triangle x4,x5,x6.
/// Vertex x1 is absent from the drawing, so ids are shifted by two.
inline Graph g_prime() {
  Graph g(7);
  const std::vector<std::pair<Vertex, Vertex>> e = {{2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4},
                                                    {7, 8}, {2, 7}, {7, 3}, {3, 8}, {8, 2}};
  for (auto [u, v] : e) g.add_edge(u - 2, v - 2);
  return g;
}

/// K4 on x2,x3,x6,x7 with pendant paths x2-x1 and x3-x4-x5.
inline Graph g_double_prime() {
  return from_one_based(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {6, 7}, {6, 3}, {3, 7}, {2, 7}});
}

}  // namespace edgegp::fixtures
