#pragma once

// Isomorphism test for small graphs: joint colour refinement followed by a
// backtracking search restricted to matching colour classes.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "edgegp/graph.hpp"

namespace edgegp {

namespace detail {

inline void refine_jointly(const Graph& a, const Graph& b, std::vector<std::size_t>& ca,
                           std::vector<std::size_t>& cb) {
  ca.resize(a.order());
  cb.resize(b.order());
  for (Vertex v = 0; v < a.order(); ++v) ca[v] = a.degree(v);
  for (Vertex v = 0; v < b.order(); ++v) cb[v] = b.degree(v);
  std::size_t classes = 0;
  while (true) {
    using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
    std::map<Signature, std::size_t> ids;
    auto signature = [](const Graph& g, const std::vector<std::size_t>& c, Vertex v) {
      Signature s{c[v], {}};
      for (Vertex w : g.neighbors(v)) s.second.push_back(c[w]);
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::vector<Signature> sa, sb;
    for (Vertex v = 0; v < a.order(); ++v) sa.push_back(signature(a, ca, v));
    for (Vertex v = 0; v < b.order(); ++v) sb.push_back(signature(b, cb, v));
    for (const auto& s : sa) ids.emplace(s, 0);
    for (const auto& s : sb) ids.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (Vertex v = 0; v < a.order(); ++v) ca[v] = ids[sa[v]];
    for (Vertex v = 0; v < b.order(); ++v) cb[v] = ids[sb[v]];
    if (ids.size() == classes) return;
    classes = ids.size();
  }
}

}  // namespace detail

/// A vertex map phi with uv in E(a) iff phi(u)phi(v) in E(b), if one exists.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.order();
  std::vector<std::size_t> ca, cb;
  detail::refine_jointly(a, b, ca, cb);
  {
    auto ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return std::nullopt;
  }
  std::map<std::size_t, std::size_t> class_size;
  for (auto c : ca) ++class_size[c];

  // Place vertices so each one has as many placed neighbours as possible.
  std::vector<Vertex> order;
  std::vector<char> placed(n, 0);
  std::vector<std::size_t> placed_nb(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (!found || placed_nb[v] > placed_nb[pick] ||
          (placed_nb[v] == placed_nb[pick] && class_size[ca[v]] < class_size[ca[pick]])) {
        pick = v;
        found = true;
      }
    }
    placed[pick] = 1;
    order.push_back(pick);
    for (Vertex w : a.neighbors(pick)) ++placed_nb[w];
  }

  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<Vertex> phi(n, kUnset);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const Vertex v = order[depth];
    for (Vertex x = 0; x < n; ++x) {
      if (used[x] || cb[x] != ca[v]) continue;
      bool ok = true;
      for (std::size_t i = 0; ok && i < depth; ++i) {
        const Vertex u = order[i];
        ok = a.adjacent(u, v) == b.adjacent(phi[u], x);
      }
      if (!ok) continue;
      phi[v] = x;
      used[x] = 1;
      if (self(self, depth + 1)) return true;
      used[x] = 0;
      phi[v] = kUnset;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return phi;
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace edgegp
