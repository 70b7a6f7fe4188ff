#pragma once

// Exact edge general position number: a maximum subset of E(G) containing no
// conflict triple. gpe_exact is a branch-and-bound search; gpe_bruteforce is
// an independent exhaustive recursion used as an oracle.

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "edgegp/blocks.hpp"
#include "edgegp/distance.hpp"
#include "edgegp/geodesic.hpp"
#include "edgegp/graph.hpp"

namespace edgegp {

inline constexpr std::size_t kBruteForceMaxEdges = 24;

struct BlockBounds {
  std::size_t s_prime = 0;  // lower
  std::size_t upper = 0;    // C(s, 2) + 1
};

struct GpeResult {
  std::size_t value = 0;
  std::vector<EdgeId> witness;  // sorted edge ids
  std::string method;           // bruteforce | branch-and-bound | fastpath:<class>
  std::size_t lower_bound_used = 0;
  std::optional<BlockBounds> bounds;
};

/// A maximal conflict-free set built by inserting edges in ascending
/// conflict-degree order (ties by id).
inline std::vector<EdgeId> greedy_lower(const ConflictSet& cs) {
  const std::size_t m = cs.edge_count();
  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return cs.degree(a) < cs.degree(b); });
  std::vector<char> in(m, 0);
  std::vector<EdgeId> chosen;
  for (EdgeId e : order) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < chosen.size(); ++i)
      for (EdgeId r : cs.thirds(e, chosen[i]))
        if (in[r]) {
          ok = false;
          break;
        }
    if (!ok) continue;
    in[e] = 1;
    chosen.push_back(e);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

inline std::vector<EdgeId> greedy_lower(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedInput, "greedy_lower");
  return greedy_lower(build_conflicts(g));
}

/// Edges at the first vertex of maximum degree.
inline std::vector<EdgeId> max_degree_star(const Graph& g) {
  Vertex best = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > g.degree(best)) best = v;
  if (g.order() == 0) return {};
  auto star = g.incident_edges(best);
  std::sort(star.begin(), star.end());
  return star;
}

inline BlockBounds block_bounds(const BlockDecomposition& d) {
  if (!d.block_graph) throw Error(ErrorCode::NotBlockGraph, "block_bounds");
  return {d.s_prime_by_blocks(), choose2(d.s()) + 1};
}

namespace detail {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

  void subtract(const Bitset& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// First set bit at or after `from`, or `limit` if none.
  std::size_t next(std::size_t from, std::size_t limit) const {
    std::size_t w = from / 64;
    if (w >= words_.size()) return limit;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from % 64));
    while (true) {
      if (cur) return std::min(limit, w * 64 + static_cast<std::size_t>(std::countr_zero(cur)));
      if (++w >= words_.size()) return limit;
      cur = words_[w];
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

/// Depth-first include/exclude search over edges in branching order.
/// Positions, not edge ids, index every bitset.
class BranchAndBound {
 public:
  BranchAndBound(const ConflictSet& cs, std::vector<EdgeId> order)
      : m_(cs.edge_count()), order_(std::move(order)), pair_(m_ * m_, Bitset(m_)) {
    std::vector<std::size_t> pos(m_);
    for (std::size_t p = 0; p < m_; ++p) pos[order_[p]] = p;
    for (std::size_t p = 0; p < m_; ++p)
      for (std::size_t q = p + 1; q < m_; ++q)
        for (EdgeId r : cs.thirds(order_[p], order_[q])) {
          pair_[p * m_ + q].set(pos[r]);
          pair_[q * m_ + p].set(pos[r]);
        }
  }

  std::vector<EdgeId> run(std::vector<EdgeId> incumbent) {
    best_ = std::move(incumbent);
    Bitset avail(m_);
    for (std::size_t p = 0; p < m_; ++p) avail.set(p);
    current_.clear();
    search(avail, 0);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void search(Bitset avail, std::size_t from) {
    const std::size_t p = avail.next(from, m_);
    if (p == m_) {
      if (current_.size() > best_.size()) {
        best_.clear();
        for (std::size_t q : current_) best_.push_back(order_[q]);
      }
      return;
    }
    if (current_.size() + avail.count() <= best_.size()) return;

    avail.reset(p);
    Bitset with = avail;
    for (std::size_t q : current_) with.subtract(pair_[p * m_ + q]);
    current_.push_back(p);
    search(std::move(with), p + 1);
    current_.pop_back();

    search(std::move(avail), p + 1);
  }

  std::size_t m_;
  std::vector<EdgeId> order_;
  std::vector<Bitset> pair_;
  std::vector<std::size_t> current_;
  std::vector<EdgeId> best_;
};

}  // namespace detail

/// Maximum conflict-free edge set by branch and bound.
///
/// Branching order is descending conflict degree, ties by edge id. The
/// incumbent starts as the best of: the star at a maximum-degree vertex, the
/// simplicial edges when G is a block graph, and the greedy set.
inline GpeResult gpe_exact(const Graph& g, const ConflictSet& cs) {
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedInput, "gpe_exact");
  if (g.size() == 0) throw Error(ErrorCode::EmptyEdgeSet, "gpe_exact");

  GpeResult r;
  r.method = "branch-and-bound";
  std::vector<EdgeId> incumbent = max_degree_star(g);
  const auto blocks = decompose_blocks(g);
  if (blocks.block_graph) {
    r.bounds = block_bounds(blocks);
    if (blocks.simplicial_edges.size() > incumbent.size() &&
        is_general_position(cs, blocks.simplicial_edges))
      incumbent = blocks.simplicial_edges;
  }
  if (auto greedy = greedy_lower(cs); greedy.size() > incumbent.size()) incumbent = std::move(greedy);
  r.lower_bound_used = incumbent.size();

  std::vector<EdgeId> order(g.size());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return cs.degree(a) > cs.degree(b); });
  r.witness = detail::BranchAndBound(cs, std::move(order)).run(std::move(incumbent));
  r.value = r.witness.size();
  return r;
}

inline GpeResult gpe_exact(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedInput, "gpe_exact");
  if (g.size() == 0) throw Error(ErrorCode::EmptyEdgeSet, "gpe_exact");
  return gpe_exact(g, build_conflicts(g));
}

/// Exhaustive include/exclude recursion in edge-id order with feasibility
/// checks only. Limited to 24 edges.
inline GpeResult gpe_bruteforce(const Graph& g, const ConflictSet& cs) {
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedInput, "gpe_bruteforce");
  const std::size_t m = g.size();
  if (m > kBruteForceMaxEdges)
    throw Error(ErrorCode::TooLarge, std::to_string(m) + " edges exceeds the brute-force cap of " +
                                         std::to_string(kBruteForceMaxEdges));
  std::vector<char> in(m, 0);
  std::vector<EdgeId> chosen, best;
  auto recurse = [&](auto&& self, EdgeId e) -> void {
    if (e == m) {
      if (chosen.size() > best.size()) best = chosen;
      return;
    }
    bool legal = true;
    for (std::size_t i = 0; legal && i < chosen.size(); ++i)
      for (EdgeId r : cs.thirds(e, chosen[i]))
        if (in[r]) {
          legal = false;
          break;
        }
    if (legal) {
      in[e] = 1;
      chosen.push_back(e);
      self(self, e + 1);
      chosen.pop_back();
      in[e] = 0;
    }
    self(self, e + 1);
  };
  recurse(recurse, 0);
  GpeResult r;
  r.method = "bruteforce";
  r.value = best.size();
  r.witness = std::move(best);
  return r;
}

inline GpeResult gpe_bruteforce(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedInput, "gpe_bruteforce");
  if (g.size() > kBruteForceMaxEdges)
    throw Error(ErrorCode::TooLarge, std::to_string(g.size()) + " edges exceeds the brute-force cap");
  return gpe_bruteforce(g, build_conflicts(g));
}

enum class CertifyReason {
  Ok,
  UnknownEdge,
  DuplicateEdge,
  SizeMismatch,
  AboveEdgeCount,
  ConflictViolated,
  BelowDeltaBound,
};

inline std::string_view to_string(CertifyReason r) {
  switch (r) {
    case CertifyReason::Ok: return "Ok";
    case CertifyReason::UnknownEdge: return "UnknownEdge";
    case CertifyReason::DuplicateEdge: return "DuplicateEdge";
    case CertifyReason::SizeMismatch: return "SizeMismatch";
    case CertifyReason::AboveEdgeCount: return "AboveEdgeCount";
    case CertifyReason::ConflictViolated: return "ConflictViolated";
    case CertifyReason::BelowDeltaBound: return "BelowDeltaBound";
  }
  return "Unknown";
}

struct Certificate {
  bool ok = false;
  CertifyReason reason = CertifyReason::Ok;
  explicit operator bool() const { return ok; }
};

/// Witness is a conflict-free set of the claimed size, and the claimed value
/// respects m >= value >= max degree.
inline Certificate certify(const Graph& g, const GpeResult& r) {
  auto fail = [](CertifyReason why) { return Certificate{false, why}; };
  std::vector<char> seen(g.size(), 0);
  for (EdgeId e : r.witness) {
    if (e >= g.size()) return fail(CertifyReason::UnknownEdge);
    if (seen[e]) return fail(CertifyReason::DuplicateEdge);
    seen[e] = 1;
  }
  if (r.witness.size() != r.value) return fail(CertifyReason::SizeMismatch);
  if (r.value > g.size()) return fail(CertifyReason::AboveEdgeCount);
  // Conflicts are component-local, so a disconnected graph is checked per part.
  for (const auto& comp : g.components()) {
    const Graph h = g.induced(comp);
    if (h.size() == 0) continue;
    std::vector<std::int64_t> local(g.order(), -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<std::int64_t>(i);
    std::vector<EdgeId> part;
    for (EdgeId e : r.witness) {
      const Edge& ed = g.edge(e);
      if (local[ed.u] >= 0)
        part.push_back(*h.edge_id(static_cast<Vertex>(local[ed.u]), static_cast<Vertex>(local[ed.v])));
    }
    if (!is_general_position(h, part)) return fail(CertifyReason::ConflictViolated);
  }
  if (r.value < g.max_degree()) return fail(CertifyReason::BelowDeltaBound);
  return {true, CertifyReason::Ok};
}

}  // namespace edgegp
