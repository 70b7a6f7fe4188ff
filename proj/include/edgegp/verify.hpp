#pragma once

// Theorem sweeps: evaluate a structural statement about gp_e on every graph of
// a corpus, with the branch-and-bound value as ground truth and the
// brute-force oracle as a cross-check wherever it applies.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "edgegp/classes.hpp"
#include "edgegp/enumerate.hpp"
#include "edgegp/io.hpp"
#include "edgegp/isomorphism.hpp"
#include "edgegp/paths.hpp"
#include "edgegp/solver.hpp"

namespace edgegp {

enum class Theorem {
  Oracle,        // branch and bound agrees with brute force
  Diam2,         // gp_e = m  iff  diam <= 2
  M1,            // gp_e = m - 1  iff  G in G1 u G2   (n >= 4)
  Gpe2,          // gp_e = 2  iff  path               (m >= 2)
  Gpe3,          // gp_e = 3  iff  K3 or tree with three leaves
  Gpe4Nec,       // gp_e = 4  =>  Delta <= 4, and bipartite when Delta = 4
  BlockBounds,   // s' <= gp_e <= C(s,2) + 1 on block graphs
  Reduction,     // gp_e(G) = gp_e(R(G)) on block graphs
  ThickLeaved,   // gp_e = sum C(n(B),2) over simplicial blocks
  SmallClasses,  // cycles and trees
};

inline constexpr std::pair<Theorem, std::string_view> kTheoremTags[] = {
    {Theorem::Oracle, "oracle"},
    {Theorem::Diam2, "diam2"},
    {Theorem::M1, "m1"},
    {Theorem::Gpe2, "gpe2"},
    {Theorem::Gpe3, "gpe3"},
    {Theorem::Gpe4Nec, "gpe4nec"},
    {Theorem::BlockBounds, "blockbounds"},
    {Theorem::Reduction, "reduction"},
    {Theorem::ThickLeaved, "thickleaved"},
    {Theorem::SmallClasses, "smallclasses"},
};

inline std::optional<Theorem> parse_theorem(std::string_view tag) {
  for (auto [t, s] : kTheoremTags)
    if (s == tag) return t;
  return std::nullopt;
}

inline std::string_view to_string(Theorem t) {
  for (auto [u, s] : kTheoremTags)
    if (u == t) return s;
  return "unknown";
}

struct Failure {
  std::string graph;  // graph6, or an edge list for graphs above 62 vertices
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::string theorem;
  std::string scope;
  std::size_t checked = 0;
  std::vector<Failure> failures;
  double wall_seconds = 0;
  bool pass = false;
};

/// Graphs to sweep: enumeration masks (with their order) and explicit graphs.
struct Corpus {
  std::string description;
  std::vector<std::pair<std::uint8_t, std::uint64_t>> masks;
  std::vector<Graph> graphs;

  std::size_t size() const { return masks.size() + graphs.size(); }
  Graph at(std::size_t i) const {
    if (i < masks.size()) return graph_from_mask(masks[i].first, masks[i].second);
    return graphs[i - masks.size()];
  }
  void describe(const std::string& part) {
    description += description.empty() ? part : "; " + part;
  }
};

inline void add_enumeration(Corpus& c, std::size_t n_lo, std::size_t n_hi) {
  for (std::size_t n = n_lo; n <= n_hi; ++n)
    for (auto mask : connected_masks(n)) c.masks.emplace_back(static_cast<std::uint8_t>(n), mask);
  c.describe("all connected labelled graphs, n=" + std::to_string(n_lo) + ".." + std::to_string(n_hi));
}

inline void add_samples(Corpus& c, std::size_t n_lo, std::size_t n_hi, std::size_t k,
                        std::uint64_t seed) {
  for (std::size_t n = n_lo; n <= n_hi; ++n)
    for (auto mask : sample_connected_masks(n, k, seed + n))
      c.masks.emplace_back(static_cast<std::uint8_t>(n), mask);
  c.describe(std::to_string(k) + " sampled connected labelled graphs per n=" +
             std::to_string(n_lo) + ".." + std::to_string(n_hi) + " (seed " + std::to_string(seed) +
             ")");
}

inline std::string graph_code(const Graph& g) {
  if (g.order() <= kMaxGraph6Order) return write_graph6(g);
  std::string s = write_edgelist(g);
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

// ---------------------------------------------------------------------------
// Random corpora

/// Seeded random block graphs whose reduction has at most `max_reduced_edges`
/// edges and which themselves have at most `max_edges` edges. Shape
/// parameters are drawn from the same seed: 1..8 blocks, cliques up to 2..5.
inline std::vector<Graph> random_block_graphs(std::size_t count, std::uint64_t seed,
                                              std::size_t max_edges = 40,
                                              std::size_t max_reduced_edges = 24) {
  std::vector<Graph> out;
  for (std::uint64_t s = seed; out.size() < count; ++s) {
    Xorshift64Star shape(s ^ 0xB10C);
    const auto blocks = shape.between(1, 8);
    const auto clique = shape.between(2, 5);
    Graph g = generate({Family::RandomBlockGraph, {blocks, clique}, s});
    if (g.size() > max_edges || reduce(g).size() > max_reduced_edges) continue;
    out.push_back(std::move(g));
  }
  return out;
}

/// Seeded random thick-leaved trees on 2..8 tree vertices, cliques 2..6,
/// with at most `max_edges` edges.
inline std::vector<Graph> random_thick_leaved_trees(std::size_t count, std::uint64_t seed,
                                                    std::size_t max_edges = 24) {
  std::vector<Graph> out;
  for (std::uint64_t s = seed; out.size() < count; ++s) {
    Xorshift64Star shape(s ^ 0x7EAF);
    Graph g = generate({Family::RandomThickLeaved, {shape.between(2, 8), 6}, s});
    if (g.size() > max_edges) continue;
    out.push_back(std::move(g));
  }
  return out;
}

/// Seeded random trees on 2..20 vertices.
inline std::vector<Graph> random_trees(std::size_t count, std::uint64_t seed) {
  std::vector<Graph> out;
  for (std::uint64_t s = seed; out.size() < count; ++s) {
    Xorshift64Star shape(s ^ 0x7EE);
    out.push_back(generate({Family::RandomTree, {shape.between(2, 20)}, s}));
  }
  return out;
}

inline Corpus default_corpus(Theorem t, std::uint64_t seed) {
  Corpus c;
  switch (t) {
    case Theorem::Oracle:
      add_enumeration(c, 1, 5);
      add_samples(c, 6, 7, 5000, seed);
      break;
    case Theorem::Diam2:
    case Theorem::Gpe2:
    case Theorem::Gpe3:
    case Theorem::Gpe4Nec:
      add_enumeration(c, 1, 6);
      break;
    case Theorem::M1:
      add_enumeration(c, 4, 6);
      break;
    case Theorem::BlockBounds:
    case Theorem::Reduction:
      c.graphs = random_block_graphs(200, seed);
      c.describe("200 random block graphs (seed " + std::to_string(seed) + ")");
      break;
    case Theorem::ThickLeaved:
      c.graphs = random_thick_leaved_trees(100, seed);
      c.describe("100 random thick-leaved trees (seed " + std::to_string(seed) + ")");
      break;
    case Theorem::SmallClasses: {
      for (std::uint64_t n = 3; n <= 12; ++n) c.graphs.push_back(generate({Family::Cycle, {n}}));
      for (std::uint64_t n = 2; n <= 12; ++n) c.graphs.push_back(generate({Family::Path, {n}}));
      for (std::uint64_t k = 1; k <= 10; ++k) c.graphs.push_back(generate({Family::Star, {k}}));
      auto trees = random_trees(200, seed);
      c.graphs.insert(c.graphs.end(), trees.begin(), trees.end());
      c.describe("cycles n=3..12, paths n=2..12, stars 1..10 leaves, 200 random trees (seed " +
                 std::to_string(seed) + ")");
      break;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Per-graph checks

struct GroundTruth {
  std::size_t value = 0;
  std::optional<Failure> problem;
};

/// Branch-and-bound value, certified, and compared with brute force when
/// m <= 24.
inline GroundTruth ground_truth(const Graph& g, const ConflictSet& cs) {
  GroundTruth t;
  if (g.size() == 0) return t;
  const auto exact = gpe_exact(g, cs);
  t.value = exact.value;
  if (auto cert = certify(g, exact); !cert) {
    t.problem = Failure{graph_code(g), "certified witness", std::string(to_string(cert.reason))};
    return t;
  }
  if (g.size() <= kBruteForceMaxEdges) {
    const auto brute = gpe_bruteforce(g, cs);
    if (brute.value != exact.value)
      t.problem = Failure{graph_code(g), "bruteforce=" + std::to_string(brute.value),
                          "exact=" + std::to_string(exact.value)};
  }
  return t;
}

inline std::size_t exact_value(const Graph& g) {
  return g.size() == 0 ? 0 : gpe_exact(g).value;
}

namespace detail {

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::optional<Failure> mismatch(const Graph& g, std::string expected, std::string got) {
  return Failure{graph_code(g), std::move(expected), std::move(got)};
}

}  // namespace detail

/// nullopt when the statement holds for g (or does not apply to it).
inline std::optional<Failure> check_theorem(Theorem t, const Graph& g) {
  using detail::mismatch;
  using detail::yes_no;
  if (!g.is_connected()) return mismatch(g, "connected graph", "disconnected");
  const auto cs = g.size() > 0 ? build_conflicts(g) : ConflictSet(0);
  const auto truth = ground_truth(g, cs);
  if (truth.problem) return truth.problem;
  const std::size_t v = truth.value;
  const std::size_t m = g.size();

  switch (t) {
    case Theorem::Oracle: {
      if (auto fast = gpe_fastpath(g); fast && fast->value != v)
        return mismatch(g, "exact=" + std::to_string(v),
                        fast->tag + "=" + std::to_string(fast->value));
      return std::nullopt;
    }
    case Theorem::Diam2: {
      const bool lhs = v == m, rhs = diameter(apsp(g)) <= 2;
      if (lhs != rhs) return mismatch(g, "gpe==m is " + yes_no(rhs), "gpe=" + std::to_string(v));
      return std::nullopt;
    }
    case Theorem::M1: {
      if (g.order() < 4) return std::nullopt;
      const auto w1 = in_family_G1(g);
      const auto w2 = in_family_G2(g);
      if (w1 && !replay(g, *w1)) return mismatch(g, "G1 witness replays", "replay failed");
      if (w2 && !replay(g, *w2)) return mismatch(g, "G2 witness replays", "replay failed");
      const bool lhs = m >= 1 && v == m - 1, rhs = w1 || w2;
      if (lhs != rhs)
        return mismatch(g, "gpe==m-1 is " + yes_no(rhs),
                        "gpe=" + std::to_string(v) + ", m=" + std::to_string(m));
      return std::nullopt;
    }
    case Theorem::Gpe2: {
      if (m < 2) return std::nullopt;
      const bool rhs = is_path_graph(g);
      if ((v == 2) != rhs) return mismatch(g, "gpe==2 is " + yes_no(rhs), "gpe=" + std::to_string(v));
      return std::nullopt;
    }
    case Theorem::Gpe3: {
      if (m < 2) return std::nullopt;
      const bool k3 = g.order() == 3 && m == 3;
      const bool rhs = k3 || (is_tree(g) && leaf_count(g) == 3);
      if ((v == 3) != rhs) return mismatch(g, "gpe==3 is " + yes_no(rhs), "gpe=" + std::to_string(v));
      return std::nullopt;
    }
    case Theorem::Gpe4Nec: {
      if (!necessary_gpe4_check(g, v))
        return mismatch(g, "Delta<=4 and bipartite when Delta=4",
                        "Delta=" + std::to_string(g.max_degree()) +
                            ", bipartite=" + yes_no(is_bipartite(g)));
      return std::nullopt;
    }
    case Theorem::BlockBounds: {
      const auto d = decompose_blocks(g);
      if (!d.block_graph) return std::nullopt;
      const auto b = block_bounds(d);
      if (v < b.s_prime || v > b.upper)
        return mismatch(g, std::to_string(b.s_prime) + "<=gpe<=" + std::to_string(b.upper),
                        "gpe=" + std::to_string(v));
      return std::nullopt;
    }
    case Theorem::Reduction: {
      if (!decompose_blocks(g).block_graph) return std::nullopt;
      const Graph r = reduce(g);
      if (!decompose_blocks(r).block_graph) return mismatch(g, "R(G) block graph", "not a block graph");
      if (!(reduce(r) == r)) return mismatch(g, "R(R(G)) = R(G)", "R not idempotent");
      if (!is_isomorphic(reduce_tracked(g, ReduceOrder::Descending).graph, r))
        return mismatch(g, "R(G) independent of contraction order", "orders disagree");
      const auto rv = ground_truth(r, r.size() > 0 ? build_conflicts(r) : ConflictSet(0));
      if (rv.problem) return rv.problem;
      if (rv.value != v)
        return mismatch(g, "gpe(R(G))=" + std::to_string(v), "gpe(R(G))=" + std::to_string(rv.value));
      return std::nullopt;
    }
    case Theorem::ThickLeaved: {
      const auto d = decompose_blocks(g);
      if (!is_thick_leaved_tree(g, d)) return std::nullopt;
      if (thick_leaved_value(d) != v)
        return mismatch(g, "sum C(n(B),2)=" + std::to_string(thick_leaved_value(d)),
                        "gpe=" + std::to_string(v));
      return std::nullopt;
    }
    case Theorem::SmallClasses: {
      std::optional<std::size_t> expected;
      if (is_cycle_graph(g)) expected = g.order() <= 5 ? g.order() : 4;
      if (is_tree(g)) {
        expected = pendant_edge_count(g);
        const auto rv = exact_value(reduce(g));
        if (rv != *expected)
          return mismatch(g, "pendant edges=" + std::to_string(*expected),
                          "gpe(R(T))=" + std::to_string(rv));
      }
      if (!expected) return std::nullopt;
      if (v != *expected)
        return mismatch(g, std::to_string(*expected), "gpe=" + std::to_string(v));
      if (auto fast = gpe_fastpath(g); !fast || fast->value != v)
        return mismatch(g, "fastpath=" + std::to_string(v), fast ? std::to_string(fast->value) : "none");
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Sweeps

inline std::size_t default_jobs() {
  if (const char* env = std::getenv("EDGEGP_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(i) for i in [0, count) on `jobs` threads.
template <class Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1, std::memory_order_relaxed)) < count;) fn(i);
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  std::vector<std::jthread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
}

inline VerificationReport verify(Theorem t, const Corpus& corpus, std::size_t jobs) {
  const auto start = std::chrono::steady_clock::now();
  std::mutex lock;
  std::vector<std::pair<std::size_t, Failure>> failures;
  parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    std::optional<Failure> f;
    const Graph g = corpus.at(i);
    try {
      f = check_theorem(t, g);
    } catch (const std::exception& ex) {
      f = Failure{graph_code(g), "no error", ex.what()};
    }
    if (f) {
      std::lock_guard guard(lock);
      failures.emplace_back(i, std::move(*f));
    }
  });
  std::sort(failures.begin(), failures.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  VerificationReport r;
  r.theorem = std::string(to_string(t));
  r.scope = corpus.description;
  r.checked = corpus.size();
  for (auto& [i, f] : failures) r.failures.push_back(std::move(f));
  r.pass = r.failures.empty();
  r.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace edgegp
