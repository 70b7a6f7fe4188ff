// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Sweeps use the default seeded corpora (seed 1).

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "edgegp.hpp"
#include "drawn_graphs.hpp"

using namespace edgegp;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

bool sweep(Outcome& o, Theorem t) {
  const auto r = verify(t, default_corpus(t, kSeed), default_jobs());
  o.detail << ' ' << r.theorem << '=' << r.checked << '/' << r.failures.size() << "f/"
           << static_cast<int>(r.wall_seconds * 10) / 10.0 << 's';
  for (std::size_t i = 0; i < r.failures.size() && i < 3; ++i)
    o.detail << " {" << r.failures[i].graph << " expected " << r.failures[i].expected << " got "
             << r.failures[i].got << '}';
  o.require(r.pass, r.theorem + " sweep");
  return r.pass;
}

std::size_t value(const Graph& g) { return gpe_exact(g).value; }

// ---------------------------------------------------------------------------

void oracle_equivalence(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  sweep(o, Theorem::Oracle);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 300, "runtime under 5 minutes");
}

void small_classes(Outcome& o) {
  for (std::uint64_t n = 3; n <= 12; ++n) {
    const Graph c = generate({Family::Cycle, {n}});
    const std::size_t want = n <= 5 ? n : 4;
    o.require(value(c) == want && gpe_fastpath(c)->value == want,
              "cycle " + std::to_string(n));
  }
  std::size_t trees = 0, solved = 0;
  for (const Graph& t : random_trees(200, kSeed)) {
    ++trees;
    const auto fast = gpe_fastpath(t);
    const std::size_t leaves = leaf_count(t);
    // K2 has two leaves but only one edge.
    const std::size_t want = t.order() == 2 ? 1 : leaves;
    o.require(fast && fast->value == want, "fast path on tree " + write_graph6(t));
    const Graph r = reduce(t);
    if (t.size() <= kBruteForceMaxEdges) {
      ++solved;
      o.require(value(r) == want && value(t) == want, "solver on tree " + write_graph6(t));
    }
  }
  o.detail << " cycles=3..12 trees=" << trees << " solver-checked=" << solved;
  sweep(o, Theorem::SmallClasses);
}

void diameter_two(Outcome& o) { sweep(o, Theorem::Diam2); }

void one_below_size(Outcome& o) {
  sweep(o, Theorem::M1);
  const Graph z1 = fixtures::z1();
  const auto w1 = in_family_G1(z1);
  o.require(value(z1) == 15 && z1.size() == 16, "petersen+pendant value 15");
  o.require(w1 && replay(z1, *w1), "petersen+pendant first-family witness");
  const Graph z2 = fixtures::z2();
  const auto w2 = in_family_G2(z2);
  o.require(w2 && replay(z2, *w2), "second-family witness for the drawn graph");
  o.require(value(z2) == z2.size() - 1, "drawn graph value m-1");
  o.detail << " Z1=" << value(z1) << " Z2=" << value(z2) << "/m=" << z2.size();
}

void values_two_and_three(Outcome& o) {
  sweep(o, Theorem::Gpe2);
  sweep(o, Theorem::Gpe3);
}

void value_four(Outcome& o) { sweep(o, Theorem::Gpe4Nec); }

void drawn_values(Outcome& o) {
  for (std::uint64_t k = 1; k <= 5; ++k) {
    const Graph g = generate({Family::ChainGk, {k}});
    o.require(value(g) == 4 && gpe_bruteforce(g).value == 4, "chain G_" + std::to_string(k));
  }
  o.require(is_isomorphic(generate({Family::ChainGk, {5}}), fixtures::g5()), "G_5 drawing");
  const Graph gp = fixtures::g_prime();
  o.require(value(gp) == 9 && gpe_bruteforce(gp).value == 9, "G' = 9");
  const Graph gpp = fixtures::g_double_prime();
  o.require(value(gpp) == 7 && gpe_bruteforce(gpp).value == 7, "G'' = 7");
  const auto b = block_bounds(gpp);
  o.require(b.s_prime == 7 && b.upper == choose2(4) + 1 && b.upper == 7, "G'' bounds");
  o.detail << " G_1..5=4 G'=" << value(gp) << " G''=" << value(gpp) << " bounds=(" << b.s_prime
           << ',' << b.upper << ')';
}

void block_graphs(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  sweep(o, Theorem::BlockBounds);
  sweep(o, Theorem::Reduction);
  sweep(o, Theorem::ThickLeaved);
  for (const Graph& g : random_block_graphs(200, kSeed))
    o.require(reduce(g).size() <= kBruteForceMaxEdges, "reduced size cap");
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 180, "runtime under 3 minutes");
}

void properties(Outcome& o) {
  std::size_t graphs = 0, triples = 0, subsets = 0, certified = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      ++graphs;
      if (g.size() == 0) continue;
      const auto d = apsp(g);
      const auto cs = build_conflicts(g, d);

      // Triples found by walking every enumerated geodesic.
      std::set<ConflictTriple> walked;
      for (Vertex s = 0; s < g.order(); ++s)
        for (Vertex t = s + 1; t < g.order(); ++t)
          for (const auto& p : enumerate_geodesics(g, s, t)) {
            std::vector<EdgeId> on;
            for (std::size_t i = 0; i + 1 < p.size(); ++i) on.push_back(*g.edge_id(p[i], p[i + 1]));
            std::sort(on.begin(), on.end());
            for (std::size_t a = 0; a < on.size(); ++a)
              for (std::size_t b = a + 1; b < on.size(); ++b)
                for (std::size_t c = b + 1; c < on.size(); ++c) walked.insert({on[a], on[b], on[c]});
          }
      for (EdgeId a = 0; a < g.size(); ++a)
        for (EdgeId b = a + 1; b < g.size(); ++b)
          for (EdgeId c = b + 1; c < g.size(); ++c) {
            ++triples;
            const bool expect = walked.count({a, b, c}) > 0;
            if (on_common_geodesic(g.edge(a), g.edge(b), g.edge(c), d) != expect ||
                cs.contains(a, b, c) != expect)
              o.require(false, "triple test on " + write_graph6(g));
          }

      // Every subset of an optimal set stays in general position.
      const auto exact = gpe_exact(g, cs);
      const auto& w = exact.witness;
      for (std::uint32_t sub = 0; sub < (1u << w.size()); ++sub) {
        std::vector<EdgeId> part;
        for (std::size_t i = 0; i < w.size(); ++i)
          if (sub >> i & 1) part.push_back(w[i]);
        ++subsets;
        if (!is_general_position(cs, part)) o.require(false, "hereditary on " + write_graph6(g));
      }

      const auto brute = gpe_bruteforce(g, cs);
      const auto fast = fastpath_result(g);
      certified += 2;
      o.require(certify(g, exact) && certify(g, brute), "certify on " + write_graph6(g));
      if (fast) {
        ++certified;
        o.require(static_cast<bool>(certify(g, *fast)), "certify fast path on " + write_graph6(g));
      }
    }

  std::size_t reduced = 0;
  for (const Graph& g : random_block_graphs(200, kSeed)) {
    const Graph r = reduce(g);
    ++reduced;
    o.require(reduce(r) == r, "reduce idempotent on " + graph_code(g));
    const auto res = gpe_exact(g);
    ++certified;
    o.require(static_cast<bool>(certify(g, res)), "certify on " + graph_code(g));
  }

  std::size_t round_trips = 0;
  auto round_trip = [&](const Graph& g) {
    ++round_trips;
    const auto code = write_graph6(g);
    const Graph back = parse_graph6(code);
    if (!(back == g) || write_graph6(back) != code) o.require(false, "graph6 round trip " + code);
  };
  for (std::size_t n = 1; n <= 6; ++n)
    for (auto mask : connected_masks(n)) round_trip(graph_from_mask(n, mask));
  for (std::uint64_t s = 0; s < 200; ++s) {
    Xorshift64Star rng(s);
    const std::size_t n = rng.between(0, kMaxGraph6Order);
    Graph g(n);
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i)
        if (rng.coin()) g.add_edge(i, j);
    round_trip(g);
  }

  o.detail << " graphs=" << graphs << " triples=" << triples << " subsets=" << subsets
           << " certified=" << certified << " reduced=" << reduced << " graph6=" << round_trips;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"exact solver equals brute force (n<=5 all, n=6,7 sampled)", oracle_equivalence},
      {"cycle and tree values", small_classes},
      {"gpe = m iff diameter <= 2 (n<=6)", diameter_two},
      {"gpe = m-1 iff first or second family (4<=n<=6), drawn examples", one_below_size},
      {"gpe = 2 iff path, gpe = 3 iff K3 or 3-leaf tree (n<=6)", values_two_and_three},
      {"gpe = 4 implies max degree <= 4, bipartite at 4 (n<=6)", value_four},
      {"drawn block and chain values", drawn_values},
      {"block graph bounds, reduction invariance, thick-leaved formula", block_graphs},
      {"property suites", properties},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome o;
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("[%s] %d. %s:%s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.str().c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
