#include <gtest/gtest.h>

#include "edgegp/classes.hpp"
#include "edgegp/compute.hpp"
#include "edgegp/enumerate.hpp"
#include "edgegp/io.hpp"
#include "edgegp/solver.hpp"
#include "drawn_graphs.hpp"

using namespace edgegp;

namespace {

void expect_value(const Graph& g, std::size_t value) {
  const auto exact = gpe_exact(g);
  EXPECT_EQ(exact.value, value) << write_graph6(g);
  EXPECT_TRUE(certify(g, exact)) << write_graph6(g);
  if (g.size() <= kBruteForceMaxEdges) {
    const auto brute = gpe_bruteforce(g);
    EXPECT_EQ(brute.value, value) << write_graph6(g);
    EXPECT_TRUE(certify(g, brute));
  }
}

}  // namespace

TEST(Solver, SmallNamedGraphs) {
  expect_value(generate({Family::Path, {2}}), 1);
  expect_value(generate({Family::Path, {5}}), 2);
  expect_value(generate({Family::Complete, {3}}), 3);
  expect_value(generate({Family::Cycle, {4}}), 4);
  expect_value(generate({Family::Cycle, {5}}), 5);
  expect_value(generate({Family::Cycle, {6}}), 4);
  expect_value(generate({Family::Star, {5}}), 5);
  expect_value(generate({Family::Complete, {6}}), 15);
}

TEST(Solver, DrawnExamples) {
  expect_value(fixtures::g_prime(), 9);
  expect_value(fixtures::g_double_prime(), 7);
  expect_value(fixtures::z1(), 15);
  const Graph z2 = fixtures::z2();
  EXPECT_EQ(z2.size(), 27u);
  expect_value(z2, 26);
}

TEST(Solver, ChainsOfFourCycles) {
  for (std::uint64_t k = 1; k <= 5; ++k) expect_value(generate({Family::ChainGk, {k}}), 4);
}

TEST(Solver, CliqueWithLongPendantPathReachesUpperBound) {
  const Graph g = generate({Family::CliquePendantPaths, {5, 1, 3}});
  const auto r = gpe_exact(g);
  EXPECT_EQ(r.value, 11u);
  ASSERT_TRUE(r.bounds);
  EXPECT_EQ(r.bounds->upper, 11u);
  EXPECT_EQ(r.bounds->s_prime, 11u);
}

TEST(Solver, ResultFields) {
  const Graph g = fixtures::g_double_prime();
  const auto r = gpe_exact(g);
  EXPECT_EQ(r.method, "branch-and-bound");
  EXPECT_TRUE(std::is_sorted(r.witness.begin(), r.witness.end()));
  EXPECT_GE(r.value, r.lower_bound_used);
  EXPECT_GE(r.lower_bound_used, g.max_degree());
  EXPECT_EQ(gpe_bruteforce(g).method, "bruteforce");
}

TEST(Solver, Errors) {
  try {
    gpe_exact(Graph(2));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DisconnectedInput);
  }
  try {
    gpe_exact(Graph(1));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyEdgeSet);
  }
  try {
    gpe_bruteforce(generate({Family::Path, {26}}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(Solver, Deterministic) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = generate({Family::RandomBlockGraph, {6, 4}, seed});
    const auto a = gpe_exact(g), b = gpe_exact(g);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.lower_bound_used, b.lower_bound_used);
  }
}

TEST(Solver, AgreesWithBruteForceOnSampledGraphs) {
  for (auto mask : sample_connected_masks(7, 300, 99)) {
    const Graph g = graph_from_mask(7, mask);
    const auto cs = build_conflicts(g);
    const auto exact = gpe_exact(g, cs);
    EXPECT_EQ(exact.value, gpe_bruteforce(g, cs).value) << write_graph6(g);
    EXPECT_TRUE(certify(g, exact));
  }
}

TEST(Greedy, IsConflictFreeAndBelowOptimum) {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      const auto cs = build_conflicts(g);
      const auto greedy = greedy_lower(cs);
      EXPECT_TRUE(is_general_position(cs, greedy));
      EXPECT_LE(greedy.size(), gpe_exact(g, cs).value);
      EXPECT_TRUE(is_general_position(cs, max_degree_star(g)));
      EXPECT_EQ(max_degree_star(g).size(), g.max_degree());
    }
}

TEST(Certify, RejectsBadWitnesses) {
  const Graph c6 = generate({Family::Cycle, {6}});
  auto good = gpe_exact(c6);
  ASSERT_TRUE(certify(c6, good));

  auto r = good;
  r.witness.push_back(99);
  r.value = r.witness.size();
  EXPECT_EQ(certify(c6, r).reason, CertifyReason::UnknownEdge);

  r = good;
  r.witness.push_back(r.witness.front());
  r.value = r.witness.size();
  EXPECT_EQ(certify(c6, r).reason, CertifyReason::DuplicateEdge);

  r = good;
  r.value = 5;
  EXPECT_EQ(certify(c6, r).reason, CertifyReason::SizeMismatch);

  r = good;
  r.witness = {0, 1, 2};
  r.value = 3;
  EXPECT_EQ(certify(c6, r).reason, CertifyReason::ConflictViolated);

  const Graph star = generate({Family::Star, {4}});
  r = GpeResult{};
  r.witness = {0, 1};
  r.value = 2;
  const auto below = certify(star, r);
  EXPECT_FALSE(below);
  EXPECT_EQ(below.reason, CertifyReason::BelowDeltaBound);
}

TEST(Compute, SumsOverComponents) {
  const Graph two_triangles =
      Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  const auto out = compute_gpe(two_triangles, Method::Auto);
  EXPECT_EQ(out.components, 2u);
  EXPECT_EQ(out.result.value, 6u);
  EXPECT_EQ(out.result.method, "component-sum");
  EXPECT_TRUE(certify(two_triangles, out.result));

  const auto isolated = compute_gpe(Graph(3), Method::Exact);
  EXPECT_EQ(isolated.result.value, 0u);
}

TEST(Compute, MethodsAgree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate({Family::RandomBlockGraph, {5, 4}, seed});
    const auto a = compute_gpe(g, Method::Auto).result;
    const auto e = compute_gpe(g, Method::Exact).result;
    EXPECT_EQ(a.value, e.value);
    EXPECT_TRUE(certify(g, a));
    if (g.size() <= kBruteForceMaxEdges) {
      EXPECT_EQ(compute_gpe(g, Method::Brute).result.value, a.value);
    }
  }
}
