#include <gtest/gtest.h>

#include "edgegp/classes.hpp"
#include "edgegp/io.hpp"
#include "edgegp/verify.hpp"
#include "drawn_graphs.hpp"

using namespace edgegp;

TEST(Predicates, SimpleClasses) {
  const Graph c6 = generate({Family::Cycle, {6}});
  EXPECT_TRUE(is_cycle_graph(c6));
  EXPECT_TRUE(is_bipartite(c6));
  EXPECT_EQ(girth(c6), 6u);
  EXPECT_FALSE(is_tree(c6));

  const Graph p5 = generate({Family::Path, {5}});
  EXPECT_TRUE(is_path_graph(p5));
  EXPECT_TRUE(is_tree(p5));
  EXPECT_FALSE(girth(p5).has_value());
  EXPECT_EQ(leaf_count(p5), 2u);

  EXPECT_EQ(leaf_count(generate({Family::Path, {2}})), 2u);
  EXPECT_EQ(pendant_edge_count(generate({Family::Path, {2}})), 1u);
  EXPECT_TRUE(is_complete_graph(generate({Family::Complete, {5}})));
  EXPECT_FALSE(is_bipartite(generate({Family::Cycle, {5}})));
  EXPECT_EQ(girth(fixtures::z1()), 5u);
}

TEST(FamilyG1, PetersenWithPendant) {
  const Graph z1 = fixtures::z1();
  const auto w = in_family_G1(z1);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->leaf, 10u);
  EXPECT_EQ(w->attach, 3u);
  EXPECT_EQ(w->special_edge, *z1.edge_id(3, 10));
  EXPECT_TRUE(replay(z1, *w));
  EXPECT_FALSE(in_family_G2(z1));
}

TEST(FamilyG1, PathOnFourVertices) {
  const Graph p4 = generate({Family::Path, {4}});
  const auto w = in_family_G1(p4);
  ASSERT_TRUE(w);
  EXPECT_TRUE(replay(p4, *w));
}

TEST(FamilyG2, DrawnExample) {
  const Graph z2 = fixtures::z2();
  const auto w = in_family_G2(z2);
  ASSERT_TRUE(w);
  EXPECT_EQ(z2.edge(w->central_edge), (Edge{1, 9}));
  EXPECT_EQ(w->common, (std::vector<Vertex>{0, 6, 7, 8, 14}));
  EXPECT_EQ(w->private1, (std::vector<Vertex>{2, 3, 4, 5}));
  EXPECT_EQ(w->private2, (std::vector<Vertex>{10, 11, 12, 13}));
  EXPECT_EQ(z2.induced(w->common).size(), 3u);    // P3 u P2
  EXPECT_EQ(z2.induced(w->private1).size(), 1u);  // K2 u 2K1
  EXPECT_TRUE(is_cycle_graph(z2.induced(w->private2)));
  EXPECT_TRUE(replay(z2, *w));
}

TEST(FamilyG2, BridgeBetweenCliques) {
  const Graph g = fixtures::g_prime();
  const auto w = in_family_G2(g);
  ASSERT_TRUE(w);
  EXPECT_EQ(g.edge(w->central_edge), (Edge{1, 2}));
  EXPECT_TRUE(w->common.empty());
  EXPECT_EQ(w->private1.size(), 3u);
  EXPECT_EQ(w->private2.size(), 2u);
  EXPECT_TRUE(replay(g, *w));
}

TEST(Families, CyclesAreInNeither) {
  for (std::uint64_t n : {4, 6, 7}) {
    const Graph c = generate({Family::Cycle, {n}});
    EXPECT_FALSE(in_family_G1(c));
    EXPECT_FALSE(in_family_G2(c));
  }
}

TEST(Families, RealizeRoundTrip) {
  const Graph p3 = generate({Family::Path, {3}});
  const Graph k2 = generate({Family::Path, {2}});
  const Graph g = realize_G2(p3, k2, Graph(1));
  EXPECT_EQ(g.order(), 8u);
  const auto w = in_family_G2(g);
  ASSERT_TRUE(w);
  EXPECT_TRUE(replay(g, *w));
  EXPECT_EQ(exact_value(g), g.size() - 1);
}

TEST(Classify, ReportsFields) {
  const auto c = classify(fixtures::z2());
  EXPECT_EQ(c.n, 15u);
  EXPECT_EQ(c.m, 27u);
  EXPECT_FALSE(c.is_block_graph);
  EXPECT_TRUE(c.membership_G2.has_value());
  EXPECT_FALSE(c.block_bounds.has_value());

  const auto gp = classify(fixtures::g_double_prime());
  EXPECT_TRUE(gp.is_block_graph);
  EXPECT_FALSE(gp.is_thick_leaved);
  ASSERT_TRUE(gp.block_bounds);
  EXPECT_EQ(gp.block_bounds->upper, 7u);
  EXPECT_EQ(gp.diameter, 4u);
}

TEST(FastPath, TagsAndValues) {
  auto fp = [](const Graph& g) { return *gpe_fastpath(g); };
  EXPECT_EQ(fp(generate({Family::Complete, {5}})).tag, "fastpath:diam2");
  EXPECT_EQ(fp(generate({Family::Complete, {5}})).value, 10u);
  EXPECT_EQ(fp(generate({Family::Path, {6}})).tag, "fastpath:tree");
  EXPECT_EQ(fp(generate({Family::Path, {6}})).value, 2u);
  EXPECT_EQ(fp(generate({Family::Cycle, {9}})).tag, "fastpath:cycle");
  EXPECT_EQ(fp(generate({Family::Cycle, {9}})).value, 4u);
  EXPECT_EQ(fp(generate({Family::Cycle, {5}})).value, 5u);
  EXPECT_EQ(fp(fixtures::g_double_prime()).tag, "fastpath:block_reduction");
  EXPECT_EQ(fp(fixtures::g_double_prime()).value, 7u);
  EXPECT_FALSE(gpe_fastpath(generate({Family::ChainGk, {3}})));

  const Graph thick = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 2}, {2, 5}});
  // Not thick-leaved: the triangle's cut vertex also carries x2x6.
  EXPECT_FALSE(is_thick_leaved_tree(thick));
  const Graph leaf_triangle = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 2}});
  EXPECT_TRUE(is_thick_leaved_tree(leaf_triangle));
  EXPECT_EQ(fp(leaf_triangle).tag, "fastpath:thick_leaved");
  EXPECT_EQ(fp(leaf_triangle).value, 4u);
}

TEST(FastPath, AgreesWithSolverAndCertifies) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (const Graph& g : {generate({Family::RandomBlockGraph, {6, 4}, seed}),
                           generate({Family::RandomThickLeaved, {6}, seed}),
                           generate({Family::RandomTree, {12}, seed})}) {
      const auto r = fastpath_result(g);
      ASSERT_TRUE(r);
      EXPECT_EQ(r->value, gpe_exact(g).value) << write_graph6(g);
      EXPECT_TRUE(certify(g, *r)) << write_graph6(g);
    }
  }
}

TEST(FastPath, ThickLeavedTreesMatchFormula) {
  for (const Graph& g : random_thick_leaved_trees(30, 5)) {
    const auto d = decompose_blocks(g);
    ASSERT_TRUE(is_thick_leaved_tree(g, d));
    EXPECT_EQ(gpe_exact(g).value, thick_leaved_value(d));
  }
}

TEST(BlockBounds, SandwichOnRandomBlockGraphs) {
  for (const Graph& g : random_block_graphs(40, 11)) {
    const auto b = block_bounds(g);
    const auto v = gpe_exact(g).value;
    EXPECT_LE(b.s_prime, v);
    EXPECT_LE(v, b.upper);
  }
}

TEST(Gpe4, NecessaryCondition) {
  EXPECT_TRUE(necessary_gpe4_check(generate({Family::Star, {4}}), 4));
  EXPECT_TRUE(necessary_gpe4_check(generate({Family::Cycle, {8}}), 4));
  EXPECT_TRUE(necessary_gpe4_check(generate({Family::Star, {5}}), 5));
  EXPECT_FALSE(necessary_gpe4_check(generate({Family::Star, {5}}), 4));
  const Graph k4_pendant =
      Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
  EXPECT_FALSE(necessary_gpe4_check(k4_pendant, 4));
}

TEST(Generators, DrawnGraphsAreReproduced) {
  EXPECT_TRUE(is_isomorphic(generate({Family::ChainGk, {5}}), fixtures::g5()));
  EXPECT_TRUE(is_isomorphic(generate({Family::CliquePendantPaths, {4, 2, 1, 2}}),
                            fixtures::g_double_prime()));
  EXPECT_EQ(generate({Family::Cycle, {3}}), generate({Family::Complete, {3}}));
  EXPECT_FALSE(is_isomorphic(generate({Family::Cycle, {6}}), generate({Family::Path, {6}})));
}

TEST(Generators, ChainsOfEvenCycles) {
  for (const auto& lengths : std::vector<std::vector<std::uint64_t>>{{6}, {4, 6}, {8, 4, 6}, {6, 6, 6, 4}}) {
    const Graph g = generate({Family::ChainEvenCycles, lengths});
    EXPECT_TRUE(is_bipartite(g));
    EXPECT_EQ(gpe_exact(g).value, 4u);
  }
}

TEST(Generators, SeededFamiliesAreDeterministic) {
  for (Family f : {Family::RandomTree, Family::RandomThickLeaved}) {
    EXPECT_EQ(generate({f, {9}, 3}), generate({f, {9}, 3}));
  }
  EXPECT_EQ(generate({Family::RandomBlockGraph, {5, 4}, 8}),
            generate({Family::RandomBlockGraph, {5, 4}, 8}));
  EXPECT_TRUE(is_tree(generate({Family::RandomTree, {20}, 1})));
  EXPECT_TRUE(is_block_graph(generate({Family::RandomBlockGraph, {9, 5}, 1})));
}

TEST(Generators, ParameterErrors) {
  auto code = [](FamilySpec s) {
    try {
      generate(s);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Malformed;
  };
  EXPECT_EQ(code({Family::Cycle, {2}}), ErrorCode::BadParameters);
  EXPECT_EQ(code({Family::Path, {}}), ErrorCode::BadParameters);
  EXPECT_EQ(code({Family::CliquePendantPaths, {4, 2, 1}}), ErrorCode::BadParameters);
  EXPECT_EQ(code({Family::RandomBlockGraph, {3, 1}}), ErrorCode::BadParameters);
  EXPECT_EQ(parse_family("chain_Gk"), Family::ChainGk);
  EXPECT_FALSE(parse_family("petersen"));
}
