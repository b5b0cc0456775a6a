#include <gtest/gtest.h>

#include <random>

#include "drobust/flow.hpp"
#include "support.hpp"

namespace drobust {
namespace {

Weight units(std::uint64_t u) { return Weight::from_units(u); }

TEST(MaxFlowMinCut, SingleEdge) {
  auto g = build_graph(2, {{1, 2, units(7)}});
  auto cut = max_flow_min_cut(g, 1, 2);
  EXPECT_EQ(cut.capacity, units(7));
  EXPECT_EQ(cut.edge_ids, (EdgeSet{0}));
}

TEST(MaxFlowMinCut, ZeroedEdgeIsAlreadyCut) {
  auto g = build_graph(2, {{1, 2, units(7)}});
  EdgeId zeroed[] = {0};
  auto cut = max_flow_min_cut(g, 1, 2, zeroed);
  EXPECT_EQ(cut.capacity, Weight{});
  EXPECT_TRUE(cut.edge_ids.empty());
  EXPECT_EQ(cut.source_side, (std::vector<Vertex>{1}));
}

TEST(MaxFlowMinCut, TwoDisjointPaths) {
  // 1-2-4 bottleneck 3, 1-3-4 bottleneck 2
  auto g = build_graph(4, {{1, 2, units(3)}, {2, 4, units(5)}, {1, 3, units(4)}, {3, 4, units(2)}});
  EXPECT_EQ(brute_force_min_cut(g, 1, 4), units(5));
  auto cut = max_flow_min_cut(g, 1, 4);
  EXPECT_EQ(cut.capacity, units(5));
  EXPECT_EQ(cut.edge_ids, (EdgeSet{0, 3}));
}

TEST(MaxFlowMinCut, RejectsBadVertices) {
  auto g = build_graph(2, {{1, 2, units(1)}});
  EXPECT_THROW(max_flow_min_cut(g, 1, 1), Error);
  EXPECT_THROW(max_flow_min_cut(g, 1, 3), Error);
}

TEST(MinRUCut, Star) {
  auto g = build_graph(3, {{1, 2, units(4)}, {1, 3, units(1)}});
  Vertex both[] = {2, 3};
  auto cut = min_r_U_cut(g, 1, both);
  EXPECT_EQ(cut.capacity, units(5));
  EXPECT_EQ(cut.edge_ids, (EdgeSet{0, 1}));
  Vertex three[] = {3};
  cut = min_r_U_cut(g, 1, three);
  EXPECT_EQ(cut.capacity, units(1));
  EXPECT_EQ(cut.edge_ids, (EdgeSet{1}));
}

TEST(MinRUCut, SharedBottleneck) {
  // r=1, a=2, t2=3, t3=4
  auto g = build_graph(4, {{1, 2, units(3)}, {2, 3, units(2)}, {2, 4, units(2)}});
  Vertex targets[] = {3, 4};
  EXPECT_EQ(testing::brute_min_r_U_cut(g, 1, {3, 4}), units(3).micros);
  auto cut = min_r_U_cut(g, 1, targets);
  EXPECT_EQ(cut.capacity, units(3));
  EXPECT_EQ(cut.edge_ids, (EdgeSet{0}));
}

TEST(MinRUCut, Errors) {
  auto g = build_graph(3, {{1, 2, units(4)}, {1, 3, units(1)}});
  try {
    Vertex bad[] = {1, 2};
    min_r_U_cut(g, 1, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::root_in_u);
  }
  try {
    min_r_U_cut(g, 1, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::empty_u);
  }
}

TEST(BruteForceMinCut, Examples) {
  EXPECT_EQ(brute_force_min_cut(build_graph(2, {{1, 2, units(7)}}), 1, 2), units(7));
  EXPECT_EQ(brute_force_min_cut(build_graph(3, {{1, 2, units(1)}, {2, 3, units(1)}, {1, 3, units(1)}}), 1, 3),
            units(2));
  EXPECT_EQ(brute_force_min_cut(build_graph(2, {{1, 2, units(2)}, {1, 2, units(3)}}), 1, 2), units(5));
  std::vector<EdgeTriple> chain;
  for (Vertex v = 1; v < 21; ++v) chain.push_back({v, v + 1, units(1)});
  try {
    brute_force_min_cut(build_graph(21, chain), 1, 21);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::too_large);
  }
}

// Duality, validity, canonicality and zeroing monotonicity on random graphs.
TEST(MaxFlowMinCut, RandomProperties) {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 2 + rng() % 11;
    auto g = testing::random_graph(rng, n, 0.45, 9, round % 3 == 0);
    Vertex s = 1 + rng() % n;
    Vertex t = 1 + rng() % n;
    if (s == t) continue;
    auto small = testing::random_mask(rng, g.edge_count(), 0.2);
    auto large = small;
    for (auto& b : large) b = b || (rng() % 4 == 0);
    auto small_ids = testing::ids_from_mask(small);
    auto large_ids = testing::ids_from_mask(large);

    auto cut = max_flow_min_cut(g, s, t, small_ids);
    ASSERT_EQ(cut.capacity, brute_force_min_cut(g, s, t, small_ids)) << "round " << round;
    EXPECT_LE(max_flow_min_cut(g, s, t, large_ids).capacity, cut.capacity);

    std::vector<char> removed = small;
    for (EdgeId e : cut.edge_ids) removed[e] = 1;
    EXPECT_FALSE(testing::connected(g, s, t, removed));

    std::vector<char> side(n + 1, 0);
    for (Vertex v : cut.source_side) side[v] = 1;
    EXPECT_TRUE(side[s]);
    EXPECT_FALSE(side[t]);
    Weight boundary;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      bool crosses = side[g.edge(e).u] != side[g.edge(e).v];
      bool listed = std::binary_search(cut.edge_ids.begin(), cut.edge_ids.end(), e);
      EXPECT_EQ(listed, crosses && !small[e]);
      if (listed) boundary += g.edge(e).weight;
    }
    EXPECT_EQ(boundary, cut.capacity);

    // Minimal source side: every other minimum cut's source side contains it,
    // so shrinking is impossible. Check via brute force over source sides.
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      auto in = [&](Vertex v) { return (bits >> (v - 1) & 1) != 0; };
      if (!in(s) || in(t)) continue;
      std::uint64_t c = 0;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!small[e] && in(g.edge(e).u) != in(g.edge(e).v)) c += g.edge(e).weight.micros;
      }
      if (c != cut.capacity.micros) continue;
      for (Vertex v : cut.source_side) EXPECT_TRUE(in(v)) << "round " << round;
    }
  }
}

TEST(MinRUCut, RandomAgainstBruteForce) {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 3 + rng() % 8;
    auto g = testing::random_graph(rng, n, 0.5, 9);
    std::vector<Vertex> targets;
    for (Vertex v = 2; v <= n; ++v) {
      if (rng() % 2) targets.push_back(v);
    }
    if (targets.empty()) targets.push_back(static_cast<Vertex>(n));
    auto cut = min_r_U_cut(g, 1, targets);
    ASSERT_EQ(cut.capacity.micros, testing::brute_min_r_U_cut(g, 1, targets));
    std::vector<char> removed(g.edge_count(), 0);
    for (EdgeId e : cut.edge_ids) removed[e] = 1;
    for (Vertex u : targets) EXPECT_FALSE(testing::connected(g, 1, u, removed));
  }
}

}  // namespace
}  // namespace drobust
