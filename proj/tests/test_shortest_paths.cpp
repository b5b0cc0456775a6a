#include <gtest/gtest.h>

#include <random>

#include "drobust/shortest_paths.hpp"
#include "support.hpp"

namespace drobust {
namespace {

Weight units(std::uint64_t u) { return Weight::from_units(u); }

Graph path3() { return build_graph(3, {{1, 2, units(1)}, {2, 3, units(1)}}); }
Graph star(std::uint64_t w1, std::uint64_t w2) { return build_graph(3, {{1, 2, units(w1)}, {1, 3, units(w2)}}); }

TEST(MultiSourceDijkstra, Examples) {
  Vertex root[] = {1};
  EXPECT_EQ(multi_source_dijkstra(path3(), root).distance(3), units(2));
  EdgeId first[] = {0};
  EXPECT_EQ(multi_source_dijkstra(path3(), root, std::span<const EdgeId>(first)).distance(3), units(1));
  Vertex two[] = {1, 2};
  EXPECT_EQ(multi_source_dijkstra(star(1, 5), two).distance(3), units(5));
}

TEST(MultiSourceDijkstra, UnreachableIsMarked) {
  auto g = build_graph(3, {{1, 2, units(1)}});
  Vertex root[] = {1};
  auto dm = multi_source_dijkstra(g, root);
  EXPECT_FALSE(dm.reachable(3));
  EXPECT_TRUE(dm.reachable(2));
}

TEST(MultiSourceDijkstra, EquidistantVertexGoesToSmallerSource) {
  // 2 - 1 - 3 with equal weights: vertex 1 is equidistant from sources 2 and 3.
  auto g = build_graph(3, {{2, 1, units(1)}, {1, 3, units(1)}});
  Vertex sources[] = {3, 2};
  auto dm = multi_source_dijkstra(g, sources);
  EXPECT_EQ(dm.origin[1], 2u);
  EXPECT_EQ(dm.origin[2], 2u);
  EXPECT_EQ(dm.origin[3], 3u);
}

TEST(FarthestTerminal, Examples) {
  auto g = star(1, 5);
  Vertex terms[] = {2, 3};
  Vertex s1[] = {1};
  auto p = farthest_terminal(g, s1, terms);
  EXPECT_EQ(p.terminal, 3u);
  EXPECT_EQ(p.distance, units(5));
  Vertex s2[] = {1, 3};
  p = farthest_terminal(g, s2, terms);
  EXPECT_EQ(p.terminal, 2u);
  EXPECT_EQ(p.distance, units(1));

  auto tie = star(3, 3);
  p = farthest_terminal(tie, s1, terms);
  EXPECT_EQ(p.terminal, 2u);
  EXPECT_EQ(p.distance, units(3));

  Vertex all[] = {1, 2, 3};
  try {
    farthest_terminal(g, all, terms);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::no_candidate);
  }
}

TEST(ShortestPathEdges, Examples) {
  auto p = shortest_path_edges(path3(), 1, 3);
  EXPECT_EQ(p.length, units(2));
  EXPECT_EQ(p.edge_ids, (std::vector<EdgeId>{0, 1}));

  EdgeId both[] = {0, 1};
  p = shortest_path_edges(path3(), 1, 3, both);
  EXPECT_EQ(p.length, Weight{});
  EXPECT_EQ(p.edge_ids, (std::vector<EdgeId>{0, 1}));

  // r-a (1), a-t (1), r-t (3) with r-t prepaid: 0 via the direct edge beats 2 via a.
  auto g = build_graph(3, {{1, 2, units(1)}, {2, 3, units(1)}, {1, 3, units(3)}});
  EdgeId direct[] = {2};
  EXPECT_EQ(testing::brute_shortest(g, 1, 3, {0, 0, 1}), 0u);
  p = shortest_path_edges(g, 1, 3, direct);
  EXPECT_EQ(p.length, Weight{});
  EXPECT_EQ(p.edge_ids, (std::vector<EdgeId>{2}));

  try {
    shortest_path_edges(build_graph(3, {{1, 2, units(1)}}), 1, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unreachable);
  }
}

TEST(MultiSourceDijkstra, RandomAgainstSimplePathEnumeration) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 2 + rng() % 11;
    auto g = testing::random_graph(rng, n, 0.4, 9, round % 4 == 0);
    auto zeroed = round % 2 ? testing::random_mask(rng, g.edge_count(), 0.3) : std::vector<char>(g.edge_count(), 0);
    auto bigger = zeroed;
    for (auto& b : bigger) b = b || rng() % 3 == 0;
    Vertex root[] = {1};
    auto dm = multi_source_dijkstra(g, root, std::span<const char>(zeroed));
    auto dm_big = multi_source_dijkstra(g, root, std::span<const char>(bigger));
    for (Vertex v = 1; v <= n; ++v) {
      ASSERT_EQ(dm.dist[v], testing::brute_shortest(g, 1, v, zeroed)) << "round " << round << " v " << v;
      EXPECT_LE(dm_big.dist[v], dm.dist[v]);
      if (!dm.reachable(v)) continue;
      // Parent chain realizes the distance.
      auto path = path_from_map(g, dm, v);
      std::uint64_t len = 0;
      Vertex x = 1;
      for (EdgeId e : path.edge_ids) {
        len += zeroed[e] ? 0 : g.edge(e).weight.micros;
        x = g.edge(e).other(x);
      }
      EXPECT_EQ(x, v);
      EXPECT_EQ(len, dm.dist[v]);
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edge(e);
      if (!dm.reachable(ed.u) || !dm.reachable(ed.v)) continue;
      std::uint64_t w = zeroed[e] ? 0 : ed.weight.micros;
      EXPECT_LE(dm.dist[ed.v], dm.dist[ed.u] + w);
      EXPECT_LE(dm.dist[ed.u], dm.dist[ed.v] + w);
    }
  }
}

TEST(FarthestTerminal, ConsistentWithDistances) {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 3 + rng() % 8;
    auto g = testing::random_graph(rng, n, 0.6, 9);
    if (!reachable_from(g, 1)[n]) continue;
    std::vector<Vertex> S{1};
    std::vector<Vertex> T;
    auto reach = reachable_from(g, 1);
    for (Vertex v = 2; v <= n; ++v) {
      if (!reach[v]) continue;
      if (rng() % 3 == 0) S.push_back(v);
      else T.push_back(v);
    }
    if (T.empty()) continue;
    auto pick = farthest_terminal(g, S, T);
    auto dm = multi_source_dijkstra(g, S);
    std::uint64_t best = 0;
    for (Vertex t : T) best = std::max(best, dm.dist[t]);
    EXPECT_EQ(pick.distance.micros, best);
    EXPECT_EQ(dm.dist[pick.terminal], best);
  }
}

}  // namespace
}  // namespace drobust
