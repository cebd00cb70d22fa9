#include "mcover/graph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "mcover/families.hpp"
#include "oracles.hpp"

namespace mcover {
namespace {

TEST(GraphTest, RejectsLoopsAndOutOfRange) {
  EXPECT_THROW(Graph(2, {{0, 0}}), Error);
  EXPECT_THROW(Graph(2, {{0, 2}}), Error);
  Graph multi(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(multi.num_edges(), 2);
  EXPECT_FALSE(multi.is_simple());
  EXPECT_EQ(multi.degree(0), 2);
}

TEST(GraphTest, IncidenceIsOrderedByEdgeId) {
  Graph g = complete_graph(4);
  for (VertexId v = 0; v < 4; ++v) {
    auto inc = g.incident(v);
    for (std::size_t i = 1; i < inc.size(); ++i) EXPECT_LT(inc[i - 1].edge, inc[i].edge);
  }
}

TEST(BoundaryTest, VertexStarOfC4) {
  Graph c4 = cycle_graph(4);  // edges 01, 12, 23, 30
  EXPECT_EQ(boundary(c4, c4.vertex_set({0})), c4.edge_set({0, 3}));
}

TEST(BoundaryTest, EmptyAndFullVertexSets) {
  Graph g = petersen();
  EXPECT_TRUE(boundary(g, g.no_vertices()).none());
  EXPECT_TRUE(boundary(g, g.all_vertices()).none());
}

TEST(BoundaryTest, TwoVersusTwoCutOfK4) {
  Graph k4 = complete_graph(4);  // 01 02 03 12 13 23
  EXPECT_EQ(boundary(k4, k4.vertex_set({0, 1})), k4.edge_set({1, 2, 3, 4}));
}

TEST(BoundaryTest, DimensionMismatchThrows) {
  Graph k4 = complete_graph(4);
  EXPECT_THROW(boundary(k4, VertexSet(5)), Error);
}

TEST(BoundaryTest, CutSpaceProperties) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 8), 0.5);
    const int n = g.num_vertices();
    VertexSet u = g.no_vertices(), w = g.no_vertices();
    for (int v = 0; v < n; ++v) {
      if (rng() & 1) u.set(v);
      if (rng() & 1) w.set(v);
    }
    EXPECT_EQ(boundary(g, u), boundary(g, u.complement()));
    EXPECT_EQ(boundary(g, u) ^ boundary(g, w), boundary(g, u ^ w));
    EdgeSet sum = g.no_edges();
    for (int v = 0; v < n; ++v) {
      VertexSet single = g.no_vertices();
      single.set(v);
      sum ^= boundary(g, single);
    }
    EXPECT_TRUE(sum.none());
  }
}

TEST(BipartiteTest, Examples) {
  EXPECT_TRUE(is_bipartite(cycle_graph(4)).bipartite);
  auto k4 = is_bipartite(complete_graph(4));
  EXPECT_FALSE(k4.bipartite);
  EXPECT_EQ(k4.odd_cycle.size(), 3u);
  auto p = is_bipartite(petersen());
  EXPECT_FALSE(p.bipartite);
  EXPECT_EQ(p.odd_cycle.size(), 5u);
}

TEST(BipartiteTest, WitnessesAreValid) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 9), 0.35);
    auto b = is_bipartite(g);
    if (b.bipartite) {
      for (const auto& e : g.edges()) EXPECT_NE(b.side[e.u], b.side[e.v]);
    } else {
      ASSERT_EQ(b.odd_cycle.size() % 2, 1u);
      for (std::size_t i = 0; i < b.odd_cycle.size(); ++i) {
        auto a = b.odd_cycle[i], c = b.odd_cycle[(i + 1) % b.odd_cycle.size()];
        EXPECT_TRUE(g.find_edge(a, c).has_value());
      }
    }
  }
}

TEST(ComponentsTest, Examples) {
  EXPECT_EQ(components(petersen()).size(), 1u);
  Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  auto c = components(two_triangles);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].count(), 3u);
  EXPECT_EQ(c[1].count(), 3u);
  EXPECT_EQ(components(Graph(3, {})).size(), 3u);
}

TEST(ConnectivityTest, Examples) {
  EXPECT_TRUE(vertex_connectivity_at_least(complete_graph(4), 3).at_least);
  EXPECT_FALSE(vertex_connectivity_at_least(complete_graph(4), 4).at_least);
  EXPECT_TRUE(vertex_connectivity_at_least(complete_graph(4), 4).too_few_vertices);
  EXPECT_TRUE(vertex_connectivity_at_least(petersen(), 3).at_least);
  EXPECT_FALSE(vertex_connectivity_at_least(petersen(), 4).at_least);
  auto p3 = vertex_connectivity_at_least(path_graph(3), 2);
  EXPECT_FALSE(p3.at_least);
  EXPECT_EQ(p3.separator, std::vector<VertexId>{1});
}

TEST(ConnectivityTest, SeparatorThroughFirstVertex) {
  // Two triangles sharing vertex 0: the only separator contains vertex 0.
  Graph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  auto r = vertex_connectivity_at_least(bowtie, 2);
  EXPECT_FALSE(r.at_least);
  EXPECT_EQ(r.separator, std::vector<VertexId>{0});
}

TEST(ConnectivityTest, AgreesWithDeletionOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = oracle::random_graph(rng, 4 + static_cast<int>(rng() % 6), 0.6);
    for (int k = 1; k <= 4; ++k) {
      auto r = vertex_connectivity_at_least(g, k);
      ASSERT_EQ(r.at_least, oracle::k_connected_by_deletion(g, k)) << "k=" << k;
      if (!r.at_least && !r.too_few_vertices) {
        EXPECT_LT(static_cast<int>(r.separator.size()), k);
        std::uint64_t mask = 0;
        for (auto v : r.separator) mask |= std::uint64_t{1} << v;
        EXPECT_FALSE(oracle::connected_without(g, mask));
      }
      if (r.at_least && k > 1) EXPECT_TRUE(vertex_connectivity_at_least(g, k - 1).at_least);
    }
  }
}

TEST(SubgraphTest, InducedSubgraphs) {
  Graph k4 = complete_graph(4);
  auto k3 = induced_subgraph(k4, k4.vertex_set({0, 1, 2}));
  EXPECT_EQ(k3.graph.num_vertices(), 3);
  EXPECT_EQ(k3.graph.num_edges(), 3);
  EXPECT_EQ(k3.edge_to_parent, (std::vector<EdgeId>{0, 1, 3}));

  auto same = induced_subgraph(k4, k4.all_vertices());
  EXPECT_EQ(same.graph, k4);
  for (int e = 0; e < k4.num_edges(); ++e) EXPECT_EQ(same.edge_to_parent[e], e);
}

TEST(SubgraphTest, RestrictAndLiftRoundTrip) {
  Graph p = petersen();
  auto sub = delete_vertices(p, std::vector<VertexId>{0});
  EdgeSet s = p.edge_set({1, 2, 5, 14});
  EdgeSet r = sub.restrict(s);
  EXPECT_EQ(sub.lift(r, p.num_edges()), s);
  auto minus = delete_edges(p, p.edge_set({0}));
  EXPECT_EQ(minus.graph.num_edges(), 14);
  EXPECT_EQ(minus.edge_to_parent.front(), 1);
}

}  // namespace
}  // namespace mcover
