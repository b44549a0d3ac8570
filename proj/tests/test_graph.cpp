#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "klfree/graph.hpp"

using namespace klfree;

TEST(PairIndex, RoundTrip) {
  for (int n = 2; n <= 64; n += 7) {
    std::size_t idx = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        EXPECT_EQ(pair_index(n, u, v), idx);
        EXPECT_EQ(pair_at(n, idx), (Edge{u, v}));
        ++idx;
      }
    EXPECT_EQ(idx, pair_count(n));
  }
}

TEST(LabeledGraphTest, EdgesAndCodes) {
  LabeledGraph g(5);
  g.add_edge(3, 1);
  g.add_edge(0, 4);
  EXPECT_TRUE(g.has_edge(1, 3));
  EXPECT_TRUE(g.has_edge(4, 0));
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 4}, {1, 3}}));
  EXPECT_EQ(LabeledGraph::from_code(5, *g.code()), g);
  EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 5), std::out_of_range);
  EXPECT_FALSE(LabeledGraph(12).code().has_value());
  EXPECT_EQ(LabeledGraph::complete(6).edge_count(), 15u);
}

TEST(LabeledGraphTest, TextFormatRoundTrip) {
  const LabeledGraph g = make_graph(6, {{0, 1}, {2, 5}, {3, 4}});
  const std::string text = write_graph_text(g);
  EXPECT_EQ(read_graph_text(text), g);
  EXPECT_EQ(read_graph_text("\n" + text + "\n"), g);
  EXPECT_EQ(text, "6\n0 1\n2 5\n3 4\n");
  EXPECT_THROW(read_graph_text("3\n0 3\n"), std::exception);
  EXPECT_THROW(read_graph_text("3\n0 1 2\n"), std::exception);
  EXPECT_THROW(read_graph_text("3 1\n"), std::exception);
  EXPECT_THROW(read_graph_text("garbage"), std::exception);
}

TEST(Turan, PartitionAndEdgeCount) {
  const TuranPartition p = turan_partition(10, 3);
  EXPECT_EQ(p.part_sizes, (std::vector<std::uint64_t>{4, 3, 3}));
  EXPECT_EQ(turan_edge_count(100, 4), 3750);
  EXPECT_EQ(turan_edge_count(7, 2), 12);
  EXPECT_EQ(turan_edge_count(5, 5), 10);
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= n; ++k) {
      const LabeledGraph t = turan_graph(n, k);
      EXPECT_EQ(BigInt(t.edge_count()), turan_edge_count(n, k));
      EXPECT_FALSE(has_clique(t, k + 1));
      if (k >= 2) { EXPECT_TRUE(has_clique(t, k)); }
    }
}

TEST(Cliques, KnownCounts) {
  EXPECT_EQ(count_cliques(LabeledGraph::complete(7), 3), 35u);
  EXPECT_EQ(count_cliques(LabeledGraph::complete(7), 0), 1u);
  EXPECT_EQ(count_cliques(LabeledGraph::complete(30), 4), 27405u);
  EXPECT_EQ(count_cliques(turan_graph(9, 3), 3), 27u);
  EXPECT_EQ(count_cliques(LabeledGraph(5), 1), 5u);
}

TEST(Cliques, MaskAndNeighbourhoodPathsAgreeProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 9;
    LabeledGraph g(n);
    std::bernoulli_distribution coin(0.3 + 0.05 * (trial % 10));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    for (int l = 2; l <= std::min(n, 6); ++l) {
      const std::uint64_t a = count_cliques_by_masks(g, l);
      EXPECT_EQ(a, count_cliques_by_neighbourhoods(g, l));
      EXPECT_EQ(a > 0, has_clique(g, l));
    }
  }
}

TEST(Cliques, SubgraphRelation) {
  const LabeledGraph a = make_graph(4, {{0, 1}});
  const LabeledGraph b = make_graph(4, {{0, 1}, {2, 3}});
  EXPECT_TRUE(is_subgraph(a, b));
  EXPECT_FALSE(is_subgraph(b, a));
  EXPECT_THROW(is_subgraph(a, LabeledGraph(5)), std::invalid_argument);
}
