#include "lettergrid/graphs.hpp"

#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "lettergrid/error.hpp"
#include "lettergrid/oracle.hpp"

namespace lettergrid {
namespace {

// Weighted threshold graph: A=1/4, B=1, C=-1/3, D=0, E=-2/3, F=1/2 as vertices
// 1..6, an edge wherever the weights sum to at least 0.
SimpleGraph weighted_threshold_graph() {
  const std::vector<Edge> e{{1, 2}, {1, 4}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 6}, {4, 6}};
  return SimpleGraph(6, e);
}

SimpleGraph graph_from_mask(int n, unsigned mask) {
  SimpleGraph g(n);
  int bit = 0;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v, ++bit)
      if (mask >> bit & 1) g.add_edge(u, v);
  return g;
}

TEST(SimpleGraph, EdgesAndErrors) {
  SimpleGraph g(3);
  g.add_edge(1, 2);
  g.add_edge(3, 2);
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {2, 3}}));
  EXPECT_EQ(g.degree(2), 2);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 1), std::out_of_range);
  g.remove_edge(1, 2);
  EXPECT_EQ(g.edge_count(), 1);
}

TEST(WeightsCheck, EdgesComeFromTheWeights) {
  const double w[] = {0.25, 1, -1.0 / 3, 0, -2.0 / 3, 0.5};
  const auto g = weighted_threshold_graph();
  for (int u = 1; u <= 6; ++u)
    for (int v = u + 1; v <= 6; ++v) EXPECT_EQ(g.adjacent(u, v), w[u - 1] + w[v - 1] >= 0) << u << v;
}

TEST(Complement, Examples) {
  EXPECT_TRUE(is_isomorphic(complement(family(Family::matching, 2)), family(Family::cycle, 4)));
  EXPECT_EQ(complement(family(Family::complete, 5)), SimpleGraph(5));
  for (unsigned mask = 0; mask < 64; ++mask) {
    const auto g = graph_from_mask(4, mask);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(InducedSubgraph, Examples) {
  const auto c4 = family(Family::cycle, 4);
  const auto p3 = family(Family::path, 3);
  EXPECT_TRUE(is_isomorphic(induced_subgraph(c4, std::vector<int>{1, 2, 3}), p3));
  EXPECT_TRUE(is_isomorphic(induced_subgraph(c4, std::vector<int>{4, 1, 2}), p3));
  EXPECT_EQ(induced_subgraph(c4, std::vector<int>{1, 2, 3, 4}), c4);
  EXPECT_EQ(induced_subgraph(c4, std::vector<int>{}).order(), 0);
  EXPECT_THROW(induced_subgraph(c4, std::vector<int>{5}), std::out_of_range);
  // the order of the vertex list is kept
  const auto h = induced_subgraph(family(Family::path, 3), std::vector<int>{2, 1, 3});
  EXPECT_TRUE(h.adjacent(1, 2));
  EXPECT_TRUE(h.adjacent(1, 3));
  EXPECT_FALSE(h.adjacent(2, 3));
}

TEST(Isomorphism, Examples) {
  EXPECT_FALSE(is_isomorphic(family(Family::complete, 3), family(Family::path, 3)));
  EXPECT_FALSE(is_isomorphic(family(Family::path, 4), family(Family::matching, 2)));
  // Gamma over {i, d} with D = {(i,d), (d,d)} applied to ididid.
  const std::vector<Edge> letter{{1, 2}, {1, 4}, {1, 6}, {2, 4}, {2, 6}, {3, 4}, {3, 6}, {4, 6}, {5, 6}};
  auto f = is_isomorphic(weighted_threshold_graph(), SimpleGraph(6, letter));
  ASSERT_TRUE(f.has_value());
  const SimpleGraph g = weighted_threshold_graph(), h(6, letter);
  for (int u = 1; u <= 6; ++u)
    for (int v = 1; v <= 6; ++v)
      if (u != v) {
        EXPECT_EQ(g.adjacent(u, v), h.adjacent((*f)[u - 1], (*f)[v - 1]));
      }
}

TEST(Isomorphism, AgreesWithBruteForceOnFiveVertices) {
  std::vector<SimpleGraph> graphs;
  for (unsigned mask = 0; mask < 1024; mask += 7) graphs.push_back(graph_from_mask(5, mask));
  for (const auto& g : graphs)
    for (const auto& h : graphs) {
      auto f = is_isomorphic(g, h);
      ASSERT_EQ(f.has_value(), oracle::isomorphic(g, h));
      if (!f) continue;
      for (int u = 1; u <= 5; ++u)
        for (int v = u + 1; v <= 5; ++v) ASSERT_EQ(g.adjacent(u, v), h.adjacent((*f)[u - 1], (*f)[v - 1]));
    }
}

TEST(CanonicalCode, SeparatesIsomorphismClasses) {
  // 2^10 labelled graphs on five vertices fall into 34 classes.
  std::set<std::uint64_t> codes;
  for (unsigned mask = 0; mask < 1024; ++mask) codes.insert(canonical_code(graph_from_mask(5, mask)));
  EXPECT_EQ(codes.size(), 34u);
  std::set<std::uint64_t> six;
  for (unsigned mask = 0; mask < (1u << 15); ++mask) six.insert(canonical_code(graph_from_mask(6, mask)));
  EXPECT_EQ(six.size(), 156u);
}

TEST(Family, Shapes) {
  EXPECT_EQ(family(Family::matching, 2).edges(), (std::vector<Edge>{{1, 2}, {3, 4}}));
  EXPECT_EQ(family(Family::path, 4).edges(), (std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}}));
  EXPECT_EQ(family(Family::cycle, 5).edge_count(), 5);
  EXPECT_EQ(family(Family::co_matching, 3).edge_count(), 12);
  EXPECT_THROW(family(Family::cycle, 2), std::invalid_argument);
  EXPECT_THROW(family(Family::path, 0), std::invalid_argument);
}

TEST(Recognition, Examples) {
  const auto p4 = family(Family::path, 4);
  EXPECT_TRUE(is_split(p4));
  EXPECT_FALSE(is_threshold(p4));
  EXPECT_TRUE(is_threshold(weighted_threshold_graph()));
  EXPECT_FALSE(is_split(family(Family::cycle, 5)));
  EXPECT_FALSE(is_threshold(family(Family::matching, 2)));
}

TEST(Recognition, ThresholdImpliesSplit) {
  for (unsigned mask = 0; mask < (1u << 15); ++mask) {
    const auto g = graph_from_mask(6, mask);
    if (is_threshold(g)) {
      EXPECT_TRUE(is_split(g));
    }
  }
}

TEST(Recognition, InversionGraphsHaveNoLongInducedCycles) {
  const auto two_k2 = family(Family::matching, 2);
  const auto c4 = family(Family::cycle, 4);
  for (const auto& pi : testing::permutations_up_to(6)) {
    const auto g = inversion_graph(pi);
    EXPECT_EQ(is_split(g), !has_induced(g, two_k2) && !has_induced(g, c4)) << pi.compact();
  }
}

TEST(GraphFormat, RoundTripAndErrors) {
  const auto g = weighted_threshold_graph();
  EXPECT_EQ(parse_graph(format_graph(g)), g);
  EXPECT_EQ(parse_graph("3\n\n1 2\n").edge_count(), 1);
  EXPECT_THROW(parse_graph(""), ParseError);
  EXPECT_THROW(parse_graph("2\n1 3\n"), ParseError);
  EXPECT_THROW(parse_graph("2\n1 1\n"), ParseError);
  EXPECT_THROW(parse_graph("2\n1\n"), ParseError);
  EXPECT_THROW(parse_graph("two\n"), ParseError);
}

}  // namespace
}  // namespace lettergrid
