#include <gtest/gtest.h>

#include "critlab/coloring.hpp"
#include "critlab/constructions.hpp"
#include "critlab/criticality.hpp"
#include "critlab/structure.hpp"
#include "oracles.hpp"

using namespace critlab;

TEST(Turan, KnownValues) {
  auto g = turan(4, 2);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.min_degree(), 2);
  EXPECT_EQ(g.max_degree(), 2);
  EXPECT_TRUE(is_connected(g));
  EXPECT_EQ(turan(6, 3).size(), 12u);
  EXPECT_EQ(turan(7, 3).size(), 16u);
  EXPECT_EQ(turan_part_sizes(7, 3), (std::vector<std::int64_t>{3, 2, 2}));
}

TEST(Turan, EdgeCounts) {
  EXPECT_EQ(turan_edges(100, 2), 2500);
  EXPECT_EQ(turan_edges(6, 3), 12);
  EXPECT_EQ(turan_edges(20, 2), 100);
  EXPECT_EQ(turan_edges(100, 3), 3333);
  for (int n = 1; n <= 15; ++n)
    for (int r = 1; r <= n; ++r) EXPECT_EQ(turan(n, r).size(), static_cast<std::size_t>(turan_edges(n, r)));
}

TEST(Turan, ParameterErrors) {
  EXPECT_THROW(turan(4, 0), ParameterError);
  EXPECT_THROW(turan(3, 4), ParameterError);
  EXPECT_THROW(turan_edges(3, 4), ParameterError);
}

TEST(Turan, ChromaticAndCliqueFree) {
  for (int n = 2; n <= 12; ++n)
    for (int r = 1; r <= std::min(n, 5); ++r) {
      auto g = turan(n, r);
      EXPECT_EQ(chromatic_number(g).chi, r);
      EXPECT_EQ(count_cliques(g, r + 1), 0u);
    }
}

TEST(Toft, LayoutAndEdgeCount) {
  for (int m : {3, 5, 7, 9}) {
    auto g = toft(m);
    const int n = 4 * m;
    ToftLayout L{m};
    EXPECT_EQ(g.order(), n);
    EXPECT_EQ(static_cast<int>(g.size()) * 16, n * n + 16 * n);
    for (int i = 0; i < m; ++i) {
      EXPECT_TRUE(g.adjacent(L.a(i), L.a((i + 1) % m)));
      EXPECT_TRUE(g.adjacent(L.d(i), L.d((i + 1) % m)));
      EXPECT_TRUE(g.adjacent(L.a(i), L.b(i)));
      EXPECT_TRUE(g.adjacent(L.c(i), L.d(i)));
      for (int j = 0; j < m; ++j) {
        EXPECT_TRUE(g.adjacent(L.b(i), L.c(j)));
        EXPECT_FALSE(g.adjacent(L.b(i), L.b(j)));
        EXPECT_FALSE(g.adjacent(L.c(i), L.c(j)));
        if (i != j) EXPECT_FALSE(g.adjacent(L.a(i), L.b(j)));
      }
    }
  }
}

TEST(Toft, Triangles) {
  EXPECT_EQ(toft(5).size(), 45u);
  EXPECT_EQ(oracle::count_cliques(toft(5), 3), 0u);
  for (int m : {5, 7, 9}) EXPECT_EQ(triangle_profile(toft(m)).total, 0u);
  // Only the two 3-cycles on A and D.
  auto t = oracle::triangles_per_vertex(toft(3));
  ToftLayout L{3};
  for (Vertex v = 0; v < 12; ++v) {
    bool in_a_or_d = v < L.b(0) || v >= L.d(0);
    EXPECT_EQ(t[v], in_a_or_d ? 1u : 0u);
  }
}

TEST(Toft, ParameterErrors) {
  EXPECT_THROW(toft(4), ParameterError);
  EXPECT_THROW(toft(1), ParameterError);
}

TEST(Toft, FourCriticalForSmallParameters) {
  for (int m : {3, 5, 7}) EXPECT_TRUE(is_k_critical(toft(m), 4).verdict) << m;
}

TEST(Dirac, EdgeCountsAndStructure) {
  EXPECT_EQ(dirac(3), complete(6));
  for (int m : {3, 5, 7}) {
    auto g = dirac(m);
    const int n = 2 * m;
    EXPECT_EQ(static_cast<int>(g.size()) * 4, n * n + 4 * n);
    for (Vertex u = 0; u < m; ++u)
      for (Vertex v = m; v < n; ++v) EXPECT_TRUE(g.adjacent(u, v));
  }
  EXPECT_EQ(dirac(5).size(), 35u);
  EXPECT_THROW(dirac(6), ParameterError);
}

TEST(Dirac, SixCritical) {
  for (int m : {3, 5}) EXPECT_TRUE(is_k_critical(dirac(m), 6).verdict);
}

TEST(SmallFamilies, CyclesAndWheels) {
  auto c5 = odd_cycle(5);
  EXPECT_EQ(c5.size(), 5u);
  EXPECT_TRUE(is_k_critical(c5, 3).verdict);
  EXPECT_THROW(odd_cycle(4), ParameterError);
  EXPECT_THROW(cycle(2), ParameterError);
  auto w = wheel(5);
  EXPECT_EQ(w.order(), 6);
  EXPECT_EQ(w.size(), 10u);
  EXPECT_EQ(w.degree(5), 5);
  EXPECT_EQ(chromatic_number(w).chi, 4);
  EXPECT_TRUE(is_k_critical(w, 4).verdict);
  EXPECT_THROW(wheel(2), ParameterError);
}

TEST(SmallFamilies, Petersen) {
  auto g = petersen();
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(g.size(), 15u);
  EXPECT_EQ(g.min_degree(), 3);
  EXPECT_EQ(g.max_degree(), 3);
  EXPECT_EQ(count_cliques(g, 3), 0u);
}

TEST(RandomGraph, DeterministicForSeed) {
  EXPECT_EQ(random_graph(30, 0.4, 1), random_graph(30, 0.4, 1));
  EXPECT_NE(random_graph(30, 0.4, 1), random_graph(30, 0.4, 2));
  EXPECT_EQ(random_graph(10, 0.0, 3).size(), 0u);
  EXPECT_EQ(random_graph(10, 1.0, 3).size(), 45u);
  EXPECT_THROW(random_graph(10, 1.5, 3), ParameterError);
}
