#include <gtest/gtest.h>

#include <random>

#include "critlab/coloring.hpp"
#include "critlab/constructions.hpp"
#include "critlab/structure.hpp"
#include "oracles.hpp"

using namespace critlab;

TEST(Coloring, OddCycle) {
  auto c5 = odd_cycle(5);
  EXPECT_FALSE(is_k_colorable(c5, 2));
  auto col = is_k_colorable(c5, 3);
  ASSERT_TRUE(col);
  EXPECT_TRUE(is_proper(c5, *col));
  EXPECT_LE(col->num_colors, 3);
}

TEST(Coloring, CompleteGraph) {
  EXPECT_FALSE(is_k_colorable(complete(4), 3));
  EXPECT_TRUE(is_k_colorable(complete(4), 4));
}

TEST(Coloring, PetersenIsThreeColourable) {
  auto g = petersen();
  auto col = is_k_colorable(g, 3);
  ASSERT_TRUE(col);
  EXPECT_TRUE(is_proper(g, *col));
  EXPECT_EQ(oracle::chromatic_number(g), 3);
  EXPECT_FALSE(is_k_colorable(g, 2));
}

TEST(Coloring, TrivialCases) {
  EXPECT_TRUE(is_k_colorable(Graph(0), 0));
  EXPECT_FALSE(is_k_colorable(Graph(3), 0));
  EXPECT_TRUE(is_k_colorable(Graph(3), 1));
  EXPECT_FALSE(is_k_colorable(path(2), 1));
  EXPECT_EQ(chromatic_number(Graph(0)).chi, 0);
  EXPECT_EQ(chromatic_number(Graph(4)).chi, 1);
}

TEST(Coloring, ProperCheckRejectsBadCertificates) {
  auto g = path(3);
  Coloring bad;
  bad.colors = {0, 0, 1};
  bad.num_colors = 2;
  EXPECT_FALSE(is_proper(g, bad));
  Coloring short_one;
  short_one.colors = {0, 1};
  short_one.num_colors = 2;
  EXPECT_FALSE(is_proper(g, short_one));
}

TEST(Coloring, ClassesAreIndependent) {
  auto g = toft(5);
  auto col = is_k_colorable(g, 4);
  ASSERT_TRUE(col);
  for (const auto& cls : col->classes()) EXPECT_EQ(edges_within(g, cls), 0u);
}

TEST(ChromaticNumber, KnownValues) {
  EXPECT_EQ(chromatic_number(odd_cycle(5)).chi, 3);
  EXPECT_EQ(chromatic_number(complete(4)).chi, 4);
  auto r = chromatic_number(toft(3));
  EXPECT_EQ(r.chi, 4);
  EXPECT_TRUE(is_proper(toft(3), r.coloring));
  EXPECT_FALSE(is_k_colorable(toft(3), 3));
}

TEST(ChromaticNumber, KnownFamilies) {
  EXPECT_EQ(chromatic_number(wheel(5)).chi, 4);
  EXPECT_EQ(chromatic_number(wheel(6)).chi, 3);
  EXPECT_EQ(chromatic_number(dirac(5)).chi, 6);
  EXPECT_EQ(chromatic_number(turan(10, 4)).chi, 4);
  EXPECT_EQ(chromatic_number(complete_bipartite(4, 5)).chi, 2);
}

TEST(ChromaticNumber, MatchesExhaustiveSearchOnRandomGraphs) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    int n = 1 + static_cast<int>(rng() % 8);
    auto g = random_graph(n, (1 + rng() % 9) / 10.0, rng());
    auto r = chromatic_number(g);
    ASSERT_EQ(r.chi, oracle::chromatic_number(g)) << to_graph6(g);
    ASSERT_TRUE(is_proper(g, r.coloring));
    ASSERT_EQ(r.coloring.num_colors, r.chi);
  }
}

TEST(ChromaticNumber, EdgeDeletionDropsByAtMostOne) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 60; ++i) {
    auto g = random_graph(9, 0.5, rng());
    const int chi = chromatic_number(g).chi;
    for (auto [u, v] : g.edges()) {
      const int d = chromatic_number(delete_edge(g, u, v)).chi;
      ASSERT_TRUE(d == chi || d == chi - 1);
    }
  }
}

TEST(ChromaticNumber, AtLeastLargestClique) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 100; ++i) {
    auto g = random_graph(12, 0.6, rng());
    const int chi = chromatic_number(g).chi;
    EXPECT_EQ(count_cliques(g, chi + 1), 0u);
  }
}

TEST(ChromaticNumber, LargerInstances) {
  auto g = turan(60, 3);
  EXPECT_EQ(chromatic_number(g).chi, 3);
  auto sparse = random_graph(80, 0.08, 99);
  auto r = chromatic_number(sparse);
  EXPECT_TRUE(is_proper(sparse, r.coloring));
  EXPECT_FALSE(is_k_colorable(sparse, r.chi - 1));
}

TEST(Budget, ExceededIsAnExplicitError) {
  SolverOptions tight;
  tight.node_budget = 1;
  try {
    is_k_colorable(toft(7), 3, tight);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.budget(), 1u);
  }
}

TEST(Budget, GenerousBudgetGivesTheSameAnswer) {
  SolverOptions roomy;
  roomy.node_budget = 10'000'000;
  EXPECT_FALSE(is_k_colorable(toft(5), 3, roomy));
  EXPECT_TRUE(is_k_colorable(toft(5), 4, roomy));
}

TEST(Coloring, Deterministic) {
  auto g = random_graph(30, 0.3, 5);
  auto a = chromatic_number(g);
  auto b = chromatic_number(g);
  EXPECT_EQ(a.coloring.colors, b.coloring.colors);
}
