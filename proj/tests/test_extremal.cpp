#include <gtest/gtest.h>

#include <random>

#include "critlab/constructions.hpp"
#include "critlab/extremal.hpp"
#include "oracles.hpp"

using namespace critlab;

TEST(Rational, FloorAndFormatting) {
  EXPECT_EQ(floor_of(Rational(7, 2)), 3);
  EXPECT_EQ(floor_of(Rational(-7, 2)), -4);
  EXPECT_EQ(floor_of(Rational(6, 3)), 2);
  EXPECT_EQ(to_string(Rational(41, 250)), "41/250");
  EXPECT_EQ(to_string(Rational(10, 5)), "2");
}

TEST(DeltaK, ByResidue) {
  EXPECT_EQ(delta_k(6), Rational(0));
  EXPECT_EQ(delta_k(7), Rational(8, 7));
  EXPECT_EQ(delta_k(8), Rational(44, 23));
  EXPECT_EQ(delta_k(9), Rational(0));
  EXPECT_THROW(delta_k(5), ParameterError);
}

TEST(ToftConstant, Values) {
  EXPECT_EQ(toft_constant(4), Rational(1, 16));
  EXPECT_EQ(toft_constant(5), Rational(4, 31));
  EXPECT_EQ(toft_constant(6), Rational(1, 2) - Rational(3, 12));
  EXPECT_EQ(toft_constant(7), Rational(1, 2) - Rational(3) / (Rational(14) - Rational(8, 7)));
  EXPECT_THROW(toft_constant(3), ParameterError);
}

TEST(BoundTable, FourAtOneHundred) {
  auto row = bound_row(4, 100);
  EXPECT_EQ(row.turan_bound, 2500);
  EXPECT_EQ(row.uniform_bound, 2599);
  ASSERT_TRUE(row.strong_4crit);
  EXPECT_EQ(floor_of(*row.strong_4crit), 1640);
  ASSERT_TRUE(row.weak_4crit);
  EXPECT_EQ(floor_of(*row.weak_4crit), 2666);
  ASSERT_TRUE(row.improved_bound);
  EXPECT_EQ(*row.improved_bound, 2500 - 10000 / 324);
  EXPECT_LT(*row.improved_bound, row.turan_bound);
  EXPECT_LT(row.turan_bound, row.uniform_bound);
  EXPECT_EQ(row.toft_lower, Rational(10000, 16));
  EXPECT_TRUE(row.toft_graph);  // 100 = 4 * 25
  EXPECT_EQ(*row.toft_graph, Rational(725));
  EXPECT_FALSE(row.dirac_lower);
}

TEST(BoundTable, FiveAtOneHundred) {
  auto row = bound_row(5, 100);
  EXPECT_EQ(row.turan_bound, 3333);
  ASSERT_TRUE(row.improved_bound);
  EXPECT_EQ(*row.improved_bound, 3333 - 10000 / 576);
  EXPECT_FALSE(row.strong_4crit);
  EXPECT_FALSE(row.weak_4crit);
}

TEST(BoundTable, SmallNUniformBound) {
  auto row = bound_row(4, 6);
  EXPECT_EQ(row.uniform_bound, 14);
  EXPECT_FALSE(row.improved_bound);  // the floored term vanishes
}

TEST(BoundTable, SixHasDiracRows) {
  auto row = bound_row(6, 10);
  ASSERT_TRUE(row.dirac_lower);
  EXPECT_EQ(*row.dirac_lower, Rational(35));
  EXPECT_EQ(row.toft_lower, Rational(1, 4) * Rational(100));
}

TEST(BoundTable, OrderingHoldsEverywhereDefined) {
  for (int k = 4; k <= 9; ++k)
    for (std::int64_t n = k + 1; n <= 400; n += 7) {
      auto row = bound_row(k, n);
      if (row.improved_bound) EXPECT_LT(*row.improved_bound, row.turan_bound);
      EXPECT_LT(row.turan_bound, row.uniform_bound);
    }
  std::vector<std::int64_t> ns{100, 1000};
  for (const auto& row : bound_table(4, ns)) {
    ASSERT_TRUE(row.improved_bound);
    EXPECT_LT(*row.improved_bound, row.turan_bound);
    EXPECT_EQ(floor_of(*row.strong_4crit), 41 * row.n * row.n / 250);
  }
}

TEST(BoundTable, ParameterErrors) {
  EXPECT_THROW(bound_row(3, 10), ParameterError);
  EXPECT_THROW(bound_row(4, 4), ParameterError);
}

TEST(BoundTable, ToftGraphsMeetTheirRow) {
  for (int m : {3, 5, 7, 9}) {
    auto g = toft(m);
    auto row = bound_row(4, g.order());
    ASSERT_TRUE(row.toft_graph);
    EXPECT_EQ(Rational(static_cast<std::int64_t>(g.size())), *row.toft_graph);
    EXPECT_GE(static_cast<std::int64_t>(g.size()), floor_of(row.toft_lower));
  }
}

TEST(TwoPathCheck, Examples) {
  auto k4 = check_2path_bound(complete(4));
  EXPECT_EQ(k4.best.value, -9);
  EXPECT_EQ(k4.cap, 5);
  EXPECT_TRUE(k4.verdict);
  auto t3 = check_2path_bound(toft(3));
  EXPECT_EQ(t3.best.value, oracle::max_2path_value(toft(3)));
  EXPECT_TRUE(t3.verdict);
  EXPECT_TRUE(check_2path_bound(wheel(5)).verdict);
  // A dense non-critical graph breaks the cap.
  EXPECT_FALSE(check_2path_bound(complete_bipartite(5, 5)).verdict);
}

TEST(TwoPathCheck, AverageBound) {
  EXPECT_EQ(two_path_average_bound(5, 5), Rational(-39));
}

TEST(CliqueCaps, Examples) {
  auto t5 = check_clique_caps(toft(5), 4);
  EXPECT_EQ(t5.cliques, 0u);
  EXPECT_EQ(t5.refined_cap, 19);
  EXPECT_TRUE(t5.verdict());
  auto w5 = check_clique_caps(wheel(5), 4);
  EXPECT_EQ(w5.cliques, 5u);
  EXPECT_EQ(w5.refined_cap, 5);
  EXPECT_TRUE(w5.refined_ok);
  EXPECT_TRUE(w5.verdict());
  auto d5 = check_clique_caps(dirac(5), 6);
  EXPECT_EQ(d5.cliques, oracle::count_cliques(dirac(5), 5));
  EXPECT_LE(d5.cliques, 7u);
  EXPECT_TRUE(d5.verdict());
  auto k4 = check_clique_caps(complete(4), 4);
  EXPECT_FALSE(k4.refined_applies);
  EXPECT_TRUE(k4.verdict());
  EXPECT_FALSE(check_clique_caps(complete(6), 4).verdict());
  EXPECT_THROW(check_clique_caps(complete(4), 3), ParameterError);
}

TEST(Partition, KnownValues) {
  auto g = turan(6, 3);
  auto e = evaluate_partition(g, turan_parts(6, 3));
  EXPECT_EQ(e.internal_edge_sum, 0u);
  EXPECT_EQ(e.missing_edges, 0u);
  EXPECT_EQ(e.deviation, Rational(0));

  auto h = delete_edge(g, 0, 2);
  auto eh = evaluate_partition(h, turan_parts(6, 3));
  EXPECT_EQ(eh.internal_edge_sum, 0u);
  EXPECT_EQ(eh.missing_edges, 1u);

  auto c5 = odd_cycle(5);
  auto ec = evaluate_partition(c5, {{0, 1, 2}, {3, 4}});
  EXPECT_EQ(ec.internal_edge_sum, 3u);  // 01, 12, 34
  EXPECT_EQ(ec.missing_edges, 6u - 2u);  // 3*2 cross pairs, edges 23 and 40 cross
  EXPECT_EQ(ec.deviation, Rational(1, 4) + Rational(1, 4));
}

TEST(Partition, Errors) {
  auto g = path(4);
  EXPECT_THROW(evaluate_partition(g, {{0, 1}, {2}}), ParameterError);
  EXPECT_THROW(evaluate_partition(g, {{0, 1}, {1, 2, 3}}), ParameterError);
  EXPECT_THROW(evaluate_partition(g, {{0, 1, 2, 7}}), ParameterError);
  EXPECT_THROW(evaluate_partition(g, {}), ParameterError);
}

TEST(Partition, MissingEdgesIdentity) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 50; ++i) {
    auto g = random_graph(12, 0.5, rng());
    Partition parts(3);
    for (Vertex v = 0; v < 12; ++v) parts[rng() % 3].push_back(v);
    auto e = evaluate_partition(g, parts);
    std::uint64_t cross_pairs = 0, cross_edges = 0;
    for (Vertex u = 0; u < 12; ++u)
      for (Vertex v = u + 1; v < 12; ++v) {
        int pu = 0, pv = 0;
        for (int p = 0; p < 3; ++p) {
          if (std::count(parts[p].begin(), parts[p].end(), u)) pu = p;
          if (std::count(parts[p].begin(), parts[p].end(), v)) pv = p;
        }
        if (pu != pv) {
          ++cross_pairs;
          cross_edges += g.adjacent(u, v);
        }
      }
    EXPECT_EQ(e.missing_edges, cross_pairs - cross_edges);
  }
}

TEST(StabilityPartition, KnownValues) {
  auto t = turan(9, 3);
  EXPECT_EQ(evaluate_partition(t, stability_partition(t, 3)).internal_edge_sum, 0u);

  GraphBuilder b(turan(8, 2));
  b.remove_edge(0, 4);
  b.remove_edge(1, 5);
  auto h = std::move(b).build();
  auto eh = evaluate_partition(h, stability_partition(h, 2));
  EXPECT_LE(eh.internal_edge_sum, 2u);
  EXPECT_GE(eh.internal_edge_sum, oracle::min_internal_edges(h, 2));

  auto k4 = complete(4);
  EXPECT_EQ(evaluate_partition(k4, stability_partition(k4, 2)).internal_edge_sum, 2u);
  EXPECT_THROW(stability_partition(k4, 1), ParameterError);
}

TEST(StabilityPartition, IsALocalOptimum) {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 40; ++i) {
    auto g = random_graph(14, 0.4, rng());
    auto parts = stability_partition(g, 3);
    auto base = evaluate_partition(g, parts).internal_edge_sum;
    std::vector<int> owner(14);
    for (int p = 0; p < 3; ++p)
      for (Vertex v : parts[p]) owner[v] = p;
    for (Vertex v = 0; v < 14; ++v)
      for (int p = 0; p < 3; ++p) {
        if (p == owner[v]) continue;
        auto moved = parts;
        moved[owner[v]].erase(std::find(moved[owner[v]].begin(), moved[owner[v]].end(), v));
        moved[p].push_back(v);
        EXPECT_GE(evaluate_partition(g, moved).internal_edge_sum, base);
      }
  }
}

TEST(StabilityPartition, MeasuredAgainstExhaustiveOptimum) {
  // No optimality guarantee; the heuristic must never beat the true optimum,
  // and the gap is only reported.
  std::mt19937_64 rng(71);
  int optimal = 0, total = 0;
  for (int i = 0; i < 40; ++i) {
    int n = 4 + static_cast<int>(rng() % 5);
    auto g = random_graph(n, 0.6, rng());
    auto got = evaluate_partition(g, stability_partition(g, 2)).internal_edge_sum;
    auto best = oracle::min_internal_edges(g, 2);
    EXPECT_GE(got, best);
    optimal += got == best;
    ++total;
  }
  RecordProperty("optimal_fraction", std::to_string(optimal) + "/" + std::to_string(total));
}
