#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "critlab/constructions.hpp"
#include "critlab/graph.hpp"
#include "critlab/graph6.hpp"
#include "oracles.hpp"

using namespace critlab;

namespace {

void expect_well_formed(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    EXPECT_FALSE(g.adjacent(v, v));
    for (Vertex w = 0; w < g.order(); ++w) EXPECT_EQ(g.adjacent(v, w), g.adjacent(w, v));
    degree_sum += g.degree(v);
  }
  EXPECT_EQ(degree_sum, 2 * g.size());
}

}  // namespace

TEST(Graph, EmptyAndSingleton) {
  Graph g0(0);
  EXPECT_EQ(g0.order(), 0);
  EXPECT_EQ(g0.size(), 0u);
  Graph g1(1);
  EXPECT_EQ(g1.order(), 1);
  EXPECT_TRUE(g1.edges().empty());
}

TEST(Graph, NegativeOrderRejected) { EXPECT_THROW(Graph(-1), ParameterError); }

TEST(Graph, BuilderRejectsLoopsAndRange) {
  GraphBuilder b(3);
  EXPECT_THROW(b.add_edge(1, 1), ParameterError);
  EXPECT_THROW(b.add_edge(0, 3), ParameterError);
  EXPECT_THROW(b.add_edge(-1, 0), ParameterError);
}

TEST(Graph, BuilderIsIdempotent) {
  GraphBuilder b(3);
  b.add_edge(0, 1);
  b.add_edge(1, 0);
  auto g = std::move(b).build();
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.degree(0), 1);
}

TEST(Graph, EdgesSortedAndNormalised) {
  auto g = from_edges(4, {{3, 0}, {2, 1}, {1, 0}});
  std::vector<Edge> expected{{0, 1}, {0, 3}, {1, 2}};
  EXPECT_EQ(g.edges(), expected);
}

TEST(Graph, DegreeBoundsAndNeighbours) {
  auto g = star(3);
  EXPECT_EQ(g.max_degree(), 3);
  EXPECT_EQ(g.min_degree(), 1);
  EXPECT_EQ(g.neighbours(0), (std::vector<Vertex>{1, 2, 3}));
}

TEST(Graph, WideGraphsSpanSeveralWords) {
  auto g = cycle(130);
  EXPECT_EQ(g.size(), 130u);
  EXPECT_TRUE(g.adjacent(0, 129));
  EXPECT_TRUE(g.adjacent(63, 64));
  expect_well_formed(g);
}

TEST(DeleteEdge, K4MinusEdge) {
  auto g = delete_edge(complete(4), 0, 1);
  EXPECT_EQ(g.size(), 5u);
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_EQ(oracle::chromatic_number(g), 3);
}

TEST(DeleteEdge, C5MinusEdgeIsPath) {
  auto g = delete_edge(odd_cycle(5), 4, 0);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g, path(5));
  EXPECT_EQ(oracle::chromatic_number(g), 2);
}

TEST(DeleteEdge, OtherAdjacenciesUntouched) {
  auto g = toft(3);
  ToftLayout L{3};
  auto h = delete_edge(g, L.b(0), L.c(1));
  EXPECT_EQ(h.size(), 20u);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v) {
      bool removed = (u == L.b(0) && v == L.c(1)) || (v == L.b(0) && u == L.c(1));
      EXPECT_EQ(h.adjacent(u, v), g.adjacent(u, v) && !removed);
    }
}

TEST(DeleteEdge, NonEdgeRejected) {
  EXPECT_THROW(delete_edge(path(3), 0, 2), NotAnEdgeError);
  EXPECT_THROW(delete_edge(path(3), 0, 7), NotAnEdgeError);
  EXPECT_THROW(delete_edge(path(3), 1, 1), NotAnEdgeError);
}

TEST(Graph, InducedSubgraphAndComplement) {
  auto g = petersen();
  std::vector<Vertex> outer{0, 1, 2, 3, 4};
  auto h = induced_subgraph(g, outer);
  EXPECT_EQ(h.order(), 5);
  EXPECT_EQ(edges_within(g, outer), h.size());
  auto c = complement(complete(5));
  EXPECT_EQ(c.size(), 0u);
  EXPECT_EQ(complement(complement(g)), g);
  EXPECT_EQ(g.size() + complement(g).size(), 45u);
}

TEST(Graph, RelabelPreservesDegreesAndEdgeCount) {
  auto g = toft(3);
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(7);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto h = relabel(g, perm);
  EXPECT_EQ(h.size(), g.size());
  for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(h.degree(perm[v]), g.degree(v));
  for (auto [u, v] : g.edges()) EXPECT_TRUE(h.adjacent(perm[u], perm[v]));
}

TEST(Graph, EdgesBetweenCountsCrossEdges) {
  auto g = complete_bipartite(2, 3);
  std::vector<Vertex> a{0, 1}, b{2, 3, 4};
  EXPECT_EQ(edges_between(g, a, b), 6u);
  EXPECT_EQ(edges_within(g, a), 0u);
}

TEST(Graph, Connectivity) {
  EXPECT_TRUE(is_connected(petersen()));
  EXPECT_FALSE(is_connected(from_edges(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_connected(Graph(1)));
}

TEST(Graph, DotExportListsEveryEdge) {
  auto dot = to_dot(path(3));
  EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2"), std::string::npos);
  EXPECT_EQ(dot.find("0 -- 2"), std::string::npos);
}

TEST(Graph, HandshakeOnConstructedGraphs) {
  for (const auto& g : {toft(3), toft(5), dirac(5), wheel(7), petersen(), turan(11, 3), random_graph(40, 0.3, 5)})
    expect_well_formed(g);
}

TEST(Graph6, FixedVectors) {
  auto g = from_graph6("@");
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.size(), 0u);
  g = from_graph6("A_");
  EXPECT_EQ(g, complete(2));
  g = from_graph6("C~");
  EXPECT_EQ(g, complete(4));
  EXPECT_EQ(to_graph6(complete(4)), "C~");
  EXPECT_EQ(to_graph6(complete(2)), "A_");
  EXPECT_EQ(to_graph6(Graph(5)), "D??");
  EXPECT_EQ(to_graph6(Graph(0)), "?");
}

TEST(Graph6, PetersenRoundTrip) {
  auto g = from_graph6(to_graph6(petersen()));
  EXPECT_EQ(g, petersen());
  EXPECT_EQ(g.size(), 15u);
}

TEST(Graph6, ColumnMajorBitOrder) {
  // Only (0,2) set: bit order (0,1),(0,2),(1,2) -> 010 padded to 010000 -> 16 + 63.
  auto g = from_edges(3, {{0, 2}});
  EXPECT_EQ(to_graph6(g), std::string("B") + static_cast<char>(16 + 63));
}

TEST(Graph6, ExtendedHeaderRoundTrip) {
  for (int n : {62, 63, 100, 200}) {
    auto g = random_graph(n, 0.1, static_cast<std::uint64_t>(n));
    auto s = to_graph6(g);
    if (n > 62) EXPECT_EQ(s[0], '~');
    EXPECT_EQ(from_graph6(s), g);
  }
}

TEST(Graph6, MalformedInputsNameOffset) {
  auto offset_of = [](std::string_view s) -> std::size_t {
    try {
      from_graph6(s);
    } catch (const ParseError& e) {
      return e.offset();
    }
    ADD_FAILURE() << "no parse error for " << s;
    return 999;
  };
  EXPECT_EQ(offset_of(""), 0u);
  EXPECT_EQ(offset_of("C"), 1u);         // missing data byte
  EXPECT_EQ(offset_of("C~~"), 2u);       // trailing garbage
  EXPECT_EQ(offset_of("C\x20"), 1u);     // byte below 63
  EXPECT_EQ(offset_of("\x7f"), 0u);      // byte above 126
  EXPECT_EQ(offset_of("A`"), 1u);        // nonzero padding bit
  EXPECT_EQ(offset_of("~??"), 3u);       // truncated extended header
}

TEST(Graph6, RoundTripAllGraphsUpToFiveVertices) {
  for (int n = 0; n <= 5; ++n)
    for (std::uint64_t m = 0; m < oracle::labelled_graph_count(n); ++m) {
      auto g = oracle::from_mask(n, m);
      ASSERT_EQ(from_graph6(to_graph6(g)), g);
    }
}

TEST(Graph6, RoundTripRandomUpToTen) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    int n = static_cast<int>(rng() % 11);
    auto g = random_graph(n, 0.5, rng());
    auto s = to_graph6(g);
    ASSERT_EQ(from_graph6(s), g);
    ASSERT_EQ(to_graph6(from_graph6(s)), s);
  }
}
