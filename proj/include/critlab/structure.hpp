#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "critlab/errors.hpp"
#include "critlab/graph.hpp"

namespace critlab {

namespace detail {

inline std::uint64_t count_cliques_from(const Graph& g, const std::vector<Word>& cand, int remaining) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  const int words = g.words();
  std::vector<Word> next(words);
  for (int w = 0; w < words; ++w) {
    for (Word bits = cand[w]; bits; bits &= bits - 1) {
      Vertex v = w * kWordBits + std::countr_zero(bits);
      if (remaining == 1) {
        ++total;
        continue;
      }
      // Candidates after v only, so each clique is counted once.
      auto r = g.row(v);
      bool any = false;
      for (int x = 0; x < words; ++x) {
        Word keep = cand[x] & r[x];
        if (x < w) keep = 0;
        if (x == w) keep &= ~((Word{2} << (v % kWordBits)) - 1);
        next[x] = keep;
        any |= keep != 0;
      }
      if (any) total += count_cliques_from(g, next, remaining - 1);
    }
  }
  return total;
}

}  // namespace detail

// Number of t-vertex subsets inducing a complete graph.
inline std::uint64_t count_cliques(const Graph& g, int t) {
  if (t < 1) throw ParameterError("clique size must be at least 1");
  if (t > g.order()) return 0;
  std::vector<Word> all(g.words(), 0);
  for (Vertex v = 0; v < g.order(); ++v) all[v / kWordBits] |= Word{1} << (v % kWordBits);
  return detail::count_cliques_from(g, all, t);
}

struct TriangleProfile {
  std::vector<std::uint64_t> per_vertex;  // t(v)
  std::uint64_t total = 0;                // t(G)
};

inline TriangleProfile triangle_profile(const Graph& g) {
  TriangleProfile p;
  p.per_vertex.assign(g.order(), 0);
  for (auto [u, v] : g.edges())
    for (Vertex w : g.neighbours(u))
      if (w > v && g.adjacent(v, w)) {
        ++p.per_vertex[u];
        ++p.per_vertex[v];
        ++p.per_vertex[w];
        ++p.total;
      }
  return p;
}

struct HeavyEdge {
  Edge edge;
  int degree_sum = 0;
};

// Edge maximizing d(x)+d(y); ties go to the lexicographically smallest (x, y), x < y.
// Every graph has such an edge with d(x)+d(y) >= 2 d(G).
inline HeavyEdge heaviest_edge(const Graph& g) {
  if (g.size() == 0) throw NoStructureError("graph has no edges");
  HeavyEdge best{{-1, -1}, -1};
  for (auto [u, v] : g.edges()) {
    int s = g.degree(u) + g.degree(v);
    if (s > best.degree_sum) best = {{u, v}, s};
  }
  // (d(x)+d(y)) >= 2 * (2e/n)  <=>  n (d(x)+d(y)) >= 4e
  if (static_cast<std::uint64_t>(g.order()) * best.degree_sum < 4 * g.size())
    throw std::logic_error("heaviest edge below twice the average degree");
  return best;
}

struct HeavyCycle {
  std::array<Vertex, 4> cycle{};  // v1 v2 v3 v4, consecutive entries adjacent, v4 adjacent to v1
  int degree_sum = 0;
};

// Exact maximum of d(v1)+d(v2)+d(v3)+d(v4) over all 4-cycles. The cycle is
// reported in its canonical rotation (v1 smallest, v2 < v4), and ties go to
// the lexicographically smallest tuple.
inline HeavyCycle heaviest_4cycle(const Graph& g) {
  const int n = g.order();
  const int words = g.words();
  int best = -1;
  // Pass 1: for every diagonal pair (a, c), the best two common neighbours.
  for (Vertex a = 0; a < n; ++a) {
    auto ra = g.row(a);
    for (Vertex c = a + 1; c < n; ++c) {
      auto rc = g.row(c);
      int top1 = -1, top2 = -1;
      for (int w = 0; w < words; ++w) {
        Word bits = ra[w] & rc[w];
        if (w < a / kWordBits) bits = 0;
        if (w == a / kWordBits) bits &= ~((Word{2} << (a % kWordBits)) - 1);
        for (; bits; bits &= bits - 1) {
          int d = g.degree(w * kWordBits + std::countr_zero(bits));
          if (d > top1) {
            top2 = top1;
            top1 = d;
          } else if (d > top2) {
            top2 = d;
          }
        }
      }
      if (top2 >= 0) best = std::max(best, g.degree(a) + g.degree(c) + top1 + top2);
    }
  }
  if (best < 0) throw NoStructureError("graph contains no 4-cycle");

  // Pass 2: lexicographically smallest canonical tuple reaching the maximum.
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b : g.neighbours(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbours(b)) {
        if (c <= a) continue;
        int need = best - g.degree(a) - g.degree(b) - g.degree(c);
        for (Vertex d : g.neighbours(c))
          if (d > b && d != c && g.adjacent(d, a) && g.degree(d) == need) return {{a, b, c, d}, best};
      }
    }
  throw std::logic_error("heaviest_4cycle: maximum not re-found");
}

struct HeavyPath {
  std::array<Vertex, 3> path{};  // x y z with y adjacent to both
  std::int64_t value = 0;        // d(x)+d(y)+d(z)-3t(x)-3t(z)
};

inline std::int64_t two_path_value(const Graph& g, const TriangleProfile& t, Vertex x, Vertex y, Vertex z) {
  return static_cast<std::int64_t>(g.degree(x)) + g.degree(y) + g.degree(z) -
         3 * static_cast<std::int64_t>(t.per_vertex[x]) - 3 * static_cast<std::int64_t>(t.per_vertex[z]);
}

// Exact maximum of d(x)+d(y)+d(z)-3t(x)-3t(z) over ordered 2-paths x-y-z;
// ties go to the lexicographically smallest (x, y, z).
inline HeavyPath heaviest_2path(const Graph& g) {
  if (g.max_degree() < 2) throw NoStructureError("graph contains no 2-path");
  const TriangleProfile t = triangle_profile(g);
  auto end_weight = [&](Vertex v) {
    return static_cast<std::int64_t>(g.degree(v)) - 3 * static_cast<std::int64_t>(t.per_vertex[v]);
  };
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (Vertex y = 0; y < g.order(); ++y) {
    if (g.degree(y) < 2) continue;
    std::int64_t top1 = std::numeric_limits<std::int64_t>::min(), top2 = top1;
    for (Vertex v : g.neighbours(y)) {
      std::int64_t w = end_weight(v);
      if (w > top1) {
        top2 = top1;
        top1 = w;
      } else if (w > top2) {
        top2 = w;
      }
    }
    best = std::max(best, g.degree(y) + top1 + top2);
  }
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y : g.neighbours(x))
      for (Vertex z : g.neighbours(y))
        if (z != x && two_path_value(g, t, x, y, z) == best) return {{x, y, z}, best};
  throw std::logic_error("heaviest_2path: maximum not re-found");
}

// A C4-free graph has at most n(1+sqrt(4n-3))/4 edges. Exact test of e > that value.
inline bool exceeds_c4_free_limit(std::int64_t n, std::int64_t e) {
  std::int64_t lhs = 4 * e - n;  // compare 4e - n > n sqrt(4n-3)
  if (lhs <= 0) return false;
  return lhs * lhs > n * n * (4 * n - 3);
}

inline double c4_free_edge_limit(std::int64_t n) {
  return static_cast<double>(n) * (1.0 + std::sqrt(4.0 * static_cast<double>(n) - 3.0)) / 4.0;
}

}  // namespace critlab
