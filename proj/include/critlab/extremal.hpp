#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "critlab/constructions.hpp"
#include "critlab/errors.hpp"
#include "critlab/graph.hpp"
#include "critlab/structure.hpp"

namespace critlab {

using Rational = boost::rational<std::int64_t>;

inline std::int64_t floor_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// delta_k in the lower bound (1/2 - 3/(2k - delta_k)) n^2 for k >= 6.
inline Rational delta_k(int k) {
  if (k < 6) throw ParameterError("delta_k is defined for k >= 6");
  switch (k % 3) {
    case 0: return Rational(0);
    case 1: return Rational(8, 7);
    default: return Rational(44, 23);
  }
}

// Lower-bound constant c_k with f_k(n) >= c_k n^2 from Toft's constructions.
inline Rational toft_constant(int k) {
  if (k == 4) return Rational(1, 16);
  if (k == 5) return Rational(4, 31);
  if (k >= 6) return Rational(1, 2) - Rational(3) / (Rational(2 * k) - delta_k(k));
  throw ParameterError("Toft constants are defined for k >= 4");
}

struct BoundRow {
  std::int64_t n = 0;
  int k = 0;
  std::int64_t turan_bound = 0;                // e(T_{k-2}(n)); asymptotic strict upper bound
  std::optional<std::int64_t> improved_bound;  // turan_bound - floor(n^2 / (36 (k-1)^2)); absent when that term is 0
  std::int64_t uniform_bound = 0;              // e(T_{k-2}(n)) + n - k + 3; valid for every n > k
  std::optional<Rational> strong_4crit;        // 41 n^2 / 250 (k = 4)
  std::optional<Rational> weak_4crit;          // n^2/6 + 10 n (k = 4), valid for every n >= 4
  Rational toft_lower;                         // c_k n^2
  std::optional<Rational> toft_graph;          // n^2/16 + n when a Toft graph has n vertices (k = 4)
  std::optional<Rational> dirac_lower;         // n^2/4 + n when n = 2m, m odd >= 3 (k = 6)
};

inline BoundRow bound_row(int k, std::int64_t n) {
  if (k < 4) throw ParameterError("bound table needs k >= 4");
  if (n <= k) throw ParameterError("bound table needs n > k, got n = " + std::to_string(n));
  BoundRow row;
  row.n = n;
  row.k = k;
  row.turan_bound = turan_edges(n, k - 2);
  const std::int64_t cut = (n * n) / (36 * static_cast<std::int64_t>(k - 1) * (k - 1));
  if (cut > 0) row.improved_bound = row.turan_bound - cut;
  row.uniform_bound = row.turan_bound + n - k + 3;
  if (k == 4) {
    row.strong_4crit = Rational(41 * n * n, 250);
    row.weak_4crit = Rational(n * n, 6) + Rational(10 * n);
    if (n % 4 == 0 && (n / 4) % 2 == 1 && n / 4 >= 3) row.toft_graph = Rational(n * n, 16) + Rational(n);
  }
  row.toft_lower = toft_constant(k) * Rational(n * n);
  if (k == 6 && n % 2 == 0 && (n / 2) % 2 == 1 && n / 2 >= 3) row.dirac_lower = Rational(n * n, 4) + Rational(n);
  return row;
}

inline std::vector<BoundRow> bound_table(int k, std::span<const std::int64_t> n_values) {
  std::vector<BoundRow> rows;
  for (auto n : n_values) rows.push_back(bound_row(k, n));
  return rows;
}

struct TwoPathCheck {
  HeavyPath best;
  std::int64_t cap = 0;  // n + 1
  bool verdict = false;
};

// Every 2-path in a 4-critical graph has d(x)+d(y)+d(z)-3t(x)-3t(z) <= n+1.
inline TwoPathCheck check_2path_bound(const Graph& g) {
  TwoPathCheck c;
  c.best = heaviest_2path(g);
  c.cap = g.order() + 1;
  c.verdict = c.best.value <= c.cap;
  return c;
}

// Lower bound 6e/n - 9n^2/e on the best 2-path when t(G) <= n and delta(G) >= 3.
inline Rational two_path_average_bound(std::int64_t n, std::int64_t e) {
  return Rational(6 * e, n) - Rational(9 * n * n, e);
}

struct CliqueCapReport {
  int k = 0;
  std::int64_t n = 0;
  std::uint64_t cliques = 0;     // copies of K_{k-1}
  std::uint64_t triangles = 0;   // t(G)
  std::int64_t order_cap = 0;    // n
  std::int64_t refined_cap = 0;  // n - k + 3
  bool refined_applies = false;  // needs n > k
  bool order_ok = false;
  bool refined_ok = false;

  bool verdict() const { return order_ok && refined_ok; }
};

// For k-critical g: at most n copies of K_{k-1}, and at most n-k+3 once n > k.
inline CliqueCapReport check_clique_caps(const Graph& g, int k) {
  if (k < 4) throw ParameterError("clique caps are stated for k >= 4");
  CliqueCapReport r;
  r.k = k;
  r.n = g.order();
  r.cliques = count_cliques(g, k - 1);
  r.triangles = triangle_profile(g).total;
  r.order_cap = r.n;
  r.refined_cap = r.n - k + 3;
  r.refined_applies = r.n > k;
  r.order_ok = static_cast<std::int64_t>(r.cliques) <= r.order_cap;
  r.refined_ok = !r.refined_applies || static_cast<std::int64_t>(r.cliques) <= r.refined_cap;
  return r;
}

using Partition = std::vector<std::vector<Vertex>>;

struct PartitionEval {
  Partition parts;
  std::uint64_t internal_edge_sum = 0;  // sum e(G[V_i])
  std::uint64_t missing_edges = 0;      // |E(K) \ E(G)| for the complete multipartite K on the parts
  Rational deviation;                   // sum (|V_i| - n/r)^2
};

inline PartitionEval evaluate_partition(const Graph& g, Partition parts) {
  const int n = g.order();
  if (parts.empty()) throw ParameterError("partition needs at least one part");
  std::vector<int> owner(n, -1);
  for (int p = 0; p < static_cast<int>(parts.size()); ++p)
    for (Vertex v : parts[p]) {
      if (v < 0 || v >= n) throw ParameterError("partition vertex out of range: " + std::to_string(v));
      if (owner[v] >= 0) throw ParameterError("vertex " + std::to_string(v) + " appears in two parts");
      owner[v] = p;
    }
  for (Vertex v = 0; v < n; ++v)
    if (owner[v] < 0) throw ParameterError("vertex " + std::to_string(v) + " is in no part");

  PartitionEval e;
  std::uint64_t cross = 0;
  for (auto [u, v] : g.edges()) {
    if (owner[u] == owner[v])
      ++e.internal_edge_sum;
    else
      ++cross;
  }
  std::uint64_t cross_pairs = 0, placed = 0;
  const std::int64_t r = static_cast<std::int64_t>(parts.size());
  e.deviation = Rational(0);
  for (auto& p : parts) {
    cross_pairs += placed * p.size();
    placed += p.size();
    Rational d = Rational(static_cast<std::int64_t>(p.size())) - Rational(n, r);
    e.deviation += d * d;
    std::sort(p.begin(), p.end());
  }
  e.missing_edges = cross_pairs - cross;
  e.parts = std::move(parts);
  return e;
}

// Greedy placement in label order (each vertex into the part where it has the
// fewest neighbours, lowest index on ties), then single-vertex moves while one
// strictly lowers the internal edge count, rescanning from vertex 0 after each move.
inline Partition stability_partition(const Graph& g, int r) {
  if (r < 2) throw ParameterError("stability partition needs r >= 2");
  const int n = g.order();
  std::vector<int> owner(n, -1);
  std::vector<std::vector<int>> into(n, std::vector<int>(r, 0));  // neighbours of v in part p
  auto place = [&](Vertex v, int p) {
    owner[v] = p;
    for (Vertex w : g.neighbours(v)) ++into[w][p];
  };
  auto lift = [&](Vertex v) {
    for (Vertex w : g.neighbours(v)) --into[w][owner[v]];
    owner[v] = -1;
  };
  for (Vertex v = 0; v < n; ++v)
    place(v, static_cast<int>(std::min_element(into[v].begin(), into[v].end()) - into[v].begin()));

  for (bool moved = true; moved;) {
    moved = false;
    for (Vertex v = 0; v < n && !moved; ++v) {
      int best = static_cast<int>(std::min_element(into[v].begin(), into[v].end()) - into[v].begin());
      if (into[v][best] < into[v][owner[v]]) {
        lift(v);
        place(v, best);
        moved = true;
      }
    }
  }
  Partition parts(r);
  for (Vertex v = 0; v < n; ++v) parts[owner[v]].push_back(v);
  return parts;
}

}  // namespace critlab
