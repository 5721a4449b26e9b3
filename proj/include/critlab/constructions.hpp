#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "critlab/errors.hpp"
#include "critlab/graph.hpp"

namespace critlab {

namespace detail {

inline void require_odd_at_least_3(std::int64_t m, const char* family) {
  if (m < 3 || m % 2 == 0)
    throw ParameterError(std::string(family) + " requires an odd parameter >= 3, got " + std::to_string(m));
}

inline void add_cycle(GraphBuilder& b, Vertex first, int length) {
  for (int i = 0; i < length; ++i) b.add_edge(first + i, first + (i + 1) % length);
}

}  // namespace detail

// Balanced part sizes for T_r(n), larger parts first.
inline std::vector<std::int64_t> turan_part_sizes(std::int64_t n, std::int64_t r) {
  if (r < 1 || r > n) throw ParameterError("Turan graph needs 1 <= r <= n");
  std::vector<std::int64_t> sizes(r, n / r);
  for (std::int64_t i = 0; i < n % r; ++i) ++sizes[i];
  return sizes;
}

// e(T_r(n)) = C(n,2) - sum C(n_i,2).
inline std::int64_t turan_edges(std::int64_t n, std::int64_t r) {
  std::int64_t e = n * (n - 1) / 2;
  for (auto s : turan_part_sizes(n, r)) e -= s * (s - 1) / 2;
  return e;
}

// Part i occupies a contiguous label range.
inline std::vector<std::vector<Vertex>> turan_parts(int n, int r) {
  std::vector<std::vector<Vertex>> parts;
  Vertex next = 0;
  for (auto s : turan_part_sizes(n, r)) {
    parts.emplace_back();
    for (std::int64_t i = 0; i < s; ++i) parts.back().push_back(next++);
  }
  return parts;
}

inline Graph turan(int n, int r) {
  auto parts = turan_parts(n, r);
  std::vector<int> part_of(n);
  for (int p = 0; p < static_cast<int>(parts.size()); ++p)
    for (Vertex v : parts[p]) part_of[v] = p;
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph complete(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph cycle(int m) {
  if (m < 3) throw ParameterError("cycle needs at least 3 vertices");
  GraphBuilder b(m);
  detail::add_cycle(b, 0, m);
  return std::move(b).build();
}

inline Graph odd_cycle(int m) {
  detail::require_odd_at_least_3(m, "odd_cycle");
  return cycle(m);
}

inline Graph path(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

inline Graph star(int leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

inline Graph complete_bipartite(int a, int b_size) {
  GraphBuilder b(a + b_size);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b_size; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

// Rim 0..m-1 as a cycle, hub m joined to every rim vertex.
inline Graph wheel(int m) {
  if (m < 3) throw ParameterError("wheel needs a rim of at least 3 vertices");
  GraphBuilder b(m + 1);
  detail::add_cycle(b, 0, m);
  for (Vertex v = 0; v < m; ++v) b.add_edge(v, m);
  return std::move(b).build();
}

inline Graph petersen() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return std::move(b).build();
}

// Labels of the four Toft parts for parameter m.
struct ToftLayout {
  int m;
  Vertex a(int i) const { return i; }
  Vertex b(int i) const { return m + i; }
  Vertex c(int i) const { return 2 * m + i; }
  Vertex d(int i) const { return 3 * m + i; }
};

// Toft graph on 4m vertices: A and D are m-cycles, B and C independent,
// B-C complete bipartite, a_i-b_i and c_i-d_i perfect matchings.
inline Graph toft(int m) {
  detail::require_odd_at_least_3(m, "toft");
  ToftLayout at{m};
  GraphBuilder b(4 * m);
  detail::add_cycle(b, at.a(0), m);
  detail::add_cycle(b, at.d(0), m);
  for (int i = 0; i < m; ++i) {
    b.add_edge(at.a(i), at.b(i));
    b.add_edge(at.c(i), at.d(i));
    for (int j = 0; j < m; ++j) b.add_edge(at.b(i), at.c(j));
  }
  return std::move(b).build();
}

// Complete join of two disjoint m-cycles (0..m-1 and m..2m-1).
inline Graph dirac(int m) {
  detail::require_odd_at_least_3(m, "dirac");
  GraphBuilder b(2 * m);
  detail::add_cycle(b, 0, m);
  detail::add_cycle(b, m, m);
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = m; v < 2 * m; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

// G(n, p) with a seeded Mersenne twister; pairs visited in label order.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

}  // namespace critlab
