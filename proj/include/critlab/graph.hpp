#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "critlab/errors.hpp"

namespace critlab {

using Vertex = int;
using Word = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kWordBits = 64;

inline int words_for(int n) { return (n + kWordBits - 1) / kWordBits; }

class GraphBuilder;

// Simple undirected graph on vertices 0..n-1 with one adjacency bitset per
// vertex. Values are immutable; derived graphs are new values.
class Graph {
 public:
  Graph() = default;

  // Edgeless graph on n vertices.
  explicit Graph(int n)
      : n_(checked_order(n)), words_(words_for(n)), bits_(static_cast<std::size_t>(n) * words_, 0), degree_(n, 0) {}

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_; }
  int words() const noexcept { return words_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (row(u)[v / kWordBits] >> (v % kWordBits)) & 1u;
  }

  int degree(Vertex v) const { return degree_[v]; }

  std::span<const Word> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  std::vector<Vertex> neighbours(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(degree_[v]);
    auto r = row(v);
    for (int w = 0; w < words_; ++w)
      for (Word bits = r[w]; bits; bits &= bits - 1) out.push_back(w * kWordBits + std::countr_zero(bits));
    return out;
  }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbours(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  int min_degree() const { return n_ == 0 ? 0 : *std::min_element(degree_.begin(), degree_.end()); }
  int max_degree() const { return n_ == 0 ? 0 : *std::max_element(degree_.begin(), degree_.end()); }

  int common_neighbour_count(Vertex u, Vertex v) const {
    auto a = row(u), b = row(v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
    return c;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  friend class GraphBuilder;

  static int checked_order(int n) {
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    return n;
  }

  Word* mutable_row(Vertex v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }

  int n_ = 0;
  int words_ = 0;
  std::vector<Word> bits_;
  std::vector<int> degree_;
  std::size_t edges_ = 0;
};

// Mutable staging area for constructing a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : g_(n) {}
  explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

  int order() const noexcept { return g_.order(); }

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    check(u, v);
    if (!g_.adjacent(u, v)) {
      flip(u, v);
      ++g_.degree_[u];
      ++g_.degree_[v];
      ++g_.edges_;
    }
    return *this;
  }

  GraphBuilder& remove_edge(Vertex u, Vertex v) {
    check(u, v);
    if (g_.adjacent(u, v)) {
      flip(u, v);
      --g_.degree_[u];
      --g_.degree_[v];
      --g_.edges_;
    }
    return *this;
  }

  bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }

  Graph build() const& { return g_; }
  Graph build() && { return std::move(g_); }

 private:
  void check(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= g_.order() || v >= g_.order())
      throw ParameterError("vertex out of range: " + std::to_string(u) + "," + std::to_string(v));
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
  }

  void flip(Vertex u, Vertex v) {
    g_.mutable_row(u)[v / kWordBits] ^= Word{1} << (v % kWordBits);
    g_.mutable_row(v)[u / kWordBits] ^= Word{1} << (u % kWordBits);
  }

  Graph g_;
};

inline Graph from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph from_edges(int n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v || !g.adjacent(u, v))
    throw NotAnEdgeError("not an edge: " + std::to_string(u) + "-" + std::to_string(v));
  GraphBuilder b(g);
  b.remove_edge(u, v);
  return std::move(b).build();
}

// G[S], relabelled so that the i-th vertex of `vertices` becomes i.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  GraphBuilder b(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return std::move(b).build();
}

inline Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

// Vertex perm[i] of the result corresponds to vertex i of g.
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw ParameterError("permutation size mismatch");
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).build();
}

// Number of edges between disjoint vertex sets a and b, i.e. e(G[A,B]).
inline std::size_t edges_between(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t c = 0;
  for (Vertex u : a)
    for (Vertex v : b)
      if (u != v && g.adjacent(u, v)) ++c;
  return c;
}

inline std::size_t edges_within(const Graph& g, std::span<const Vertex> s) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) ++c;
  return c;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbours(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.order();
}

// Graphviz export. Output only; never parsed back.
inline std::string to_dot(const Graph& g, const std::string& name = "G") {
  std::string out = "graph " + name + " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace critlab
