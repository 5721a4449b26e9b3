#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "critlab/errors.hpp"
#include "critlab/graph.hpp"

namespace critlab {

// Proper vertex colouring with colours 0..num_colors-1.
struct Coloring {
  std::vector<int> colors;
  int num_colors = 0;

  std::vector<std::vector<Vertex>> classes() const {
    std::vector<std::vector<Vertex>> out(num_colors);
    for (Vertex v = 0; v < static_cast<Vertex>(colors.size()); ++v) out[colors[v]].push_back(v);
    return out;
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Independent of the solver: checks ranges and every edge.
inline bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.order()) return false;
  for (int col : c.colors)
    if (col < 0 || col >= c.num_colors) return false;
  for (auto [u, v] : g.edges())
    if (c.colors[u] == c.colors[v]) return false;
  return true;
}

struct SolverOptions {
  // Ceiling on search nodes per top-level call; 0 means unlimited.
  std::uint64_t node_budget = 0;
};

namespace detail {

// Renumber colours by first appearance in label order.
inline Coloring normalized(std::vector<int> colors) {
  std::vector<int> remap;
  int used = 0;
  for (int& c : colors) {
    if (c >= static_cast<int>(remap.size())) remap.resize(c + 1, -1);
    if (remap[c] < 0) remap[c] = used++;
    c = remap[c];
  }
  return {std::move(colors), used};
}

// Grown from the highest-degree vertex, always adding the candidate of highest degree.
inline std::vector<Vertex> greedy_clique(const Graph& g) {
  std::vector<Vertex> clique;
  if (g.order() == 0) return clique;
  std::vector<Vertex> cand(g.order());
  for (Vertex v = 0; v < g.order(); ++v) cand[v] = v;
  while (!cand.empty()) {
    Vertex pick = cand.front();
    for (Vertex v : cand)
      if (g.degree(v) > g.degree(pick)) pick = v;
    clique.push_back(pick);
    std::vector<Vertex> next;
    for (Vertex v : cand)
      if (g.adjacent(pick, v)) next.push_back(v);
    cand.swap(next);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, int k, const SolverOptions& opts, std::uint64_t& nodes)
      : g_(g), n_(g.order()), k_(k), opts_(opts), nodes_(nodes),
        color_(n_, -1), seen_(static_cast<std::size_t>(n_) * k, 0), saturation_(n_, 0) {}

  // Heuristic run: never backtracks, may use more than k colours when k >= n.
  static std::vector<int> greedy(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<std::vector<char>> seen(n, std::vector<char>(n + 1, 0));
    std::vector<int> sat(n, 0);
    for (int step = 0; step < n; ++step) {
      Vertex v = -1;
      for (Vertex u = 0; u < n; ++u)
        if (color[u] < 0 && (v < 0 || sat[u] > sat[v] || (sat[u] == sat[v] && g.degree(u) > g.degree(v)))) v = u;
      int c = 0;
      while (seen[v][c]) ++c;
      color[v] = c;
      for (Vertex w : g.neighbours(v))
        if (!seen[w][c]) {
          seen[w][c] = 1;
          ++sat[w];
        }
    }
    return color;
  }

  std::optional<std::vector<int>> run(const std::vector<Vertex>& fixed_clique) {
    int used = 0;
    for (Vertex v : fixed_clique) assign(v, used++);
    if (dead_) return std::nullopt;
    if (search(fixed_clique.size(), used)) return color_;
    return std::nullopt;
  }

 private:
  std::size_t at(Vertex v, int c) const { return static_cast<std::size_t>(v) * k_ + c; }

  void assign(Vertex v, int c) {
    color_[v] = c;
    for (Vertex w : g_.neighbours(v)) {
      if (seen_[at(w, c)]++ == 0) {
        ++saturation_[w];
        if (color_[w] < 0 && saturation_[w] == k_) ++wiped_;
      }
    }
    dead_ = wiped_ > 0;
  }

  void unassign(Vertex v) {
    int c = color_[v];
    color_[v] = -1;
    for (Vertex w : g_.neighbours(v)) {
      if (--seen_[at(w, c)] == 0) {
        if (color_[w] < 0 && saturation_[w] == k_) --wiped_;
        --saturation_[w];
      }
    }
    dead_ = wiped_ > 0;
  }

  Vertex select() const {
    Vertex best = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      if (best < 0 || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best)))
        best = v;
    }
    return best;
  }

  bool search(std::size_t coloured, int used) {
    if (coloured == static_cast<std::size_t>(n_)) return true;
    Vertex v = select();
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (seen_[at(v, c)]) continue;
      if (++nodes_ > opts_.node_budget && opts_.node_budget) throw BudgetExceeded(opts_.node_budget, "colouring");
      assign(v, c);
      if (!dead_ && search(coloured + 1, std::max(used, c + 1))) return true;
      unassign(v);
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int k_;
  const SolverOptions& opts_;
  std::uint64_t& nodes_;
  std::vector<int> color_;
  std::vector<int> seen_;  // number of neighbours of v holding colour c
  std::vector<int> saturation_;
  int wiped_ = 0;  // uncoloured vertices that see all k colours
  bool dead_ = false;
};

}  // namespace detail

// Exact decision: a proper colouring with at most k colours, or nullopt when none exists.
// Search is DSATUR-ordered branch and bound with the colours of a greedy clique fixed.
inline std::optional<Coloring> is_k_colorable(const Graph& g, int k, const SolverOptions& opts, std::uint64_t& nodes) {
  if (k < 0) throw ParameterError("k must be non-negative");
  const int n = g.order();
  if (n == 0) return Coloring{};
  if (k == 0) return std::nullopt;
  if (g.size() == 0) return Coloring{std::vector<int>(n, 0), 1};
  if (k == 1) return std::nullopt;

  auto clique = detail::greedy_clique(g);
  if (static_cast<int>(clique.size()) > k) return std::nullopt;

  auto greedy = detail::DsaturSearch::greedy(g);
  if (*std::max_element(greedy.begin(), greedy.end()) < k) return detail::normalized(std::move(greedy));

  detail::DsaturSearch search(g, k, opts, nodes);
  auto found = search.run(clique);
  if (!found) return std::nullopt;
  return detail::normalized(std::move(*found));
}

inline std::optional<Coloring> is_k_colorable(const Graph& g, int k, const SolverOptions& opts = {}) {
  std::uint64_t nodes = 0;
  return is_k_colorable(g, k, opts, nodes);
}

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
};

// chi(G) with an optimal colouring; every k below chi has been refuted by the exact search
// (or by the clique bound).
inline ChromaticResult chromatic_number(const Graph& g, const SolverOptions& opts = {}) {
  if (g.order() == 0) return {0, {}};
  std::uint64_t nodes = 0;
  int lower = static_cast<int>(detail::greedy_clique(g).size());
  Coloring upper = detail::normalized(detail::DsaturSearch::greedy(g));
  for (int k = lower; k < upper.num_colors; ++k)
    if (auto c = is_k_colorable(g, k, opts, nodes)) return {c->num_colors, std::move(*c)};
  return {upper.num_colors, std::move(upper)};
}

}  // namespace critlab
