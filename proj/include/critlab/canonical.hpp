#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "critlab/errors.hpp"
#include "critlab/graph.hpp"
#include "critlab/graph6.hpp"

namespace critlab {

inline constexpr int kCanonicalMaxOrder = 10;

// Adjacency rows as bitmasks; enough for the canonical-labelling regime.
struct SmallGraph {
  static constexpr int kMaxOrder = 32;

  int n = 0;
  std::array<std::uint32_t, kMaxOrder> rows{};

  bool adjacent(int u, int v) const { return (rows[u] >> v) & 1u; }
  int degree(int v) const { return std::popcount(rows[v]); }

  std::size_t size() const {
    std::size_t e = 0;
    for (int v = 0; v < n; ++v) e += std::popcount(rows[v]);
    return e / 2;
  }

  // Appends vertex n adjacent to the vertices in `mask`.
  SmallGraph extended(std::uint32_t mask) const {
    SmallGraph h = *this;
    h.rows[n] = mask;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1u) h.rows[v] |= std::uint32_t{1} << n;
    ++h.n;
    return h;
  }

  static SmallGraph from(const Graph& g) {
    if (g.order() > kMaxOrder) throw ScaleLimitError("small graph limited to 32 vertices");
    SmallGraph s;
    s.n = g.order();
    for (auto [u, v] : g.edges()) {
      s.rows[u] |= std::uint32_t{1} << v;
      s.rows[v] |= std::uint32_t{1} << u;
    }
    return s;
  }

  Graph to_graph() const {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (adjacent(u, v)) b.add_edge(u, v);
    return std::move(b).build();
  }

  friend bool operator==(const SmallGraph& a, const SmallGraph& b) {
    if (a.n != b.n) return false;
    for (int v = 0; v < a.n; ++v)
      if (a.rows[v] != b.rows[v]) return false;
    return true;
  }
};

namespace detail {

// The graph6 bit string is column-major, so under an ordering perm the string
// is the concatenation over j of column j = bits adj(perm[i], perm[j]), i < j,
// first i most significant. Comparing columns as integers of equal width
// compares the strings lexicographically.
class LexMinLabelling {
 public:
  explicit LexMinLabelling(const SmallGraph& g) : g_(g), n_(g.n) {}

  // Ordering (position -> vertex) whose string is lexicographically smallest.
  std::vector<int> minimum() {
    have_best_ = false;
    placed_ = 0;
    descend(0, false);
    return {best_perm_.begin(), best_perm_.begin() + n_};
  }

  // True iff no ordering gives a string smaller than the identity ordering's.
  bool identity_is_minimum() {
    for (int j = 0; j < n_; ++j) target_[j] = column_of_identity(j);
    placed_ = 0;
    return check(0);
  }

 private:
  std::uint64_t column(int j, int v) const {
    std::uint64_t c = 0;
    for (int i = 0; i < j; ++i) c = (c << 1) | ((g_.rows[perm_[i]] >> v) & 1u);
    return c;
  }

  std::uint64_t column_of_identity(int j) const {
    std::uint64_t c = 0;
    for (int i = 0; i < j; ++i) c = (c << 1) | ((g_.rows[i] >> j) & 1u);
    return c;
  }

  void descend(int j, bool tie) {
    if (j == n_) {
      if (!tie) {
        best_ = current_;
        best_perm_ = perm_;
        have_best_ = true;
        ++version_;
      }
      return;
    }
    std::array<std::pair<std::uint64_t, int>, SmallGraph::kMaxOrder> cand;
    int m = 0;
    for (int v = 0; v < n_; ++v)
      if (!((placed_ >> v) & 1u)) cand[m++] = {column(j, v), v};
    std::sort(cand.begin(), cand.begin() + m);
    for (int i = 0; i < m; ++i) {
      auto [col, v] = cand[i];
      bool child_tie = false;
      if (have_best_ && tie) {
        if (col > best_[j]) break;
        child_tie = col == best_[j];
      }
      const std::uint64_t before = version_;
      perm_[j] = v;
      current_[j] = col;
      placed_ |= std::uint32_t{1} << v;
      descend(j + 1, child_tie);
      placed_ &= ~(std::uint32_t{1} << v);
      // A new best below this node shares our prefix.
      if (version_ != before) tie = true;
    }
  }

  bool check(int j) {
    if (j == n_) return true;
    for (int v = 0; v < n_; ++v) {
      if ((placed_ >> v) & 1u) continue;
      std::uint64_t col = column(j, v);
      if (col < target_[j]) return false;
    }
    for (int v = 0; v < n_; ++v) {
      if ((placed_ >> v) & 1u) continue;
      if (column(j, v) != target_[j]) continue;
      perm_[j] = v;
      placed_ |= std::uint32_t{1} << v;
      bool ok = check(j + 1);
      placed_ &= ~(std::uint32_t{1} << v);
      if (!ok) return false;
    }
    return true;
  }

  const SmallGraph& g_;
  int n_;
  std::uint32_t placed_ = 0;
  std::array<int, SmallGraph::kMaxOrder> perm_{};
  std::array<std::uint64_t, SmallGraph::kMaxOrder> current_{};
  std::array<std::uint64_t, SmallGraph::kMaxOrder> best_{};
  std::array<int, SmallGraph::kMaxOrder> best_perm_{};
  std::array<std::uint64_t, SmallGraph::kMaxOrder> target_{};
  bool have_best_ = false;
  std::uint64_t version_ = 0;
};

inline SmallGraph reorder(const SmallGraph& g, const std::vector<int>& order) {
  SmallGraph h;
  h.n = g.n;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (g.adjacent(order[i], order[j])) h.rows[i] |= std::uint32_t{1} << j;
  return h;
}

inline void require_canonical_regime(int n) {
  if (n > kCanonicalMaxOrder)
    throw ScaleLimitError("canonical form limited to " + std::to_string(kCanonicalMaxOrder) + " vertices, got " +
                          std::to_string(n));
}

}  // namespace detail

// Position -> original vertex for the lexicographically minimal labelling.
inline std::vector<Vertex> canonical_order(const Graph& g) {
  detail::require_canonical_regime(g.order());
  auto s = SmallGraph::from(g);
  return detail::LexMinLabelling(s).minimum();
}

inline SmallGraph canonical_small(const SmallGraph& g) {
  detail::require_canonical_regime(g.n);
  return detail::reorder(g, detail::LexMinLabelling(g).minimum());
}

inline bool is_canonically_labelled(const SmallGraph& g) {
  return detail::LexMinLabelling(g).identity_is_minimum();
}

inline std::string to_graph6(const SmallGraph& g) { return to_graph6(g.to_graph()); }

// graph6 string of the relabelling whose graph6 data is lexicographically
// smallest over all vertex permutations; equal exactly for isomorphic graphs.
inline std::string canonical_form(const Graph& g) {
  detail::require_canonical_regime(g.order());
  return to_graph6(canonical_small(SmallGraph::from(g)));
}

}  // namespace critlab
