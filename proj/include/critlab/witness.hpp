#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "critlab/coloring.hpp"
#include "critlab/criticality.hpp"
#include "critlab/errors.hpp"
#include "critlab/graph.hpp"
#include "critlab/parallel.hpp"
#include "critlab/structure.hpp"

namespace critlab {

// The recolouring step failed in a way that a k-critical graph cannot produce.
// `disproof` (when present) is a proper (k-1)-colouring of the whole input graph.
class NotCriticalEvidence : public Error {
 public:
  NotCriticalEvidence(const std::string& what, std::optional<Coloring> disproof)
      : Error("input is not k-critical: " + what), disproof_(std::move(disproof)) {}

  const std::optional<Coloring>& disproof() const noexcept { return disproof_; }

 private:
  std::optional<Coloring> disproof_;
};

// Hypothesis of the matching lemma violated by the caller's input.
class HypothesisError : public PreconditionError {
 public:
  HypothesisError(std::string hypothesis, const std::string& detail)
      : PreconditionError(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

// Per w in W: the (k-1)-colouring of G - uw it was derived from.
struct WitnessStep {
  Vertex w = -1;
  Vertex partner = -1;   // phi(w)
  int residual_class = -1;
  Coloring coloring;
};

struct LemmaWitness {
  int k = 0;
  std::vector<Vertex> clique;
  Vertex u = -1;
  std::vector<Vertex> W;
  std::vector<Vertex> W_prime;  // W_prime[i] = phi(W[i])
  std::vector<WitnessStep> steps;
  std::vector<Vertex> overlap;  // W ∩ W', reported for |W| <= 2

  Vertex phi(Vertex w) const {
    auto it = std::find(W.begin(), W.end(), w);
    if (it == W.end()) throw ParameterError("vertex not in W");
    return W_prime[it - W.begin()];
  }
};

struct WitnessCheck {
  bool bijection = false;
  bool partner_sees_only_w = false;   // N(phi(w)) ∩ W = {w}
  bool w_sees_only_partner = false;   // N(w) ∩ W' = {phi(w)}
  bool moreover_applies = false;      // |W| >= 3
  bool W_independent = true;
  bool disjoint = true;               // W ∩ W' = ∅
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Checks every lemma conclusion for (W, phi) on g with adjacency queries only.
inline WitnessCheck verify_matching_witness(const Graph& g, std::span<const Vertex> W, std::span<const Vertex> W_prime) {
  WitnessCheck c;
  std::set<Vertex> in_w(W.begin(), W.end()), in_wp(W_prime.begin(), W_prime.end());
  c.bijection = W.size() == W_prime.size() && in_wp.size() == W_prime.size() && in_w.size() == W.size();
  if (!c.bijection) c.failures.push_back("phi is not a bijection onto W'");

  c.partner_sees_only_w = c.w_sees_only_partner = c.bijection;
  for (std::size_t i = 0; c.bijection && i < W.size(); ++i) {
    Vertex w = W[i], p = W_prime[i];
    std::vector<Vertex> seen_by_p, seen_by_w;
    for (Vertex x : W)
      if (g.adjacent(p, x)) seen_by_p.push_back(x);
    for (Vertex x : W_prime)
      if (g.adjacent(w, x)) seen_by_w.push_back(x);
    if (seen_by_p != std::vector<Vertex>{w}) {
      c.partner_sees_only_w = false;
      c.failures.push_back("N(phi(" + std::to_string(w) + ")) ∩ W != {w}");
    }
    if (seen_by_w.size() != 1 || seen_by_w.front() != p) {
      c.w_sees_only_partner = false;
      c.failures.push_back("N(" + std::to_string(w) + ") ∩ W' != {phi(w)}");
    }
  }

  c.moreover_applies = W.size() >= 3;
  if (c.moreover_applies) {
    c.W_independent = edges_within(g, W) == 0;
    if (!c.W_independent) c.failures.push_back("W is not independent");
    for (Vertex x : W_prime)
      if (in_w.count(x)) c.disjoint = false;
    if (!c.disjoint) c.failures.push_back("W ∩ W' is non-empty");
  }
  return c;
}

struct WitnessOptions {
  SolverOptions solver;
  unsigned jobs = 1;
  bool verify_critical = false;  // re-run the full criticality check first
};

// For each w in W: colour G - uw with k-1 colours, confirm u and w share a class,
// take the one class holding neither a clique vertex nor w, and set phi(w) to
// the smallest neighbour of w in that class.
inline LemmaWitness extract_matching_witness(const Graph& g, int k, std::vector<Vertex> clique, Vertex u,
                                             std::vector<Vertex> W, const WitnessOptions& opts = {}) {
  const int n = g.order();
  auto valid = [&](Vertex v) { return v >= 0 && v < n; };
  if (k < 4) throw HypothesisError("k >= 4", "got k = " + std::to_string(k));
  if (static_cast<int>(clique.size()) != k - 3)
    throw HypothesisError("clique has k-3 vertices", "got " + std::to_string(clique.size()));
  for (Vertex x : clique)
    if (!valid(x)) throw HypothesisError("vertices in range", "clique vertex " + std::to_string(x));
  if (!valid(u)) throw HypothesisError("vertices in range", "u = " + std::to_string(u));
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      if (clique[i] == clique[j] || !g.adjacent(clique[i], clique[j]))
        throw HypothesisError("x_1..x_{k-3} induce a complete graph",
                              std::to_string(clique[i]) + "," + std::to_string(clique[j]));
  if (std::find(clique.begin(), clique.end(), u) != clique.end())
    throw HypothesisError("u not in the clique", "u = " + std::to_string(u));
  if (W.empty()) throw HypothesisError("W non-empty", "W is empty");
  std::sort(W.begin(), W.end());
  if (std::adjacent_find(W.begin(), W.end()) != W.end()) throw HypothesisError("W is a set", "repeated vertex");
  for (Vertex w : W) {
    if (!valid(w)) throw HypothesisError("vertices in range", "w = " + std::to_string(w));
    if (!g.adjacent(u, w)) throw HypothesisError("W ⊆ N(u)", std::to_string(w) + " not adjacent to u");
    for (Vertex x : clique)
      if (!g.adjacent(x, w))
        throw HypothesisError("W ⊆ N(x_i)", std::to_string(w) + " not adjacent to " + std::to_string(x));
  }
  if (opts.verify_critical) {
    auto report = is_k_critical(g, k, {opts.solver, opts.jobs});
    if (!report.verdict) throw HypothesisError("G is k-critical", "criticality check failed");
  }

  LemmaWitness out;
  out.k = k;
  out.clique = clique;
  out.u = u;
  out.W = W;
  out.steps.resize(W.size());

  parallel_for_index(W.size(), opts.jobs, [&](std::size_t i) {
    const Vertex w = W[i];
    auto coloring = is_k_colorable(delete_edge(g, u, w), k - 1, opts.solver);
    if (!coloring) throw NotCriticalEvidence("G - {" + std::to_string(u) + "," + std::to_string(w) + "} is not (k-1)-colourable",
                                               std::nullopt);
    const auto& col = coloring->colors;
    if (col[u] != col[w]) {
      // Then the colouring is already proper on G.
      throw NotCriticalEvidence("u and w received different colours in G - uw", *coloring);
    }
    std::vector<char> pinned(k - 1, 0);
    for (Vertex x : clique) pinned[col[x]] = 1;
    pinned[col[w]] = 1;
    int residual = -1;
    for (int c = 0; c < k - 1; ++c)
      if (!pinned[c]) residual = c;
    if (residual < 0 || std::count(pinned.begin(), pinned.end(), 0) != 1)
      throw NotCriticalEvidence("clique and w do not pin k-2 distinct classes", std::nullopt);

    Vertex partner = -1;
    for (Vertex v : g.neighbours(w))
      if (col[v] == residual) {
        partner = v;
        break;
      }
    if (partner < 0) {
      Coloring moved = *coloring;
      moved.colors[w] = residual;
      throw NotCriticalEvidence("w has no neighbour in the residual class", detail::normalized(moved.colors));
    }
    out.steps[i] = {w, partner, residual, std::move(*coloring)};
  });

  for (const auto& s : out.steps) out.W_prime.push_back(s.partner);
  auto check = verify_matching_witness(g, out.W, out.W_prime);
  if (!check.ok()) throw NotCriticalEvidence("witness fails re-verification: " + check.failures.front(), std::nullopt);
  for (Vertex p : out.W_prime)
    if (std::binary_search(out.W.begin(), out.W.end(), p)) out.overlap.push_back(p);
  std::sort(out.overlap.begin(), out.overlap.end());
  return out;
}

struct XYWitness {
  std::array<Vertex, 4> cycle{};
  std::array<std::vector<Vertex>, 4> V;
  std::vector<Vertex> X, Y, X_dprime, Y_dprime;
  LemmaWitness x_witness, y_witness;
  std::array<std::uint64_t, 4> triangles{};  // t(v_i)
};

struct XYCheck {
  bool disjoint = false;     // X'' and Y'' avoid V1 ∪ V2 ∪ V3 ∪ V4
  bool edge_caps = false;    // e(G[X'',X]) <= |X| and e(G[Y'',Y]) <= |Y|
  bool size_bounds = false;  // |X''| >= |X| - 2t(v1) - 2t(v3) - 2, same for Y''
  std::size_t x_edges = 0, y_edges = 0;
  std::int64_t x_size_floor = 0, y_size_floor = 0;

  bool ok() const { return disjoint && edge_caps && size_bounds; }
};

inline XYCheck verify_xy_witness(const Graph& g, const XYWitness& w) {
  XYCheck c;
  std::set<Vertex> all;
  for (const auto& s : w.V) all.insert(s.begin(), s.end());
  c.disjoint = std::none_of(w.X_dprime.begin(), w.X_dprime.end(), [&](Vertex v) { return all.count(v); }) &&
               std::none_of(w.Y_dprime.begin(), w.Y_dprime.end(), [&](Vertex v) { return all.count(v); });
  c.x_edges = edges_between(g, w.X_dprime, w.X);
  c.y_edges = edges_between(g, w.Y_dprime, w.Y);
  c.edge_caps = c.x_edges <= w.X.size() && c.y_edges <= w.Y.size();
  const auto t = triangle_profile(g);
  const auto& cyc = w.cycle;
  c.x_size_floor = static_cast<std::int64_t>(w.X.size()) - 2 * static_cast<std::int64_t>(t.per_vertex[cyc[0]]) -
                   2 * static_cast<std::int64_t>(t.per_vertex[cyc[2]]) - 2;
  c.y_size_floor = static_cast<std::int64_t>(w.Y.size()) - 2 * static_cast<std::int64_t>(t.per_vertex[cyc[1]]) -
                   2 * static_cast<std::int64_t>(t.per_vertex[cyc[3]]) - 2;
  c.size_bounds = static_cast<std::int64_t>(w.X_dprime.size()) >= c.x_size_floor &&
                  static_cast<std::int64_t>(w.Y_dprime.size()) >= c.y_size_floor;
  return c;
}

// 4-critical G, 4-cycle v1v2v3v4, and sets with {v_{i-1}, v_{i+1}} ⊆ V_i ⊆ N(v_i).
// X = V1 ∩ V3 is matched through the lemma with clique {v1} and u = v3,
// Y = V2 ∩ V4 with clique {v2} and u = v4; X'', Y'' drop everything in the V_i.
inline XYWitness extract_xy_witness(const Graph& g, std::array<Vertex, 4> cycle,
                                    std::optional<std::array<std::vector<Vertex>, 4>> sets = std::nullopt,
                                    const WitnessOptions& opts = {}) {
  const int n = g.order();
  for (Vertex v : cycle)
    if (v < 0 || v >= n) throw HypothesisError("vertices in range", std::to_string(v));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (cycle[i] == cycle[j]) throw HypothesisError("v1..v4 distinct", "repeated vertex");
  for (int i = 0; i < 4; ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % 4]))
      throw HypothesisError("v1v2v3v4 is a 4-cycle",
                            std::to_string(cycle[i]) + "," + std::to_string(cycle[(i + 1) % 4]) + " not an edge");

  XYWitness out;
  out.cycle = cycle;
  for (int i = 0; i < 4; ++i) {
    auto s = sets ? (*sets)[i] : g.neighbours(cycle[i]);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    const Vertex prev = cycle[(i + 3) % 4], next = cycle[(i + 1) % 4];
    if (!std::binary_search(s.begin(), s.end(), prev) || !std::binary_search(s.begin(), s.end(), next))
      throw HypothesisError("{v_{i-1}, v_{i+1}} ⊆ V_i", "V" + std::to_string(i + 1));
    for (Vertex v : s)
      if (v < 0 || v >= n || !g.adjacent(cycle[i], v))
        throw HypothesisError("V_i ⊆ N(v_i)", "V" + std::to_string(i + 1) + " contains " + std::to_string(v));
    out.V[i] = std::move(s);
  }
  std::set_intersection(out.V[0].begin(), out.V[0].end(), out.V[2].begin(), out.V[2].end(), std::back_inserter(out.X));
  std::set_intersection(out.V[1].begin(), out.V[1].end(), out.V[3].begin(), out.V[3].end(), std::back_inserter(out.Y));

  if (opts.verify_critical) {
    auto report = is_k_critical(g, 4, {opts.solver, opts.jobs});
    if (!report.verdict) throw HypothesisError("G is 4-critical", "criticality check failed");
  }
  WitnessOptions inner = opts;
  inner.verify_critical = false;
  out.x_witness = extract_matching_witness(g, 4, {cycle[0]}, cycle[2], out.X, inner);
  out.y_witness = extract_matching_witness(g, 4, {cycle[1]}, cycle[3], out.Y, inner);

  std::set<Vertex> all;
  for (const auto& s : out.V) all.insert(s.begin(), s.end());
  for (Vertex v : out.x_witness.W_prime)
    if (!all.count(v)) out.X_dprime.push_back(v);
  for (Vertex v : out.y_witness.W_prime)
    if (!all.count(v)) out.Y_dprime.push_back(v);
  std::sort(out.X_dprime.begin(), out.X_dprime.end());
  std::sort(out.Y_dprime.begin(), out.Y_dprime.end());

  const auto t = triangle_profile(g);
  for (int i = 0; i < 4; ++i) out.triangles[i] = t.per_vertex[cycle[i]];

  auto check = verify_xy_witness(g, out);
  if (!check.ok()) throw NotCriticalEvidence("XY witness fails re-verification", std::nullopt);
  return out;
}

}  // namespace critlab
