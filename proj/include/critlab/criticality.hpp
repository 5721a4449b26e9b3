#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critlab/coloring.hpp"
#include "critlab/errors.hpp"
#include "critlab/graph.hpp"
#include "critlab/parallel.hpp"

namespace critlab {

// Evidence that chi(G - uv) <= k-1: a proper colouring of G - uv, or nothing
// when the edge is not critical.
struct EdgeEvidence {
  Edge edge;
  std::optional<Coloring> coloring;
};

struct CriticalityReport {
  int k = 0;
  int chi = 0;
  Coloring optimal;  // a proper chi-colouring of G
  std::vector<EdgeEvidence> edge_evidence;
  bool has_isolated_vertex = false;
  bool verdict = false;
};

struct CriticalityOptions {
  SolverOptions solver;
  unsigned jobs = 1;
};

// The solver ran out of budget on some sub-call. Carries the records finished so far.
class IndeterminateError : public BudgetExceeded {
 public:
  IndeterminateError(const BudgetExceeded& cause, CriticalityReport partial)
      : BudgetExceeded(cause), partial_(std::move(partial)) {}

  const CriticalityReport& partial() const noexcept { return partial_; }

 private:
  CriticalityReport partial_;
};

// Re-checks a report against g using only adjacency queries.
inline bool report_is_consistent(const Graph& g, const CriticalityReport& r) {
  if (!is_proper(g, r.optimal) || r.optimal.num_colors != r.chi) return false;
  if (!r.verdict) return true;
  if (r.chi != r.k || r.has_isolated_vertex || r.edge_evidence.size() != g.size()) return false;
  for (const auto& e : r.edge_evidence) {
    if (!e.coloring || e.coloring->num_colors > r.k - 1) return false;
    if (!is_proper(delete_edge(g, e.edge.first, e.edge.second), *e.coloring)) return false;
  }
  return true;
}

// G is k-critical iff chi(G) = k, G has no isolated vertex, and G - e is
// (k-1)-colourable for every edge e. Per-edge colourings are computed
// independently and merged in edge order.
inline CriticalityReport is_k_critical(const Graph& g, int k, const CriticalityOptions& opts = {}) {
  if (k < 2) throw ParameterError("criticality requires k >= 2");
  CriticalityReport report;
  report.k = k;
  ChromaticResult chi;
  try {
    chi = chromatic_number(g, opts.solver);
  } catch (const BudgetExceeded& e) {
    throw IndeterminateError(e, report);
  }
  report.chi = chi.chi;
  report.optimal = std::move(chi.coloring);
  report.has_isolated_vertex = g.order() > 0 && g.min_degree() == 0;
  if (report.chi != k) return report;

  const auto edges = g.edges();
  report.edge_evidence.resize(edges.size());
  std::vector<char> done(edges.size(), 0);
  try {
    parallel_for_index(edges.size(), opts.jobs, [&](std::size_t i) {
      auto [u, v] = edges[i];
      report.edge_evidence[i].edge = edges[i];
      report.edge_evidence[i].coloring = is_k_colorable(delete_edge(g, u, v), k - 1, opts.solver);
      done[i] = 1;
    });
  } catch (const BudgetExceeded& e) {
    CriticalityReport partial = report;
    partial.edge_evidence.clear();
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (done[i]) partial.edge_evidence.push_back(report.edge_evidence[i]);
    throw IndeterminateError(e, std::move(partial));
  }

  bool all = true;
  for (const auto& e : report.edge_evidence) all = all && e.coloring.has_value();
  report.verdict = all && !report.has_isolated_vertex;
  return report;
}

// A k-critical subgraph of g: edges are scanned in label order and removed
// whenever chi stays >= k, then isolated vertices are dropped (labels keep
// their relative order).
inline Graph critical_core(const Graph& g, int k, const SolverOptions& solver = {}) {
  if (k < 1) throw ParameterError("k must be at least 1");
  if (is_k_colorable(g, k - 1, solver)) throw PreconditionError("chromatic number is below " + std::to_string(k));
  if (k == 1) return Graph(1);

  GraphBuilder current(g);
  // An edge whose removal drops chi below k stays necessary in every subgraph,
  // so a single pass in label order matches restarting after each deletion.
  for (auto [u, v] : g.edges()) {
    current.remove_edge(u, v);
    if (is_k_colorable(current.build(), k - 1, solver)) current.add_edge(u, v);
  }
  Graph h = std::move(current).build();
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < h.order(); ++v)
    if (h.degree(v) > 0) keep.push_back(v);
  return induced_subgraph(h, keep);
}

}  // namespace critlab
