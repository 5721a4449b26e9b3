#pragma once

// JSON views of library results for the command-line tool.

#include <nlohmann/json.hpp>

#include "critlab/critlab.hpp"

namespace critlab::cli {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& r) { return Json{{"exact", to_string(r)}, {"floor", floor_of(r)}}; }

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json optional_rational(const std::optional<Rational>& v) { return v ? rational_json(*v) : Json(nullptr); }

inline Json graph_summary(const Graph& g) {
  return Json{{"graph6", to_graph6(g)}, {"n", g.order()}, {"edges", g.size()}};
}

inline Json coloring_json(const Coloring& c) { return Json{{"colors", c.colors}, {"num_colors", c.num_colors}}; }

inline Json criticality_json(const CriticalityReport& r) {
  Json certs = Json::array();
  for (const auto& e : r.edge_evidence) {
    Json item{{"edge", {e.edge.first, e.edge.second}}};
    item["coloring"] = e.coloring ? Json(e.coloring->colors) : Json(nullptr);
    certs.push_back(std::move(item));
  }
  return Json{{"k", r.k},
              {"chi", r.chi},
              {"optimal_coloring", r.optimal.colors},
              {"has_isolated_vertex", r.has_isolated_vertex},
              {"verdict", r.verdict},
              {"edge_certificates", std::move(certs)}};
}

inline Json matching_check_json(const WitnessCheck& c) {
  return Json{{"bijection", c.bijection},
              {"partner_sees_only_w", c.partner_sees_only_w},
              {"w_sees_only_partner", c.w_sees_only_partner},
              {"moreover_applies", c.moreover_applies},
              {"W_independent", c.W_independent},
              {"disjoint", c.disjoint},
              {"failures", c.failures},
              {"ok", c.ok()}};
}

inline Json matching_json(const Graph& g, const LemmaWitness& w) {
  Json phi = Json::array();
  for (const auto& s : w.steps)
    phi.push_back(Json{{"w", s.w}, {"phi", s.partner}, {"residual_class", s.residual_class},
                       {"coloring", s.coloring.colors}});
  return Json{{"k", w.k},
              {"clique", w.clique},
              {"u", w.u},
              {"W", w.W},
              {"W_prime", w.W_prime},
              {"steps", std::move(phi)},
              {"overlap", w.overlap},
              {"check", matching_check_json(verify_matching_witness(g, w.W, w.W_prime))}};
}

inline Json xy_json(const Graph& g, const XYWitness& w) {
  auto c = verify_xy_witness(g, w);
  return Json{{"cycle", w.cycle},
              {"V", {w.V[0], w.V[1], w.V[2], w.V[3]}},
              {"X", w.X},
              {"Y", w.Y},
              {"X_dprime", w.X_dprime},
              {"Y_dprime", w.Y_dprime},
              {"X_prime", w.x_witness.W_prime},
              {"Y_prime", w.y_witness.W_prime},
              {"triangles", w.triangles},
              {"check",
               {{"disjoint", c.disjoint},
                {"edge_caps", c.edge_caps},
                {"size_bounds", c.size_bounds},
                {"x_edges", c.x_edges},
                {"y_edges", c.y_edges},
                {"x_size_floor", c.x_size_floor},
                {"y_size_floor", c.y_size_floor},
                {"ok", c.ok()}}}};
}

inline Json bound_row_json(const BoundRow& r) {
  return Json{{"n", r.n},
              {"k", r.k},
              {"turan_bound", r.turan_bound},
              {"improved_bound", optional_json(r.improved_bound)},
              {"uniform_bound", r.uniform_bound},
              {"strong_4crit", optional_rational(r.strong_4crit)},
              {"weak_4crit", optional_rational(r.weak_4crit)},
              {"toft_lower", rational_json(r.toft_lower)},
              {"toft_graph", optional_rational(r.toft_graph)},
              {"dirac_lower", optional_rational(r.dirac_lower)}};
}

// Which columns are asymptotic statements and which hold for every n in range.
inline Json bound_notes() {
  return Json{{"turan_bound", "large-n only: f_k(n) < e(T_{k-2}(n)) for sufficiently large n"},
              {"improved_bound", "large-n only: e(T_{k-2}(n)) - floor(n^2 / (36 (k-1)^2)); null when the term is 0"},
              {"uniform_bound", "valid for every n > k"},
              {"strong_4crit", "large-n only: 41 n^2 / 250"},
              {"weak_4crit", "valid for every n >= 4: n^2/6 + 10 n"},
              {"toft_lower", "c_k n^2 from the Toft-type constructions"},
              {"toft_graph", "n^2/16 + n, attained by the Toft graph when n = 4m with m odd"},
              {"dirac_lower", "n^2/4 + n, attained by the join of two odd m-cycles when n = 2m"}};
}

inline Json partition_json(const PartitionEval& e) {
  return Json{{"parts", e.parts},
              {"internal_edge_sum", e.internal_edge_sum},
              {"missing_edges", e.missing_edges},
              {"deviation", rational_json(e.deviation)}};
}

}  // namespace critlab::cli
