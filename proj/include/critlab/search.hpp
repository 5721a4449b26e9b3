#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "critlab/canonical.hpp"
#include "critlab/coloring.hpp"
#include "critlab/constructions.hpp"
#include "critlab/criticality.hpp"
#include "critlab/errors.hpp"
#include "critlab/graph.hpp"
#include "critlab/graph6.hpp"
#include "critlab/parallel.hpp"

namespace critlab {

// Largest n accepted by the enumerator for a given k.
inline int enumeration_limit(int k) { return k == 4 ? 9 : 8; }

struct EnumerationOptions {
  SolverOptions solver;
  unsigned jobs = 1;
  // Only the maximum-edge critical graphs are wanted; lighter graphs are pruned
  // against the best edge count found so far.
  bool extremal_only = false;
  // Work-unit progress file; finished units are skipped when it already exists.
  std::optional<std::filesystem::path> checkpoint;
};

struct EnumerationStats {
  std::vector<std::size_t> level_sizes;  // (k-1)-colourable graphs kept per order 1..n-1
  std::size_t work_units = 0;
  std::size_t units_resumed = 0;
  std::size_t candidates = 0;            // canonical children passing the cheap filters
};

struct EnumerationResult {
  int n = 0;
  int k = 0;
  std::vector<std::string> graphs;  // canonical graph6, sorted
  std::optional<std::size_t> f_value;
  std::vector<std::string> witnesses;
  bool complete = true;  // false in extremal-only mode: `graphs` then holds the witnesses only
  EnumerationStats stats;
};

namespace detail {

inline bool clique_within(const SmallGraph& g, int t, std::uint32_t cand) {
  if (t == 0) return true;
  if (std::popcount(cand) < t) return false;
  for (std::uint32_t bits = cand; bits; bits &= bits - 1) {
    int v = std::countr_zero(bits);
    std::uint32_t later = cand & g.rows[v] & ~((std::uint32_t{2} << v) - 1);
    if (clique_within(g, t - 1, later)) return true;
  }
  return false;
}

inline bool has_clique_of_size(const SmallGraph& g, int t) {
  const std::uint32_t all = g.n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << g.n) - 1);
  return clique_within(g, t, all);
}

inline bool connected(const SmallGraph& g) {
  if (g.n <= 1) return true;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t b = frontier; b; b &= b - 1) next |= g.rows[std::countr_zero(b)];
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == g.n;
}

// Canonical children of `parent` (itself canonically labelled), one per
// isomorphism class whose canonical parent is `parent`.
template <typename Filter>
std::vector<SmallGraph> canonical_children(const SmallGraph& parent, Filter&& keep) {
  std::vector<SmallGraph> out;
  const std::uint32_t limit = std::uint32_t{1} << parent.n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    SmallGraph child = parent.extended(mask);
    if (!keep(child, mask)) continue;
    if (is_canonically_labelled(child)) out.push_back(child);
  }
  return out;
}

struct Unit {
  std::string parent;
  bool done = false;
  std::vector<std::string> critical;
};

inline void save_checkpoint(const std::filesystem::path& path, int n, int k, bool extremal, const std::vector<Unit>& units) {
  nlohmann::json j;
  j["n"] = n;
  j["k"] = k;
  j["extremal_only"] = extremal;
  j["units"] = nlohmann::json::array();
  for (const auto& u : units) j["units"].push_back({{"parent", u.parent}, {"done", u.done}, {"critical", u.critical}});
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
}

inline void load_checkpoint(const std::filesystem::path& path, int n, int k, bool extremal, std::vector<Unit>& units,
                            std::size_t& resumed) {
  std::ifstream in(path);
  nlohmann::json j = nlohmann::json::parse(in);
  if (j.at("n") != n || j.at("k") != k || j.at("extremal_only") != extremal)
    throw PreconditionError("checkpoint " + path.string() + " belongs to a different run");
  const auto& saved = j.at("units");
  if (saved.size() != units.size()) throw PreconditionError("checkpoint work-unit list does not match");
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (saved[i].at("parent") != units[i].parent) throw PreconditionError("checkpoint work-unit list does not match");
    if (saved[i].at("done").get<bool>()) {
      units[i].done = true;
      units[i].critical = saved[i].at("critical").get<std::vector<std::string>>();
      ++resumed;
    }
  }
}

}  // namespace detail

// All k-critical graphs on n vertices up to isomorphism.
//
// Graphs are grown one vertex at a time in canonical (lexicographically
// minimal graph6) labelling; a child is kept only when the new vertex is last
// in its own canonical order, so each class appears once. Every proper induced
// subgraph of a k-critical graph is (k-1)-colourable, so smaller orders keep
// only (k-1)-colourable graphs. At order n the candidates must be connected,
// have minimum degree >= k-1 and contain no K_k unless n = k; survivors get
// the full criticality check, heaviest parents first.
inline EnumerationResult enumerate_k_critical(int n, int k, const EnumerationOptions& opts = {}) {
  if (k < 2) throw ParameterError("k must be at least 2");
  if (n < 1) throw ParameterError("n must be positive");
  if (n > enumeration_limit(k))
    throw ScaleLimitError("enumeration for k = " + std::to_string(k) + " is limited to n <= " +
                          std::to_string(enumeration_limit(k)));
  EnumerationResult result;
  result.n = n;
  result.k = k;
  result.complete = !opts.extremal_only;
  if (n < k) return result;

  auto colourable = [&](const SmallGraph& g) { return is_k_colorable(g.to_graph(), k - 1, opts.solver).has_value(); };

  std::vector<SmallGraph> level{SmallGraph{}.extended(0)};
  result.stats.level_sizes.push_back(1);
  for (int order = 2; order < n; ++order) {
    std::vector<std::vector<SmallGraph>> per_parent(level.size());
    parallel_for_index(level.size(), opts.jobs, [&](std::size_t i) {
      auto kids = detail::canonical_children(level[i], [](const SmallGraph&, std::uint32_t) { return true; });
      for (auto& c : kids)
        if (colourable(c)) per_parent[i].push_back(c);
    });
    std::vector<SmallGraph> next;
    for (auto& v : per_parent) next.insert(next.end(), v.begin(), v.end());
    level.swap(next);
    result.stats.level_sizes.push_back(level.size());
  }

  // Adding one vertex raises each degree by at most one.
  std::vector<SmallGraph> parents;
  for (auto& p : level) {
    bool ok = true;
    for (int v = 0; v < p.n; ++v) ok = ok && p.degree(v) >= k - 2;
    if (ok) parents.push_back(p);
  }
  std::stable_sort(parents.begin(), parents.end(),
                   [](const SmallGraph& a, const SmallGraph& b) { return a.size() > b.size(); });

  std::vector<detail::Unit> units(parents.size());
  for (std::size_t i = 0; i < parents.size(); ++i) units[i].parent = to_graph6(parents[i]);
  result.stats.work_units = units.size();
  if (opts.checkpoint && std::filesystem::exists(*opts.checkpoint))
    detail::load_checkpoint(*opts.checkpoint, n, k, opts.extremal_only, units, result.stats.units_resumed);

  std::atomic<std::size_t> best{0};
  for (const auto& u : units)
    for (const auto& s : u.critical) best = std::max<std::size_t>(best, from_graph6(s).size());
  std::atomic<std::size_t> candidates{0};
  std::mutex save_mutex;
  auto last_save = std::chrono::steady_clock::now();

  parallel_for_index(parents.size(), opts.jobs, [&](std::size_t i) {
    if (units[i].done) return;
    const SmallGraph& p = parents[i];
    const std::size_t parent_edges = p.size();
    if (opts.extremal_only && parent_edges + p.n < best.load(std::memory_order_relaxed)) {
      units[i].done = true;
      return;
    }
    auto kids = detail::canonical_children(p, [&](const SmallGraph& child, std::uint32_t mask) {
      if (std::popcount(mask) < k - 1) return false;
      if (opts.extremal_only && parent_edges + std::popcount(mask) < best.load(std::memory_order_relaxed)) return false;
      for (int v = 0; v < p.n; ++v)
        if (child.degree(v) < k - 1) return false;
      if (!detail::connected(child)) return false;
      if (n != k && detail::has_clique_of_size(child, k)) return false;
      return true;
    });
    // Heaviest first, so the shared bound rises early.
    std::stable_sort(kids.begin(), kids.end(),
                     [](const SmallGraph& a, const SmallGraph& b) { return a.size() > b.size(); });
    candidates += kids.size();
    std::vector<std::string> found;
    for (const auto& child : kids) {
      const std::size_t e = child.size();
      if (opts.extremal_only && e < best.load(std::memory_order_relaxed)) continue;
      auto report = is_k_critical(child.to_graph(), k, {opts.solver, 1});
      if (!report.verdict) continue;
      found.push_back(to_graph6(child));
      std::size_t seen = best.load(std::memory_order_relaxed);
      while (e > seen && !best.compare_exchange_weak(seen, e, std::memory_order_relaxed)) {
      }
    }
    std::lock_guard lock(save_mutex);
    units[i].critical = std::move(found);
    units[i].done = true;
    if (opts.checkpoint && std::chrono::steady_clock::now() - last_save > std::chrono::seconds(2)) {
      detail::save_checkpoint(*opts.checkpoint, n, k, opts.extremal_only, units);
      last_save = std::chrono::steady_clock::now();
    }
  });
  if (opts.checkpoint) detail::save_checkpoint(*opts.checkpoint, n, k, opts.extremal_only, units);
  result.stats.candidates = candidates;

  std::vector<std::string> all;
  for (auto& u : units) all.insert(all.end(), u.critical.begin(), u.critical.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (const auto& s : all) {
    std::size_t e = from_graph6(s).size();
    if (!result.f_value || e > *result.f_value) result.f_value = e;
  }
  for (const auto& s : all)
    if (from_graph6(s).size() == result.f_value) result.witnesses.push_back(s);
  result.graphs = opts.extremal_only ? result.witnesses : all;
  return result;
}

struct FRow {
  int n = 0;
  std::optional<std::size_t> f;
  std::vector<std::string> witnesses;
  std::optional<std::int64_t> uniform_cap;  // e(T_{k-2}(n)) + n - k + 3, for n > k >= 4
  bool within_cap = true;
  std::optional<std::string> anchor;        // construction giving a lower bound at this n
  std::optional<std::int64_t> anchor_edges;
  bool meets_anchor = true;
};

// Best construction lower bound available for f_k(n), if any.
inline std::optional<std::pair<std::string, std::int64_t>> construction_anchor(int k, int n) {
  std::optional<std::pair<std::string, std::int64_t>> best;
  auto offer = [&](std::string name, std::int64_t e) {
    if (!best || e > best->second) best = std::make_pair(std::move(name), e);
  };
  if (n == k) offer("complete", static_cast<std::int64_t>(k) * (k - 1) / 2);
  if (k == 3 && n % 2 == 1 && n >= 3) offer("odd_cycle", n);
  if (k == 4 && n % 2 == 0 && n >= 4) offer("wheel", 2 * (n - 1));
  if (k == 4 && n % 4 == 0 && (n / 4) % 2 == 1 && n >= 12) offer("toft", static_cast<std::int64_t>(n) * n / 16 + n);
  if (k == 6 && n % 2 == 0 && (n / 2) % 2 == 1 && n >= 6) offer("dirac", static_cast<std::int64_t>(n) * n / 4 + n);
  return best;
}

inline std::vector<FRow> f_table(int k, int n_max, const EnumerationOptions& opts = {}) {
  if (n_max > enumeration_limit(k)) throw ScaleLimitError("n_max beyond the enumeration limit");
  std::vector<FRow> rows;
  EnumerationOptions o = opts;
  o.extremal_only = true;
  o.checkpoint.reset();
  for (int n = k; n <= n_max; ++n) {
    auto r = enumerate_k_critical(n, k, o);
    FRow row;
    row.n = n;
    row.f = r.f_value;
    row.witnesses = r.witnesses;
    if (k >= 4 && n > k) {
      row.uniform_cap = turan_edges(n, k - 2) + n - k + 3;
      row.within_cap = !row.f || static_cast<std::int64_t>(*row.f) <= *row.uniform_cap;
    }
    if (auto a = construction_anchor(k, n)) {
      row.anchor = a->first;
      row.anchor_edges = a->second;
      row.meets_anchor = row.f && static_cast<std::int64_t>(*row.f) >= a->second;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace critlab
