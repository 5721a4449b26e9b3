// critlab: command-line front end for constructing, colouring, certifying and
// searching k-critical graphs. Every result is one JSON document per line.
//
// Exit codes: 0 success, 1 domain error (bad hypothesis, not critical, bad input
// graph), 2 usage error, 3 solver budget exhausted (a partial report is printed).

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "report_json.hpp"

namespace fs = std::filesystem;
using namespace critlab;
using critlab::cli::Json;

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;
constexpr int kBudgetExceeded = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t budget = 0;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::optional<std::string> input_file;
  std::vector<std::string> inline_graphs;
};

void emit(const Json& doc) { std::cout << doc.dump() << '\n'; }

Json header(const std::string& command, const Globals& g) {
  return Json{{"command", command}, {"seed", g.seed}};
}

SolverOptions solver_options(const Globals& g) {
  SolverOptions s;
  s.node_budget = g.budget;
  return s;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> read_graph_lines(const Globals& g) {
  std::vector<std::string> raw;
  if (!g.inline_graphs.empty()) {
    raw = g.inline_graphs;
  } else if (g.input_file) {
    std::ifstream in(*g.input_file);
    if (!in) throw UsageError("cannot open input file " + *g.input_file);
    for (std::string line; std::getline(in, line);) raw.push_back(line);
  } else {
    for (std::string line; std::getline(std::cin, line);) raw.push_back(line);
  }
  std::vector<std::string> out;
  const std::string marker = ">>graph6<<";
  for (auto& line : raw) {
    auto t = trim(line);
    if (t.rfind(marker, 0) == 0) t = trim(t.substr(marker.size()));
    if (!t.empty()) out.push_back(t);
  }
  if (out.empty()) throw UsageError("no input graphs (use --graph, --input, or graph6 lines on stdin)");
  return out;
}

std::vector<Vertex> parse_vertex_list(const std::string& text, const std::string& flag) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<Vertex>(v));
    } catch (const std::logic_error&) {
      throw UsageError(flag + ": not a vertex list: " + text);
    }
  }
  return out;
}

Partition parse_parts(const std::string& text) {
  Partition parts;
  std::stringstream ss(text);
  for (std::string block; std::getline(ss, block, ';');) parts.push_back(parse_vertex_list(block, "--parts"));
  return parts;
}

Json error_doc(Json doc, const std::string& type, const std::string& message) {
  doc["status"] = "error";
  doc["error"] = Json{{"type", type}, {"message", message}};
  return doc;
}

Json budget_doc(Json doc, const BudgetExceeded& e) {
  doc["status"] = "indeterminate";
  doc["budget"] = e.budget();
  doc["message"] = e.what();
  return doc;
}

// Runs `body` for every input graph; each graph yields exactly one document.
// Domain errors are reported per graph; the worst exit code wins.
template <class Body>
int for_each_graph(const std::string& command, const Globals& globals, Body&& body) {
  int worst = kOk;
  for (const auto& line : read_graph_lines(globals)) {
    Json doc = header(command, globals);
    doc["input"] = line;
    int code = kOk;
    try {
      Graph g = from_graph6(line);
      doc["input"] = cli::graph_summary(g);
      code = body(g, doc);
    } catch (const IndeterminateError& e) {
      doc = budget_doc(std::move(doc), e);
      doc["partial"] = cli::criticality_json(e.partial());
      code = kBudgetExceeded;
    } catch (const BudgetExceeded& e) {
      doc = budget_doc(std::move(doc), e);
      code = kBudgetExceeded;
    } catch (const NotCriticalEvidence& e) {
      doc["status"] = "not-critical";
      doc["message"] = e.what();
      doc["disproof"] = e.disproof() ? Json(e.disproof()->colors) : Json(nullptr);
      code = kDomainError;
    } catch (const HypothesisError& e) {
      doc = error_doc(std::move(doc), "hypothesis", e.what());
      doc["error"]["hypothesis"] = e.hypothesis();
      code = kDomainError;
    } catch (const ParseError& e) {
      doc = error_doc(std::move(doc), "parse", e.what());
      code = kDomainError;
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    } catch (const ScaleLimitError& e) {
      throw UsageError(e.what());
    } catch (const Error& e) {
      doc = error_doc(std::move(doc), "domain", e.what());
      code = kDomainError;
    }
    emit(doc);
    worst = std::max(worst, code);
  }
  return worst;
}

// construct -------------------------------------------------------------------

int run_construct(const Globals& globals, const std::string& family, const std::vector<int>& params,
                  const std::string& format) {
  Graph g;
  if (family == "toft")
    g = toft(params[0]);
  else if (family == "dirac")
    g = dirac(params[0]);
  else if (family == "turan")
    g = turan(params[0], params[1]);
  else if (family == "cycle")
    g = odd_cycle(params[0]);
  else
    g = wheel(params[0]);

  if (format == "g6") {
    std::cout << to_graph6(g) << '\n';
  } else if (format == "dot") {
    std::cout << to_dot(g, family);
  } else {
    Json doc = header("construct", globals);
    doc["status"] = "ok";
    doc["family"] = family;
    doc["params"] = params;
    doc["graph6"] = to_graph6(g);
    doc["n"] = g.order();
    doc["edges"] = g.size();
    doc["edge_list"] = Json::array();
    for (auto [u, v] : g.edges()) doc["edge_list"].push_back({u, v});
    emit(doc);
  }
  return kOk;
}

// enumerate / ftable ----------------------------------------------------------

int run_enumerate(const Globals& globals, int n, int k, const std::optional<std::string>& out_dir,
                  const std::optional<std::string>& checkpoint, bool extremal_only) {
  EnumerationOptions opts;
  opts.solver = solver_options(globals);
  opts.jobs = globals.jobs;
  opts.extremal_only = extremal_only;
  if (checkpoint) opts.checkpoint = fs::path(*checkpoint);
  Json doc = header("enumerate", globals);
  doc["n"] = n;
  doc["k"] = k;
  try {
    auto r = enumerate_k_critical(n, k, opts);
    std::vector<std::string> files;
    if (out_dir) {
      fs::create_directories(*out_dir);
      for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
        std::ostringstream name;
        name << "k" << k << "_n" << n << "_" << std::setw(3) << std::setfill('0') << i << ".g6";
        fs::path p = fs::path(*out_dir) / name.str();
        std::ofstream(p) << r.witnesses[i] << '\n';
        files.push_back(p.string());
      }
    }
    doc["status"] = "ok";
    doc["complete"] = r.complete;
    doc["count"] = r.graphs.size();
    doc["graphs"] = r.graphs;
    doc["f_value"] = cli::optional_json(r.f_value);
    doc["witnesses"] = r.witnesses;
    doc["files"] = files;
    doc["stats"] = Json{{"level_sizes", r.stats.level_sizes},
                        {"work_units", r.stats.work_units},
                        {"units_resumed", r.stats.units_resumed},
                        {"candidates", r.stats.candidates}};
  } catch (const BudgetExceeded& e) {
    emit(budget_doc(std::move(doc), e));
    return kBudgetExceeded;
  }
  emit(doc);
  return kOk;
}

int run_ftable(const Globals& globals, int k, int n_max) {
  EnumerationOptions opts;
  opts.solver = solver_options(globals);
  opts.jobs = globals.jobs;
  Json doc = header("ftable", globals);
  doc["k"] = k;
  try {
    Json rows = Json::array();
    for (const auto& r : f_table(k, n_max, opts))
      rows.push_back(Json{{"n", r.n},
                          {"f", cli::optional_json(r.f)},
                          {"witnesses", r.witnesses},
                          {"uniform_cap", cli::optional_json(r.uniform_cap)},
                          {"within_cap", r.within_cap},
                          {"anchor", cli::optional_json(r.anchor)},
                          {"anchor_edges", cli::optional_json(r.anchor_edges)},
                          {"meets_anchor", r.meets_anchor}});
    doc["status"] = "ok";
    doc["rows"] = std::move(rows);
  } catch (const BudgetExceeded& e) {
    emit(budget_doc(std::move(doc), e));
    return kBudgetExceeded;
  }
  emit(doc);
  return kOk;
}

// bounds ----------------------------------------------------------------------

std::string csv_cell(const std::optional<Rational>& r) { return r ? to_string(*r) : ""; }

int run_bounds(const Globals& globals, int k, const std::vector<std::int64_t>& ns, const std::string& format) {
  auto rows = bound_table(k, ns);
  if (format == "csv") {
    std::cout << "n,k,turan_bound[large-n only],improved_bound[large-n only],uniform_bound,strong_4crit[large-n only],weak_4crit,"
                 "toft_lower,toft_graph,dirac_lower\n";
    for (const auto& r : rows)
      std::cout << r.n << ',' << r.k << ',' << r.turan_bound << ',' << (r.improved_bound ? std::to_string(*r.improved_bound) : "") << ','
                << r.uniform_bound << ',' << csv_cell(r.strong_4crit) << ',' << csv_cell(r.weak_4crit) << ','
                << to_string(r.toft_lower) << ',' << csv_cell(r.toft_graph) << ',' << csv_cell(r.dirac_lower) << '\n';
    return kOk;
  }
  Json doc = header("bounds", globals);
  doc["status"] = "ok";
  doc["k"] = k;
  doc["delta_k"] = k >= 6 ? cli::rational_json(delta_k(k)) : Json(nullptr);
  doc["rows"] = Json::array();
  for (const auto& r : rows) doc["rows"].push_back(cli::bound_row_json(r));
  doc["notes"] = cli::bound_notes();
  emit(doc);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critlab: construct, certify and search k-critical graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--budget", globals.budget, "solver node ceiling per call (0 = unlimited)")
      ->envname("CRITLAB_BUDGET");
  app.add_option("--jobs", globals.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", globals.seed, "seed echoed in every report");
  app.add_option("--input", globals.input_file, "file with one graph6 per line (default: stdin)");
  app.add_option("--graph", globals.inline_graphs, "inline graph6 input (repeatable)");

  // construct
  auto* construct = app.add_subcommand("construct", "build a named graph family");
  construct->require_subcommand(1);
  std::string format = "json";
  construct->add_option("--format", format, "json, g6 or dot")->check(CLI::IsMember({"json", "g6", "dot"}));
  std::vector<int> params;
  std::string family;
  for (auto [name, arity, help] :
       {std::tuple{"toft", 1, "Toft graph on 4m vertices (m odd >= 3)"},
        std::tuple{"dirac", 1, "join of two odd m-cycles (m odd >= 3)"},
        std::tuple{"turan", 2, "Turan graph T_r(n): params n r"}, std::tuple{"cycle", 1, "odd cycle C_m"},
        std::tuple{"wheel", 1, "wheel with an m-cycle rim"}}) {
    auto* sub = construct->add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("params", params, arity == 1 ? "m" : "n r")->required()->expected(arity);
    sub->callback([&family, sub] { family = sub->get_name(); });
  }

  // color / verify-critical
  auto* color = app.add_subcommand("color", "chromatic number with an optimal colouring");
  auto* verify = app.add_subcommand("verify-critical", "certify k-criticality edge by edge");
  int verify_k = 0;
  verify->add_option("-k", verify_k, "target chromatic number")->required();

  // witness
  auto* witness = app.add_subcommand("witness", "extract recolouring witnesses");
  witness->require_subcommand(1);
  auto* matching = witness->add_subcommand("matching", "matching witness for a clique, u and W");
  int wk = 0;
  std::string clique_text, w_text;
  Vertex wu = -1;
  bool verify_first = false;
  matching->add_option("-k", wk, "criticality of the input")->required();
  matching->add_option("--clique", clique_text, "comma-separated clique vertices (k-3 of them)")->required();
  matching->add_option("--u", wu, "vertex u")->required();
  matching->add_option("--W", w_text, "comma-separated vertex set W")->required();
  matching->add_flag("--verify-critical", verify_first, "re-run the full criticality check first");
  auto* xy = witness->add_subcommand("xy", "X/Y witness around a 4-cycle of a 4-critical graph");
  std::string cycle_text;
  std::array<std::string, 4> set_text;
  bool xy_verify = false;
  xy->add_option("--cycle", cycle_text, "v1,v2,v3,v4")->required();
  std::array<CLI::Option*, 4> set_opts{};
  for (int i = 0; i < 4; ++i)
    set_opts[i] = xy->add_option("--V" + std::to_string(i + 1), set_text[i], "subset of N(v" + std::to_string(i + 1) + ")");
  for (int i = 1; i < 4; ++i) set_opts[0]->needs(set_opts[i]), set_opts[i]->needs(set_opts[0]);
  xy->add_flag("--verify-critical", xy_verify, "re-run the full criticality check first");

  // check
  auto* check = app.add_subcommand("check", "evaluate inequalities on input graphs");
  check->require_subcommand(1);
  auto* two_path = check->add_subcommand("2path", "heaviest 2-path against n + 1");
  auto* cliques = check->add_subcommand("cliques", "K_{k-1} count against both caps");
  int cliques_k = 0;
  cliques->add_option("-k", cliques_k, "criticality of the input")->required();
  auto* partition = check->add_subcommand("partition", "evaluate a vertex partition");
  std::string parts_text;
  int stability_r = 0;
  auto* parts_opt = partition->add_option("--parts", parts_text, "parts as \"0,1;2,3\"");
  auto* stab_opt = partition->add_option("--stability", stability_r, "compute a local-search partition into r parts");
  parts_opt->excludes(stab_opt);
  partition->require_option(1);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "tabulate the edge bounds");
  int bounds_k = 0;
  std::vector<std::int64_t> bounds_n;
  std::string bounds_format = "json";
  bounds->add_option("-k", bounds_k, "criticality")->required();
  bounds->add_option("--n", bounds_n, "orders, comma-separated")->required()->delimiter(',');
  bounds->add_option("--format", bounds_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  // enumerate / ftable
  auto* enumerate = app.add_subcommand("enumerate", "all k-critical graphs of order n up to isomorphism");
  int enum_n = 0, enum_k = 0;
  std::optional<std::string> out_dir, checkpoint;
  bool extremal_only = false;
  enumerate->add_option("-n", enum_n, "order")->required();
  enumerate->add_option("-k", enum_k, "criticality")->required();
  enumerate->add_option("--out-dir", out_dir, "write one graph6 file per extremal witness");
  enumerate->add_option("--checkpoint", checkpoint, "JSON work-unit file for resuming");
  enumerate->add_flag("--extremal-only", extremal_only, "keep only maximum-edge graphs");
  auto* ftable = app.add_subcommand("ftable", "f_k(n) for n = k..nmax");
  int ft_k = 0, ft_nmax = 0;
  ftable->add_option("-k", ft_k, "criticality")->required();
  ftable->add_option("--nmax", ft_nmax, "largest order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (construct->parsed()) return run_construct(globals, family, params, format);

    if (color->parsed())
      return for_each_graph("color", globals, [&](const Graph& g, Json& doc) {
        auto r = chromatic_number(g, solver_options(globals));
        doc["status"] = "ok";
        doc["chi"] = r.chi;
        doc["coloring"] = r.coloring.colors;
        doc["proper"] = is_proper(g, r.coloring);
        return kOk;
      });

    if (verify->parsed())
      return for_each_graph("verify-critical", globals, [&](const Graph& g, Json& doc) {
        CriticalityOptions o;
        o.solver = solver_options(globals);
        o.jobs = globals.jobs;
        auto r = is_k_critical(g, verify_k, o);
        doc["status"] = r.verdict ? "ok" : "not-critical";
        doc["report"] = cli::criticality_json(r);
        doc["consistent"] = report_is_consistent(g, r);
        return r.verdict ? kOk : kDomainError;
      });

    if (matching->parsed()) {
      auto clique = parse_vertex_list(clique_text, "--clique");
      auto W = parse_vertex_list(w_text, "--W");
      return for_each_graph("witness matching", globals, [&](const Graph& g, Json& doc) {
        WitnessOptions o{solver_options(globals), globals.jobs, verify_first};
        auto w = extract_matching_witness(g, wk, clique, wu, W, o);
        doc["status"] = "ok";
        doc["witness"] = cli::matching_json(g, w);
        return kOk;
      });
    }

    if (xy->parsed()) {
      auto cyc = parse_vertex_list(cycle_text, "--cycle");
      if (cyc.size() != 4) throw UsageError("--cycle needs exactly four vertices");
      std::optional<std::array<std::vector<Vertex>, 4>> sets;
      if (set_opts[0]->count() > 0) {
        sets.emplace();
        for (int i = 0; i < 4; ++i) (*sets)[i] = parse_vertex_list(set_text[i], "--V" + std::to_string(i + 1));
      }
      return for_each_graph("witness xy", globals, [&](const Graph& g, Json& doc) {
        WitnessOptions o{solver_options(globals), globals.jobs, xy_verify};
        auto w = extract_xy_witness(g, {cyc[0], cyc[1], cyc[2], cyc[3]}, sets, o);
        doc["status"] = "ok";
        doc["witness"] = cli::xy_json(g, w);
        return kOk;
      });
    }

    if (two_path->parsed())
      return for_each_graph("check 2path", globals, [&](const Graph& g, Json& doc) {
        auto c = check_2path_bound(g);
        doc["status"] = "ok";
        doc["path"] = c.best.path;
        doc["value"] = c.best.value;
        doc["cap"] = c.cap;
        doc["verdict"] = c.verdict;
        return kOk;
      });

    if (cliques->parsed())
      return for_each_graph("check cliques", globals, [&](const Graph& g, Json& doc) {
        auto r = check_clique_caps(g, cliques_k);
        doc["status"] = "ok";
        doc["k"] = r.k;
        doc["cliques"] = r.cliques;
        doc["triangles"] = r.triangles;
        doc["order_cap"] = r.order_cap;
        doc["refined_cap"] = r.refined_cap;
        doc["refined_applies"] = r.refined_applies;
        doc["order_ok"] = r.order_ok;
        doc["refined_ok"] = r.refined_ok;
        doc["verdict"] = r.verdict();
        return kOk;
      });

    if (partition->parsed()) {
      std::optional<Partition> given;
      if (parts_opt->count() > 0) given = parse_parts(parts_text);
      return for_each_graph("check partition", globals, [&](const Graph& g, Json& doc) {
        Partition parts = given ? *given : stability_partition(g, stability_r);
        doc["status"] = "ok";
        doc["method"] = given ? "given" : "stability";
        doc["partition"] = cli::partition_json(evaluate_partition(g, std::move(parts)));
        return kOk;
      });
    }

    if (bounds->parsed()) return run_bounds(globals, bounds_k, bounds_n, bounds_format);
    if (enumerate->parsed()) return run_enumerate(globals, enum_n, enum_k, out_dir, checkpoint, extremal_only);
    if (ftable->parsed()) return run_ftable(globals, ft_k, ft_nmax);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParameterError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ScaleLimitError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}
