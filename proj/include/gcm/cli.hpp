// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gcm/errors.hpp"
#include "gcm/gallery.hpp"
#include "gcm/gcmatroid.hpp"
#include "gcm/graph_enumeration.hpp"
#include "gcm/io.hpp"
#include "gcm/matroid.hpp"
#include "gcm/multigraph.hpp"
#include "gcm/realization.hpp"

namespace gcm::cli {

struct RunResult {
  int exit_code = 0;       // 0 ok, 1 verification failure, 2 input error
  bool has_report = false;
  nlohmann::json report;
  bool pretty = false;
  std::string message;     // goes to stderr
};

namespace detail {

inline nlohmann::json subset_json(Subset s) {
  nlohmann::json arr = nlohmann::json::array();
  for (int id : s) arr.push_back(id);
  return arr;
}

inline nlohmann::json circuits_json(const CircuitList& circuits) {
  nlohmann::json arr = nlohmann::json::array();
  for (Subset c : circuits) arr.push_back(subset_json(c));
  return arr;
}

inline nlohmann::json edges_json(const Multigraph& g) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Edge& e : g.edges()) arr.push_back(nlohmann::json::array({e.u, e.v}));
  return arr;
}

inline nlohmann::json graph_json(const Multigraph& g) {
  const ConnectivityReport r = connectivity_report(g);
  return nlohmann::json{{"n", g.vertex_count()},
                        {"m", g.edge_count()},
                        {"trivalent", r.is_trivalent},
                        {"two_edge_connected", r.is_2_edge_connected},
                        {"genus", r.genus}};
}

inline std::vector<int> parse_id_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      std::size_t pos = 0;
      const int value = std::stoi(token, &pos);
      if (pos != token.size()) throw std::invalid_argument(token);
      out.push_back(value);
    } catch (const std::exception&) {
      throw InputError(what + ": expected a comma-separated id list, got '" + text + "'");
    }
  }
  if (out.empty()) throw InputError(what + ": empty id list");
  return out;
}

struct CommonOptions {
  std::vector<std::string> galleries;
  std::vector<std::string> files;
  std::string engine = "naive";
  unsigned long long seed = 0;
  int max_bits = kDefaultEnumerationBits;
  bool json = false;
  bool pretty = false;
};

inline void add_input_options(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--gallery", opt.galleries, "Named gallery graph (repeatable)");
  cmd->add_option("--file", opt.files, "Graph file, DIMACS-like or JSON (repeatable)");
}

inline void add_common_options(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--engine", opt.engine, "Circuit engine: naive|structured|both")
      ->check(CLI::IsMember({"naive", "structured", "both"}));
  cmd->add_option("--seed", opt.seed, "Seed for randomized steps");
  cmd->add_option("--max-subset-bits", opt.max_bits, "Subset enumeration bound (vertices)");
  cmd->add_flag("--json", opt.json, "Compact JSON output (default)");
  cmd->add_flag("--pretty", opt.pretty, "Indented JSON output");
}

inline std::vector<GraphDocument> load_inputs(const CommonOptions& opt, std::size_t expected) {
  std::vector<GraphDocument> docs;
  for (const std::string& name : opt.galleries) docs.push_back(gcm::gallery(name));
  for (const std::string& path : opt.files) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    docs.push_back(parse_graph_auto(buffer.str(), path));
  }
  if (docs.size() != expected) {
    throw InputError("expected " + std::to_string(expected) + " input graph" +
                     (expected == 1 ? "" : "s") + " via --gallery/--file, got " +
                     std::to_string(docs.size()));
  }
  return docs;
}

inline nlohmann::json base_report(const std::string& command, const CommonOptions& opt) {
  return nlohmann::json{
      {"command", command},
      {"graph", nullptr},
      {"matroid",
       {{"rank", nullptr},
        {"circuits", nullptr},
        {"num_bases", nullptr},
        {"is_isd", nullptr},
        {"loops", nullptr}}},
      {"verification",
       {{"engine_diff", nullptr}, {"bond_realization", nullptr}, {"hyperplane_match", nullptr}}},
      {"result", nullptr},
      {"seed", opt.seed},
      {"elapsed_ms", 0}};
}

struct EngineRun {
  CircuitList circuits;
  std::optional<int> engine_diff;  // symmetric difference size when both ran
  nlohmann::json timings;
};

inline EngineRun run_engines(const Multigraph& g, const CommonOptions& opt) {
  EngineRun out;
  out.timings = nlohmann::json::object();
  auto timed = [&](Engine engine, const char* label) {
    const auto start = std::chrono::steady_clock::now();
    CircuitList circuits = engine == Engine::naive ? circuits_naive(g, opt.max_bits)
                                                   : circuits_structured(g, opt.max_bits);
    const auto stop = std::chrono::steady_clock::now();
    out.timings[label] =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return circuits;
  };
  if (opt.engine == "naive") {
    out.circuits = timed(Engine::naive, "naive_ms");
  } else if (opt.engine == "structured") {
    out.circuits = timed(Engine::structured, "structured_ms");
  } else {
    const CircuitList naive = timed(Engine::naive, "naive_ms");
    const CircuitList structured = timed(Engine::structured, "structured_ms");
    int diff = 0;
    for (Subset c : naive) {
      if (std::find(structured.begin(), structured.end(), c) == structured.end()) ++diff;
    }
    for (Subset c : structured) {
      if (std::find(naive.begin(), naive.end(), c) == naive.end()) ++diff;
    }
    out.engine_diff = diff;
    out.circuits = naive;
  }
  return out;
}

}  // namespace detail

inline RunResult run(std::vector<std::string> args) {
  using nlohmann::json;
  RunResult result;

  CLI::App app{"Graph curve matroid toolkit"};
  app.require_subcommand(1);
  detail::CommonOptions opt;

  CLI::App* cmd_circuits = app.add_subcommand("circuits", "List the circuits of the matroid");
  CLI::App* cmd_matroid =
      app.add_subcommand("matroid", "Full matroid report: rank, circuits, bases, self-duality");
  CLI::App* cmd_isd = app.add_subcommand("isd", "Check identical self-duality");
  CLI::App* cmd_rank = app.add_subcommand("rank", "Rank of the vertex set");
  CLI::App* cmd_cog = app.add_subcommand("cographic-rank", "Bond matroid rank of an edge set "
                                                           "or a vertex neighborhood");
  CLI::App* cmd_realize =
      app.add_subcommand("realize", "Verify the cycle matrix realization and the hyperplane "
                                    "section against the combinatorial matroid");
  CLI::App* cmd_compare = app.add_subcommand("compare", "Compare the matroids of two graphs");
  CLI::App* cmd_two_switch =
      app.add_subcommand("two-switch", "Splice two graphs along one edge of each");
  CLI::App* cmd_search =
      app.add_subcommand("search-pairs", "Search for non-isomorphic trivalent graphs with "
                                         "isomorphic matroids");
  CLI::App* cmd_list = app.add_subcommand("gallery-list", "List the built-in graphs");

  for (CLI::App* cmd : {cmd_circuits, cmd_matroid, cmd_isd, cmd_rank, cmd_cog, cmd_realize,
                        cmd_compare, cmd_two_switch, cmd_search, cmd_list}) {
    detail::add_common_options(cmd, opt);
  }
  for (CLI::App* cmd : {cmd_circuits, cmd_matroid, cmd_isd, cmd_rank, cmd_cog, cmd_realize,
                        cmd_compare, cmd_two_switch}) {
    detail::add_input_options(cmd, opt);
  }

  bool verify = false;
  cmd_matroid->add_flag("--verify", verify, "Cross-check engines and circuit axioms");
  std::string vertices_arg, edges_arg;
  cmd_cog->add_option("--vertices", vertices_arg, "Vertex ids, e.g. 1,2,3: rank of delta(A)");
  cmd_cog->add_option("--edges", edges_arg, "Edge ids, e.g. 1,2: rank of the edge set");
  int e1 = 1, e2 = 1;
  bool cross = false;
  cmd_two_switch->add_option("--e1", e1, "Edge id to delete in the first graph");
  cmd_two_switch->add_option("--e2", e2, "Edge id to delete in the second graph");
  cmd_two_switch->add_flag("--cross", cross, "Swap the endpoint pairing of the new edges");
  int search_n = 0;
  cmd_search->add_option("--n", search_n, "Largest vertex count to search")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    result.exit_code = app.exit(e, out, err);
    if (result.exit_code != 0) result.exit_code = 2;
    result.message = out.str() + err.str();
    return result;
  }

  const auto started = std::chrono::steady_clock::now();
  json report;
  result.pretty = opt.pretty;

  try {
    if (cmd_list->parsed()) {
      report = detail::base_report("gallery-list", opt);
      json items = json::array();
      for (const auto& [name, g] : gallery_graphs()) {
        json item = detail::graph_json(g);
        item["name"] = name;
        items.push_back(item);
      }
      report["result"] = items;
    } else if (cmd_circuits->parsed() || cmd_matroid->parsed() || cmd_isd->parsed() ||
               cmd_rank->parsed()) {
      const std::string command = cmd_circuits->parsed()  ? "circuits"
                                  : cmd_matroid->parsed() ? "matroid"
                                  : cmd_isd->parsed()     ? "isd"
                                                          : "rank";
      report = detail::base_report(command, opt);
      const GraphDocument doc = detail::load_inputs(opt, 1).front();
      const Multigraph& g = doc.graph;
      report["graph"] = detail::graph_json(g);
      if (command == "rank") {
        report["matroid"]["rank"] = rank_subset(g, g.vertices());
      } else {
        if (cmd_matroid->parsed() && verify && g.is_trivalent() && is_2_edge_connected(g)) {
          opt.engine = "both";
        }
        const detail::EngineRun engines = detail::run_engines(g, opt);
        const ExplicitMatroid m = ExplicitMatroid::from_circuits(
            g.vertex_count(), {engines.circuits.begin(), engines.circuits.end()},
            /*deep_validate=*/cmd_matroid->parsed() && verify);
        report["matroid"]["rank"] = m.rank();
        report["matroid"]["circuits"] = detail::circuits_json(engines.circuits);
        report["matroid"]["loops"] = detail::subset_json(m.loops());
        report["result"] = json{{"timings", engines.timings}};
        if (engines.engine_diff) {
          report["verification"]["engine_diff"] = *engines.engine_diff;
          if (*engines.engine_diff != 0) result.exit_code = 1;
        }
        if (command == "matroid" || command == "isd") {
          report["matroid"]["num_bases"] = m.bases(opt.max_bits).size();
          report["matroid"]["is_isd"] = m.is_identically_self_dual(opt.max_bits);
        }
      }
    } else if (cmd_cog->parsed()) {
      report = detail::base_report("cographic-rank", opt);
      const GraphDocument doc = detail::load_inputs(opt, 1).front();
      const Multigraph& g = doc.graph;
      report["graph"] = detail::graph_json(g);
      if (vertices_arg.empty() == edges_arg.empty()) {
        throw InputError("cographic-rank needs exactly one of --vertices or --edges");
      }
      if (!vertices_arg.empty()) {
        Subset a;
        for (int v : detail::parse_id_list(vertices_arg, "--vertices")) {
          if (v < 1 || v > g.vertex_count()) {
            throw InputError("--vertices: id " + std::to_string(v) + " out of range");
          }
          a = a.with(v);
        }
        const Subset d = g.delta(a);
        const int by_definition = cographic_rank(g, d);
        json res{{"vertices", detail::subset_json(a)},
                 {"delta", detail::subset_json(d)},
                 {"cographic_rank", by_definition},
                 {"closed_form", nullptr},
                 {"agree", true}};
        if (g.is_connected()) {
          const int closed = cographic_rank_of_neighborhood(g, a);
          res["closed_form"] = closed;
          res["agree"] = closed == by_definition;
          if (closed != by_definition) result.exit_code = 1;
        }
        report["result"] = res;
      } else {
        Subset b;
        for (int e : detail::parse_id_list(edges_arg, "--edges")) {
          if (e < 1 || e > g.edge_count()) {
            throw InputError("--edges: id " + std::to_string(e) + " out of range");
          }
          b = b.with(e);
        }
        report["result"] = json{{"edges", detail::subset_json(b)},
                                {"cographic_rank", cographic_rank(g, b)},
                                {"graphic_rank", graphic_rank(g, b)}};
      }
    } else if (cmd_realize->parsed()) {
      report = detail::base_report("realize", opt);
      const GraphDocument doc = detail::load_inputs(opt, 1).front();
      const Multigraph& g = doc.graph;
      report["graph"] = detail::graph_json(g);
      const BondRealizationReport bond = verify_bond_realization(g, opt.seed);
      report["verification"]["bond_realization"] = bond.passed;
      json res{{"bond_exhaustive", bond.exhaustive},
               {"bond_subsets_checked", bond.subsets_checked},
               {"hyperplane_attempt", nullptr},
               {"h", nullptr}};
      if (bond.failing_subset) res["bond_failing_subset"] = detail::subset_json(*bond.failing_subset);
      if (!bond.passed) result.exit_code = 1;
      const CircuitList combinatorial = circuits_naive(g, opt.max_bits);
      const HyperplaneSectionResult section =
          hyperplane_section_matroid(g, opt.seed, opt.max_bits);
      const bool match = section.matroid.circuits() == combinatorial;
      report["verification"]["hyperplane_match"] = match;
      if (!match) result.exit_code = 1;
      res["hyperplane_attempt"] = section.sample.attempt;
      res["h"] = section.sample.h;
      report["result"] = res;
      report["matroid"]["rank"] = section.matroid.rank();
      report["matroid"]["circuits"] = detail::circuits_json(combinatorial);
    } else if (cmd_compare->parsed()) {
      report = detail::base_report("compare", opt);
      const std::vector<GraphDocument> docs = detail::load_inputs(opt, 2);
      report["graph"] = detail::graph_json(docs[0].graph);
      const ExplicitMatroid m1 = to_explicit(
          compute_graph_curve_matroid(docs[0].graph, Engine::naive, opt.max_bits));
      const ExplicitMatroid m2 = to_explicit(
          compute_graph_curve_matroid(docs[1].graph, Engine::naive, opt.max_bits));
      const auto bijection = is_isomorphic(m1, m2);
      json res{{"isomorphic", bijection.has_value()},
               {"bijection", nullptr},
               {"left", {{"name", docs[0].name}, {"rank", m1.rank()},
                         {"num_circuits", m1.circuits().size()}}},
               {"right", {{"name", docs[1].name}, {"rank", m2.rank()},
                          {"num_circuits", m2.circuits().size()}}}};
      if (bijection) {
        json map = json::array();
        for (int e = 1; e <= m1.ground_size(); ++e) {
          map.push_back((*bijection)[static_cast<std::size_t>(e)]);
        }
        res["bijection"] = map;
      }
      report["result"] = res;
    } else if (cmd_two_switch->parsed()) {
      report = detail::base_report("two-switch", opt);
      const std::vector<GraphDocument> docs = detail::load_inputs(opt, 2);
      const Multigraph switched = two_switch(docs[0].graph, docs[1].graph, e1, e2, cross);
      report["graph"] = detail::graph_json(switched);
      json res{{"n", switched.vertex_count()},
               {"edges", detail::edges_json(switched)},
               {"direct_sum_match", nullptr}};
      const int needed = std::max({switched.vertex_count(), docs[0].graph.vertex_count(),
                                   docs[1].graph.vertex_count()});
      // The splice matroid equals the direct sum only when both pieces are
      // trivalent and 2-edge-connected; outside that regime a mismatch is
      // expected, so the comparison is skipped rather than reported as failure.
      const bool hypotheses_hold =
          docs[0].graph.is_trivalent() && is_2_edge_connected(docs[0].graph) &&
          docs[1].graph.is_trivalent() && is_2_edge_connected(docs[1].graph);
      if (needed <= opt.max_bits) {
        const CircuitList switched_circuits = circuits_naive(switched, opt.max_bits);
        if (hypotheses_hold) {
          const ExplicitMatroid sum = direct_sum(
              to_explicit(compute_graph_curve_matroid(docs[0].graph, Engine::naive, opt.max_bits)),
              to_explicit(compute_graph_curve_matroid(docs[1].graph, Engine::naive, opt.max_bits)));
          const bool match =
              switched_circuits ==
              CircuitList::from_sets({sum.circuits().begin(), sum.circuits().end()});
          res["direct_sum_match"] = match;
          if (!match) result.exit_code = 1;
        }
        const ExplicitMatroid m = ExplicitMatroid::from_circuits(
            switched.vertex_count(), {switched_circuits.begin(), switched_circuits.end()});
        report["matroid"]["rank"] = m.rank();
        report["matroid"]["circuits"] = detail::circuits_json(switched_circuits);
      }
      report["result"] = res;
    } else if (cmd_search->parsed()) {
      report = detail::base_report("search-pairs", opt);
      if (search_n < 2 || search_n % 2 != 0) {
        throw InputError("--n must be an even number >= 2");
      }
      if (search_n > 12) throw InputError("--n above 12 is not supported");
      json groups = json::array();
      for (int n = 2; n <= search_n; n += 2) {
        const std::vector<Multigraph> graphs = enumerate_trivalent_graphs(n, true, 12);
        std::vector<ExplicitMatroid> matroids;
        matroids.reserve(graphs.size());
        for (const Multigraph& g : graphs) {
          matroids.push_back(to_explicit(compute_graph_curve_matroid(g, Engine::naive,
                                                                     opt.max_bits)));
        }
        std::vector<std::vector<std::size_t>> classes;
        for (std::size_t i = 0; i < matroids.size(); ++i) {
          bool placed = false;
          for (auto& group : classes) {
            if (is_isomorphic(matroids[group.front()], matroids[i])) {
              group.push_back(i);
              placed = true;
              break;
            }
          }
          if (!placed) classes.push_back({i});
        }
        // Enumerated graphs are pairwise non-isomorphic, so any matroid class
        // with two members is a hit.
        for (const auto& group : classes) {
          if (group.size() < 2) continue;
          json members = json::array();
          for (std::size_t idx : group) {
            members.push_back(json{{"edges", detail::edges_json(graphs[idx])}});
          }
          groups.push_back(json{{"n", n},
                                {"rank", matroids[group.front()].rank()},
                                {"count", group.size()},
                                {"graphs", members}});
        }
      }
      report["result"] = json{{"max_n", search_n}, {"groups", groups}};
    }
  } catch (const GenericityError& e) {
    result.exit_code = 1;
    result.message = std::string("error: ") + e.what();
    return result;
  } catch (const InputError& e) {
    result.exit_code = 2;
    result.message = std::string("error: ") + e.what();
    return result;
  } catch (const ResourceError& e) {
    result.exit_code = 2;
    result.message = std::string("error: ") + e.what();
    return result;
  }

  const auto stopped = std::chrono::steady_clock::now();
  report["elapsed_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(stopped - started).count();
  result.has_report = true;
  result.report = std::move(report);
  return result;
}

inline int main_entry(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
  RunResult result = run(std::move(args));
  if (result.has_report) {
    std::cout << (result.pretty ? result.report.dump(2) : result.report.dump()) << "\n";
  }
  if (!result.message.empty()) std::cerr << result.message << "\n";
  return result.exit_code;
}

}  // namespace gcm::cli
