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

#include <cctype>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gcm/errors.hpp"
#include "gcm/multigraph.hpp"

namespace gcm {

enum class GraphSource { file, gallery };

struct GraphDocument {
  std::string name;
  Multigraph graph;
  GraphSource source = GraphSource::file;
};

// DIMACS-like format:
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>     (m times, 1 <= u,v <= n)
// Blank lines are ignored.  Errors carry 1-based line numbers.
inline GraphDocument parse_graph(const std::string& text, const std::string& name = "<input>") {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  long long m = -1;
  std::vector<std::pair<int, int>> edges;
  auto fail = [&](const std::string& msg) -> void {
    throw InputError(name + ", line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) fail("duplicate problem line");
      std::string kind;
      if (!(ls >> kind) || kind != "edge") fail("expected 'p edge <n> <m>'");
      long long np = -1, mp = -1;
      if (!(ls >> np >> mp) || np < 1 || mp < 0) fail("expected 'p edge <n> <m>' with n >= 1");
      std::string extra;
      if (ls >> extra) fail("unexpected token '" + extra + "'");
      if (np > 62) fail("vertex count exceeds supported maximum of 62");
      if (mp > 62) fail("edge count exceeds supported maximum of 62");
      n = static_cast<int>(np);
      m = mp;
    } else if (tag == "e") {
      if (n < 0) fail("edge before problem line");
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) fail("expected 'e <u> <v>'");
      std::string extra;
      if (ls >> extra) fail("unexpected token '" + extra + "'");
      if (static_cast<long long>(edges.size()) >= m) {
        fail("more than " + std::to_string(m) + " edges declared in problem line");
      }
      if (u < 1 || u > n || v < 1 || v > n) {
        fail("endpoint out of range [1," + std::to_string(n) + "]: (" + std::to_string(u) + "," +
             std::to_string(v) + ")");
      }
      edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    } else {
      fail("unknown line type '" + tag + "'");
    }
  }
  ++line_no;
  if (n < 0) fail("missing problem line");
  if (static_cast<long long>(edges.size()) != m) {
    fail("problem line declares " + std::to_string(m) + " edges, found " +
         std::to_string(edges.size()));
  }
  return GraphDocument{name, Multigraph::from_edge_list(n, edges), GraphSource::file};
}

// JSON alternative: {"n": <int>, "edges": [[u,v], ...]}.
inline GraphDocument parse_graph_json(const std::string& text,
                                      const std::string& name = "<input>") {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(name + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw InputError(name + ": expected an object with keys \"n\" and \"edges\"");
  }
  if (!j["n"].is_number_integer()) throw InputError(name + ": \"n\" must be an integer");
  if (!j["edges"].is_array()) throw InputError(name + ": \"edges\" must be an array");
  const int n = j["n"].get<int>();
  if (n < 1) throw InputError(name + ": \"n\" must be at least 1");
  std::vector<std::pair<int, int>> edges;
  for (const auto& item : j["edges"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      throw InputError(name + ": each edge must be a pair of integers");
    }
    edges.push_back({item[0].get<int>(), item[1].get<int>()});
  }
  return GraphDocument{name, Multigraph::from_edge_list(n, edges), GraphSource::file};
}

// Dispatches on the leading non-space character: '{' selects JSON.
inline GraphDocument parse_graph_auto(const std::string& text,
                                      const std::string& name = "<input>") {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') return parse_graph_json(text, name);
    break;
  }
  return parse_graph(text, name);
}

// Canonical serialization: problem line, then one edge line per edge in list
// order with u <= v.  parse(serialize(g)) reproduces (n, edge list) exactly.
inline std::string serialize_graph(const Multigraph& g) {
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

}  // namespace gcm
