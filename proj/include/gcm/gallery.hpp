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

#include <string>
#include <utility>
#include <vector>

#include "gcm/errors.hpp"
#include "gcm/io.hpp"
#include "gcm/multigraph.hpp"

namespace gcm {

// Named example graphs.  Vertex and edge numbering is part of the contract;
// tests and reports refer to these ids.
inline const std::vector<std::pair<std::string, Multigraph>>& gallery_graphs() {
  static const std::vector<std::pair<std::string, Multigraph>> graphs = [] {
    std::vector<std::pair<std::string, Multigraph>> out;
    // Two vertices joined by three parallel edges.
    out.push_back({"theta", Multigraph::from_edge_list(2, {{1, 2}, {1, 2}, {1, 2}})});
    // Two doubled rungs {1,2} and {3,4} tied by a perfect matching.
    out.push_back({"sodacan", Multigraph::from_edge_list(
                                  4, {{1, 3}, {2, 4}, {1, 2}, {1, 2}, {3, 4}, {3, 4}})});
    out.push_back({"k4", Multigraph::from_edge_list(
                             4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})});
    // Two pentagons sharing structure through a triangle; genus 5.
    out.push_back({"doublehouse",
                   Multigraph::from_edge_list(8, {{1, 2}, {1, 3}, {1, 8}, {2, 3}, {2, 4}, {3, 5},
                                                  {4, 5}, {4, 6}, {5, 7}, {6, 7}, {6, 8}, {7, 8}})});
    // Two looped vertices joined by a bridge.
    out.push_back({"dumbbell", Multigraph::from_edge_list(2, {{1, 1}, {2, 2}, {1, 2}})});
    out.push_back({"prism", Multigraph::from_edge_list(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6},
                                                           {4, 6}, {1, 4}, {2, 5}, {3, 6}})});
    out.push_back({"cube", Multigraph::from_edge_list(8, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {5, 6},
                                                          {6, 7}, {7, 8}, {5, 8}, {1, 5}, {2, 6},
                                                          {3, 7}, {4, 8}})});
    out.push_back({"petersen", Multigraph::from_edge_list(
                                   10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {6, 8}, {8, 10},
                                        {7, 10}, {7, 9}, {6, 9}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                        {5, 10}})});
    return out;
  }();
  return graphs;
}

inline std::vector<std::string> gallery_names() {
  std::vector<std::string> names;
  for (const auto& [name, g] : gallery_graphs()) names.push_back(name);
  return names;
}

inline GraphDocument gallery(const std::string& name) {
  for (const auto& [key, g] : gallery_graphs()) {
    if (key == name) return GraphDocument{name, g, GraphSource::gallery};
  }
  std::string known;
  for (const auto& key : gallery_names()) {
    if (!known.empty()) known += ", ";
    known += key;
  }
  throw InputError("unknown gallery graph '" + name + "' (known: " + known + ")");
}

}  // namespace gcm
