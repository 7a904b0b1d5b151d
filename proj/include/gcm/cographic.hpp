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

#include "gcm/errors.hpp"
#include "gcm/multigraph.hpp"

namespace gcm {

// Rank of an edge set in the graphic matroid of g: |V| minus the number of
// components of the spanning subgraph (V, b).  Loops never contribute.
inline int graphic_rank(const Multigraph& g, Subset b) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  detail::UnionFind uf(n + 1);
  int parts = n;
  for (int id : b) {
    const Edge& e = g.edge(id);
    if (!e.is_loop() && uf.unite(e.u, e.v)) --parts;
  }
  return n - parts;
}

// Rank of an edge set in the bond matroid of g, via the dual-rank identity
// r*(b) = r(E - b) + |b| - r(E).
inline int cographic_rank(const Multigraph& g, Subset b) {
  return graphic_rank(g, g.edge_set() - b) + b.size() - graphic_rank(g, g.edge_set());
}

// Closed form for r*(delta(a)) on a connected graph:
// |delta(a)| - |a| - omega(V - a) + 1.
inline int cographic_rank_of_neighborhood(const Multigraph& g, Subset a) {
  if (!g.is_connected()) {
    throw PreconditionError("cographic_rank_of_neighborhood requires a connected graph");
  }
  return g.delta(a).size() - a.size() - g.components(g.vertices() - a) + 1;
}

}  // namespace gcm
