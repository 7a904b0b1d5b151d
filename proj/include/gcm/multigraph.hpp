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
#include <cassert>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "gcm/errors.hpp"
#include "gcm/subset.hpp"

namespace gcm {

// Undirected edge on 1-based vertex ids, stored with u <= v.  u == v is a
// loop.
struct Edge {
  int u = 0;
  int v = 0;
  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  // Returns true if the two elements were in different classes.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

}  // namespace detail

// Finite undirected multigraph on vertices {1..n} with 1-based edge ids given
// by position in the edge list.  Immutable after construction.
class Multigraph {
 public:
  // n >= 0; endpoints validated against [1..n].  Edge endpoint order is
  // normalized to u <= v, edge list order is preserved.
  Multigraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw InputError("vertex count must be nonnegative");
    if (n_ > 62) throw InputError("vertex count exceeds supported maximum of 62");
    if (edges_.size() > 62) throw InputError("edge count exceeds supported maximum of 62");
    incident_.assign(static_cast<std::size_t>(n_) + 1, Subset());
    adj_.assign(static_cast<std::size_t>(n_) + 1, {});
    degree_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      Edge& e = edges_[i];
      if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_) {
        throw InputError("edge " + std::to_string(i + 1) + " endpoint out of range: (" +
                         std::to_string(e.u) + "," + std::to_string(e.v) + ")");
      }
      if (e.u > e.v) std::swap(e.u, e.v);
      const int id = static_cast<int>(i) + 1;
      incident_[static_cast<std::size_t>(e.u)] |= Subset::single(id);
      incident_[static_cast<std::size_t>(e.v)] |= Subset::single(id);
      if (e.is_loop()) {
        adj_[static_cast<std::size_t>(e.u)].push_back({e.u, id});
        degree_[static_cast<std::size_t>(e.u)] += 2;  // a loop contributes 2
      } else {
        adj_[static_cast<std::size_t>(e.u)].push_back({e.v, id});
        adj_[static_cast<std::size_t>(e.v)].push_back({e.u, id});
        degree_[static_cast<std::size_t>(e.u)] += 1;
        degree_[static_cast<std::size_t>(e.v)] += 1;
      }
    }
  }

  // Vertex count must be at least 1 for this entry point; the plain
  // constructor accepts the empty graph.
  static Multigraph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 1) throw InputError("vertex count must be at least 1");
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v});
    return Multigraph(n, std::move(edges));
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const {
    assert(id >= 1 && id <= edge_count());
    return edges_[static_cast<std::size_t>(id) - 1];
  }
  const std::vector<Edge>& edges() const { return edges_; }
  Subset vertices() const { return Subset::full(n_); }
  Subset edge_set() const { return Subset::full(edge_count()); }
  Subset incident_edges(int v) const {
    assert(v >= 1 && v <= n_);
    return incident_[static_cast<std::size_t>(v)];
  }
  // (neighbor, edge id) pairs in edge id order; a loop appears once.
  const std::vector<std::pair<int, int>>& adjacency(int v) const {
    assert(v >= 1 && v <= n_);
    return adj_[static_cast<std::size_t>(v)];
  }
  int degree(int v) const {
    assert(v >= 1 && v <= n_);
    return degree_[static_cast<std::size_t>(v)];
  }

  // Edge neighborhood: all edges with at least one endpoint in a.
  Subset delta(Subset a) const {
    Subset out;
    for (int v : a) out |= incident_[static_cast<std::size_t>(v)];
    return out;
  }

  // Number of connected components of the subgraph induced on a.
  // components({}) == 0.
  int components(Subset a) const {
    if (a.empty()) return 0;
    detail::UnionFind uf(n_ + 1);
    for (const Edge& e : edges_) {
      if (!e.is_loop() && a.contains(e.u) && a.contains(e.v)) uf.unite(e.u, e.v);
    }
    int count = 0;
    for (int v : a) {
      if (uf.find(v) == v) ++count;
    }
    return count;
  }

  // Number of edges of the induced subgraph on a, loops and multiplicities
  // included.
  int induced_edge_count(Subset a) const {
    int count = 0;
    for (const Edge& e : edges_) {
      if (a.contains(e.u) && a.contains(e.v)) ++count;
    }
    return count;
  }

  // The induced subgraph on a contains a cycle; a loop is a 1-cycle and a
  // parallel pair a 2-cycle, so this is exactly |E(G[a])| > |a| - omega(a).
  bool is_cyclic_subset(Subset a) const {
    if (a.empty()) return false;
    return induced_edge_count(a) > a.size() - components(a);
  }

  bool is_connected() const { return n_ >= 1 && components(vertices()) == 1; }

  bool is_trivalent() const {
    for (int v = 1; v <= n_; ++v) {
      if (degree(v) != 3) return false;
    }
    return true;
  }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<Subset> incident_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<int> degree_;
};

struct ConnectivityReport {
  bool is_connected = false;
  bool is_trivalent = false;
  bool is_simple = false;
  bool has_loops = false;
  Subset bridges;  // edge ids
  int edge_connectivity = 0;
  bool is_2_edge_connected = false;
  bool is_2_vertex_connected = false;
  int genus = 0;  // first Betti number |E| - |V| + omega
};

namespace detail {

inline void bridge_dfs(const Multigraph& g, int v, int entering_edge, int& timer,
                       std::vector<int>& disc, std::vector<int>& low, Subset& bridges) {
  disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = ++timer;
  for (auto [w, eid] : g.adjacency(v)) {
    if (w == v || eid == entering_edge) continue;  // loops are never bridges
    if (disc[static_cast<std::size_t>(w)] == 0) {
      bridge_dfs(g, w, eid, timer, disc, low, bridges);
      low[static_cast<std::size_t>(v)] =
          std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
      if (low[static_cast<std::size_t>(w)] > disc[static_cast<std::size_t>(v)]) {
        bridges |= Subset::single(eid);
      }
    } else {
      low[static_cast<std::size_t>(v)] =
          std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
    }
  }
}

inline Subset find_bridges(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> low(static_cast<std::size_t>(n) + 1, 0);
  Subset bridges;
  int timer = 0;
  for (int v = 1; v <= n; ++v) {
    if (disc[static_cast<std::size_t>(v)] == 0) bridge_dfs(g, v, 0, timer, disc, low, bridges);
  }
  return bridges;
}

inline bool connected_without_edges(const Multigraph& g, Subset removed) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  UnionFind uf(n + 1);
  int parts = n;
  for (int id = 1; id <= g.edge_count(); ++id) {
    if (removed.contains(id)) continue;
    const Edge& e = g.edge(id);
    if (!e.is_loop() && uf.unite(e.u, e.v)) --parts;
  }
  return parts == 1;
}

// Edmonds-Karp on the multiplicity matrix, loops dropped.
inline int max_flow(std::vector<std::vector<int>> cap, int s, int t) {
  const int n = static_cast<int>(cap.size());
  int flow = 0;
  for (;;) {
    std::vector<int> prev(static_cast<std::size_t>(n), -1);
    prev[static_cast<std::size_t>(s)] = s;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && prev[static_cast<std::size_t>(t)] == -1) {
      int v = q.front();
      q.pop();
      for (int w = 0; w < n; ++w) {
        if (prev[static_cast<std::size_t>(w)] == -1 &&
            cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] > 0) {
          prev[static_cast<std::size_t>(w)] = v;
          q.push(w);
        }
      }
    }
    if (prev[static_cast<std::size_t>(t)] == -1) return flow;
    int bottleneck = INT32_MAX;
    for (int v = t; v != s; v = prev[static_cast<std::size_t>(v)]) {
      int u = prev[static_cast<std::size_t>(v)];
      bottleneck = std::min(bottleneck, cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
    }
    for (int v = t; v != s; v = prev[static_cast<std::size_t>(v)]) {
      int u = prev[static_cast<std::size_t>(v)];
      cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] -= bottleneck;
      cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] += bottleneck;
    }
    flow += bottleneck;
  }
}

inline int edge_connectivity(const Multigraph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n <= 1) return 0;  // a single vertex admits no cut
  if (!g.is_connected()) return 0;
  // Cutting all non-loop edges at one vertex disconnects it, so the minimum
  // non-loop degree bounds the answer.
  int ub = INT32_MAX;
  Subset non_loop;
  for (int id = 1; id <= m; ++id) {
    if (!g.edge(id).is_loop()) non_loop |= Subset::single(id);
  }
  for (int v = 1; v <= n; ++v) {
    ub = std::min(ub, (g.incident_edges(v) & non_loop).size());
  }
  if (m <= 20) {
    const std::vector<int> ids = non_loop.ids();
    for (int k = 1; k <= ub; ++k) {
      bool found = false;
      for_each_subset_of_size(static_cast<int>(ids.size()), k, [&](Subset positions) {
        Subset removed;
        for (int p : positions) removed = removed.with(ids[static_cast<std::size_t>(p - 1)]);
        if (!connected_without_edges(g, removed)) {
          found = true;
          return false;
        }
        return true;
      });
      if (found) return k;
    }
    return ub;
  }
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(n) + 1,
                                    std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    cap[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] += 1;
    cap[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] += 1;
  }
  int best = ub;
  for (int t = 2; t <= n; ++t) {
    best = std::min(best, max_flow(cap, 1, t));
  }
  return best;
}

}  // namespace detail

inline ConnectivityReport connectivity_report(const Multigraph& g) {
  ConnectivityReport r;
  const int n = g.vertex_count();
  r.is_connected = g.is_connected();
  r.is_trivalent = g.is_trivalent();
  r.has_loops = false;
  bool parallel = false;
  std::vector<std::pair<int, int>> seen;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) r.has_loops = true;
    std::pair<int, int> key{e.u, e.v};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) parallel = true;
    seen.push_back(key);
  }
  r.is_simple = !r.has_loops && !parallel;
  r.bridges = detail::find_bridges(g);
  r.edge_connectivity = detail::edge_connectivity(g);
  r.is_2_edge_connected = r.is_connected && r.edge_connectivity >= 2;
  // No articulation vertex; a connected 2-vertex graph qualifies.
  r.is_2_vertex_connected = r.is_connected && n >= 2;
  for (int v = 1; v <= n && r.is_2_vertex_connected; ++v) {
    if (n >= 2 && g.components(g.vertices().without(v)) != 1) r.is_2_vertex_connected = false;
  }
  r.genus = g.edge_count() - n + (n == 0 ? 0 : g.components(g.vertices()));
  return r;
}

inline bool is_2_edge_connected(const Multigraph& g) {
  return g.is_connected() && detail::edge_connectivity(g) >= 2;
}

// Vertices of the second graph are shifted by the vertex count of the first;
// edge ids likewise.
inline Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  const int na = a.vertex_count();
  std::vector<Edge> edges = a.edges();
  edges.reserve(edges.size() + b.edges().size());
  for (const Edge& e : b.edges()) edges.push_back({e.u + na, e.v + na});
  return Multigraph(na + b.vertex_count(), std::move(edges));
}

// Deletes non-loop edges e1 = (a1,b1) of g1 and e2 = (a2,b2) of g2 from the
// disjoint union and joins the stubs with two new edges, (a1,a2) and (b1,b2)
// in endpoint order, or (a1,b2) and (b1,a2) when cross is set.
inline Multigraph two_switch(const Multigraph& g1, const Multigraph& g2, int e1, int e2,
                             bool cross = false) {
  if (e1 < 1 || e1 > g1.edge_count()) throw InputError("two_switch: first edge id out of range");
  if (e2 < 1 || e2 > g2.edge_count()) throw InputError("two_switch: second edge id out of range");
  const Edge f1 = g1.edge(e1);
  const Edge f2 = g2.edge(e2);
  if (f1.is_loop() || f2.is_loop()) throw InputError("two_switch: loops cannot be switched");
  const int na = g1.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g1.edge_count() + g2.edge_count()));
  for (int id = 1; id <= g1.edge_count(); ++id) {
    if (id != e1) edges.push_back(g1.edge(id));
  }
  for (int id = 1; id <= g2.edge_count(); ++id) {
    if (id != e2) {
      const Edge& e = g2.edge(id);
      edges.push_back({e.u + na, e.v + na});
    }
  }
  const int a2 = (cross ? f2.v : f2.u) + na;
  const int b2 = (cross ? f2.u : f2.v) + na;
  edges.push_back({f1.u, a2});
  edges.push_back({f1.v, b2});
  return Multigraph(g1.vertex_count() + g2.vertex_count(), std::move(edges));
}

}  // namespace gcm
