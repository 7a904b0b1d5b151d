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
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gcm/cographic.hpp"
#include "gcm/errors.hpp"
#include "gcm/matroid.hpp"
#include "gcm/multigraph.hpp"

// The graph curve matroid of a multigraph G lives on the vertex set; a set A
// is dependent exactly when some nonempty A' subseteq A has
// r*(delta(A')) <= |A'|, where r* is the bond-matroid rank.  Circuits are the
// inclusion-minimal sets with r*(delta(A)) <= |A|.

namespace gcm {

// Memoizes r*(delta(a)) per vertex subset for the duration of one
// enumeration.  Owned by the caller; the library keeps no global state.
class NeighborhoodRankOracle {
 public:
  explicit NeighborhoodRankOracle(const Multigraph& g) : g_(&g) {}

  int operator()(Subset a) {
    auto it = memo_.find(a.bits);
    if (it != memo_.end()) return it->second;
    const int r = cographic_rank(*g_, g_->delta(a));
    memo_.emplace(a.bits, r);
    return r;
  }

  const Multigraph& graph() const { return *g_; }

 private:
  const Multigraph* g_;
  std::unordered_map<std::uint64_t, int> memo_;
};

namespace detail {

inline bool is_dependent(NeighborhoodRankOracle& rstar, Subset a) {
  bool dep = false;
  for_each_nonempty_submask_ascending(a, [&](Subset s) {
    if (rstar(s) <= s.size()) {
      dep = true;
      return false;
    }
    return true;
  });
  return dep;
}

inline void check_enumeration_bits(const Multigraph& g, int max_bits, const std::string& what) {
  if (g.vertex_count() > max_bits) {
    throw ResourceError(what + " bound exceeded: " + std::to_string(g.vertex_count()) +
                        " vertices > " + std::to_string(max_bits));
  }
}

inline void check_structured_hypothesis(const Multigraph& g, const std::string& what) {
  if (!g.is_trivalent()) throw PreconditionError(what + " requires a trivalent graph");
  if (!is_2_edge_connected(g)) {
    throw PreconditionError(what + " requires a 2-edge-connected graph");
  }
}

}  // namespace detail

// Subset scan in increasing cardinality with early exit.
inline bool is_dependent(const Multigraph& g, Subset a) {
  NeighborhoodRankOracle rstar(g);
  return detail::is_dependent(rstar, a);
}

inline bool is_independent(const Multigraph& g, Subset a) { return !is_dependent(g, a); }

// Greedy over ascending vertex ids; correct for any matroid rank function.
inline int rank_subset(const Multigraph& g, Subset a) {
  NeighborhoodRankOracle rstar(g);
  Subset s;
  for (int v : a) {
    if (!detail::is_dependent(rstar, s.with(v))) s = s.with(v);
  }
  return s.size();
}

// Reference engine: works on any multigraph within the enumeration bound.
// Scans all vertex subsets by increasing cardinality, pruning supersets of
// circuits already found, so each surviving candidate with
// r*(delta(A)) <= |A| is itself minimal.
inline CircuitList circuits_naive(const Multigraph& g, int max_bits = kDefaultEnumerationBits) {
  detail::check_enumeration_bits(g, max_bits, "circuit enumeration");
  NeighborhoodRankOracle rstar(g);
  return CircuitList::from_sets(minimal_satisfying_sets(
      g.vertex_count(), [&](Subset a) { return rstar(a) <= a.size(); }));
}

namespace detail {

// Vertex sets of simple cycles: loops, parallel pairs, and closed walks of
// length >= 3 found by DFS from each minimal cycle vertex.
inline std::vector<Subset> simple_cycle_vertex_sets(const Multigraph& g) {
  const int n = g.vertex_count();
  std::unordered_set<std::uint64_t> out;
  std::vector<std::vector<int>> nb(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(n) + 1,
                                     std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      out.insert(Subset::single(e.u).bits);
    } else if (++mult[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] == 1) {
      nb[static_cast<std::size_t>(e.u)].push_back(e.v);
      nb[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
  }
  for (int u = 1; u <= n; ++u) {
    for (int v : nb[static_cast<std::size_t>(u)]) {
      if (u < v && mult[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] >= 2) {
        out.insert(Subset::of({u, v}).bits);
      }
    }
  }
  // Paths start at the smallest vertex s of the cycle and only visit larger
  // vertices, so every cycle is seen (twice, once per direction).
  for (int s = 1; s <= n; ++s) {
    auto extend = [&](auto&& self, int at, Subset mask) -> void {
      for (int w : nb[static_cast<std::size_t>(at)]) {
        if (w == s && mask.size() >= 3) out.insert(mask.bits);
        if (w > s && !mask.contains(w)) self(self, w, mask.with(w));
      }
    };
    extend(extend, s, Subset::single(s));
  }
  std::vector<Subset> sets;
  sets.reserve(out.size());
  for (std::uint64_t bits : out) sets.push_back(Subset(bits));
  sort_canonical(sets);
  return sets;
}

}  // namespace detail

// Structural engine for trivalent 2-edge-connected graphs.  Candidates are
// the vertex sets of cycles that do not disconnect the graph together with
// the acyclic sets A satisfying omega(A) + 1 = omega(V - A); the circuits are
// the inclusion-minimal members of that pool.
inline CircuitList circuits_structured(const Multigraph& g,
                                       int max_bits = kDefaultEnumerationBits) {
  detail::check_structured_hypothesis(g, "structured circuit enumeration");
  detail::check_enumeration_bits(g, max_bits, "circuit enumeration");
  const int n = g.vertex_count();
  const Subset all = g.vertices();
  std::vector<Subset> pool;
  for (Subset c : detail::simple_cycle_vertex_sets(g)) {
    if (g.components(all - c) <= 1) pool.push_back(c);
  }
  for_each_subset_ascending(n, [&](Subset a) {
    if (a.empty() || g.is_cyclic_subset(a)) return true;
    if (g.components(a) + 1 == g.components(all - a)) pool.push_back(a);
    return true;
  });
  sort_canonical(pool);
  std::vector<Subset> minimal;
  for (Subset c : pool) {
    bool keep = true;
    for (Subset m : minimal) {
      if (m.proper_subset_of(c) || m == c) {
        keep = false;
        break;
      }
    }
    if (keep) minimal.push_back(c);
  }
  return CircuitList::from_sets(std::move(minimal));
}

enum class Engine { naive, structured };

struct GraphCurveMatroid {
  Multigraph graph;
  CircuitList circuits;
  int rank = 0;
  Engine engine = Engine::naive;
};

inline GraphCurveMatroid compute_graph_curve_matroid(const Multigraph& g, Engine engine,
                                                     int max_bits = kDefaultEnumerationBits) {
  CircuitList circuits =
      engine == Engine::naive ? circuits_naive(g, max_bits) : circuits_structured(g, max_bits);
  ExplicitMatroid m = ExplicitMatroid::from_circuits(
      g.vertex_count(), {circuits.begin(), circuits.end()});
  return GraphCurveMatroid{g, std::move(circuits), m.rank(), engine};
}

inline ExplicitMatroid to_explicit(const GraphCurveMatroid& m) {
  return ExplicitMatroid::from_circuits(m.graph.vertex_count(),
                                        {m.circuits.begin(), m.circuits.end()});
}

// All independent sets of maximum size.
inline std::vector<Subset> bases(const Multigraph& g, int max_bits = kDefaultEnumerationBits) {
  detail::check_enumeration_bits(g, max_bits, "basis enumeration");
  return to_explicit(compute_graph_curve_matroid(g, Engine::naive, max_bits)).bases(max_bits);
}

// Vertices that are dependent on their own: r*(delta({v})) <= 1.
inline Subset matroid_loops(const Multigraph& g) {
  NeighborhoodRankOracle rstar(g);
  Subset out;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (rstar(Subset::single(v)) <= 1) out = out.with(v);
  }
  return out;
}

// Grows the connected chain {v} = A_1 subset ... subset A_n by repeatedly
// adjoining the smallest vertex adjacent to the current set, then greedily
// keeps the chain elements that extend an independent set.  For a trivalent
// 2-edge-connected graph the result is a basis (size genus - 1) through v.
inline Subset basis_containing_vertex(const Multigraph& g, int v,
                                      int max_bits = kDefaultEnumerationBits) {
  detail::check_structured_hypothesis(g, "basis construction");
  detail::check_enumeration_bits(g, max_bits, "basis construction");
  if (v < 1 || v > g.vertex_count()) throw InputError("vertex id out of range");
  std::vector<int> chain = {v};
  Subset reached = Subset::single(v);
  while (static_cast<int>(chain.size()) < g.vertex_count()) {
    int next = 0;
    for (int w = 1; w <= g.vertex_count(); ++w) {
      if (reached.contains(w)) continue;
      if (g.delta(Subset::single(w)).intersects(g.delta(reached))) {
        next = w;
        break;
      }
    }
    if (next == 0) throw PreconditionError("basis construction requires a connected graph");
    chain.push_back(next);
    reached = reached.with(next);
  }
  NeighborhoodRankOracle rstar(g);
  Subset s;
  for (int u : chain) {
    if (!detail::is_dependent(rstar, s.with(u))) s = s.with(u);
  }
  return s;
}

}  // namespace gcm
