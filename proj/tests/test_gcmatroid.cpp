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

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "gcm/cographic.hpp"
#include "gcm/gallery.hpp"
#include "gcm/gcmatroid.hpp"
#include "gcm/graph_enumeration.hpp"
#include "gcm/multigraph.hpp"

namespace {

using namespace gcm;

Multigraph gal(const std::string& name) { return gallery(name).graph; }

// Literal transcription of the defining condition: A is dependent iff some
// nonempty subset A' has r*(delta(A')) <= |A'|.  No pruning, no caching, no
// shared state with the library code under test.
bool oracle_dependent(const Multigraph& g, Subset a) {
  for (std::uint64_t sub = a.bits; sub != 0; sub = (sub - 1) & a.bits) {
    const Subset s(sub);
    if (cographic_rank(g, g.delta(s)) <= s.size()) return true;
  }
  return false;
}

// Circuits by definition: dependent sets all of whose proper subsets are
// independent.
std::vector<Subset> oracle_circuits(const Multigraph& g) {
  std::vector<Subset> out;
  const int n = g.vertex_count();
  for (std::uint64_t m = 1; m < (1ull << n); ++m) {
    const Subset a(m << 1);
    if (!oracle_dependent(g, a)) continue;
    bool minimal = true;
    for (std::uint64_t sub = (a.bits - 1) & a.bits; sub != 0 && minimal;
         sub = (sub - 1) & a.bits) {
      if (oracle_dependent(g, Subset(sub))) minimal = false;
    }
    if (minimal) out.push_back(a);
  }
  sort_canonical(out);
  return out;
}

// True iff v lies on a cycle of the subgraph induced on rest: some subset
// through v induces a connected subgraph in which every vertex has induced
// degree exactly 2 (a loop contributing 2).
bool oracle_on_cycle(const Multigraph& g, Subset rest, int v) {
  bool found = false;
  for (std::uint64_t m = rest.bits; m != 0 && !found; m = (m - 1) & rest.bits) {
    const Subset s(m);
    if (!s.contains(v) || g.components(s) != 1) continue;
    bool all_degree_two = true;
    for (int u : s) {
      int deg = 0;
      for (const auto& [w, id] : g.adjacency(u)) {
        if (!s.contains(w)) continue;
        deg += g.edge(id).is_loop() ? 2 : 1;
      }
      if (deg != 2) {
        all_degree_two = false;
        break;
      }
    }
    found = all_degree_two;
  }
  return found;
}

TEST_CASE("naive engine matches the literal definition", "[gcmatroid]") {
  std::vector<Multigraph> graphs = {gal("theta"),
                                    gal("sodacan"),
                                    gal("k4"),
                                    gal("dumbbell"),
                                    gal("prism"),
                                    disjoint_union(gal("theta"), gal("theta")),
                                    Multigraph::from_edge_list(3, {{1, 2}, {2, 3}}),
                                    Multigraph::from_edge_list(5, {{1, 2}, {2, 3}, {3, 4},
                                                                   {4, 1}, {4, 5}})};
  for (const Multigraph& g : enumerate_trivalent_graphs(6, false)) graphs.push_back(g);
  for (const Multigraph& g : graphs) {
    const CircuitList expected = CircuitList::from_sets(oracle_circuits(g));
    CHECK(circuits_naive(g) == expected);
  }
}

TEST_CASE("engines agree on structured inputs", "[gcmatroid]") {
  for (const std::string name : {"theta", "sodacan", "k4", "prism", "doublehouse", "cube"}) {
    const Multigraph g = gal(name);
    CHECK(circuits_naive(g) == circuits_structured(g));
  }
  for (const Multigraph& g : enumerate_trivalent_graphs(6, true)) {
    CHECK(circuits_naive(g) == circuits_structured(g));
  }
}

TEST_CASE("known circuit lists", "[gcmatroid]") {
  CHECK(circuits_naive(gal("theta")) ==
        CircuitList::from_sets({Subset::of({1, 2})}));
  CHECK(circuits_naive(gal("sodacan")) ==
        CircuitList::from_sets({Subset::of({1, 2}), Subset::of({3, 4})}));
  CHECK(circuits_naive(gal("k4")) ==
        CircuitList::from_sets({Subset::of({1, 2, 3}), Subset::of({1, 2, 4}),
                                Subset::of({1, 3, 4}), Subset::of({2, 3, 4})}));
}

TEST_CASE("double house circuits and dependence", "[gcmatroid]") {
  const Multigraph g = gal("doublehouse");
  const CircuitList circuits = circuits_naive(g);
  auto is_circuit = [&](Subset s) {
    for (Subset c : circuits) {
      if (c == s) return true;
    }
    return false;
  };
  CHECK(is_circuit(Subset::of({1, 2, 3})));
  CHECK(is_circuit(Subset::of({2, 3, 5, 6, 7})));
  CHECK(is_circuit(Subset::of({1, 2, 5, 6, 8})));
  CHECK(is_dependent(g, Subset::of({1, 2, 3, 6})));
  CHECK_FALSE(is_dependent(g, Subset()));

  // Every proper subset of an acyclic disconnecting circuit is independent.
  const Subset c = Subset::of({2, 3, 5, 6, 7});
  for (std::uint64_t sub = (c.bits - 1) & c.bits; sub != 0; sub = (sub - 1) & c.bits) {
    CHECK(is_independent(g, Subset(sub)));
  }
}

TEST_CASE("K4 small sets are independent", "[gcmatroid]") {
  const Multigraph k4 = gal("k4");
  for_each_subset_ascending(4, [&](Subset a) {
    if (a.size() <= 2) CHECK(is_independent(k4, a));
    return true;
  });
}

TEST_CASE("rank of vertex subsets", "[gcmatroid]") {
  CHECK(rank_subset(gal("doublehouse"), gal("doublehouse").vertices()) == 4);
  CHECK(rank_subset(gal("k4"), Subset::of({1, 2, 3})) == 2);
  CHECK(rank_subset(gal("theta"), gal("theta").vertices()) == 1);
  CHECK(rank_subset(gal("dumbbell"), gal("dumbbell").vertices()) == 0);
}

TEST_CASE("rank equals genus minus one", "[gcmatroid]") {
  for (const std::string name :
       {"theta", "sodacan", "k4", "prism", "doublehouse", "cube"}) {
    const Multigraph g = gal(name);
    CHECK(rank_subset(g, g.vertices()) == connectivity_report(g).genus - 1);
  }
}

TEST_CASE("known basis lists", "[gcmatroid]") {
  CHECK(bases(gal("theta")) ==
        std::vector<Subset>{Subset::single(1), Subset::single(2)});
  CHECK(bases(gal("k4")).size() == 6);
  CHECK(bases(gal("sodacan")) ==
        std::vector<Subset>{Subset::of({1, 3}), Subset::of({1, 4}),
                            Subset::of({2, 3}), Subset::of({2, 4})});
}

TEST_CASE("basis through a requested vertex", "[gcmatroid]") {
  CHECK(basis_containing_vertex(gal("theta"), 1) == Subset::single(1));
  CHECK(basis_containing_vertex(gal("k4"), 1) == Subset::of({1, 2}));

  for (const std::string name :
       {"theta", "sodacan", "k4", "prism", "doublehouse", "cube"}) {
    const Multigraph g = gal(name);
    const int rank = connectivity_report(g).genus - 1;
    for (int v = 1; v <= g.vertex_count(); ++v) {
      const Subset b = basis_containing_vertex(g, v);
      CHECK(b.contains(v));
      CHECK(b.size() == rank);
      CHECK(is_independent(g, b));
    }
  }

  CHECK_THROWS_AS(basis_containing_vertex(gal("dumbbell"), 1), PreconditionError);
  CHECK_THROWS_AS(basis_containing_vertex(gal("theta"), 3), InputError);
}

TEST_CASE("matroid loops", "[gcmatroid]") {
  CHECK(matroid_loops(gal("dumbbell")) == Subset::of({1, 2}));
  CHECK(matroid_loops(gal("theta")).empty());
  CHECK(matroid_loops(gal("doublehouse")).empty());
}

TEST_CASE("cyclic subsets are dependent", "[gcmatroid]") {
  for (const std::string name : {"theta", "sodacan", "k4", "dumbbell", "doublehouse"}) {
    const Multigraph g = gal(name);
    for_each_subset_ascending(g.vertex_count(), [&](Subset a) {
      if (g.is_cyclic_subset(a)) CHECK(is_dependent(g, a));
      return true;
    });
  }
}

TEST_CASE("dependence is monotone", "[gcmatroid]") {
  std::mt19937_64 rng(21);
  const Multigraph g = gal("doublehouse");
  const std::uint64_t full = g.vertices().bits;
  for (int trial = 0; trial < 500; ++trial) {
    const Subset b(rng() & full);
    const Subset a = Subset(rng() & full) & b;
    if (is_dependent(g, a)) CHECK(is_dependent(g, b));
  }
}

TEST_CASE("circuit rank equality and acyclic balance", "[gcmatroid]") {
  for (const std::string name :
       {"theta", "sodacan", "k4", "prism", "doublehouse", "cube", "petersen"}) {
    const Multigraph g = gal(name);
    for (Subset c : circuits_structured(g)) {
      CHECK(cographic_rank(g, g.delta(c)) == c.size());
      if (!g.is_cyclic_subset(c)) {
        CHECK(g.components(c) + 1 == g.components(g.vertices() - c));
      }
    }
  }
}

TEST_CASE("adding a vertex on a cycle of the complement raises the rank", "[gcmatroid]") {
  std::mt19937_64 rng(22);
  for (const std::string name : {"k4", "prism", "doublehouse"}) {
    const Multigraph g = gal(name);
    const std::uint64_t full = g.vertices().bits;
    for (int trial = 0; trial < 60; ++trial) {
      const Subset a(rng() & full);
      const Subset rest = g.vertices() - a;
      for (int v : rest) {
        if (!oracle_on_cycle(g, rest, v)) continue;
        CHECK(rank_subset(g, a.with(v)) > rank_subset(g, a));
      }
    }
  }
}

TEST_CASE("neighborhood rank grows by at most one per adjacent vertex", "[gcmatroid]") {
  std::mt19937_64 rng(23);
  for (const std::string name : {"k4", "sodacan", "doublehouse"}) {
    const Multigraph g = gal(name);
    const std::uint64_t full = g.vertices().bits;
    for (int trial = 0; trial < 300; ++trial) {
      const Subset a(rng() & full);
      if (a.empty() || g.components(a) != 1) continue;
      for (int v : g.vertices() - a) {
        if (!g.delta(Subset::single(v)).intersects(g.delta(a))) continue;
        const int before = cographic_rank(g, g.delta(a));
        const int after = cographic_rank(g, g.delta(a.with(v)));
        CHECK(after <= before + 1);
        if (after == before + 1) {
          CHECK(rank_subset(g, a.with(v)) > rank_subset(g, a));
        }
      }
    }
  }
}

TEST_CASE("basis complements balance component counts", "[gcmatroid]") {
  for (const std::string name : {"theta", "sodacan", "k4", "prism", "doublehouse"}) {
    const Multigraph g = gal(name);
    for (Subset b : bases(g)) {
      CHECK(g.components(b) == g.components(g.vertices() - b));
    }
  }
}

TEST_CASE("circuits of a disjoint union concatenate", "[gcmatroid]") {
  const Multigraph theta = gal("theta");
  const Multigraph k4 = gal("k4");
  const Multigraph u = disjoint_union(theta, k4);
  std::vector<Subset> expected;
  for (Subset c : circuits_naive(theta)) expected.push_back(c);
  for (Subset c : circuits_naive(k4)) {
    Subset shifted;
    for (int v : c) shifted = shifted.with(v + theta.vertex_count());
    expected.push_back(shifted);
  }
  CHECK(circuits_naive(u) == CircuitList::from_sets(expected));
}

TEST_CASE("engine wrapper and conversion", "[gcmatroid]") {
  const GraphCurveMatroid m =
      compute_graph_curve_matroid(gal("k4"), Engine::structured);
  CHECK(m.engine == Engine::structured);
  CHECK(m.rank == 2);
  const ExplicitMatroid e = to_explicit(m);
  CHECK(e.ground_size() == 4);
  CHECK(e.rank() == 2);
}

TEST_CASE("memoized neighborhood rank oracle agrees with direct evaluation", "[gcmatroid]") {
  const Multigraph g = gal("doublehouse");
  NeighborhoodRankOracle rstar(g);
  std::mt19937_64 rng(24);
  const std::uint64_t full = g.vertices().bits;
  for (int trial = 0; trial < 300; ++trial) {
    const Subset a(rng() & full);
    CHECK(rstar(a) == cographic_rank(g, g.delta(a)));
  }
}

TEST_CASE("resource and hypothesis guards", "[gcmatroid]") {
  std::vector<std::pair<int, int>> path;
  for (int v = 1; v < 17; ++v) path.push_back({v, v + 1});
  const Multigraph long_path = Multigraph::from_edge_list(17, path);
  CHECK_THROWS_AS(circuits_naive(long_path), ResourceError);
  CHECK_THROWS_AS(circuits_structured(gal("dumbbell")), PreconditionError);
  CHECK_THROWS_AS(
      circuits_structured(Multigraph::from_edge_list(3, {{1, 2}, {2, 3}})),
      PreconditionError);
}

}  // namespace
