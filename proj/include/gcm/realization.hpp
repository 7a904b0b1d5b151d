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

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gcm/cographic.hpp"
#include "gcm/errors.hpp"
#include "gcm/gcmatroid.hpp"
#include "gcm/matroid.hpp"
#include "gcm/multigraph.hpp"

// Exact linear algebra over the integers; no floating point anywhere in this
// module.

namespace gcm {

using BigInt = boost::multiprecision::cpp_int;

class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& at(int r, int c) {
    return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
              static_cast<std::size_t>(c)];
  }
  const BigInt& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
              static_cast<std::size_t>(c)];
  }

 private:
  int rows_;
  int cols_;
  std::vector<BigInt> a_;
};

// Fraction-free Gaussian elimination (Bareiss).  After each elimination round
// every entry is a minor of the original matrix, so the division by the
// previous pivot is exact.
inline int exact_rank(ExactMatrix m) {
  const int rows = m.rows();
  const int cols = m.cols();
  int rank = 0;
  BigInt prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = col; c < cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    }
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        BigInt num = m.at(r, c) * m.at(rank, col) - m.at(r, col) * m.at(rank, c);
        assert(num % prev == 0);
        m.at(r, c) = num / prev;
      }
      m.at(r, col) = 0;
    }
    prev = m.at(rank, col);
    ++rank;
  }
  return rank;
}

// Signed fundamental cycle matrix: one row per non-tree edge of a BFS
// spanning tree rooted at vertex 1 (smallest edge id wins ties), one column
// per edge.  Edges are oriented from smaller to larger endpoint; each row
// carries +1 on its non-tree edge and +-1 along the tree path closing the
// cycle.  The column matroid is the bond matroid of the graph.
class CycleMatrix {
 public:
  CycleMatrix(int genus, int edge_count)
      : genus_(genus), edges_(edge_count),
        entries_(static_cast<std::size_t>(genus) * static_cast<std::size_t>(edge_count), 0) {}

  int genus() const { return genus_; }
  int edge_count() const { return edges_; }
  int entry(int row, int edge_id) const {
    return entries_[static_cast<std::size_t>(row) * static_cast<std::size_t>(edges_) +
                    static_cast<std::size_t>(edge_id) - 1];
  }
  int& entry_mut(int row, int edge_id) {
    return entries_[static_cast<std::size_t>(row) * static_cast<std::size_t>(edges_) +
                    static_cast<std::size_t>(edge_id) - 1];
  }

  std::vector<int> row(int r) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (int e = 1; e <= edges_; ++e) out.push_back(entry(r, e));
    return out;
  }

  // Column vector of one edge.
  std::vector<BigInt> column(int edge_id) const {
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(genus_));
    for (int r = 0; r < genus_; ++r) out.push_back(entry(r, edge_id));
    return out;
  }

  // Submatrix of the columns indexed by an edge set, in ascending id order.
  ExactMatrix columns(Subset edge_ids) const {
    ExactMatrix m(genus_, edge_ids.size());
    int c = 0;
    for (int e : edge_ids) {
      for (int r = 0; r < genus_; ++r) m.at(r, c) = entry(r, e);
      ++c;
    }
    return m;
  }

  ExactMatrix full_matrix() const { return columns(Subset::full(edges_)); }

 private:
  int genus_;
  int edges_;
  std::vector<int> entries_;
};

inline CycleMatrix cycle_matrix(const Multigraph& g) {
  if (!g.is_connected()) throw PreconditionError("cycle matrix requires a connected graph");
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) throw PreconditionError("cycle matrix requires a loopless graph");
  }
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<int> parent_edge(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> depth(static_cast<std::size_t>(n) + 1, -1);
  std::vector<char> tree_edge(static_cast<std::size_t>(m) + 1, 0);
  std::vector<int> queue = {1};
  depth[1] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (auto [w, eid] : g.adjacency(u)) {
      if (depth[static_cast<std::size_t>(w)] >= 0) continue;
      depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
      parent[static_cast<std::size_t>(w)] = u;
      parent_edge[static_cast<std::size_t>(w)] = eid;
      tree_edge[static_cast<std::size_t>(eid)] = 1;
      queue.push_back(w);
    }
  }
  const int genus = m - n + 1;
  CycleMatrix cyc(genus, m);
  int row = 0;
  for (int eid = 1; eid <= m; ++eid) {
    if (tree_edge[static_cast<std::size_t>(eid)]) continue;
    const Edge& e = g.edge(eid);
    cyc.entry_mut(row, eid) = 1;  // traversed u -> v, matching its orientation
    // Close the cycle with the tree path from v back to u, walking both
    // endpoints up to their common ancestor.
    int x = e.v;  // walks with the traversal direction
    int y = e.u;  // walks against it
    while (x != y) {
      if (depth[static_cast<std::size_t>(x)] >= depth[static_cast<std::size_t>(y)]) {
        const int t = parent_edge[static_cast<std::size_t>(x)];
        const Edge& te = g.edge(t);
        // Step x -> parent(x); the stored orientation is te.u -> te.v.
        cyc.entry_mut(row, t) = (te.u == x) ? 1 : -1;
        x = parent[static_cast<std::size_t>(x)];
      } else {
        const int t = parent_edge[static_cast<std::size_t>(y)];
        const Edge& te = g.edge(t);
        // This leg is traversed parent(y) -> y in cycle direction.
        cyc.entry_mut(row, t) = (te.v == y) ? 1 : -1;
        y = parent[static_cast<std::size_t>(y)];
      }
    }
    ++row;
  }
  assert(row == genus);
  return cyc;
}

struct BondRealizationReport {
  bool passed = false;
  bool exhaustive = false;
  long long subsets_checked = 0;
  std::optional<Subset> failing_subset;
  bool triples_checked = false;
  bool vertex_triples_ok = true;
  std::optional<int> failing_vertex;
  unsigned long long seed = 0;
};

// Checks that the column matroid of the cycle matrix is the bond matroid:
// exact_rank(columns(B)) == r*(B).  Exhaustive up to 15 edges, otherwise
// 10000 seeded random subsets.  For trivalent 2-edge-connected graphs also
// checks that each vertex's three incident columns span exactly a line.
inline BondRealizationReport verify_bond_realization(const Multigraph& g,
                                                     unsigned long long seed = 0) {
  const CycleMatrix cyc = cycle_matrix(g);
  const int m = g.edge_count();
  BondRealizationReport report;
  report.seed = seed;
  report.passed = true;
  auto check = [&](Subset b) {
    ++report.subsets_checked;
    if (exact_rank(cyc.columns(b)) != cographic_rank(g, b)) {
      report.passed = false;
      report.failing_subset = b;
      return false;
    }
    return true;
  };
  if (m <= 15) {
    report.exhaustive = true;
    for_each_subset_ascending(m, check);
  } else {
    std::mt19937_64 rng(seed);
    const std::uint64_t mask = Subset::full(m).bits;
    for (int i = 0; i < 10000; ++i) {
      if (!check(Subset(rng() & mask))) break;
    }
  }
  if (g.is_trivalent() && is_2_edge_connected(g)) {
    report.triples_checked = true;
    for (int v = 1; v <= g.vertex_count() && report.passed; ++v) {
      if (exact_rank(cyc.columns(g.incident_edges(v))) != 2) {
        report.passed = false;
        report.vertex_triples_ok = false;
        report.failing_vertex = v;
      }
    }
  }
  return report;
}

struct HyperplaneSample {
  std::vector<long long> h;
  unsigned long long seed = 0;
  int attempt = 0;
};

struct PointConfiguration {
  // One projective point per vertex, coordinates in the cycle space.
  std::vector<std::vector<BigInt>> points;
};

struct HyperplaneSectionResult {
  ExplicitMatroid matroid;
  HyperplaneSample sample;
  PointConfiguration points;
};

// Cuts the line arrangement {span of the columns of delta(v)} with a random
// hyperplane h:  p_v = (h.q2) q1 - (h.q1) q2 for an independent column pair
// q1, q2 at v.  Every p_v lies on h's hyperplane and on the line of v; the
// linear matroid of the p_v is returned.  Degenerate samples (some p_v = 0)
// are redrawn up to 32 times.
inline HyperplaneSectionResult hyperplane_section_matroid(
    const Multigraph& g, unsigned long long seed, int max_bits = kDefaultEnumerationBits) {
  detail::check_structured_hypothesis(g, "hyperplane section");
  detail::check_enumeration_bits(g, max_bits, "hyperplane section");
  const CycleMatrix cyc = cycle_matrix(g);
  const int n = g.vertex_count();
  const int genus = cyc.genus();
  std::mt19937_64 rng(seed);
  constexpr int kMaxAttempts = 32;
  for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    std::vector<long long> h(static_cast<std::size_t>(genus));
    bool nonzero = false;
    while (!nonzero) {
      for (auto& hi : h) {
        hi = static_cast<long long>(rng() % 2000001ull) - 1000000;
        if (hi != 0) nonzero = true;
      }
    }
    PointConfiguration config;
    config.points.reserve(static_cast<std::size_t>(n));
    bool degenerate = false;
    for (int v = 1; v <= n && !degenerate; ++v) {
      const std::vector<int> inc = g.incident_edges(v).ids();
      assert(inc.size() == 3);
      std::optional<std::pair<int, int>> pair;
      const std::pair<int, int> tries[3] = {{0, 1}, {0, 2}, {1, 2}};
      for (auto [i, j] : tries) {
        ExactMatrix two(genus, 2);
        for (int r = 0; r < genus; ++r) {
          two.at(r, 0) = cyc.entry(r, inc[static_cast<std::size_t>(i)]);
          two.at(r, 1) = cyc.entry(r, inc[static_cast<std::size_t>(j)]);
        }
        if (exact_rank(std::move(two)) == 2) {
          pair = {inc[static_cast<std::size_t>(i)], inc[static_cast<std::size_t>(j)]};
          break;
        }
      }
      if (!pair) {
        // Ruled out by the rank-2 triple property of trivalent
        // 2-edge-connected graphs.
        throw PreconditionError("incident columns of vertex " + std::to_string(v) +
                                " do not span a line");
      }
      const std::vector<BigInt> q1 = cyc.column(pair->first);
      const std::vector<BigInt> q2 = cyc.column(pair->second);
      BigInt h_q1 = 0, h_q2 = 0;
      for (int r = 0; r < genus; ++r) {
        h_q1 += BigInt(h[static_cast<std::size_t>(r)]) * q1[static_cast<std::size_t>(r)];
        h_q2 += BigInt(h[static_cast<std::size_t>(r)]) * q2[static_cast<std::size_t>(r)];
      }
      std::vector<BigInt> p(static_cast<std::size_t>(genus));
      bool all_zero = true;
      for (int r = 0; r < genus; ++r) {
        p[static_cast<std::size_t>(r)] =
            h_q2 * q1[static_cast<std::size_t>(r)] - h_q1 * q2[static_cast<std::size_t>(r)];
        if (p[static_cast<std::size_t>(r)] != 0) all_zero = false;
      }
      if (all_zero) {
        degenerate = true;  // the line of v lies inside the hyperplane
      } else {
        config.points.push_back(std::move(p));
      }
    }
    if (degenerate) continue;
    auto point_rank = [&](Subset a) {
      ExactMatrix m(genus, a.size());
      int c = 0;
      for (int v : a) {
        for (int r = 0; r < genus; ++r) {
          m.at(r, c) = config.points[static_cast<std::size_t>(v) - 1][static_cast<std::size_t>(r)];
        }
        ++c;
      }
      return exact_rank(std::move(m));
    };
    std::vector<Subset> circuits =
        minimal_satisfying_sets(n, [&](Subset a) { return point_rank(a) < a.size(); });
    return HyperplaneSectionResult{
        ExplicitMatroid::from_circuits(n, std::move(circuits)),
        HyperplaneSample{std::move(h), seed, attempt},
        std::move(config)};
  }
  throw GenericityError("hyperplane sampling exhausted 32 attempts", seed);
}

}  // namespace gcm
