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
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gcm/errors.hpp"
#include "gcm/multigraph.hpp"

namespace gcm {

namespace detail {

// Symmetric multiplicity matrix; diagonal holds loop counts.
struct MultMatrix {
  int n = 0;
  std::vector<std::uint8_t> m;  // (n+1) x (n+1), 1-based
  std::uint8_t at(int i, int j) const {
    return m[static_cast<std::size_t>(i) * static_cast<std::size_t>(n + 1) +
             static_cast<std::size_t>(j)];
  }
  std::uint8_t& at(int i, int j) {
    return m[static_cast<std::size_t>(i) * static_cast<std::size_t>(n + 1) +
             static_cast<std::size_t>(j)];
  }
};

inline MultMatrix mult_matrix(const Multigraph& g) {
  MultMatrix mm;
  mm.n = g.vertex_count();
  mm.m.assign(static_cast<std::size_t>(mm.n + 1) * static_cast<std::size_t>(mm.n + 1), 0);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      ++mm.at(e.u, e.u);
    } else {
      ++mm.at(e.u, e.v);
      ++mm.at(e.v, e.u);
    }
  }
  return mm;
}

// Branch-and-bound search for the vertex ordering whose adjacency encoding is
// lexicographically least.  The encoding grows column by column: placing the
// k-th vertex appends (B[1][k], ..., B[k-1][k], B[k][k]) where B is the
// relabeled multiplicity matrix, so a prefix comparison against the incumbent
// is available at every node.
struct CanonSearch {
  const MultMatrix& a;
  int n;
  std::vector<int> order;              // order[k] = original vertex at position k+1
  std::vector<std::uint8_t> cur;       // encoding of the current partial order
  std::vector<std::uint8_t> best;      // least complete encoding so far
  std::vector<int> best_order;
  bool have_best = false;
  std::vector<char> used;

  explicit CanonSearch(const MultMatrix& matrix)
      : a(matrix), n(matrix.n), used(static_cast<std::size_t>(matrix.n) + 1, 0) {}

  void run() {
    order.clear();
    cur.clear();
    dfs();
  }

  void dfs() {
    const int pos = static_cast<int>(order.size());
    if (have_best) {
      // Compare the current prefix against the incumbent; equal-length
      // prefixes decide minimality position by position.
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if (cur[i] < best[i]) break;
        if (cur[i] > best[i]) return;
      }
    }
    if (pos == n) {
      if (!have_best || cur < best) {
        best = cur;
        best_order = order;
        have_best = true;
      }
      return;
    }
    // Try candidates in order of the segment they would append, so the first
    // full descent is greedily minimal and siblings prune early.
    std::vector<std::pair<std::vector<std::uint8_t>, int>> children;
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      std::vector<std::uint8_t> seg;
      seg.reserve(static_cast<std::size_t>(pos) + 1);
      for (int i = 0; i < pos; ++i) seg.push_back(a.at(order[static_cast<std::size_t>(i)], v));
      seg.push_back(a.at(v, v));
      children.push_back({std::move(seg), v});
    }
    std::sort(children.begin(), children.end());
    for (auto& [seg, v] : children) {
      used[static_cast<std::size_t>(v)] = 1;
      order.push_back(v);
      cur.insert(cur.end(), seg.begin(), seg.end());
      dfs();
      cur.resize(cur.size() - seg.size());
      order.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
  }
};

}  // namespace detail

// Canonical encoding of the isomorphism class: the least column-by-column
// adjacency encoding over all vertex orderings.  Equal encodings (with equal
// vertex counts) characterize isomorphic multigraphs.
inline std::string canonical_encoding(const Multigraph& g) {
  if (g.vertex_count() == 0) return std::string();
  const detail::MultMatrix mm = detail::mult_matrix(g);
  detail::CanonSearch search(mm);
  search.run();
  return std::string(search.best.begin(), search.best.end());
}

// The canonically relabeled copy of g: vertices renamed along the optimal
// ordering, edges listed loops-first per column in encoding order.
inline Multigraph canonical_form(const Multigraph& g) {
  if (g.vertex_count() == 0) return g;
  const detail::MultMatrix mm = detail::mult_matrix(g);
  detail::CanonSearch search(mm);
  search.run();
  std::vector<Edge> edges;
  for (int j = 1; j <= mm.n; ++j) {
    const int vj = search.best_order[static_cast<std::size_t>(j) - 1];
    for (int i = 1; i <= j; ++i) {
      const int vi = search.best_order[static_cast<std::size_t>(i) - 1];
      const int mult = mm.at(vi, vj);
      for (int k = 0; k < mult; ++k) edges.push_back({i, j});
    }
  }
  return Multigraph(g.vertex_count(), std::move(edges));
}

inline bool graphs_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_encoding(a) == canonical_encoding(b);
}

namespace detail {

struct TrivalentGenerator {
  int n;
  bool allow_loops;
  std::vector<int> rem;
  std::vector<Edge> edges;
  int max_used = 1;
  std::map<std::string, Multigraph>* out;

  // Grows a connected trivalent multigraph by always completing the smallest
  // unsaturated vertex.  Partners are drawn from already-used vertices or the
  // single next unused one, with a non-decreasing partner sequence per
  // vertex; vertex names therefore follow first-use order and every
  // connected class is reached.
  void gen(int u, int min_partner) {
    if (u == 0) {
      if (max_used == n) emit();
      return;
    }
    for (int v = min_partner; v <= std::min(n, max_used + 1); ++v) {
      const bool is_new = v > max_used;
      if (!is_new && rem[static_cast<std::size_t>(v)] == 0 && v != u) continue;
      if (v == u) {
        if (!allow_loops || rem[static_cast<std::size_t>(u)] < 2) continue;
        rem[static_cast<std::size_t>(u)] -= 2;
      } else {
        if (!is_new && rem[static_cast<std::size_t>(v)] == 0) continue;
        rem[static_cast<std::size_t>(u)] -= 1;
        rem[static_cast<std::size_t>(v)] -= 1;
      }
      const int saved_max = max_used;
      if (is_new) max_used = v;
      edges.push_back({u, v});
      if (rem[static_cast<std::size_t>(u)] > 0) {
        gen(u, v);
      } else {
        int next = 0;
        for (int w = 1; w <= max_used; ++w) {
          if (rem[static_cast<std::size_t>(w)] > 0) {
            next = w;
            break;
          }
        }
        gen(next, next);
      }
      edges.pop_back();
      max_used = saved_max;
      if (v == u) {
        rem[static_cast<std::size_t>(u)] += 2;
      } else {
        rem[static_cast<std::size_t>(u)] += 1;
        rem[static_cast<std::size_t>(v)] += 1;
      }
    }
  }

  void emit() {
    Multigraph g(n, edges);
    std::string enc = canonical_encoding(g);
    if (out->find(enc) == out->end()) out->emplace(std::move(enc), canonical_form(g));
  }
};

}  // namespace detail

// One representative per isomorphism class of connected trivalent multigraphs
// on n vertices, in canonical encoding order.  Loops are allowed unless
// require_2ec, which keeps exactly the 2-edge-connected classes (all of which
// are loopless).
inline std::vector<Multigraph> enumerate_trivalent_graphs(int n, bool require_2ec,
                                                          int max_vertices = 10) {
  if (n % 2 != 0) throw InputError("no trivalent graph on an odd number of vertices");
  if (n < 2) throw InputError("trivalent enumeration needs at least 2 vertices");
  if (n > max_vertices) {
    throw ResourceError("trivalent enumeration bound exceeded: n = " + std::to_string(n) +
                        " > " + std::to_string(max_vertices));
  }
  std::map<std::string, Multigraph> classes;
  detail::TrivalentGenerator gen;
  gen.n = n;
  gen.allow_loops = !require_2ec;
  gen.rem.assign(static_cast<std::size_t>(n) + 1, 3);
  gen.out = &classes;
  gen.gen(1, 1);
  std::vector<Multigraph> result;
  result.reserve(classes.size());
  for (auto& [enc, g] : classes) {
    if (require_2ec && !is_2_edge_connected(g)) continue;
    result.push_back(std::move(g));
  }
  return result;
}

}  // namespace gcm
