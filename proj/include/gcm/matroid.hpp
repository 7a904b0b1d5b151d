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
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gcm/errors.hpp"
#include "gcm/subset.hpp"

namespace gcm {

inline constexpr int kDefaultEnumerationBits = 16;
inline constexpr int kMaxIsomorphismGround = 14;

// Nonempty incomparable subsets in canonical order (cardinality, then
// lexicographic).
class CircuitList {
 public:
  CircuitList() = default;
  static CircuitList from_sets(std::vector<Subset> sets) {
    sort_canonical(sets);
    CircuitList out;
    out.sets_ = std::move(sets);
    return out;
  }
  const std::vector<Subset>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  friend bool operator==(const CircuitList&, const CircuitList&) = default;

 private:
  std::vector<Subset> sets_;
};

// Matroid given by its ground size and explicit circuit list.
class ExplicitMatroid {
 public:
  // Validates element ranges and the antichain property.  With deep_validate
  // and ground size <= 12 also checks the circuit elimination axiom
  // exhaustively.
  static ExplicitMatroid from_circuits(int ground_size, std::vector<Subset> circuits,
                                       bool deep_validate = false) {
    if (ground_size < 0) throw InputError("ground size must be nonnegative");
    if (ground_size > 62) throw InputError("ground size exceeds supported maximum of 62");
    const Subset full = Subset::full(ground_size);
    for (Subset c : circuits) {
      if (c.empty()) throw InputError("circuits must be nonempty");
      if (!c.subset_of(full)) {
        throw InputError("circuit " + c.to_string() + " exceeds ground set of size " +
                         std::to_string(ground_size));
      }
    }
    sort_canonical(circuits);
    for (std::size_t i = 0; i + 1 < circuits.size(); ++i) {
      if (circuits[i] == circuits[i + 1]) {
        throw InputError("duplicate circuit " + circuits[i].to_string());
      }
    }
    for (std::size_t i = 0; i < circuits.size(); ++i) {
      for (std::size_t j = 0; j < circuits.size(); ++j) {
        if (i != j && circuits[i].proper_subset_of(circuits[j])) {
          throw InputError("circuits must be incomparable: " + circuits[i].to_string() +
                           " is contained in " + circuits[j].to_string());
        }
      }
    }
    if (deep_validate && ground_size <= 12) {
      for (std::size_t i = 0; i < circuits.size(); ++i) {
        for (std::size_t j = i + 1; j < circuits.size(); ++j) {
          for (int e : circuits[i] & circuits[j]) {
            const Subset u = (circuits[i] | circuits[j]).without(e);
            bool covered = false;
            for (Subset c : circuits) {
              if (c.subset_of(u)) {
                covered = true;
                break;
              }
            }
            if (!covered) {
              throw InputError("circuit elimination fails for " + circuits[i].to_string() +
                               " and " + circuits[j].to_string() + " at element " +
                               std::to_string(e));
            }
          }
        }
      }
    }
    return ExplicitMatroid(ground_size, CircuitList::from_sets(std::move(circuits)));
  }

  static ExplicitMatroid uniform(int rank, int ground_size) {
    if (rank < 0 || rank > ground_size) {
      throw InputError("uniform matroid needs 0 <= rank <= ground size");
    }
    std::vector<Subset> circuits;
    if (rank < ground_size) {
      for_each_subset_of_size(ground_size, rank + 1, [&](Subset a) {
        circuits.push_back(a);
        return true;
      });
    }
    return ExplicitMatroid(ground_size, CircuitList::from_sets(std::move(circuits)));
  }

  int ground_size() const { return n_; }
  const CircuitList& circuits() const { return circuits_; }
  int rank() const { return rank_; }

  bool independent(Subset a) const {
    for (Subset c : circuits_) {
      if (c.subset_of(a)) return false;
    }
    return true;
  }
  bool dependent(Subset a) const { return !independent(a); }

  int rank_of(Subset a) const {
    Subset s;
    for (int e : a) {
      if (independent(s.with(e))) s = s.with(e);
    }
    return s.size();
  }

  // Elements forming singleton circuits.
  Subset loops() const {
    Subset out;
    for (Subset c : circuits_) {
      if (c.size() == 1) out |= c;
    }
    return out;
  }

  // Elements lying in no circuit; equivalently, elements of every basis.
  Subset coloops() const {
    Subset in_circuit;
    for (Subset c : circuits_) in_circuit |= c;
    return Subset::full(n_) - in_circuit;
  }

  std::vector<Subset> bases(int max_bits = kDefaultEnumerationBits) const {
    check_bits(max_bits, "basis enumeration");
    std::vector<Subset> out;
    for_each_subset_of_size(n_, rank_, [&](Subset a) {
      if (independent(a)) out.push_back(a);
      return true;
    });
    sort_canonical(out);
    return out;
  }

  // Complement-closure test on the basis family; the dual is compared under
  // the identity map of the ground set.
  bool is_identically_self_dual(int max_bits = kDefaultEnumerationBits) const {
    check_bits(max_bits, "self-duality check");
    if (2 * rank_ != n_) return false;
    std::unordered_set<std::uint64_t> basis_masks;
    const std::vector<Subset> all = bases(max_bits);
    for (Subset b : all) basis_masks.insert(b.bits);
    const Subset full = Subset::full(n_);
    for (Subset b : all) {
      if (basis_masks.find((full - b).bits) == basis_masks.end()) return false;
    }
    return true;
  }

  ExplicitMatroid dual(int max_bits = kDefaultEnumerationBits) const {
    check_bits(max_bits, "dualization");
    const Subset full = Subset::full(n_);
    // Independence table of the dual: a set is dual-independent iff it avoids
    // some basis.
    std::vector<char> indep(std::size_t{1} << n_, 0);
    for (Subset b : bases(max_bits)) {
      const Subset c = full - b;
      // Walk all submasks of the complement.
      std::uint64_t sub = c.bits;
      for (;;) {
        indep[sub >> 1] = 1;
        if (sub == 0) break;
        sub = (sub - 1) & c.bits;
      }
    }
    std::vector<Subset> circuits;
    for_each_subset_ascending(n_, [&](Subset a) {
      if (a.empty() || indep[a.bits >> 1]) return true;
      for (int e : a) {
        if (!indep[a.without(e).bits >> 1]) return true;  // not minimal
      }
      circuits.push_back(a);
      return true;
    });
    return ExplicitMatroid(n_, CircuitList::from_sets(std::move(circuits)));
  }

  friend bool operator==(const ExplicitMatroid&, const ExplicitMatroid&) = default;

 private:
  ExplicitMatroid(int n, CircuitList circuits) : n_(n), circuits_(std::move(circuits)) {
    rank_ = rank_of(Subset::full(n_));
  }

  void check_bits(int max_bits, const std::string& what) const {
    if (n_ > max_bits) {
      throw ResourceError(what + " bound exceeded: ground size " + std::to_string(n_) + " > " +
                          std::to_string(max_bits));
    }
  }

  int n_ = 0;
  CircuitList circuits_;
  int rank_ = 0;
};

// Ground sets are concatenated: elements of b are shifted past those of a.
inline ExplicitMatroid direct_sum(const ExplicitMatroid& a, const ExplicitMatroid& b) {
  std::vector<Subset> circuits(a.circuits().begin(), a.circuits().end());
  for (Subset c : b.circuits()) circuits.push_back(Subset(c.bits << a.ground_size()));
  return ExplicitMatroid::from_circuits(a.ground_size() + b.ground_size(), std::move(circuits));
}

namespace detail {

// Per-element fingerprint: sorted (circuit size, membership count) pairs.
inline std::vector<std::pair<int, int>> element_profile(const ExplicitMatroid& m, int e) {
  std::vector<std::pair<int, int>> counts;
  for (Subset c : m.circuits()) {
    if (!c.contains(e)) continue;
    const int sz = c.size();
    auto it = std::find_if(counts.begin(), counts.end(),
                           [sz](const auto& p) { return p.first == sz; });
    if (it == counts.end()) {
      counts.push_back({sz, 1});
    } else {
      ++it->second;
    }
  }
  std::sort(counts.begin(), counts.end());
  return counts;
}

}  // namespace detail

// Searches for a ground-set bijection carrying the circuits of a onto the
// circuits of b.  Returns the image array (1-based; index 0 unused), or
// nothing if the matroids are not isomorphic.  Unequal ground sizes are a
// negative answer, not an error.
inline std::optional<std::vector<int>> is_isomorphic(const ExplicitMatroid& a,
                                                     const ExplicitMatroid& b) {
  if (a.ground_size() != b.ground_size()) return std::nullopt;
  const int n = a.ground_size();
  if (n > kMaxIsomorphismGround) {
    throw ResourceError("isomorphism search bound exceeded: ground size " + std::to_string(n) +
                        " > " + std::to_string(kMaxIsomorphismGround));
  }
  if (a.circuits().size() != b.circuits().size() || a.rank() != b.rank()) return std::nullopt;
  std::vector<int> hist_a(static_cast<std::size_t>(n) + 2, 0);
  std::vector<int> hist_b(static_cast<std::size_t>(n) + 2, 0);
  for (Subset c : a.circuits()) ++hist_a[static_cast<std::size_t>(c.size())];
  for (Subset c : b.circuits()) ++hist_b[static_cast<std::size_t>(c.size())];
  if (hist_a != hist_b) return std::nullopt;

  std::vector<std::vector<std::pair<int, int>>> prof_a, prof_b;
  for (int e = 1; e <= n; ++e) {
    prof_a.push_back(detail::element_profile(a, e));
    prof_b.push_back(detail::element_profile(b, e));
  }
  {
    auto sa = prof_a;
    auto sb = prof_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::unordered_set<std::uint64_t> b_circuits;
  for (Subset c : b.circuits()) b_circuits.insert(c.bits);

  // Elements of a are assigned in order 1..n; a circuit is checked as soon as
  // its last element is assigned.
  std::vector<std::vector<Subset>> due(static_cast<std::size_t>(n) + 1);
  for (Subset c : a.circuits()) {
    int last = 0;
    for (int e : c) last = std::max(last, e);
    due[static_cast<std::size_t>(last)].push_back(c);
  }

  std::vector<int> img(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);

  auto rec = [&](auto&& self, int e) -> bool {
    if (e > n) return true;
    for (int t = 1; t <= n; ++t) {
      if (used[static_cast<std::size_t>(t)]) continue;
      if (prof_a[static_cast<std::size_t>(e) - 1] != prof_b[static_cast<std::size_t>(t) - 1]) {
        continue;
      }
      img[static_cast<std::size_t>(e)] = t;
      used[static_cast<std::size_t>(t)] = 1;
      bool ok = true;
      for (Subset c : due[static_cast<std::size_t>(e)]) {
        Subset mapped;
        for (int x : c) mapped = mapped.with(img[static_cast<std::size_t>(x)]);
        if (b_circuits.find(mapped.bits) == b_circuits.end()) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, e + 1)) return true;
      used[static_cast<std::size_t>(t)] = 0;
      img[static_cast<std::size_t>(e)] = 0;
    }
    return false;
  };
  if (rec(rec, 1)) return img;
  return std::nullopt;
}

}  // namespace gcm
