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
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gcm {

// Subset of a 1-based ground set {1,...,n}, n <= 63.  Bit i holds element i;
// bit 0 stays clear.  Used for both vertex sets and edge sets.
struct Subset {
  std::uint64_t bits = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t raw) : bits(raw) { assert((raw & 1ull) == 0); }

  static Subset of(std::initializer_list<int> ids) {
    Subset s;
    for (int id : ids) s = s.with(id);
    return s;
  }
  static Subset of(const std::vector<int>& ids) {
    Subset s;
    for (int id : ids) s = s.with(id);
    return s;
  }
  static constexpr Subset single(int id) { return Subset(1ull << id); }
  // {1,...,n}
  static constexpr Subset full(int n) {
    if (n <= 0) return Subset();
    if (n >= 63) return Subset(~1ull);
    return Subset(((1ull << (n + 1)) - 1) & ~1ull);
  }

  constexpr bool contains(int id) const { return (bits >> id) & 1ull; }
  constexpr Subset with(int id) const { return Subset(bits | (1ull << id)); }
  constexpr Subset without(int id) const { return Subset(bits & ~(1ull << id)); }
  constexpr int size() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }
  constexpr bool proper_subset_of(Subset o) const { return subset_of(o) && bits != o.bits; }
  constexpr bool intersects(Subset o) const { return (bits & o.bits) != 0; }
  constexpr int min_element() const { return bits == 0 ? 0 : std::countr_zero(bits); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits | b.bits); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits & b.bits); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits & ~b.bits); }
  friend constexpr Subset operator^(Subset a, Subset b) { return Subset(a.bits ^ b.bits); }
  Subset& operator|=(Subset o) { bits |= o.bits; return *this; }
  Subset& operator&=(Subset o) { bits &= o.bits; return *this; }
  friend constexpr bool operator==(Subset a, Subset b) { return a.bits == b.bits; }

  struct iterator {
    std::uint64_t rest;
    int operator*() const { return std::countr_zero(rest); }
    iterator& operator++() { rest &= rest - 1; return *this; }
    bool operator!=(const iterator& o) const { return rest != o.rest; }
  };
  iterator begin() const { return {bits}; }
  iterator end() const { return {0}; }

  std::vector<int> ids() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int id : *this) out.push_back(id);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int id : *this) {
      if (!first) s += ",";
      s += std::to_string(id);
      first = false;
    }
    return s + "}";
  }
};

// Order by cardinality, then lexicographically on the sorted element lists.
// For equal cardinality the set containing the smallest differing element
// comes first, which is what the lowest set bit of the symmetric difference
// picks out.
inline bool canonical_less(Subset a, Subset b) {
  int ca = a.size(), cb = b.size();
  if (ca != cb) return ca < cb;
  std::uint64_t d = a.bits ^ b.bits;
  if (d == 0) return false;
  return (d & -d & a.bits) != 0;
}

inline void sort_canonical(std::vector<Subset>& sets) {
  std::sort(sets.begin(), sets.end(),
            [](Subset a, Subset b) { return canonical_less(a, b); });
}

// Calls f on every k-element subset of {1..n} in increasing numeric mask
// order.  f returns false to stop; the return value says whether the scan ran
// to completion.
template <class F>
bool for_each_subset_of_size(int n, int k, F&& f) {
  assert(n >= 0 && n < 63);
  if (k < 0 || k > n) return true;
  if (k == 0) return f(Subset());
  std::uint64_t mask = (1ull << k) - 1;
  const std::uint64_t limit = 1ull << n;
  while (mask < limit) {
    if (!f(Subset(mask << 1))) return false;
    std::uint64_t c = mask & (~mask + 1);
    std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return true;
}

// All subsets of {1..n} grouped by increasing cardinality, empty set included.
template <class F>
bool for_each_subset_ascending(int n, F&& f) {
  for (int k = 0; k <= n; ++k) {
    if (!for_each_subset_of_size(n, k, f)) return false;
  }
  return true;
}

// Nonempty submasks of a, grouped by increasing cardinality.
template <class F>
bool for_each_nonempty_submask_ascending(Subset a, F&& f) {
  const std::vector<int> ids = a.ids();
  const int sz = static_cast<int>(ids.size());
  for (int k = 1; k <= sz; ++k) {
    bool go = for_each_subset_of_size(sz, k, [&](Subset positions) {
      Subset s;
      for (int p : positions) s = s.with(ids[static_cast<std::size_t>(p - 1)]);
      return f(s);
    });
    if (!go) return false;
  }
  return true;
}

// Inclusion-minimal nonempty subsets of {1..n} satisfying pred.  Enumerates
// by increasing cardinality and skips strict supersets of sets already found;
// since every minimal satisfying set of smaller cardinality has been found by
// the time a candidate is tested, a surviving satisfying candidate is itself
// minimal.  Result in canonical order.
template <class Pred>
std::vector<Subset> minimal_satisfying_sets(int n, Pred&& pred) {
  std::vector<Subset> found;
  for (int k = 1; k <= n; ++k) {
    for_each_subset_of_size(n, k, [&](Subset a) {
      for (Subset s : found) {
        if (s.proper_subset_of(a)) return true;
      }
      if (pred(a)) found.push_back(a);
      return true;
    });
  }
  sort_canonical(found);
  return found;
}

}  // namespace gcm
