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

#include <string>
#include <vector>

#include "gcm/gallery.hpp"
#include "gcm/gcmatroid.hpp"
#include "gcm/matroid.hpp"

namespace {

using namespace gcm;

ExplicitMatroid matroid_of(const std::string& name) {
  const Multigraph g = gallery(name).graph;
  return to_explicit(compute_graph_curve_matroid(g, Engine::naive));
}

TEST_CASE("from_circuits validation", "[matroid]") {
  CHECK_THROWS_AS(ExplicitMatroid::from_circuits(
                      4, {Subset::of({1, 2}), Subset::of({1, 2, 3})}),
                  InputError);
  CHECK_THROWS_AS(ExplicitMatroid::from_circuits(4, {Subset()}), InputError);
  CHECK_THROWS_AS(ExplicitMatroid::from_circuits(2, {Subset::of({1, 3})}), InputError);
  CHECK_THROWS_AS(ExplicitMatroid::from_circuits(
                      4, {Subset::of({1, 2}), Subset::of({1, 2})}),
                  InputError);

  const ExplicitMatroid m = ExplicitMatroid::from_circuits(2, {Subset::of({1, 2})});
  CHECK(m == ExplicitMatroid::uniform(1, 2));
}

TEST_CASE("deep validation accepts graph curve circuit lists", "[matroid]") {
  for (const std::string name : {"theta", "sodacan", "k4", "dumbbell", "doublehouse"}) {
    const Multigraph g = gallery(name).graph;
    const CircuitList circuits = circuits_naive(g);
    CHECK_NOTHROW(ExplicitMatroid::from_circuits(
        g.vertex_count(), {circuits.begin(), circuits.end()}, true));
  }
  // A genuine axiom violation: {1,2} and {1,3} are circuits but no circuit
  // avoids element 1 inside {2,3}.
  CHECK_THROWS_AS(ExplicitMatroid::from_circuits(
                      3, {Subset::of({1, 2}), Subset::of({1, 3})}, true),
                  InputError);
}

TEST_CASE("uniform matroids", "[matroid]") {
  const ExplicitMatroid u24 = ExplicitMatroid::uniform(2, 4);
  CHECK(u24.rank() == 2);
  CHECK(u24.circuits().size() == 4);
  CHECK(u24.bases().size() == 6);

  CHECK(ExplicitMatroid::uniform(1, 2).circuits() ==
        CircuitList::from_sets({Subset::of({1, 2})}));
  CHECK(ExplicitMatroid::uniform(3, 3).circuits().empty());
  CHECK(ExplicitMatroid::uniform(3, 3).rank() == 3);
}

TEST_CASE("independence and rank queries", "[matroid]") {
  const ExplicitMatroid u24 = ExplicitMatroid::uniform(2, 4);
  CHECK(u24.independent(Subset::of({1, 4})));
  CHECK_FALSE(u24.independent(Subset::of({1, 2, 3})));
  CHECK(u24.rank_of(Subset::of({1, 2, 3, 4})) == 2);
  CHECK(u24.rank_of(Subset()) == 0);
}

TEST_CASE("loops and coloops", "[matroid]") {
  const ExplicitMatroid dumbbell = matroid_of("dumbbell");
  CHECK(dumbbell.loops() == Subset::of({1, 2}));
  CHECK(dumbbell.coloops().empty());

  // In a free matroid every element is a coloop.
  CHECK(ExplicitMatroid::uniform(3, 3).coloops() == Subset::full(3));
}

TEST_CASE("dual matroids", "[matroid]") {
  CHECK(ExplicitMatroid::uniform(2, 4).dual() == ExplicitMatroid::uniform(2, 4));
  CHECK(ExplicitMatroid::uniform(1, 2).dual() == ExplicitMatroid::uniform(1, 2));
  CHECK(ExplicitMatroid::uniform(1, 3).dual() == ExplicitMatroid::uniform(2, 3));

  const ExplicitMatroid dumbbell = matroid_of("dumbbell");
  CHECK(dumbbell.dual().coloops() == dumbbell.loops());
}

TEST_CASE("dual is an involution with complementary rank", "[matroid]") {
  for (const std::string name : {"theta", "sodacan", "k4", "dumbbell", "doublehouse"}) {
    const ExplicitMatroid m = matroid_of(name);
    CHECK(m.dual().dual() == m);
    CHECK(m.rank() + m.dual().rank() == m.ground_size());
  }
}

TEST_CASE("direct sums", "[matroid]") {
  const ExplicitMatroid u12 = ExplicitMatroid::uniform(1, 2);
  CHECK(direct_sum(u12, u12).circuits() ==
        CircuitList::from_sets({Subset::of({1, 2}), Subset::of({3, 4})}));
  CHECK(direct_sum(u12, u12) == matroid_of("sodacan"));

  const ExplicitMatroid u24 = ExplicitMatroid::uniform(2, 4);
  CHECK(direct_sum(u24, u24).rank() == 4);
  CHECK(direct_sum(u24, u24).ground_size() == 8);
  CHECK(direct_sum(u24, ExplicitMatroid::from_circuits(0, {})) == u24);

  for (const std::string left : {"theta", "k4"}) {
    for (const std::string right : {"sodacan", "dumbbell"}) {
      const ExplicitMatroid a = matroid_of(left);
      const ExplicitMatroid b = matroid_of(right);
      CHECK(direct_sum(a, b).rank() == a.rank() + b.rank());
    }
  }
}

TEST_CASE("identical self-duality", "[matroid]") {
  CHECK(ExplicitMatroid::uniform(2, 4).is_identically_self_dual());
  CHECK(matroid_of("k4").is_identically_self_dual());
  CHECK(matroid_of("doublehouse").is_identically_self_dual());
  CHECK_FALSE(matroid_of("dumbbell").is_identically_self_dual());
  CHECK_FALSE(ExplicitMatroid::uniform(1, 3).is_identically_self_dual());

  // Same check through the dual: ISD means the identity is an isomorphism
  // onto the dual, which on bases is complement closure.
  for (const std::string name : {"theta", "sodacan", "k4", "dumbbell"}) {
    const ExplicitMatroid m = matroid_of(name);
    const bool bases_closed = m.is_identically_self_dual();
    CHECK(bases_closed == (m.dual() == m));
  }
}

TEST_CASE("matroid isomorphism", "[matroid]") {
  const ExplicitMatroid k4 = matroid_of("k4");
  const auto bijection = is_isomorphic(k4, ExplicitMatroid::uniform(2, 4));
  REQUIRE(bijection.has_value());
  // The returned map must send circuits onto circuits.
  for (Subset c : k4.circuits()) {
    Subset image;
    for (int e : c) image = image.with((*bijection)[static_cast<std::size_t>(e)]);
    CHECK_FALSE(ExplicitMatroid::uniform(2, 4).independent(image));
    CHECK(image.size() == c.size());
  }

  CHECK(is_isomorphic(matroid_of("theta"), ExplicitMatroid::uniform(1, 2)).has_value());
  CHECK_FALSE(is_isomorphic(matroid_of("theta"), k4).has_value());
  CHECK_FALSE(is_isomorphic(k4, matroid_of("sodacan")).has_value());

  const ExplicitMatroid mixed_a =
      direct_sum(ExplicitMatroid::uniform(1, 2), ExplicitMatroid::uniform(2, 3));
  const ExplicitMatroid mixed_b =
      direct_sum(ExplicitMatroid::uniform(2, 3), ExplicitMatroid::uniform(1, 2));
  CHECK(is_isomorphic(mixed_a, mixed_b).has_value());

  const ExplicitMatroid big = ExplicitMatroid::uniform(1, 15);
  CHECK_THROWS_AS(is_isomorphic(big, big), ResourceError);
}

}  // namespace
