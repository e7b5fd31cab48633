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

#include <random>
#include <variant>
#include <vector>

#include "doctest.h"
#include "micolor/errors.hpp"
#include "micolor/oracle.hpp"
#include "micolor/union.hpp"
#include "support/fixtures.hpp"

namespace micolor {
namespace {

using testing::copies;

std::vector<Matroid> random_instance(std::mt19937_64& rng, int max_n, int max_k) {
  const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  const int k = std::uniform_int_distribution<int>(1, max_k)(rng);
  std::vector<Matroid> ms;
  for (int i = 0; i < k; ++i) ms.push_back(testing::random_matroid(rng, n));
  return ms;
}

TEST_CASE("surplus examples") {
  CHECK(surplus(copies(Matroid::uniform(4, 2), 2), {0, 1, 2}) == 1);
  CHECK(surplus(copies(Matroid::uniform(3, 1), 1), ElementSet::first(3)) == -2);
  CHECK(surplus(copies(testing::pair_blocks(), 2), {0, 1}) == 0);
  std::vector<Matroid> mixed{Matroid::uniform(3, 1), Matroid::uniform(4, 1)};
  CHECK_THROWS_AS(surplus(mixed, {0}), ValidationError);
}

TEST_CASE("partition_ground_set examples") {
  SUBCASE("two copies of U(2,4)") {
    auto ms = copies(Matroid::uniform(4, 2), 2);
    PartitionResult r = partition_ground_set(ms);
    REQUIRE(std::holds_alternative<Cover>(r));
    const Cover& c = std::get<Cover>(r);
    CHECK(c.parts[0].size() == 2);
    CHECK(c.parts[1].size() == 2);
    CHECK(verify_cover(ms, c));
    CHECK(oracle::bf_cover_exists(ms));
  }
  SUBCASE("U(1,3) alone") {
    PartitionResult r = partition_ground_set(copies(Matroid::uniform(3, 1), 1));
    REQUIRE(std::holds_alternative<Violator>(r));
    // The reachable set when element 1 gets stuck is {0, 1}; surplus -1.
    const Violator& v = std::get<Violator>(r);
    CHECK(v.surplus < 0);
    CHECK(surplus(copies(Matroid::uniform(3, 1), 1), ElementSet::first(3)) == -2);
  }
  SUBCASE("two copies of U(1,2)") {
    PartitionResult r = partition_ground_set(copies(Matroid::uniform(2, 1), 2));
    REQUIRE(std::holds_alternative<Cover>(r));
    const Cover& c = std::get<Cover>(r);
    CHECK(((c.parts[0] == ElementSet{0} && c.parts[1] == ElementSet{1}) ||
           (c.parts[0] == ElementSet{1} && c.parts[1] == ElementSet{0})));
  }
  SUBCASE("an augmenting path of length two") {
    // M1 = U(1,3), M2 = partition {0,1} cap 1, {2} cap 0: element 2 only
    // fits color 1, so 0 has to move.
    std::vector<Matroid> ms{Matroid::uniform(3, 1),
                            Matroid::partition(3, {{1, {0, 1}}, {0, {2}}})};
    PartitionResult r = partition_ground_set(ms);
    REQUIRE(std::holds_alternative<Violator>(r));
    std::vector<Matroid> ok{Matroid::uniform(2, 1),
                            Matroid::partition(2, {{1, {0}}, {0, {1}}})};
    PartitionResult r2 = partition_ground_set(ok);
    REQUIRE(std::holds_alternative<Cover>(r2));
    CHECK(std::get<Cover>(r2).parts[0] == ElementSet{1});
    CHECK(std::get<Cover>(r2).parts[1] == ElementSet{0});
  }
}

TEST_CASE("verify_cover examples") {
  auto ms = copies(Matroid::uniform(4, 2), 2);
  CHECK(verify_cover(ms, Cover{{{0, 1}, {2, 3}}}));
  CHECK_FALSE(verify_cover(ms, Cover{{{0, 1}, {1, 2, 3}}}));
  CHECK_FALSE(verify_cover(ms, Cover{{{0, 1, 2}, {3}}}));
  CHECK_FALSE(verify_cover(ms, Cover{{{0, 1}, {2}}}));
  CHECK_FALSE(verify_cover(ms, Cover{{{0, 1, 2, 3}}}));
}

TEST_CASE("chromatic_number examples") {
  CHECK(chromatic_number(Matroid::uniform(4, 1)) == 4);
  CHECK(chromatic_number(Matroid::uniform(4, 4)) == 1);
  CHECK(chromatic_number(testing::k4()) == 2);
  CHECK(chromatic_number(testing::complete_graph(5)) == 3);
  CHECK(chromatic_number(Matroid::uniform(0, 0)) == 0);
  CHECK_THROWS_WITH_AS(chromatic_number(Matroid::graphic(2, {{0, 1}, {1, 1}})),
                       "chromatic number undefined for loopy matroid", ValidationError);
}

TEST_CASE("chromatic_number matches the density bound and brute force") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 9)(rng);
    Matroid m = testing::random_matroid(rng, n);
    if (!loops(m).empty()) continue;
    const int chi = chromatic_number(m);
    REQUIRE(chi == testing::density_bound(m));
    REQUIRE(chi == oracle::bf_chromatic(m));
  }
}

TEST_CASE("find_proper_tight_set examples") {
  SUBCASE("two partition matroids") {
    auto ms = copies(testing::pair_blocks(), 2);
    auto t = find_proper_tight_set(ms, Cover{{{0, 2}, {1, 3}}});
    REQUIRE(t.has_value());
    CHECK(*t == ElementSet{0, 1});
  }
  SUBCASE("two copies of K4 have none") {
    auto ms = copies(testing::k4(), 2);
    auto cover = std::get<Cover>(partition_ground_set(ms));
    CHECK_FALSE(find_proper_tight_set(ms, cover).has_value());
  }
  SUBCASE("free matroid gives a singleton") {
    auto ms = copies(Matroid::uniform(3, 3), 1);
    auto t = find_proper_tight_set(ms, Cover{{ElementSet::first(3)}});
    REQUIRE(t.has_value());
    CHECK(*t == ElementSet{0});
  }
  SUBCASE("invalid cover") {
    auto ms = copies(testing::pair_blocks(), 2);
    CHECK_THROWS_AS(find_proper_tight_set(ms, Cover{{{0, 1}, {2, 3}}}), ValidationError);
  }
}

TEST_CASE("union dichotomy and agreement with brute force") {
  std::mt19937_64 rng(22);
  int covers = 0;
  int violators = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto ms = random_instance(rng, 10, 3);
    PartitionResult r = partition_ground_set(ms);
    const bool has_cover = std::holds_alternative<Cover>(r);
    if (has_cover) {
      ++covers;
      REQUIRE(verify_cover(ms, std::get<Cover>(r)));
    } else {
      ++violators;
      const Violator& v = std::get<Violator>(r);
      REQUIRE_FALSE(v.set.empty());
      REQUIRE(v.surplus == surplus(ms, v.set));
      REQUIRE(v.surplus < 0);
    }
    if (ms.front().ground_size() <= 9) REQUIRE(has_cover == oracle::bf_cover_exists(ms));
  }
  CHECK(covers > 100);
  CHECK(violators > 100);
}

TEST_CASE("tight sets agree with enumeration and are seed-minimal") {
  std::mt19937_64 rng(33);
  int found = 0;
  int none = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto ms = random_instance(rng, 10, 3);
    PartitionResult r = partition_ground_set(ms);
    if (!std::holds_alternative<Cover>(r)) continue;
    const Cover& cover = std::get<Cover>(r);
    const std::vector<ElementSet> all = oracle::bf_tight_sets(ms);
    auto t = find_proper_tight_set(ms, cover);
    REQUIRE(t.has_value() == !all.empty());
    if (!t) {
      ++none;
      continue;
    }
    ++found;
    REQUIRE(std::find(all.begin(), all.end(), *t) != all.end());
    // The seed is the smallest element lying in any tight set, and the
    // result is contained in every tight set holding the seed.
    Element seed = kMaxElements;
    for (ElementSet a : all) seed = std::min(seed, a.min());
    REQUIRE(t->contains(seed));
    for (ElementSet a : all) {
      if (a.contains(seed)) REQUIRE(t->subset_of(a));
    }
  }
  CHECK(found > 30);
  CHECK(none > 30);
}

TEST_CASE("tight sets do not depend on the cover supplied") {
  // Two covers of the pair-blocks instance and of U(2,4) x 2.
  auto pair = copies(testing::pair_blocks(), 2);
  CHECK(find_proper_tight_set(pair, Cover{{{0, 2}, {1, 3}}}) ==
        find_proper_tight_set(pair, Cover{{{1, 3}, {0, 2}}}));
  CHECK(find_proper_tight_set(pair, Cover{{{0, 3}, {1, 2}}}) == ElementSet{0, 1});

  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 150; ++trial) {
    auto ms = random_instance(rng, 7, 3);
    const ElementSet ground = ms.front().ground_set();
    const int k = static_cast<int>(ms.size());
    // Enumerate every valid cover by labeling.
    std::vector<Cover> covers;
    std::vector<int> label(ground.size(), 0);
    const std::vector<Element> ids = ground.to_vector();
    while (covers.size() < 6) {
      Cover c{std::vector<ElementSet>(k)};
      for (std::size_t i = 0; i < ids.size(); ++i) c.parts[label[i]].insert(ids[i]);
      if (verify_cover(ms, c)) covers.push_back(c);
      std::size_t i = 0;
      while (i < label.size() && ++label[i] == k) label[i++] = 0;
      if (i == label.size()) break;
    }
    if (covers.size() < 2) continue;
    const auto expected = find_proper_tight_set(ms, covers.front());
    for (const Cover& c : covers) REQUIRE(find_proper_tight_set(ms, c) == expected);
  }
}

}  // namespace
}  // namespace micolor
