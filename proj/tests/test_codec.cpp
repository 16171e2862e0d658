// Copyright 2026 the tglet authors
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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "tglet/aggregate.hpp"
#include "tglet/motif.hpp"

using namespace tglet;

namespace {

// all sorted type multisets of size k over 1..L
std::vector<std::vector<type_id>> multisets(int k, type_id L) {
  std::vector<std::vector<type_id>> out;
  std::vector<type_id> cur(k, 1);
  for (;;) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == L) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int a = pos + 1; a < k; ++a) cur[a] = cur[pos];
  }
  return out;
}

}  // namespace

TEST_CASE("encode is invariant under type permutations") {
  CHECK(encode(Orbit::star4, {(type_id)2, 1, 1, 3}) ==
        encode(Orbit::star4, {(type_id)1, 1, 2, 3}));
  CHECK(encode(Orbit::triangle, 3, 1, 2) == encode(Orbit::triangle, 2, 3, 1));
  CHECK(encode(Orbit::edge, 5, 2) == encode(Orbit::edge, 2, 5));
}

TEST_CASE("distinct orbits never collide") {
  CHECK(encode(Orbit::triangle, 1, 1, 1) != encode(Orbit::path3, 1, 1, 1));
  CHECK(encode(Orbit::path4_edge, 1, 1, 1, 1) !=
        encode(Orbit::path4_center, 1, 1, 1, 1));
}

TEST_CASE("decode returns the orbit and the sorted multiset") {
  const MotifDesc d = decode(encode(Orbit::clique4, {(type_id)4, 3, 2, 1}));
  CHECK(d.orbit == Orbit::clique4);
  CHECK(d.types == std::array<type_id, 4>{1, 2, 3, 4});
  CHECK(d.num_nodes == 4);
  CHECK(d.num_edges == 6);
}

TEST_CASE("encode rejects out-of-range types and wrong arity") {
  CHECK_THROWS_AS(encode(Orbit::edge, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(encode(Orbit::edge, 1, 4096), std::invalid_argument);
  CHECK_THROWS_AS(encode(Orbit::clique4, {(type_id)1, 2}),
                  std::invalid_argument);
  CHECK_NOTHROW(encode(Orbit::edge, kMaxTypeId, kMaxTypeId));
}

TEST_CASE("decode rejects malformed keys") {
  CHECK_THROWS_AS(decode(MotifKey{std::uint64_t{200} << 48}),
                  std::invalid_argument);  // bad orbit id
  CHECK_THROWS_AS(decode(MotifKey{0}), std::invalid_argument);  // type 0
  // trailing nonzero field on a 2-node orbit
  CHECK_THROWS_AS(decode(MotifKey{(std::uint64_t{1} << 36) | 1}),
                  std::invalid_argument);
}

TEST_CASE("exhaustive: permutation invariance, injectivity, variant counts") {
  const type_id L = 9;
  std::set<std::uint64_t> all_keys;
  std::mt19937_64 rng(7);
  for (int gi = 0; gi < kNumOrbits; ++gi) {
    const auto g = static_cast<Orbit>(gi);
    const int k = orbit_nodes(g);
    const auto sets = multisets(k, L);
    CHECK(sets.size() == num_possible_typed(k, L));
    std::set<std::uint64_t> orbit_keys;
    for (const auto& ms : sets) {
      const MotifKey key = encode(g, ms);
      orbit_keys.insert(key.value);
      // every permutation maps to the same key
      std::vector<type_id> perm = ms;
      do {
        CHECK(encode(g, perm) == key);
      } while (std::next_permutation(perm.begin(), perm.end()));
      const MotifDesc d = decode(key);
      CHECK(d.orbit == g);
      CHECK(std::equal(ms.begin(), ms.end(), d.types.begin()));
    }
    // injective on (orbit, multiset): one key per multiset
    CHECK(orbit_keys.size() == sets.size());
    all_keys.insert(orbit_keys.begin(), orbit_keys.end());
  }
  // ... and across orbits
  std::size_t expected = 0;
  for (int gi = 0; gi < kNumOrbits; ++gi)
    expected += num_possible_typed(orbit_nodes(static_cast<Orbit>(gi)), L);
  CHECK(all_keys.size() == expected);
}

TEST_CASE("graphlet keys mirror orbit keys") {
  const MotifKey mk = encode(Orbit::path4_center, 2, 1, 2, 1);
  const GraphletKey gk = to_graphlet_key(mk);
  const GraphletDesc d = decode_graphlet(gk);
  CHECK(d.graphlet == Graphlet::path4);
  CHECK(d.num_edges == 3);
  CHECK((d.types == std::array<type_id, 4>{1, 1, 2, 2}));
  CHECK(gk == encode_graphlet(Graphlet::path4, {(type_id)1, 1, 2, 2}));
}

TEST_CASE("decimal hash evaluates positionally") {
  CHECK(paper_decimal_hash(static_cast<Orbit>(5), {(type_id)1, 2, 3, 4}) ==
        51234);
  CHECK(paper_decimal_hash(static_cast<Orbit>(2), {(type_id)3, 1, 0, 0}) ==
        23100);
  CHECK(paper_decimal_hash(static_cast<Orbit>(2), {(type_id)3, 1}) == 23100);
  CHECK(paper_decimal_hash(static_cast<Orbit>(1), {(type_id)1, 1, 1}) ==
        11110);
}

TEST_CASE("decimal hash directs large types to the wide form") {
  CHECK_THROWS_WITH(
      paper_decimal_hash(Orbit::star4, {(type_id)10, 1, 1, 1}),
      Catch::Matchers::ContainsSubstring("wide"));
  CHECK(paper_decimal_hash_wide(static_cast<Orbit>(5),
                                {(type_id)10, 11, 12, 13}) == 510111213ull);
  CHECK_THROWS_AS(
      paper_decimal_hash_wide(Orbit::star4, {(type_id)100, 1, 1, 1}),
      std::invalid_argument);
}

TEST_CASE("describe matches the lookup-table wording") {
  CHECK(describe(encode(Orbit::clique4, 1, 1, 2, 2)) ==
        "4-clique, k=4, |E|=6, types {1,1,2,2}");
  CHECK(describe(encode(Orbit::edge, 1, 2)) ==
        "edge, k=2, |E|=1, types {1,2}");
  CHECK(describe(encode(Orbit::cycle4, 1, 2, 1, 2)) ==
        "4-cycle, k=4, |E|=4, types {1,1,2,2}");
}
