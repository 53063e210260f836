/*
 * Copyright 2026 The topofilt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "topofilt/enumeration.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "topofilt/serialize.hpp"
#include "test_support.hpp"

using namespace topofilt;
using namespace topofilt::testing;

namespace {

// Oracle 1: scan every family of subsets and keep the ones satisfying the
// topology axioms directly. 2^(2^n) candidates, so n <= 3 only.
std::vector<std::vector<Mask>> family_scan_oracle(int n) {
  std::vector<std::vector<Mask>> found;
  const int subsets = 1 << n;
  const Mask full = full_mask(n);
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << subsets); ++pick) {
    auto has = [&](Mask m) { return (pick >> m & 1u) != 0; };
    if (!has(0) || !has(full)) continue;
    bool closed = true;
    for (Mask a = 0; a <= full && closed; ++a)
      for (Mask b = 0; b <= full && closed; ++b) {
        if (!has(a) || !has(b)) continue;
        closed = has(a | b) && has(a & b);
      }
    if (!closed) continue;
    std::vector<Mask> fam;
    for (Mask a = 0;; ++a) {
      if (has(a)) fam.push_back(a);
      if (a == full) break;
    }
    found.push_back(std::move(fam));
  }
  std::sort(found.begin(), found.end());  // the catalog's lexicographic order
  return found;
}

// Oracle 2: count reflexive-transitive boolean matrices by the raw
// definition (triple loop), no pruning, no bit tricks.
std::uint64_t preorder_count_oracle(int n) {
  if (n == 0) return 1;
  const std::uint64_t cells = std::uint64_t{1} << (n * (n - 1));
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < cells; ++code) {
    bool rel[5][5] = {};
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          rel[i][j] = true;
        } else {
          rel[i][j] = (c & 1) != 0;
          c >>= 1;
        }
      }
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j)
        for (int k = 0; k < n && transitive; ++k)
          if (rel[i][j] && rel[j][k] && !rel[i][k]) transitive = false;
    if (transitive) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("catalog counts match the labeled-topology sequence") {
  CHECK(enumerate_topologies(0).size() == 1);
  CHECK(enumerate_topologies(1).size() == 1);
  CHECK(enumerate_topologies(2).size() == 4);
  CHECK(enumerate_topologies(3).size() == 29);
  CHECK(enumerate_topologies(4).size() == 355);
  CHECK_THROWS_AS(enumerate_topologies(6), Error);
}

TEST_CASE("catalog equals the family-scan oracle, n <= 3") {
  for (int n = 0; n <= 3; ++n) {
    const TopologyCatalog cat = enumerate_topologies(n);
    const auto oracle = family_scan_oracle(n);
    REQUIRE(cat.size() == oracle.size());
    for (std::size_t i = 0; i < cat.size(); ++i)
      CHECK(cat.at(i).opens().masks() == oracle[i]);
  }
}

TEST_CASE("catalog count equals the raw preorder oracle, n = 4") {
  CHECK(preorder_count_oracle(4) == 355);
}

TEST_CASE("catalog entries are valid, distinct and indexable") {
  const TopologyCatalog cat = enumerate_topologies(3);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const Topology& t = cat.at(i);
    // revalidate through the canonical constructor
    CHECK(make_topology(3, t.opens(), MakeMode::validate) == t);
    CHECK(from_preorder(specialization_preorder(t)) == t);
    CHECK(cat.index_of(t) == i);
    if (i > 0) CHECK(cat.at(i - 1) < t);
  }
  CHECK(!cat.index_of(Topology::discrete(2)).has_value());
}

TEST_CASE("sharded generation matches single-threaded") {
  for (int n = 2; n <= 4; ++n) {
    const TopologyCatalog a = enumerate_topologies(n, 1);
    const TopologyCatalog b = enumerate_topologies(n, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.at(i) == b.at(i));
  }
}

TEST_CASE("pair stream counts, frozen") {
  CHECK(count_pairs(enumerate_topologies(1)) == 1);
  CHECK(count_pairs(enumerate_topologies(2)) == 9);
  CHECK(count_pairs(enumerate_topologies(3)) == 192);
  CHECK(count_pairs(enumerate_topologies(4)) == 9040);
}

TEST_CASE("pair stream order is sigma-major and inclusion-filtered") {
  const TopologyCatalog cat = enumerate_topologies(2);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for_each_pair(cat, [&](std::size_t i, std::size_t j) {
    pairs.emplace_back(i, j);
  });
  CHECK(std::is_sorted(pairs.begin(), pairs.end()));
  for (auto [i, j] : pairs) CHECK(cat.at(i).subtopology_of(cat.at(j)));
}

TEST_CASE("filtration enumeration examples") {
  auto contains = [](const std::vector<FiltrationSeq>& fs,
                     const FiltrationSeq& want) {
    return std::find(fs.begin(), fs.end(), want) != fs.end();
  };

  const auto tt = enumerate_filtrations(s(), s(), 2);
  CHECK(contains(tt, FiltrationSeq({s()}, s())));

  const auto sd = enumerate_filtrations(s(), d2(), 2);
  CHECK(contains(sd, FiltrationSeq({s(), d2()}, d2())));

  const auto id = enumerate_filtrations(i2(), d2(), 2);
  CHECK(contains(id, FiltrationSeq({i2(), d2()}, d2())));

  // every yielded chain passes the filtration check with target tau
  for (const FiltrationSeq& f : sd) CHECK(!check_filtration(f).has_value());

  CHECK_THROWS_AS(enumerate_filtrations(Topology::discrete(4),
                                        Topology::discrete(4), 2),
                  Error);
}

TEST_CASE("moving-target chains match the full condition") {
  const TopologyCatalog cat = enumerate_topologies(2);
  const Topology top = Topology::discrete(2);
  for (const Topology& sigma : cat.entries)
    for_each_chain(cat, sigma, top, 3, ChainKind::filtration_from,
                   [&](const FiltrationSeq& seq) {
                     CHECK(!seq.has_target());
                     CHECK(!check_filtration(seq).has_value());
                   });

  // count cross-check: filtrations-from = chains passing the condition
  // against their own last stage
  std::size_t from_count = 0, brute = 0;
  for (const Topology& sigma : cat.entries) {
    for_each_chain(cat, sigma, top, 3, ChainKind::filtration_from,
                   [&](const FiltrationSeq&) { ++from_count; });
    for_each_chain(cat, sigma, top, 3, ChainKind::any,
                   [&](const FiltrationSeq& seq) {
                     if (!check_filtration(seq).has_value()) ++brute;
                   });
  }
  CHECK(from_count == brute);
}

TEST_CASE("cache round trip, regeneration and corruption") {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("topofilt_cache_test_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);

  // missing file regenerates and stores
  const TopologyCatalog fresh = cache_load(3, dir);
  CHECK(fresh.size() == 29);
  CHECK(std::filesystem::exists(cache_file_path(dir, 3)));

  // round trip is identity
  const TopologyCatalog again = cache_load(3, dir);
  REQUIRE(again.size() == fresh.size());
  for (std::size_t i = 0; i < fresh.size(); ++i)
    CHECK(fresh.at(i) == again.at(i));

  // tampered entry count
  {
    std::ifstream in(cache_file_path(dir, 3));
    std::string all((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
    in.close();
    const auto cut = all.rfind('\n', all.size() - 2);
    std::ofstream out(cache_file_path(dir, 3));
    out << all.substr(0, cut + 1);
  }
  CHECK_THROWS_AS(cache_load(3, dir), Error);
  try {
    cache_load(3, dir);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cache_corrupt);
  }

  // tampered header
  {
    std::ofstream out(cache_file_path(dir, 3));
    out << "{\"version\":1,\"n\":3,\"count\":28}\n";
  }
  CHECK_THROWS_AS(cache_load(3, dir), Error);

  std::filesystem::remove_all(dir);
}

TEST_CASE("two runs serialize byte-identically") {
  auto dump = [](const TopologyCatalog& cat) {
    std::string s;
    for (const Topology& t : cat.entries) s += topology_to_json(t).dump() + "\n";
    return s;
  };
  CHECK(dump(enumerate_topologies(3)) == dump(enumerate_topologies(3)));
  CHECK(dump(enumerate_topologies(4, 1)) == dump(enumerate_topologies(4, 4)));
}
