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

#include "topofilt/filtration.hpp"

#include <doctest.h>

#include <algorithm>

#include "topofilt/enumeration.hpp"
#include "test_support.hpp"

using namespace topofilt;
using namespace topofilt::testing;

namespace {

// Definition-direct oracle: collect every U & int_tau(F) with U sigma-open
// and F sigma-closed, then close under pairwise unions.
std::vector<Mask> step_opens_oracle(const Topology& sigma, const Topology& tau) {
  std::vector<Mask> fam;
  for (Mask u : sigma.opens())
    for (Mask o : sigma.opens()) {
      const Mask f = sigma.full() ^ o;
      const Mask basic = u & tau.interior(f);
      if (std::find(fam.begin(), fam.end(), basic) == fam.end())
        fam.push_back(basic);
    }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t sz = fam.size();
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = i + 1; j < sz; ++j) {
        const Mask un = fam[i] | fam[j];
        if (std::find(fam.begin(), fam.end(), un) == fam.end()) {
          fam.push_back(un);
          grew = true;
        }
      }
  }
  std::sort(fam.begin(), fam.end());
  return fam;
}

FiltrationSeq seq_of(std::initializer_list<Topology> stages,
                     std::optional<Topology> target = std::nullopt) {
  return FiltrationSeq(std::vector<Topology>(stages), std::move(target));
}

}  // namespace

TEST_CASE("oplus1") {
  CHECK(oplus1(0) == 0);
  CHECK(oplus1(1) == 2);
  CHECK(oplus1(5) == 6);
}

TEST_CASE("FiltrationSeq validates its chain") {
  CHECK_NOTHROW(seq_of({i2(), s(), d2()}, d2()));
  CHECK_THROWS_AS(FiltrationSeq({}), Error);
  CHECK_THROWS_AS(seq_of({s(), i2()}), Error);            // not a chain
  CHECK_THROWS_AS(seq_of({s()}, i2()), Error);            // target below
  CHECK_THROWS_AS(seq_of({s(), Topology::discrete(3)}), Error);
  CHECK(seq_of({i2(), s()}).effective_target() == s());
}

TEST_CASE("step on the two-point spaces") {
  CHECK(step(i2(), d2()) == i2());
  CHECK(step(s(), d2()) == d2());
  for (const Topology& t : {i2(), s(), s_prime(), d2()})
    CHECK(step(t, t) == t);
  CHECK_THROWS_AS(step(d2(), s()), Error);
}

TEST_CASE("step agrees with the definition oracle for all pairs, n <= 3") {
  for (int n = 0; n <= 3; ++n) {
    const TopologyCatalog cat = enumerate_topologies(n);
    for (const Topology& sigma : cat.entries)
      for (const Topology& tau : cat.entries) {
        if (!sigma.subtopology_of(tau)) continue;
        const Topology st = step(sigma, tau);
        CHECK(st.opens().masks() == step_opens_oracle(sigma, tau));
        // the sandwich law
        CHECK(sigma.subtopology_of(st));
        CHECK(st.subtopology_of(tau));
      }
  }
}

TEST_CASE("slowest iteration statuses") {
  const SlowestResult r1 = slowest(s(), d2());
  CHECK(r1.status == SlowestStatus::reached);
  CHECK(r1.seq.length() == 2);
  CHECK(r1.seq.stage(0) == s());
  CHECK(r1.seq.stage(1) == d2());

  const SlowestResult r2 = slowest(i2(), d2());
  CHECK(r2.status == SlowestStatus::fixpoint_below);
  CHECK(r2.seq.length() == 1);

  const SlowestResult r3 = slowest(s(), s());
  CHECK(r3.status == SlowestStatus::reached);
  CHECK(r3.seq.length() == 1);

  // a one-stage budget cannot see past sigma when progress is needed
  const Topology chain3 = topo(3, {0b000, 0b001, 0b011, 0b111});
  const SlowestResult r4 = slowest(topo(3, {0b000, 0b001, 0b111}),
                                   Topology::discrete(3), 1);
  CHECK(r4.status == SlowestStatus::budget);
  (void)chain3;
}

TEST_CASE("distance") {
  CHECK(distance(s(), s()) == Ordinal{0});
  CHECK(distance(s(), d2()) == Ordinal{1});
  CHECK(!distance(i2(), d2()).has_value());

  // fixpoint characterization over all pairs at n <= 3
  for (int n = 0; n <= 3; ++n) {
    const TopologyCatalog cat = enumerate_topologies(n);
    for (const Topology& sigma : cat.entries)
      for (const Topology& tau : cat.entries) {
        if (!sigma.subtopology_of(tau)) continue;
        const auto d = distance(sigma, tau);
        CHECK((d == Ordinal{0}) == (sigma == tau));
        CHECK((slowest(sigma, tau).status == SlowestStatus::reached) ==
              d.has_value());
      }
  }
}

TEST_CASE("filtration condition") {
  CHECK(!check_filtration(seq_of({i2(), d2()}, d2())).has_value());
  CHECK(!check_filtration(seq_of({s()}, d2())).has_value());

  const auto v = check_filtration(seq_of({s(), s()}, d2()));
  REQUIRE(v.has_value());
  CHECK(v->alpha == 1);
  CHECK(v->set == 0b10);
}

TEST_CASE("weak filtration condition") {
  const auto v = check_weak_filtration(seq_of({s(), s()}, d2()));
  REQUIRE(v.has_value());
  CHECK(v->alpha == 1);
  CHECK(v->set == 0b10);

  CHECK(!check_weak_filtration(seq_of({i2(), i2()}, i2())).has_value());
  CHECK(!check_weak_filtration(seq_of({d2()}, d2())).has_value());

  // every full filtration is weak, exhaustive n = 2
  const TopologyCatalog cat = enumerate_topologies(2);
  for (const Topology& sigma : cat.entries)
    for (const Topology& tau : cat.entries) {
      if (!sigma.subtopology_of(tau)) continue;
      for (const FiltrationSeq& f : enumerate_filtrations(sigma, tau, 3))
        CHECK(!check_weak_filtration(f).has_value());
    }
}

TEST_CASE("discrete families") {
  CHECK(is_discrete_family(s(), SetFamily::from_unsorted({0b01})));
  CHECK(is_discrete_family(s(), SetFamily::from_unsorted({0b11})));
  CHECK(!is_discrete_family(s(), SetFamily::from_unsorted({0b01, 0b11})));
  CHECK(!is_discrete_family(s(), SetFamily::from_unsorted({0b10})));  // not open
  CHECK(is_discrete_family(d2(), SetFamily::from_unsorted({0b01, 0b10})));
}

TEST_CASE("tame sets") {
  CHECK(tame_sets(seq_of({s(), d2()}), 0).empty());
  CHECK(tame_sets(seq_of({s(), d2()}), 1).masks() ==
        std::vector<Mask>{0b00, 0b01, 0b10, 0b11});
  CHECK(tame_sets(seq_of({d2(), d2()}), 1).masks() ==
        std::vector<Mask>{0b00, 0b01, 0b10, 0b11});

  CHECK_THROWS_AS(tame_sets(seq_of({s(), d2()}), 3), Error);
  CHECK_THROWS_AS(tame_sets(FiltrationSeq({Topology::discrete(5)}), 1), Error);

  // alpha may equal the length: all stages participate
  CHECK(tame_sets(seq_of({s(), d2()}), 2).masks() ==
        std::vector<Mask>{0b00, 0b01, 0b10, 0b11});

  // monotone in alpha, exhaustive over chains at n = 2
  const TopologyCatalog cat = enumerate_topologies(2);
  for (const Topology& a : cat.entries)
    for (const Topology& b : cat.entries) {
      if (!a.subtopology_of(b)) continue;
      const FiltrationSeq seq = seq_of({a, b});
      for (Ordinal lo = 0; lo <= 2; ++lo)
        for (Ordinal hi = lo; hi <= 2; ++hi)
          CHECK(tame_sets(seq, hi).includes(tame_sets(seq, lo)));
    }
}

TEST_CASE("patching actually enlarges the tame family") {
  // On three points with opens {0}, {2}, {0,2}: the discrete family
  // {{0},{2}} patches the closed sets {1,2} and {0,1} into {0,2}, which is
  // closed at no stage.
  const Topology t = topo(3, {0b000, 0b001, 0b100, 0b101, 0b111});
  const SetFamily tame = tame_sets(FiltrationSeq({t, t}), 1);
  CHECK(tame.contains(0b101));
  CHECK(!t.is_closed(0b101));
}

TEST_CASE("slight sets") {
  const FiltrationSeq ss = seq_of({s(), s()});
  CHECK(is_slight(ss, 1, 0b00));
  CHECK(is_slight(ss, 1, 0b10));
  CHECK(!is_slight(seq_of({s(), d2()}), 1, 0b01));
  CHECK_THROWS_AS(is_slight(ss, 2, 0b00), Error);  // needs a stage at alpha

  // unions of slight sets are slight; subsets of slight sets are slight
  for (const Topology& a : enumerate_topologies(2).entries) {
    const FiltrationSeq seq = seq_of({a, d2()});
    for (Ordinal alpha = 0; alpha < 2; ++alpha) {
      for (Mask x = 0; x <= 3; ++x)
        for (Mask y = 0; y <= 3; ++y)
          if (is_slight(seq, alpha, x) && is_slight(seq, alpha, y)) {
            CHECK(is_slight(seq, alpha, x | y));
            CHECK(is_slight(seq, alpha, x & y));
          }
    }
  }
}

TEST_CASE("solid sets") {
  const FiltrationSeq ss = seq_of({s(), s()});
  CHECK(is_solid(ss, 1, 0b00));
  CHECK(is_solid(ss, 1, 0b11));
  CHECK(!is_solid(ss, 1, 0b10));
}

TEST_CASE("c_xi localization") {
  const FiltrationSeq ss = seq_of({s(), s()});
  CHECK(c_xi(ss, 0, 1, 0b10) == 0b00);
  CHECK(c_xi(ss, 0, 1, 0b11) == 0b11);
  CHECK(c_xi(ss, 0, 1, 0b00) == 0b00);
  CHECK(c_xi(ss, 1, 1, 0b00) == 0b00);
  CHECK_THROWS_AS(c_xi(ss, 1, 0, 0b00), Error);

  // output closed at stage xi; the trimmed part is slight when xi < alpha
  for (const Topology& a : enumerate_topologies(2).entries)
    for (const Topology& b : enumerate_topologies(2).entries) {
      if (!a.subtopology_of(b)) continue;
      const FiltrationSeq seq = seq_of({a, b});
      for (Mask x = 0; x <= 3; ++x) {
        const Mask c = c_xi(seq, 0, 1, x);
        CHECK(a.is_closed(c));
        CHECK(is_slight(seq, 1, x & ~c));
      }
    }
}

TEST_CASE("stagewise bounds of the slowest iteration, exhaustive n = 2") {
  const TopologyCatalog cat = enumerate_topologies(2);
  for (const Topology& sigma : cat.entries)
    for (const Topology& tau : cat.entries) {
      if (!sigma.subtopology_of(tau)) continue;
      const SlowestResult sr = slowest(sigma, tau);
      CHECK(!check_filtration(sr.seq).has_value());
      const std::vector<Topology>& slow = sr.seq.stages();
      for (const FiltrationSeq& f : enumerate_filtrations(sigma, tau, 3)) {
        for (std::size_t xi = 0; xi < f.length(); ++xi) {
          const Topology& s = slow[std::min(xi, slow.size() - 1)];
          CHECK(s.subtopology_of(f.stage(xi)));
        }
        // the step of each stage stays under the next stage
        for (std::size_t xi = 0; xi + 1 < f.length(); ++xi) {
          const Topology mid = step(f.stage(xi), tau);
          CHECK(f.stage(xi).subtopology_of(mid));
          CHECK(mid.subtopology_of(f.stage(xi + 1)));
        }
      }
    }
}
