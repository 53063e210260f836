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

#include "topofilt/topology.hpp"

#include <doctest.h>

#include "topofilt/enumeration.hpp"
#include "test_support.hpp"

using namespace topofilt;
using namespace topofilt::testing;

TEST_CASE("make_topology validates and generates") {
  const Topology sp = topo(2, {0b00, 0b01, 0b11});
  CHECK(sp.opens().masks() == std::vector<Mask>{0, 1, 3});

  // generating from the two singletons forces all four opens
  const Topology gen = make_topology(2, SetFamily::from_unsorted({0b01, 0b10}),
                                     MakeMode::generate);
  CHECK(gen == Topology::discrete(2));

  CHECK_THROWS_AS(topo(2, {0b00, 0b01, 0b10}), Error);  // X missing
  try {
    topo(2, {0b00, 0b01, 0b10});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_topology);
  }

  try {
    make_topology(2, SetFamily::from_unsorted({0b100}), MakeMode::generate);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::mask_out_of_range);
  }

  // pairwise-closure witness on a larger broken family
  try {
    make_topology(3, SetFamily::from_unsorted({0b000, 0b001, 0b010, 0b111}),
                  MakeMode::validate);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_topology);
    CHECK(std::string(e.what()).find("union") != std::string::npos);
  }
}

TEST_CASE("interior and closure on the two-point spaces") {
  const Topology sp = s();
  CHECK(sp.interior(0b10) == 0b00);
  CHECK(sp.interior(0b11) == 0b11);
  CHECK(sp.interior(0b01) == 0b01);

  CHECK(sp.closure(0b01) == 0b11);
  CHECK(sp.closure(0b10) == 0b10);
  CHECK(d2().closure(0b00) == 0b00);
}

TEST_CASE("interior/closure agree with the definition-scan oracles, n <= 3") {
  for (int n = 0; n <= 3; ++n) {
    const TopologyCatalog cat = enumerate_topologies(n);
    for (const Topology& t : cat.entries)
      for (Mask a = 0; a <= t.full(); ++a) {
        CHECK(t.interior(a) == interior_oracle(t, a));
        CHECK(t.closure(a) == closure_oracle(t, a));
        if (a == t.full()) break;
      }
  }
}

TEST_CASE("interior/closure algebraic laws, exhaustive n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const TopologyCatalog cat = enumerate_topologies(n);
    for (const Topology& t : cat.entries) {
      const Mask full = t.full();
      for (Mask a = 0;; ++a) {
        const Mask ia = t.interior(a);
        const Mask ca = t.closure(a);
        CHECK((ia & ~a) == 0);
        CHECK((a & ~ca) == 0);
        CHECK(t.interior(ia) == ia);
        CHECK(t.closure(ca) == ca);
        // De Morgan duality
        CHECK(ca == (full ^ t.interior(full ^ a)));
        for (Mask b = 0;; ++b) {
          CHECK(t.interior(a & b) == (t.interior(a) & t.interior(b)));
          if (b == full) break;
        }
        if (a == full) break;
      }
    }
  }
}

TEST_CASE("join is the least upper bound") {
  const Topology both[] = {s(), s_prime()};
  CHECK(join(both) == d2());

  const Topology one[] = {s()};
  CHECK(join(one) == s());

  const Topology mixed[] = {i2(), s()};
  CHECK(join(mixed) == s());

  const Topology bad[] = {s(), Topology::discrete(3)};
  CHECK_THROWS_AS(join(bad), Error);
  CHECK_THROWS_AS(join(std::span<const Topology>{}), Error);

  // least-upper-bound law over all pairs at n <= 3
  for (int n = 1; n <= 3; ++n) {
    const TopologyCatalog cat = enumerate_topologies(n);
    for (const Topology& a : cat.entries)
      for (const Topology& b : cat.entries) {
        const Topology pair[] = {a, b};
        const Topology j = join(pair);
        CHECK(a.subtopology_of(j));
        CHECK(b.subtopology_of(j));
        for (const Topology& c : cat.entries)
          if (a.subtopology_of(c) && b.subtopology_of(c))
            CHECK(j.subtopology_of(c));
      }
  }
}

TEST_CASE("minimal neighborhoods") {
  CHECK(s().min_nbhd(0) == 0b01);
  CHECK(s().min_nbhd(1) == 0b11);
  CHECK(d2().min_nbhd(1) == 0b10);
  CHECK(i2().min_nbhd(0) == 0b11);
}

TEST_CASE("specialization preorder and round trip") {
  const Preorder pd = specialization_preorder(d2());
  CHECK(pd.related(0, 0));
  CHECK(!pd.related(0, 1));
  CHECK(!pd.related(1, 0));

  const Preorder pi = specialization_preorder(i2());
  CHECK(pi.related(0, 1));
  CHECK(pi.related(1, 0));

  // For the {0}-open space, closure({0}) = X, so 1 <= 0 and not 0 <= 1.
  const Preorder ps = specialization_preorder(s());
  CHECK(ps.related(1, 0));
  CHECK(!ps.related(0, 1));

  for (int n = 0; n <= 3; ++n)
    for (const Topology& t : enumerate_topologies(n).entries)
      CHECK(from_preorder(specialization_preorder(t)) == t);

  const Mask not_reflexive[] = {0b10, 0b10};
  CHECK_THROWS_AS(Preorder::from_rows(2, not_reflexive), Error);
  const Mask not_transitive[] = {0b011, 0b110, 0b100};
  CHECK_THROWS_AS(Preorder::from_rows(3, not_transitive), Error);
}

TEST_CASE("regularity without T1") {
  CHECK(is_regular(d2()));
  CHECK(!is_regular(s()));
  CHECK(is_regular(i2()));

  // the T1 flag strengthens: indiscrete has non-closed points
  CHECK(!is_regular(i2(), Regularity::with_t1));
  CHECK(is_regular(d2(), Regularity::with_t1));
}

TEST_CASE("nowhere dense, meager, Baire") {
  CHECK(nowhere_dense(s(), 0b10));
  CHECK(!nowhere_dense(s(), 0b01));
  CHECK(is_baire(s()));
  CHECK(is_baire(i2()));
  CHECK(is_baire(d2()));

  // finite unions of nowhere dense sets stay nowhere dense (so meager
  // collapses to nowhere dense), exhaustive at n <= 3
  for (int n = 1; n <= 3; ++n)
    for (const Topology& t : enumerate_topologies(n).entries) {
      const Mask full = t.full();
      for (Mask a = 0;; ++a) {
        for (Mask b = 0;; ++b) {
          if (nowhere_dense(t, a) && nowhere_dense(t, b))
            CHECK(nowhere_dense(t, a | b));
          if (b == full) break;
        }
        CHECK(meager(t, a) == nowhere_dense(t, a));
        if (a == full) break;
      }
    }
}

TEST_CASE("every finite topology is Baire, exhaustive n <= 4") {
  for (int n = 0; n <= 4; ++n)
    for (const Topology& t : enumerate_topologies(n).entries)
      CHECK(is_baire(t));
}

TEST_CASE("Baire-property sets") {
  CHECK(baire_property_sets(i2()).masks() == std::vector<Mask>{0b00, 0b11});
  CHECK(baire_property_sets(d2()).masks() ==
        std::vector<Mask>{0b00, 0b01, 0b10, 0b11});
  CHECK(baire_property_sets(s()).masks() ==
        std::vector<Mask>{0b00, 0b01, 0b10, 0b11});

  // sigma-algebra laws plus containment of the opens, exhaustive n <= 3
  for (int n = 1; n <= 3; ++n)
    for (const Topology& t : enumerate_topologies(n).entries) {
      const SetFamily bp = baire_property_sets(t);
      CHECK(bp.includes(t.opens()));
      for (Mask a : bp) {
        CHECK(bp.contains(t.full() ^ a));
        for (Mask b : bp) {
          CHECK(bp.contains(a | b));
          CHECK(bp.contains(a & b));
        }
      }
    }
}

TEST_CASE("C-sets are the algebra generated by the opens") {
  CHECK(c_sets(i2()).masks() == std::vector<Mask>{0b00, 0b11});
  CHECK(c_sets(s()).masks() == std::vector<Mask>{0b00, 0b01, 0b10, 0b11});
  CHECK(c_sets(d2()).masks() == std::vector<Mask>{0b00, 0b01, 0b10, 0b11});

  for (int n = 1; n <= 3; ++n)
    for (const Topology& t : enumerate_topologies(n).entries) {
      const SetFamily cs = c_sets(t);
      const SetFamily bp = baire_property_sets(t);
      CHECK(cs.includes(t.opens()));
      for (Mask a : cs) {
        CHECK(cs.contains(t.full() ^ a));
        CHECK(in_open_algebra(t, a));
        CHECK(bp.contains(a));  // every C-set has the Baire property
        for (Mask b : cs) CHECK(cs.contains(a | b));
      }
      const Mask full = t.full();
      for (Mask a = 0;; ++a) {
        CHECK(cs.contains(a) == in_open_algebra(t, a));
        if (a == full) break;
      }
    }
}

TEST_CASE("borel_class under both conventions") {
  CHECK(borel_class(s(), 0b10) == BorelClass::closed);
  CHECK(borel_class(i2(), 0b01) == BorelClass::none);
  CHECK(borel_class(d2(), 0b01) == BorelClass::clopen);
  CHECK(borel_class(s(), 0b01) == BorelClass::open);

  // a set in the algebra but neither open nor closed needs three points:
  // {0} open and {2} closed makes {0,2} constructible
  const Topology t = topo(3, {0b000, 0b001, 0b011, 0b111});
  CHECK(borel_class(t, 0b101) == BorelClass::constructible);
  CHECK(borel_class(t, 0b101, BorelConvention::naive) == BorelClass::none);
}

TEST_CASE("neighborhood-basis criterion") {
  // minimal neighborhoods of the discrete plane are singletons; they lack
  // the Baire property wrt the indiscrete topology
  const SetFamily bp_i2 = baire_property_sets(i2());
  CHECK(!has_nbhd_basis_with(d2(), [&](Mask m) { return bp_i2.contains(m); }));

  const Topology sp = s();
  CHECK(has_nbhd_basis_with(sp, [&](Mask m) { return sp.is_open(m); }));
  CHECK(has_nbhd_basis_with(sp, [&](Mask m) { return in_open_algebra(sp, m); }));
}
