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

#ifndef TOPOFILT_TOPOLOGY_HPP_
#define TOPOFILT_TOPOLOGY_HPP_

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "topofilt/subset.hpp"

namespace topofilt {

enum class MakeMode {
  validate,  // generators must already form a topology
  generate,  // smallest topology containing the generators
};

/// A topology on {0,...,n-1}, kept in canonical form: the ascending family of
/// open masks plus the minimal-neighborhood table U_x = intersection of all
/// opens containing x. Every finite topology is Alexandrov, so U_x is itself
/// open and determines the whole family: A is open iff U_x <= A for all x in A.
///
/// Values are immutable after construction; all operations are pure.
class Topology {
 public:
  Topology() = default;

  static Topology discrete(int n);
  static Topology indiscrete(int n);
  /// The two-point space with opens {}, {0}, X.
  static Topology sierpinski();

  int ground_size() const { return n_; }
  Mask full() const { return full_mask(n_); }

  const SetFamily& opens() const { return opens_; }

  /// Minimal open neighborhood of x (intersection of all opens containing x).
  Mask min_nbhd(int x) const { return min_nbhd_[x]; }

  bool is_open(Mask a) const {
    for (int x = 0; x < n_; ++x)
      if (contains_point(a, x) && (min_nbhd_[x] & ~a) != 0) return false;
    return true;
  }
  bool is_closed(Mask a) const { return is_open(full() ^ a); }

  /// Largest open subset of a.
  Mask interior(Mask a) const {
    Mask r = 0;
    for (int x = 0; x < n_; ++x)
      if (contains_point(a, x) && (min_nbhd_[x] & ~a) == 0) r |= point_mask(x);
    return r;
  }

  /// Smallest closed superset of a.
  Mask closure(Mask a) const {
    Mask r = 0;
    for (int x = 0; x < n_; ++x)
      if ((min_nbhd_[x] & a) != 0) r |= point_mask(x);
    return r;
  }

  /// True when every open of this topology is open in t (this <= t).
  bool subtopology_of(const Topology& t) const;

  /// Structural equality; two topologies on the same ground set are equal
  /// exactly when their minimal-neighborhood tables agree.
  friend bool operator==(const Topology& a, const Topology& b) {
    return a.n_ == b.n_ && a.min_nbhd_ == b.min_nbhd_;
  }

  /// Ascending lexicographic order on the canonical opens list (the catalog
  /// order used by enumeration).
  friend bool operator<(const Topology& a, const Topology& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.opens_ < b.opens_;
  }

 private:
  friend Topology make_topology(int, const SetFamily&, MakeMode);
  friend Topology from_preorder(const class Preorder&);
  friend Topology step(const Topology&, const Topology&);

  static Topology from_min_table(int n, std::span<const Mask> table);
  static Topology from_validated_opens(int n, SetFamily opens);

  int n_ = 0;
  SetFamily opens_;
  std::array<Mask, kMaxGroundSize> min_nbhd_{};
};

/// Canonical constructor. In validate mode the generators must already
/// contain {} and X and be closed under pairwise union and intersection;
/// otherwise throws Errc::not_a_topology with a witness in the message.
/// In generate mode returns the smallest topology containing the generators.
/// Throws Errc::mask_out_of_range when a generator has bits at position >= n.
Topology make_topology(int n, const SetFamily& generators, MakeMode mode);

/// Smallest topology containing every topology of the (non-empty) family.
Topology join(std::span<const Topology> ts);

/// A reflexive, transitive relation on {0,...,n-1}. row(x) holds the mask
/// {y : x <= y}; for the specialization preorder of a topology this is
/// exactly the minimal-neighborhood table.
class Preorder {
 public:
  /// Validates reflexivity and transitivity; throws Errc::not_a_preorder.
  static Preorder from_rows(int n, std::span<const Mask> rows);

  int ground_size() const { return n_; }
  Mask row(int x) const { return rows_[x]; }
  bool related(int x, int y) const { return contains_point(rows_[x], y); }

  friend bool operator==(const Preorder&, const Preorder&) = default;

 private:
  Preorder() = default;
  friend Preorder specialization_preorder(const Topology&);
  friend Topology from_preorder(const Preorder&);

  int n_ = 0;
  std::array<Mask, kMaxGroundSize> rows_{};
};

/// x <= y iff x lies in the closure of {y}; equivalently y is in U_x.
Preorder specialization_preorder(const Topology& t);

/// The Alexandrov topology of a preorder: opens are the up-closed sets.
/// Round-trips with specialization_preorder on every finite topology.
Topology from_preorder(const Preorder& p);

enum class Regularity {
  plain,    // point/closed-set separation only
  with_t1,  // additionally require singletons closed
};

/// Point/closed-set separation: for every closed F and x outside F there are
/// disjoint opens U containing x and V covering F. No T1 requirement unless
/// asked for via the mode.
bool is_regular(const Topology& t, Regularity mode = Regularity::plain);

/// interior(closure(a)) empty.
bool nowhere_dense(const Topology& t, Mask a);

/// A union of nowhere dense sets. On a finite ground set the relevant unions
/// are finite and finite unions of nowhere dense sets are nowhere dense, so
/// this coincides with nowhere_dense.
bool meager(const Topology& t, Mask a);

/// Every meager set has dense complement, checked over all subsets. True for
/// every finite topology.
bool is_baire(const Topology& t);

/// All sets of the form U symmetric-difference M with U open and M meager.
SetFamily baire_property_sets(const Topology& sigma);

/// The Boolean algebra generated by the opens. On a finite ground set the
/// Souslin operation over finitely many distinct sets reduces to finite
/// unions of finite intersections, so the C-sets are exactly this algebra.
SetFamily c_sets(const Topology& sigma);

bool in_open_algebra(const Topology& sigma, Mask a);

enum class BorelConvention {
  difference,  // level >= 2 classes are the algebra generated by the opens
  naive,       // level >= 2 unions-of-closed collapse; nothing beyond level 1
};

enum class BorelClass { clopen, open, closed, constructible, none };

const char* borel_class_name(BorelClass c) noexcept;

/// Classifies a in the finitized hierarchy over sigma. Under the difference
/// convention every level beyond the first coincides with the Boolean algebra
/// generated by the opens ("constructible"); under the naive convention the
/// higher levels collapse into open/closed and add nothing.
BorelClass borel_class(const Topology& sigma, Mask a,
                       BorelConvention conv = BorelConvention::difference);

/// True when tau has a neighborhood basis consisting of sets satisfying p.
/// On a finite space any neighborhood basis must contain every minimal
/// neighborhood U_x (if x is in interior(A) and A <= U_x then A = U_x), and
/// {U_x : x} is itself a neighborhood basis, so it suffices to test p there.
bool has_nbhd_basis_with(const Topology& tau,
                         const std::function<bool(Mask)>& p);

}  // namespace topofilt

#endif  // TOPOFILT_TOPOLOGY_HPP_
