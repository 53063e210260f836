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

#ifndef TOPOFILT_SUBSET_HPP_
#define TOPOFILT_SUBSET_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "topofilt/errors.hpp"

namespace topofilt {

/// A subset of the ground set {0, ..., n-1}: bit i set means point i is a
/// member. The ground size n is supplied by context (usually a Topology).
using Mask = std::uint32_t;

/// Largest ground size representable in one Mask word.
inline constexpr int kMaxGroundSize = 16;

/// Ground size beyond which exhaustive enumeration is refused.
inline constexpr int kMaxEnumGroundSize = 5;

inline constexpr Mask full_mask(int n) { return (Mask{1} << n) - 1; }

inline constexpr bool mask_fits(Mask m, int n) { return (m & ~full_mask(n)) == 0; }

inline constexpr bool contains_point(Mask m, int x) { return (m >> x) & 1u; }

inline constexpr Mask point_mask(int x) { return Mask{1} << x; }

inline int popcount(Mask m) { return std::popcount(m); }

void require_ground_size(int n, int cap = kMaxGroundSize);

std::vector<int> mask_to_points(Mask m);
Mask points_to_mask(const std::vector<int>& points, int n);

/// A canonical family of subsets: strictly ascending list of masks, no
/// duplicates. Equality on families is structural equality of this form.
class SetFamily {
 public:
  SetFamily() = default;

  /// Sorts and dedupes; accepts any order.
  static SetFamily from_unsorted(std::vector<Mask> masks);

  /// Trusts the input to already be strictly ascending.
  static SetFamily from_sorted(std::vector<Mask> masks);

  bool contains(Mask m) const {
    return std::binary_search(members_.begin(), members_.end(), m);
  }

  /// True when every member of `other` is a member of this family.
  bool includes(const SetFamily& other) const {
    return std::includes(members_.begin(), members_.end(),
                         other.members_.begin(), other.members_.end());
  }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  Mask operator[](std::size_t i) const { return members_[i]; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  const std::vector<Mask>& masks() const { return members_; }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

  /// Ascending lexicographic order on the member list.
  friend bool operator<(const SetFamily& a, const SetFamily& b) {
    return a.members_ < b.members_;
  }

 private:
  std::vector<Mask> members_;
};

}  // namespace topofilt

#endif  // TOPOFILT_SUBSET_HPP_
