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

#ifndef TOPOFILT_EQUIV_HPP_
#define TOPOFILT_EQUIV_HPP_

#include <span>
#include <vector>

#include "topofilt/filtration.hpp"
#include "topofilt/topology.hpp"

namespace topofilt {

/// An equivalence relation on the ground set as block assignments. Block ids
/// are dense, 0-based, and canonically labeled by first occurrence, so
/// equality is structural.
class Partition {
 public:
  static Partition identity(int n);
  static Partition single_block(int n);

  /// Canonicalizes arbitrary labels by first occurrence.
  static Partition from_block_of(int n, std::span<const int> block_of);

  /// Validates that the blocks cover {0..n-1} exactly once.
  static Partition from_blocks(int n,
                               const std::vector<std::vector<int>>& blocks);

  int ground_size() const { return n_; }
  int block_count() const { return static_cast<int>(block_masks_.size()); }

  int block_of(int x) const { return block_of_[x]; }
  Mask block_mask(int b) const { return block_masks_[b]; }
  Mask block_mask_of(int x) const { return block_masks_[block_of_[x]]; }

  bool same_block(int x, int y) const { return block_of_[x] == block_of_[y]; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  int n_ = 0;
  std::vector<int> block_of_;
  std::vector<Mask> block_masks_;
};

/// As relations, does coarse contain fine (every fine-related pair is
/// coarse-related, i.e. fine refines coarse)?
bool relation_includes(const Partition& coarse, const Partition& fine);

/// The upper approximation of E through T: points are identified when the
/// closures of their E-classes coincide. Coarsens E.
/// Throws Errc::mixed_ground_sizes.
Partition approx(const Partition& e, const Topology& t);

/// approx of E through each stage of the chain. Along an increasing chain
/// the result is a decreasing sequence of relations, each containing E.
std::vector<Partition> approx_chain(const Partition& e,
                                    const FiltrationSeq& seq);

/// Relation intersection: together in the result iff together in every
/// input. Throws Errc::empty_list / Errc::mixed_ground_sizes.
Partition relation_meet(std::span<const Partition> ps);

/// Whether every block is open in T.
bool classes_open(const Partition& e, const Topology& t);

/// All partitions of {0..n-1} in a fixed deterministic order (restricted
/// growth strings). Bell-number many; intended for small n sweeps.
std::vector<Partition> all_partitions(int n);

}  // namespace topofilt

#endif  // TOPOFILT_EQUIV_HPP_
