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

#include "topofilt/equiv.hpp"

#include <map>
#include <string>

namespace topofilt {

Partition Partition::from_block_of(int n, std::span<const int> block_of) {
  require_ground_size(n);
  Partition p;
  p.n_ = n;
  p.block_of_.resize(n);
  std::map<int, int> relabel;  // raw label -> id, in first-occurrence order
  for (int x = 0; x < n; ++x) {
    auto [it, inserted] =
        relabel.emplace(block_of[x], static_cast<int>(relabel.size()));
    p.block_of_[x] = it->second;
  }
  p.block_masks_.assign(relabel.size(), 0);
  for (int x = 0; x < n; ++x) p.block_masks_[p.block_of_[x]] |= point_mask(x);
  return p;
}

Partition Partition::identity(int n) {
  std::vector<int> ids(n);
  for (int x = 0; x < n; ++x) ids[x] = x;
  return from_block_of(n, ids);
}

Partition Partition::single_block(int n) {
  std::vector<int> ids(n, 0);
  return from_block_of(n, ids);
}

Partition Partition::from_blocks(int n,
                                 const std::vector<std::vector<int>>& blocks) {
  require_ground_size(n);
  std::vector<int> block_of(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty())
      throw Error(Errc::invalid_partition, "empty block");
    for (int x : blocks[b]) {
      if (x < 0 || x >= n)
        throw Error(Errc::mask_out_of_range,
                    "point " + std::to_string(x) + " outside ground set");
      if (block_of[x] != -1)
        throw Error(Errc::invalid_partition,
                    "point " + std::to_string(x) + " in two blocks");
      block_of[x] = static_cast<int>(b);
    }
  }
  for (int x = 0; x < n; ++x)
    if (block_of[x] == -1)
      throw Error(Errc::invalid_partition,
                  "point " + std::to_string(x) + " in no block");
  return from_block_of(n, block_of);
}

bool relation_includes(const Partition& coarse, const Partition& fine) {
  if (coarse.ground_size() != fine.ground_size()) return false;
  for (int x = 0; x < fine.ground_size(); ++x)
    if ((fine.block_mask_of(x) & ~coarse.block_mask_of(x)) != 0) return false;
  return true;
}

Partition approx(const Partition& e, const Topology& t) {
  if (e.ground_size() != t.ground_size())
    throw Error(Errc::mixed_ground_sizes, "partition vs topology ground sets");
  const int n = e.ground_size();
  // Points land together iff the closures of their E-classes agree.
  std::map<Mask, int> label_of_closure;
  std::vector<int> block_of(n);
  for (int x = 0; x < n; ++x) {
    const Mask cl = t.closure(e.block_mask_of(x));
    auto [it, inserted] = label_of_closure.emplace(
        cl, static_cast<int>(label_of_closure.size()));
    block_of[x] = it->second;
  }
  return Partition::from_block_of(n, block_of);
}

std::vector<Partition> approx_chain(const Partition& e,
                                    const FiltrationSeq& seq) {
  if (e.ground_size() != seq.ground_size())
    throw Error(Errc::mixed_ground_sizes, "partition vs chain ground sets");
  std::vector<Partition> out;
  out.reserve(seq.length());
  for (const Topology& t : seq.stages()) out.push_back(approx(e, t));
  return out;
}

Partition relation_meet(std::span<const Partition> ps) {
  if (ps.empty()) throw Error(Errc::empty_list, "meet of no partitions");
  const int n = ps.front().ground_size();
  for (const Partition& p : ps)
    if (p.ground_size() != n)
      throw Error(Errc::mixed_ground_sizes, "meet over different ground sets");
  // Product labeling, then canonicalize.
  std::map<std::vector<int>, int> label;
  std::vector<int> block_of(n);
  for (int x = 0; x < n; ++x) {
    std::vector<int> sig;
    sig.reserve(ps.size());
    for (const Partition& p : ps) sig.push_back(p.block_of(x));
    auto [it, inserted] =
        label.emplace(std::move(sig), static_cast<int>(label.size()));
    block_of[x] = it->second;
  }
  return Partition::from_block_of(n, block_of);
}

bool classes_open(const Partition& e, const Topology& t) {
  if (e.ground_size() != t.ground_size())
    throw Error(Errc::mixed_ground_sizes, "partition vs topology ground sets");
  for (int b = 0; b < e.block_count(); ++b)
    if (!t.is_open(e.block_mask(b))) return false;
  return true;
}

std::vector<Partition> all_partitions(int n) {
  require_ground_size(n, kMaxEnumGroundSize);
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(Partition::from_block_of(0, std::span<const int>{}));
    return out;
  }
  // Restricted growth strings in lexicographic order: rgs[0] = 0 and
  // rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<int> rgs(n, 0);
  for (;;) {
    out.push_back(Partition::from_block_of(n, rgs));
    int pos = n - 1;
    for (; pos >= 1; --pos) {
      int cap = 0;
      for (int j = 0; j < pos; ++j) cap = std::max(cap, rgs[j]);
      if (rgs[pos] <= cap) break;
    }
    if (pos < 1) break;
    ++rgs[pos];
    std::fill(rgs.begin() + pos + 1, rgs.end(), 0);
  }
  return out;
}

}  // namespace topofilt
