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

#include "topofilt/subset.hpp"

#include <cassert>
#include <sstream>

namespace topofilt {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::not_a_topology: return "NotATopology";
    case Errc::mask_out_of_range: return "MaskOutOfRange";
    case Errc::mixed_ground_sizes: return "MixedGroundSizes";
    case Errc::not_a_preorder: return "NotAPreorder";
    case Errc::not_subtopology: return "NotSubtopology";
    case Errc::alpha_out_of_range: return "AlphaOutOfRange";
    case Errc::ground_size_too_large: return "GroundSizeTooLarge";
    case Errc::cache_corrupt: return "CacheCorrupt";
    case Errc::io_failure: return "IoFailure";
    case Errc::unknown_property: return "UnknownProperty";
    case Errc::unknown_query: return "UnknownQuery";
    case Errc::empty_list: return "EmptyList";
    case Errc::invalid_partition: return "InvalidPartition";
    case Errc::parse_error: return "ParseError";
  }
  return "Error";
}

void require_ground_size(int n, int cap) {
  if (n < 0 || n > cap) {
    std::ostringstream os;
    os << "ground size " << n << " outside [0, " << cap << "]";
    throw Error(Errc::ground_size_too_large, os.str());
  }
}

SetFamily SetFamily::from_unsorted(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  SetFamily f;
  f.members_ = std::move(masks);
  return f;
}

SetFamily SetFamily::from_sorted(std::vector<Mask> masks) {
  assert(std::is_sorted(masks.begin(), masks.end()));
  SetFamily f;
  f.members_ = std::move(masks);
  return f;
}

std::vector<int> mask_to_points(Mask m) {
  std::vector<int> pts;
  for (int x = 0; x < kMaxGroundSize; ++x)
    if (contains_point(m, x)) pts.push_back(x);
  return pts;
}

Mask points_to_mask(const std::vector<int>& points, int n) {
  Mask m = 0;
  for (int x : points) {
    if (x < 0 || x >= n)
      throw Error(Errc::mask_out_of_range,
                  "point " + std::to_string(x) + " outside ground set of size " +
                      std::to_string(n));
    m |= point_mask(x);
  }
  return m;
}

}  // namespace topofilt
