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

#ifndef TOPOFILT_SERIALIZE_HPP_
#define TOPOFILT_SERIALIZE_HPP_

#include <nlohmann/json.hpp>

#include "topofilt/equiv.hpp"
#include "topofilt/filtration.hpp"
#include "topofilt/topology.hpp"

namespace topofilt {

// Wire formats (all deterministic):
//   Topology       {"n": int, "opens": [int, ...]}   ascending bitmasks
//   FiltrationSeq  {"n": int, "stages": [[int,...],...],
//                   "target": [int,...] | null}
//   Partition      {"n": int, "blocks": [[int,...],...]}
//                  blocks sorted by least element, points ascending
// Bit i of a mask denotes point i. Readers validate and throw
// Errc::parse_error (structure) or the constructing operation's error.

nlohmann::json topology_to_json(const Topology& t);
Topology topology_from_json(const nlohmann::json& j);

nlohmann::json filtration_to_json(const FiltrationSeq& seq);
FiltrationSeq filtration_from_json(const nlohmann::json& j);

nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

}  // namespace topofilt

#endif  // TOPOFILT_SERIALIZE_HPP_
