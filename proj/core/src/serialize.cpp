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

#include "topofilt/serialize.hpp"

namespace topofilt {

namespace {

using nlohmann::json;

int read_ground_size(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw Error(Errc::parse_error, "record needs an integer field \"n\"");
  const auto n = j["n"].get<std::int64_t>();
  if (n < 0 || n > kMaxGroundSize)
    throw Error(Errc::ground_size_too_large,
                "n = " + std::to_string(n) + " unsupported");
  return static_cast<int>(n);
}

SetFamily read_mask_array(const json& j, int n, const char* what) {
  if (!j.is_array())
    throw Error(Errc::parse_error, std::string(what) + " must be an array");
  std::vector<Mask> ms;
  ms.reserve(j.size());
  for (const json& v : j) {
    if (!v.is_number_integer())
      throw Error(Errc::parse_error, std::string(what) + " must hold integers");
    const auto raw = v.get<std::int64_t>();
    if (raw < 0 || !mask_fits(static_cast<Mask>(raw), n))
      throw Error(Errc::mask_out_of_range,
                  "mask " + std::to_string(raw) + " does not fit n = " +
                      std::to_string(n));
    ms.push_back(static_cast<Mask>(raw));
  }
  return SetFamily::from_unsorted(std::move(ms));
}

}  // namespace

nlohmann::json topology_to_json(const Topology& t) {
  json j;
  j["n"] = t.ground_size();
  j["opens"] = t.opens().masks();
  return j;
}

Topology topology_from_json(const nlohmann::json& j) {
  const int n = read_ground_size(j);
  if (!j.contains("opens"))
    throw Error(Errc::parse_error, "topology record needs \"opens\"");
  return make_topology(n, read_mask_array(j["opens"], n, "opens"),
                       MakeMode::validate);
}

nlohmann::json filtration_to_json(const FiltrationSeq& seq) {
  json j;
  j["n"] = seq.ground_size();
  json stages = json::array();
  for (const Topology& t : seq.stages()) stages.push_back(t.opens().masks());
  j["stages"] = std::move(stages);
  j["target"] = seq.has_target() ? json(seq.effective_target().opens().masks())
                                 : json(nullptr);
  return j;
}

FiltrationSeq filtration_from_json(const nlohmann::json& j) {
  const int n = read_ground_size(j);
  if (!j.contains("stages") || !j["stages"].is_array() || j["stages"].empty())
    throw Error(Errc::parse_error,
                "filtration record needs a non-empty \"stages\" array");
  std::vector<Topology> stages;
  stages.reserve(j["stages"].size());
  for (const json& s : j["stages"])
    stages.push_back(
        make_topology(n, read_mask_array(s, n, "stage"), MakeMode::validate));
  std::optional<Topology> target;
  if (j.contains("target") && !j["target"].is_null())
    target = make_topology(n, read_mask_array(j["target"], n, "target"),
                           MakeMode::validate);
  return FiltrationSeq(std::move(stages), std::move(target));
}

nlohmann::json partition_to_json(const Partition& p) {
  json blocks = json::array();
  for (int b = 0; b < p.block_count(); ++b)
    blocks.push_back(mask_to_points(p.block_mask(b)));
  json j;
  j["n"] = p.ground_size();
  j["blocks"] = std::move(blocks);
  return j;
}

Partition partition_from_json(const nlohmann::json& j) {
  const int n = read_ground_size(j);
  if (!j.contains("blocks") || !j["blocks"].is_array())
    throw Error(Errc::parse_error, "partition record needs \"blocks\"");
  std::vector<std::vector<int>> blocks;
  for (const json& b : j["blocks"]) {
    if (!b.is_array())
      throw Error(Errc::parse_error, "each block must be an array of points");
    std::vector<int> pts;
    for (const json& v : b) {
      if (!v.is_number_integer())
        throw Error(Errc::parse_error, "block points must be integers");
      pts.push_back(v.get<int>());
    }
    blocks.push_back(std::move(pts));
  }
  return Partition::from_blocks(n, blocks);
}

}  // namespace topofilt
