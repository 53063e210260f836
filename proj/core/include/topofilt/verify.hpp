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

#ifndef TOPOFILT_VERIFY_HPP_
#define TOPOFILT_VERIFY_HPP_

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "topofilt/enumeration.hpp"
#include "topofilt/filtration.hpp"
#include "topofilt/topology.hpp"

namespace topofilt::verify {

enum class Outcome { pass, fail, trivialized };

const char* outcome_name(Outcome o) noexcept;

/// Result of one exhaustive property check. The checked statements are
/// theorems, so a fail outcome indicates an implementation defect, not a
/// mathematical discovery; the report says so in its note. A fail carries a
/// fully serialized counterexample, replayable through the referenced
/// operations bit for bit.
struct VerificationReport {
  std::string property_id;
  std::string universe;
  std::uint64_t instances_checked = 0;
  Outcome outcome = Outcome::pass;
  nlohmann::json counterexample;  // null unless fail
  std::string note;
  double elapsed_seconds = 0.0;
};

struct CheckOptions {
  /// Maximum chain length for the universes that enumerate filtrations.
  unsigned budget = 3;
  /// Worker parallelism; instance spaces are sharded on the outermost index
  /// and partial results merge deterministically (first counterexample in
  /// scan order wins).
  int jobs = 1;
  BorelConvention convention = BorelConvention::difference;
};

/// All property ids, in suite order.
const std::vector<std::string>& property_ids();

/// Exhaustive-scan ground-size cap for one property (2 or 3).
/// Throws Errc::unknown_property.
int property_ground_cap(const std::string& property_id);

/// Runs one property check at ground size n. Deterministic given
/// (property_id, n, options). Throws Errc::unknown_property and
/// Errc::ground_size_too_large (n above the property's cap).
VerificationReport check(const std::string& property_id, int n,
                         const CheckOptions& options = {});

/// The whole suite, each property at min(n, its cap).
std::vector<VerificationReport> check_all(int n,
                                          const CheckOptions& options = {});

/// Hypothesis-necessity exploration. Reports are deterministic; findings are
/// structured JSON.
struct ExplorationReport {
  std::string query;
  std::string universe;
  std::uint64_t instances_checked = 0;
  nlohmann::json findings;
  double elapsed_seconds = 0.0;
};

const std::vector<std::string>& query_ids();

/// UNREACHED_PAIRS (n <= 4): pairs whose slowest iteration fixes below tau,
/// annotated with the termination hypotheses each pair fails.
/// WEAK_NOT_FULL (n <= 3): first chain passing the weak condition but not
/// the full one, or none.
/// SOLID_GAP (n <= 3): sets alpha-solid but not (alpha+1)-solid across
/// enumerated filtrations.
/// Throws Errc::unknown_query / Errc::ground_size_too_large.
ExplorationReport explore(const std::string& query, int n,
                          const CheckOptions& options = {});

/// Deterministic JSON (elapsed deliberately omitted so byte-identical
/// reruns compare equal).
nlohmann::json report_to_json(const VerificationReport& r);
nlohmann::json report_to_json(const ExplorationReport& r);

}  // namespace topofilt::verify

#endif  // TOPOFILT_VERIFY_HPP_
