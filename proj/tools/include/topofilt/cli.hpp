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

#ifndef TOPOFILT_CLI_HPP_
#define TOPOFILT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "topofilt/topology.hpp"

namespace topofilt::cli {

/// Parsed command line: exactly one subcommand plus its inputs and flags.
struct CommandConfig {
  std::string subcommand;
  std::string sigma_path, tau_path;      // distance, filtrate
  std::string filtration_path;           // tame, approx
  std::string partition_path;            // approx
  int n = 0;                             // enum, verify, explore
  unsigned alpha = 0;                    // tame
  std::string property_id;               // verify
  bool all_properties = false;           // verify
  std::string query;                     // explore
  std::string format = "text";           // text | json
  int jobs = 1;
  std::string cache_dir;                 // empty = no cache (TOPOFILT_CACHE
                                         // env supplies a default)
  unsigned max_stages = 0;               // filtrate budget; 0 = intrinsic
  unsigned chain_budget = 3;             // verify/explore chain length
  std::string borel_convention = "difference";
  bool print_catalog = false;            // enum
};

/// Exit codes: 0 success, 1 a verification fail outcome, 2 usage or input
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

/// Topology inputs are file paths or the built-in names
/// `discrete:N`, `indiscrete:N`, `sierpinski`.
Topology load_topology_arg(const std::string& arg);

}  // namespace topofilt::cli

#endif  // TOPOFILT_CLI_HPP_
