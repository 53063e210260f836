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

#ifndef TOPOFILT_ERRORS_HPP_
#define TOPOFILT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace topofilt {

/// Error categories surfaced by the library. Every throwing operation
/// documents which of these it can raise.
enum class Errc {
  not_a_topology,
  mask_out_of_range,
  mixed_ground_sizes,
  not_a_preorder,
  not_subtopology,
  alpha_out_of_range,
  ground_size_too_large,
  cache_corrupt,
  io_failure,
  unknown_property,
  unknown_query,
  empty_list,
  invalid_partition,
  parse_error,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace topofilt

#endif  // TOPOFILT_ERRORS_HPP_
