/*
 * Copyright 2026 the asymnet authors
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

#ifndef ASYMNET_ERRORS_HPP_
#define ASYMNET_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace asymnet {

// Every failure mode has its own code so callers (and the CLI exit-code
// mapping) can tell the forbidden algebra constructions apart.
enum class ErrorCode {
  type_mismatch,              // collect over different element types
  cross_distribution_operand, // cross applied to a typed distribution
  cross_mapping_mapping,      // cross applied to two asymmetry mappings
  cross_overlapping_types,    // cross over non-disjoint element types
  amap_overlapping_type,      // distribution type occurs in the brace type
  malformed_element,
  degenerate_distribution,    // nonpositive total weight or negative weight
  variable_set_mismatch,
  atom_limit_exceeded,        // resource guard on atom enumeration
  unknown_state_space,
  parent_not_subset,
  dependent_mismatch,
  combine_conflict,
  incomplete_coverage,
  invalid_model,
  invalid_argument,
  parse_failed,
  io_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace asymnet

#endif  // ASYMNET_ERRORS_HPP_
