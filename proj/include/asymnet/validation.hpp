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

#ifndef ASYMNET_VALIDATION_HPP_
#define ASYMNET_VALIDATION_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "asymnet/element.hpp"

namespace asymnet {

enum class ViolationKind {
  overlap,               // two partition elements or mappings share an atom
  uncovered,             // the parent state space is not fully covered
  type_mismatch,         // brace does not range over exactly the parents
  missing_distribution,  // partition element without a distribution
  dependent_in_parents,
  context_overlap,       // context variable collides with parents or dependent
  target_mismatch,       // distribution target differs from the dependent
  bad_weights,           // wrong weight count, negative or zero-total weights
  unknown_state,         // brace state outside the variable's space
  unknown_space,         // parent without a registered state space
  duplicate_parent,
};

const char* violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
  Atom witness;  // empty when no single atom pins the problem down
};

struct ValidationReport {
  std::vector<Violation> violations;

  // Coverage checking degrades to "not checked" instead of silently passing
  // when the parent state space exceeds the atom limit.
  bool coverage_checked = true;

  // Number of parent atoms no element covers, with a small sample.  For
  // partial objects (subnetworks, factored CPTs) this is informational.
  std::size_t uncovered_count = 0;
  std::vector<Atom> uncovered_sample;

  bool valid() const { return violations.empty(); }

  void add(ViolationKind kind, std::string message, Atom witness = {});
};

/// Multi-line human-readable rendering, one violation per line.
std::string to_text(const ValidationReport& report);

/// Raised by operations that require a valid model and received an invalid
/// one; carries the offending report.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& message, ValidationReport report);

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace asymnet

#endif  // ASYMNET_VALIDATION_HPP_
