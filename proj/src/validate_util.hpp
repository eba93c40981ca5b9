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

// Internal helpers shared by the partition and factored-CPT validators.

#ifndef ASYMNET_SRC_VALIDATE_UTIL_HPP_
#define ASYMNET_SRC_VALIDATE_UTIL_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "asymnet/element.hpp"
#include "asymnet/validation.hpp"

namespace asymnet::internal {

// Checks one brace against the expected parent set: pure, over exactly the
// parents, all states known.  Appends violations under the given label and
// returns the enumerated atoms, or nullopt when the brace is unusable.
// Atom-limit overruns propagate as errors.
std::optional<AtomSet> check_brace(const std::string& label,
                                   const Element& brace,
                                   const std::set<VariableType>& parent_set,
                                   const StateSpaceTable& spaces,
                                   ValidationReport& report,
                                   std::size_t max_atoms);

// Reports the first shared atom of every overlapping pair among the element
// atom sets (entries may be nullopt for braces that failed check_brace).
void check_disjoint(const std::vector<std::string>& labels,
                    const std::vector<std::optional<AtomSet>>& sets,
                    ValidationReport& report);

struct CoverageScan {
  bool checked = false;
  std::size_t total = 0;      // |parent state space|, meaningful when checked
  std::size_t uncovered = 0;
  std::vector<Atom> sample;   // up to sample_cap uncovered atoms
};

// Walks the full parent state space (sorted variable order, declaration-order
// states) and counts atoms missing from `covered`.  Gives up without walking
// (checked == false) when the space exceeds max_atoms or a parent space is
// missing.
CoverageScan scan_coverage(const std::vector<VariableType>& sorted_parents,
                           const StateSpaceTable& spaces,
                           const std::set<Atom>& covered,
                           std::size_t max_atoms,
                           std::size_t sample_cap = 10);

// Validates one distribution against the dependent variable: target, weight
// count, nonnegativity, positive total.
void check_distribution(const std::string& label, const TypedDistribution& d,
                        const VariableType& dependent,
                        const StateSpaceTable& spaces,
                        ValidationReport& report);

}  // namespace asymnet::internal

#endif  // ASYMNET_SRC_VALIDATE_UTIL_HPP_
