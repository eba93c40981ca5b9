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

#include "validate_util.hpp"

#include <utility>

namespace asymnet {

void ValidationReport::add(ViolationKind kind, std::string message,
                           Atom witness) {
  violations.push_back(
      Violation{kind, std::move(message), std::move(witness)});
}

const char* violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::overlap: return "overlap";
    case ViolationKind::uncovered: return "uncovered";
    case ViolationKind::type_mismatch: return "type-mismatch";
    case ViolationKind::missing_distribution: return "missing-distribution";
    case ViolationKind::dependent_in_parents: return "dependent-in-parents";
    case ViolationKind::context_overlap: return "context-overlap";
    case ViolationKind::target_mismatch: return "target-mismatch";
    case ViolationKind::bad_weights: return "bad-weights";
    case ViolationKind::unknown_state: return "unknown-state";
    case ViolationKind::unknown_space: return "unknown-space";
    case ViolationKind::duplicate_parent: return "duplicate-parent";
  }
  return "unknown";
}

std::string to_text(const ValidationReport& report) {
  std::string out;
  for (const Violation& v : report.violations) {
    out += "  ";
    out += violation_kind_name(v.kind);
    out += ": ";
    out += v.message;
    out += '\n';
  }
  if (!report.coverage_checked) {
    out += "  coverage: not checked (parent state space exceeds the atom limit)\n";
  }
  return out;
}

ValidationError::ValidationError(const std::string& message,
                                 ValidationReport report)
    : Error(ErrorCode::invalid_model, message + "\n" + to_text(report)),
      report_(std::move(report)) {}

namespace internal {

std::optional<AtomSet> check_brace(const std::string& label,
                                   const Element& brace,
                                   const std::set<VariableType>& parent_set,
                                   const StateSpaceTable& spaces,
                                   ValidationReport& report,
                                   std::size_t max_atoms) {
  if (!brace.is_pure_brace()) {
    report.add(ViolationKind::type_mismatch, label + " is not a pure brace");
    return std::nullopt;
  }
  const std::set<VariableType>& brace_types = brace.type().brace_types;
  if (brace_types != parent_set) {
    report.add(ViolationKind::type_mismatch,
               label + " ranges over " + describe(brace_types) +
                   ", expected exactly " + describe(parent_set));
    return std::nullopt;
  }
  AtomSet atom_set = atoms(brace, max_atoms);
  // Flag each unknown (variable, state) pair once.
  std::set<std::pair<VariableType, std::string>> flagged;
  for (const Atom& atom : atom_set.atoms) {
    for (std::size_t i = 0; i < atom_set.variables.size(); ++i) {
      const StateSpace* space = spaces.find(atom_set.variables[i]);
      if (space == nullptr) continue;  // reported by the caller
      if (!space->index_of(atom[i]) &&
          flagged.emplace(atom_set.variables[i], atom[i]).second) {
        report.add(ViolationKind::unknown_state,
                   label + " uses state '" + atom[i] + "', which is not in " +
                       atom_set.variables[i].display(),
                   atom);
      }
    }
  }
  return atom_set;
}

void check_disjoint(const std::vector<std::string>& labels,
                    const std::vector<std::optional<AtomSet>>& sets,
                    ValidationReport& report) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!sets[i]) continue;
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!sets[j]) continue;
      const std::set<Atom>& a = sets[i]->atoms;
      const std::set<Atom>& b = sets[j]->atoms;
      const std::set<Atom>& small = a.size() <= b.size() ? a : b;
      const std::set<Atom>& large = a.size() <= b.size() ? b : a;
      for (const Atom& atom : small) {
        if (large.count(atom)) {
          report.add(ViolationKind::overlap,
                     labels[i] + " and " + labels[j] + " share atom " +
                         to_string(atom),
                     atom);
          break;
        }
      }
    }
  }
}

CoverageScan scan_coverage(const std::vector<VariableType>& sorted_parents,
                           const StateSpaceTable& spaces,
                           const std::set<Atom>& covered,
                           std::size_t max_atoms, std::size_t sample_cap) {
  CoverageScan scan;
  std::vector<const StateSpace*> parent_spaces;
  std::size_t total = 1;
  for (const VariableType& v : sorted_parents) {
    const StateSpace* space = spaces.find(v);
    if (space == nullptr || space->states.empty()) return scan;
    parent_spaces.push_back(space);
    if (space->states.size() > max_atoms / total) return scan;  // too large
    total *= space->states.size();
  }
  scan.checked = true;
  scan.total = total;
  // Odometer over the parent spaces.
  std::vector<std::size_t> idx(sorted_parents.size(), 0);
  Atom atom(sorted_parents.size());
  for (std::size_t row = 0; row < total; ++row) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      atom[i] = parent_spaces[i]->states[idx[i]];
    }
    if (!covered.count(atom)) {
      ++scan.uncovered;
      if (scan.sample.size() < sample_cap) scan.sample.push_back(atom);
    }
    for (std::size_t i = idx.size(); i-- > 0;) {
      if (++idx[i] < parent_spaces[i]->states.size()) break;
      idx[i] = 0;
    }
  }
  return scan;
}

void check_distribution(const std::string& label, const TypedDistribution& d,
                        const VariableType& dependent,
                        const StateSpaceTable& spaces,
                        ValidationReport& report) {
  if (!(d.target == dependent)) {
    report.add(ViolationKind::target_mismatch,
               label + " targets " + d.target.display() +
                   ", expected the dependent variable " + dependent.display());
    return;
  }
  const StateSpace* space = spaces.find(dependent);
  if (space != nullptr && d.weights.size() != space->states.size()) {
    report.add(ViolationKind::bad_weights,
               label + " has " + std::to_string(d.weights.size()) +
                   " weight(s) for " + std::to_string(space->states.size()) +
                   " state(s) of " + dependent.display());
    return;
  }
  double total = 0.0;
  for (double w : d.weights) {
    if (w < 0.0) {
      report.add(ViolationKind::bad_weights, label + " has a negative weight");
      return;
    }
    total += w;
  }
  if (!(total > 0.0)) {
    report.add(ViolationKind::bad_weights,
               label + " has nonpositive total weight");
  }
}

}  // namespace internal
}  // namespace asymnet
