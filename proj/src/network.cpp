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

#include "asymnet/network.hpp"

#include <algorithm>
#include <utility>

#include "validate_util.hpp"

namespace asymnet {

namespace {

std::string element_label(const ConditioningPartition& partition,
                          std::size_t index) {
  const PartitionElement& e = partition.elements[index];
  if (!e.name.empty()) return "element " + e.name;
  return "element #" + std::to_string(index + 1);
}

// Shared checks for full networks and subnetworks.
ValidationReport validate_common(const AsymmetryNetwork& n,
                                 const StateSpaceTable& spaces,
                                 bool require_cover, std::size_t max_atoms) {
  ValidationReport report =
      validate_partition(n.partition, spaces, require_cover, max_atoms);
  for (const VariableType& parent : n.partition.parents) {
    if (parent == n.dependent) {
      report.add(ViolationKind::dependent_in_parents,
                 "dependent variable " + n.dependent.display() +
                     " occurs among the parents");
      break;
    }
  }
  if (!spaces.contains(n.dependent)) {
    report.add(ViolationKind::unknown_space,
               "no state space for the dependent variable " +
                   n.dependent.display());
  }
  for (std::size_t i = 0; i < n.partition.elements.size(); ++i) {
    auto it = n.mapping.find(i);
    if (it == n.mapping.end()) {
      report.add(ViolationKind::missing_distribution,
                 element_label(n.partition, i) + " has no distribution");
      continue;
    }
    internal::check_distribution("distribution for " +
                                     element_label(n.partition, i),
                                 it->second, n.dependent, spaces, report);
  }
  for (const auto& [index, dist] : n.mapping) {
    if (index >= n.partition.elements.size()) {
      report.add(ViolationKind::missing_distribution,
                 "mapping entry #" + std::to_string(index) +
                     " refers to no partition element");
    }
  }
  return report;
}

}  // namespace

ValidationReport validate_partition(const ConditioningPartition& partition,
                                    const StateSpaceTable& spaces,
                                    bool require_cover,
                                    std::size_t max_atoms) {
  ValidationReport report;
  std::set<VariableType> parent_set(partition.parents.begin(),
                                    partition.parents.end());
  if (parent_set.size() != partition.parents.size()) {
    report.add(ViolationKind::duplicate_parent,
               "parent list of " + partition.name +
                   " mentions a variable twice");
  }
  for (const VariableType& parent : partition.parents) {
    if (!spaces.contains(parent)) {
      report.add(ViolationKind::unknown_space,
                 "no state space for parent " + parent.display());
    }
  }

  std::vector<std::string> labels;
  std::vector<std::optional<AtomSet>> sets;
  for (std::size_t i = 0; i < partition.elements.size(); ++i) {
    labels.push_back(element_label(partition, i));
    sets.push_back(internal::check_brace(labels.back(),
                                         partition.elements[i].brace,
                                         parent_set, spaces, report,
                                         max_atoms));
  }
  internal::check_disjoint(labels, sets, report);

  if (require_cover) {
    bool all_usable =
        std::all_of(sets.begin(), sets.end(),
                    [](const std::optional<AtomSet>& s) { return s.has_value(); });
    if (!all_usable) {
      // Unusable braces make any coverage verdict meaningless.
      report.coverage_checked = false;
      return report;
    }
    std::set<Atom> covered;
    for (const std::optional<AtomSet>& s : sets) {
      covered.insert(s->atoms.begin(), s->atoms.end());
    }
    std::vector<VariableType> sorted_parents(parent_set.begin(),
                                             parent_set.end());
    internal::CoverageScan scan = internal::scan_coverage(
        sorted_parents, spaces, covered, max_atoms);
    report.coverage_checked = scan.checked;
    if (scan.checked && scan.uncovered > 0) {
      report.uncovered_count = scan.uncovered;
      report.uncovered_sample = scan.sample;
      report.add(ViolationKind::uncovered,
                 partition.name + " leaves " + std::to_string(scan.uncovered) +
                     " of " + std::to_string(scan.total) +
                     " parent atoms uncovered, e.g. " +
                     to_string(scan.sample.front()),
                 scan.sample.front());
    }
  }
  return report;
}

ValidationReport validate_network(const AsymmetryNetwork& n,
                                  const StateSpaceTable& spaces,
                                  std::size_t max_atoms) {
  return validate_common(n, spaces, /*require_cover=*/true, max_atoms);
}

ValidationReport validate_subnetwork(const AsymmetrySubnetwork& s,
                                     const StateSpaceTable& spaces,
                                     std::size_t max_atoms) {
  ValidationReport report =
      validate_common(s, spaces, /*require_cover=*/false, max_atoms);
  if (s.context && !s.context->is_neutral()) {
    if (!s.context->is_pure_brace()) {
      report.add(ViolationKind::context_overlap,
                 "context of " + s.name + " is not a pure brace");
      return report;
    }
    const std::set<VariableType>& context_types =
        s.context->type().brace_types;
    for (const VariableType& parent : s.partition.parents) {
      if (context_types.count(parent)) {
        report.add(ViolationKind::context_overlap,
                   "context of " + s.name + " mentions parent " +
                       parent.display());
      }
    }
    if (context_types.count(s.dependent)) {
      report.add(ViolationKind::context_overlap,
                 "context of " + s.name + " mentions the dependent variable " +
                     s.dependent.display());
    }
    AtomSet context_atoms = atoms(*s.context, max_atoms);
    for (const Atom& atom : context_atoms.atoms) {
      for (std::size_t i = 0; i < context_atoms.variables.size(); ++i) {
        const StateSpace* space = spaces.find(context_atoms.variables[i]);
        if (space == nullptr) {
          report.add(ViolationKind::unknown_space,
                     "no state space for context variable " +
                         context_atoms.variables[i].display());
        } else if (!space->index_of(atom[i])) {
          report.add(ViolationKind::unknown_state,
                     "context of " + s.name + " uses state '" + atom[i] +
                         "', which is not in " +
                         context_atoms.variables[i].display(),
                     atom);
        }
      }
      break;  // one atom suffices: all atoms draw from the same simple braces
    }
  }
  return report;
}

bool is_subnetwork(const AsymmetrySubnetwork& sub, const AsymmetryNetwork& net,
                   double tol, std::size_t max_atoms) {
  if (!(sub.dependent == net.dependent)) return false;
  std::set<VariableType> sub_parents(sub.partition.parents.begin(),
                                     sub.partition.parents.end());
  std::set<VariableType> net_parents(net.partition.parents.begin(),
                                     net.partition.parents.end());
  if (sub_parents != net_parents) return false;

  std::vector<AtomSet> net_sets;
  net_sets.reserve(net.partition.elements.size());
  for (const PartitionElement& e : net.partition.elements) {
    net_sets.push_back(atoms(e.brace, max_atoms));
  }
  for (std::size_t i = 0; i < sub.partition.elements.size(); ++i) {
    AtomSet sub_set = atoms(sub.partition.elements[i].brace, max_atoms);
    auto sub_dist = sub.mapping.find(i);
    if (sub_dist == sub.mapping.end()) return false;
    bool matched = false;
    for (std::size_t j = 0; j < net_sets.size(); ++j) {
      if (net_sets[j].variables != sub_set.variables ||
          net_sets[j].atoms != sub_set.atoms) {
        continue;
      }
      auto net_dist = net.mapping.find(j);
      if (net_dist == net.mapping.end()) return false;
      matched = distributions_equal(sub_dist->second, net_dist->second, tol);
      break;  // disjointness makes the atom-set match unique
    }
    if (!matched) return false;
  }
  return true;
}

AsymmetrySubnetwork restrict_network(const AsymmetryNetwork& net,
                                     const std::vector<std::size_t>& indices) {
  AsymmetrySubnetwork out;
  out.name = net.name;
  out.dependent = net.dependent;
  out.partition.name = net.partition.name;
  out.partition.parents = net.partition.parents;
  for (std::size_t index : indices) {
    if (index >= net.partition.elements.size()) {
      throw Error(ErrorCode::invalid_argument,
                  "restrict_network: element index " + std::to_string(index) +
                      " out of range");
    }
    auto dist = net.mapping.find(index);
    std::size_t new_index = out.partition.elements.size();
    out.partition.elements.push_back(net.partition.elements[index]);
    if (dist != net.mapping.end()) {
      out.mapping.emplace(new_index, dist->second);
    }
  }
  return out;
}

namespace {

FactoredCPT factored_form(const AsymmetryNetwork& n) {
  FactoredCPT f;
  f.name = n.name;
  f.dependent = n.dependent;
  f.parents = sorted_types(n.partition.parents);
  for (std::size_t i = 0; i < n.partition.elements.size(); ++i) {
    const PartitionElement& e = n.partition.elements[i];
    f.mappings.push_back(FactoredMapping{e.name, e.brace, n.mapping.at(i)});
  }
  return f;
}

}  // namespace

FactoredCPT network_to_factored(const AsymmetryNetwork& n,
                                const StateSpaceTable& spaces,
                                std::size_t max_atoms) {
  ValidationReport report = validate_network(n, spaces, max_atoms);
  if (!report.valid()) {
    throw ValidationError("network " + n.name + " is not valid", report);
  }
  return factored_form(n);
}

FactoredCPT network_to_factored(const AsymmetrySubnetwork& s,
                                const StateSpaceTable& spaces, bool lift,
                                std::size_t max_atoms) {
  ValidationReport report = validate_subnetwork(s, spaces, max_atoms);
  if (!report.valid()) {
    throw ValidationError("subnetwork " + s.name + " is not valid", report);
  }
  FactoredCPT f = factored_form(s);
  if (lift && s.context && !s.context->is_neutral()) {
    f = lift_context(f, *s.context);
  }
  return f;
}

}  // namespace asymnet
