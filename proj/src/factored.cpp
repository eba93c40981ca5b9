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

#include "asymnet/factored.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "validate_util.hpp"

namespace asymnet {

ConflictError::ConflictError(const std::string& message, Atom witness,
                             TypedDistribution left, TypedDistribution right)
    : Error(ErrorCode::combine_conflict, message),
      witness_(std::move(witness)),
      left_(std::move(left)),
      right_(std::move(right)) {}

CoverageError::CoverageError(const std::string& message,
                             std::vector<Atom> sample,
                             std::size_t uncovered_count)
    : Error(ErrorCode::incomplete_coverage, message),
      sample_(std::move(sample)),
      uncovered_count_(uncovered_count) {}

std::vector<VariableType> sorted_types(std::vector<VariableType> types) {
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  return types;
}

namespace {

std::string mapping_label(const FactoredCPT& f, std::size_t index) {
  const FactoredMapping& m = f.mappings[index];
  if (!m.name.empty()) return "mapping " + m.name;
  return "mapping #" + std::to_string(index + 1);
}

}  // namespace

ValidationReport validate_factored(const FactoredCPT& f,
                                   const StateSpaceTable& spaces,
                                   std::size_t max_atoms) {
  ValidationReport report;
  std::set<VariableType> parent_set(f.parents.begin(), f.parents.end());
  if (parent_set.size() != f.parents.size()) {
    report.add(ViolationKind::duplicate_parent,
               "parent list of " + f.name + " mentions a variable twice");
  }
  if (parent_set.count(f.dependent)) {
    report.add(ViolationKind::dependent_in_parents,
               "dependent variable " + f.dependent.display() +
                   " occurs among the parents");
  }
  for (const VariableType& parent : f.parents) {
    if (!spaces.contains(parent)) {
      report.add(ViolationKind::unknown_space,
                 "no state space for parent " + parent.display());
    }
  }
  if (!spaces.contains(f.dependent)) {
    report.add(ViolationKind::unknown_space,
               "no state space for the dependent variable " +
                   f.dependent.display());
  }

  std::vector<std::string> labels;
  std::vector<std::optional<AtomSet>> sets;
  for (std::size_t i = 0; i < f.mappings.size(); ++i) {
    labels.push_back(mapping_label(f, i));
    sets.push_back(internal::check_brace(labels.back(), f.mappings[i].brace,
                                         parent_set, spaces, report,
                                         max_atoms));
    internal::check_distribution("distribution of " + labels.back(),
                                 f.mappings[i].dist, f.dependent, spaces,
                                 report);
  }
  internal::check_disjoint(labels, sets, report);

  // Informational coverage census; a factored CPT need not be exhaustive.
  bool all_usable =
      std::all_of(sets.begin(), sets.end(),
                  [](const std::optional<AtomSet>& s) { return s.has_value(); });
  if (all_usable) {
    std::set<Atom> covered;
    for (const std::optional<AtomSet>& s : sets) {
      covered.insert(s->atoms.begin(), s->atoms.end());
    }
    std::vector<VariableType> sorted_parents(parent_set.begin(),
                                             parent_set.end());
    internal::CoverageScan scan = internal::scan_coverage(
        sorted_parents, spaces, covered, max_atoms);
    report.coverage_checked = scan.checked;
    if (scan.checked) {
      report.uncovered_count = scan.uncovered;
      report.uncovered_sample = scan.sample;
    }
  } else {
    report.coverage_checked = false;
  }
  return report;
}

FactoredCPT lift_context(const FactoredCPT& f, const Element& context) {
  if (context.is_neutral()) return f;
  if (!context.is_pure_brace()) {
    throw Error(ErrorCode::invalid_argument,
                "lift_context requires a pure context brace");
  }
  const std::set<VariableType>& context_types = context.type().brace_types;
  if (context_types.count(f.dependent)) {
    throw Error(ErrorCode::amap_overlapping_type,
                "context mentions the dependent variable " +
                    f.dependent.display());
  }
  for (const VariableType& parent : f.parents) {
    if (context_types.count(parent)) {
      throw Error(ErrorCode::cross_overlapping_types,
                  "context mentions parent " + parent.display());
    }
  }
  FactoredCPT out;
  out.name = f.name;
  out.dependent = f.dependent;
  std::vector<VariableType> parents = f.parents;
  parents.insert(parents.end(), context_types.begin(), context_types.end());
  out.parents = sorted_types(std::move(parents));
  for (const FactoredMapping& m : f.mappings) {
    out.mappings.push_back(
        FactoredMapping{m.name, cross(m.brace, context), m.dist});
  }
  return out;
}

FactoredCPT align_parents(const FactoredCPT& f,
                          const std::vector<VariableType>& target_parents,
                          const StateSpaceTable& spaces) {
  std::set<VariableType> current(f.parents.begin(), f.parents.end());
  std::set<VariableType> target(target_parents.begin(), target_parents.end());
  if (!std::includes(target.begin(), target.end(), current.begin(),
                     current.end())) {
    throw Error(ErrorCode::parent_not_subset,
                "align_parents: target parents " + describe(target) +
                    " do not contain the current parents " +
                    describe(current));
  }
  std::set<VariableType> added;
  for (const VariableType& v : target) {
    if (!current.count(v)) added.insert(v);
  }
  FactoredCPT out;
  out.name = f.name;
  out.dependent = f.dependent;
  out.parents = std::vector<VariableType>(target.begin(), target.end());
  if (added.empty()) {
    out.mappings = f.mappings;
    return out;
  }
  if (added.count(f.dependent)) {
    throw Error(ErrorCode::invalid_argument,
                "align_parents: cannot add the dependent variable " +
                    f.dependent.display() + " as a parent");
  }
  Element extension = Element::neutral();
  for (const VariableType& v : added) {
    extension = cross(extension, whole_element(v, spaces.at(v)));
  }
  for (const FactoredMapping& m : f.mappings) {
    out.mappings.push_back(
        FactoredMapping{m.name, cross(m.brace, extension), m.dist});
  }
  return out;
}

namespace {

// Deterministic total order on distributions, used to resolve agreed
// overlaps the same way regardless of argument order.
bool canonical_less(const TypedDistribution& a, const TypedDistribution& b) {
  if (a.target != b.target) return a.target < b.target;
  if (a.weights != b.weights) return a.weights < b.weights;
  return a.name < b.name;
}

void require_valid(const FactoredCPT& f, const StateSpaceTable& spaces,
                   std::size_t max_atoms) {
  ValidationReport report = validate_factored(f, spaces, max_atoms);
  if (!report.valid()) {
    throw ValidationError("factored CPT " + f.name + " is not valid", report);
  }
}

}  // namespace

FactoredCPT combine(const FactoredCPT& a, const FactoredCPT& b,
                    const CombinePolicy& policy, const StateSpaceTable& spaces,
                    std::size_t max_atoms) {
  if (!(a.dependent == b.dependent)) {
    throw Error(ErrorCode::dependent_mismatch,
                "combine: dependents differ (" + a.dependent.display() +
                    " vs " + b.dependent.display() + ")");
  }
  require_valid(a, spaces, max_atoms);
  require_valid(b, spaces, max_atoms);

  std::vector<VariableType> target = a.parents;
  target.insert(target.end(), b.parents.begin(), b.parents.end());
  target = sorted_types(std::move(target));
  FactoredCPT left = align_parents(a, target, spaces);
  FactoredCPT right = align_parents(b, target, spaces);

  std::vector<AtomSet> left_sets;
  for (const FactoredMapping& m : left.mappings) {
    left_sets.push_back(atoms(m.brace, max_atoms));
  }
  std::map<Atom, std::size_t> left_owner;
  for (std::size_t i = 0; i < left_sets.size(); ++i) {
    for (const Atom& atom : left_sets[i].atoms) {
      left_owner.emplace(atom, i);
    }
  }

  // Atoms each side must give up (merge policy only; under error_on_overlap
  // the first shared atom aborts the combination).
  std::vector<std::set<Atom>> drop_left(left.mappings.size());
  std::vector<AtomSet> right_sets;
  std::vector<std::set<Atom>> drop_right(right.mappings.size());
  for (std::size_t j = 0; j < right.mappings.size(); ++j) {
    right_sets.push_back(atoms(right.mappings[j].brace, max_atoms));
    for (const Atom& atom : right_sets[j].atoms) {
      auto owner = left_owner.find(atom);
      if (owner == left_owner.end()) continue;
      const TypedDistribution& dl = left.mappings[owner->second].dist;
      const TypedDistribution& dr = right.mappings[j].dist;
      if (policy.kind == CombinePolicy::Kind::error_on_overlap) {
        throw ConflictError(
            "combine: atom " + to_string(atom) + " is covered by both " +
                a.name + " and " + b.name,
            atom, dl, dr);
      }
      if (!distributions_equal(dl, dr, policy.tol)) {
        throw ConflictError(
            "combine: atom " + to_string(atom) +
                " carries disagreeing distributions in " + a.name + " and " +
                b.name,
            atom, dl, dr);
      }
      if (canonical_less(dr, dl)) {
        drop_left[owner->second].insert(atom);
      } else {
        drop_right[j].insert(atom);
      }
    }
  }

  FactoredCPT out;
  out.name = a.name;
  out.dependent = a.dependent;
  out.parents = target;
  auto keep = [&](const FactoredCPT& side, std::size_t index,
                  const AtomSet& atom_set, const std::set<Atom>& drop) {
    const FactoredMapping& m = side.mappings[index];
    if (drop.empty()) {
      out.mappings.push_back(m);
      return;
    }
    AtomSet remaining = atom_set;
    for (const Atom& atom : drop) remaining.atoms.erase(atom);
    if (remaining.atoms.empty()) return;
    out.mappings.push_back(
        FactoredMapping{m.name, brace_from_atoms(remaining), m.dist});
  };
  for (std::size_t i = 0; i < left.mappings.size(); ++i) {
    keep(left, i, left_sets[i], drop_left[i]);
  }
  for (std::size_t j = 0; j < right.mappings.size(); ++j) {
    keep(right, j, right_sets[j], drop_right[j]);
  }

  // Disambiguate mapping names so the result serializes cleanly.
  std::set<std::string> used;
  for (FactoredMapping& m : out.mappings) {
    if (m.name.empty()) continue;
    std::string candidate = m.name;
    int suffix = 2;
    while (!used.insert(candidate).second) {
      candidate = m.name + "_" + std::to_string(suffix++);
    }
    m.name = candidate;
  }
  return out;
}

std::map<Atom, TypedDistribution> atom_map(const FactoredCPT& f,
                                           std::size_t max_atoms) {
  std::map<Atom, TypedDistribution> out;
  for (const FactoredMapping& m : f.mappings) {
    AtomSet atom_set = atoms(m.brace, max_atoms);
    for (const Atom& atom : atom_set.atoms) {
      auto [it, inserted] = out.emplace(atom, m.dist);
      if (!inserted) {
        throw Error(ErrorCode::invalid_model,
                    "factored CPT " + f.name + " covers atom " +
                        to_string(atom) + " twice");
      }
    }
  }
  return out;
}

DenseCPT expand_to_cpt(const FactoredCPT& f, const StateSpaceTable& spaces,
                       std::size_t max_atoms) {
  require_valid(f, spaces, max_atoms);
  const StateSpace& dependent_space = spaces.at(f.dependent);

  std::vector<VariableType> sorted_parents = sorted_types(f.parents);
  std::vector<const StateSpace*> parent_spaces;
  std::size_t total = 1;
  for (const VariableType& v : sorted_parents) {
    const StateSpace& space = spaces.at(v);
    if (space.states.empty() || space.states.size() > max_atoms / total) {
      throw Error(ErrorCode::atom_limit_exceeded,
                  "expand_to_cpt: parent state space exceeds the limit of " +
                      std::to_string(max_atoms) + " rows");
    }
    parent_spaces.push_back(&space);
    total *= space.states.size();
  }

  // Normalize once per mapping; every covered row then shares the exact same
  // probability vector.
  std::vector<std::vector<double>> normalized;
  normalized.reserve(f.mappings.size());
  for (const FactoredMapping& m : f.mappings) {
    normalized.push_back(normalize(m.dist).weights);
  }
  std::map<Atom, std::size_t> cover;
  for (std::size_t i = 0; i < f.mappings.size(); ++i) {
    AtomSet atom_set = atoms(f.mappings[i].brace, max_atoms);
    for (const Atom& atom : atom_set.atoms) {
      cover.emplace(atom, i);
    }
  }

  DenseCPT dense;
  dense.dependent = f.dependent;
  dense.parents = sorted_parents;
  dense.dependent_states = dependent_space.states;

  std::size_t uncovered = 0;
  std::vector<Atom> sample;
  std::vector<std::size_t> idx(sorted_parents.size(), 0);
  Atom atom(sorted_parents.size());
  for (std::size_t row = 0; row < total; ++row) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      atom[i] = parent_spaces[i]->states[idx[i]];
    }
    auto it = cover.find(atom);
    if (it == cover.end()) {
      ++uncovered;
      if (sample.size() < 10) sample.push_back(atom);
    } else if (uncovered == 0) {
      dense.rows.emplace(atom, normalized[it->second]);
    }
    for (std::size_t i = idx.size(); i-- > 0;) {
      if (++idx[i] < parent_spaces[i]->states.size()) break;
      idx[i] = 0;
    }
  }
  if (uncovered > 0) {
    std::string message = "factored CPT " + f.name + " leaves " +
                          std::to_string(uncovered) + " of " +
                          std::to_string(total) + " parent atoms uncovered:";
    for (const Atom& missing : sample) {
      message += ' ';
      message += to_string(missing);
    }
    if (sample.size() < uncovered) message += " ...";
    throw CoverageError(std::move(message), std::move(sample), uncovered);
  }
  return dense;
}

CompressionStats compression_stats(const FactoredCPT& f,
                                   const StateSpaceTable& spaces,
                                   std::size_t max_atoms) {
  CompressionStats stats;
  std::vector<VariableType> sorted_parents = sorted_types(f.parents);
  std::size_t total = 1;
  for (const VariableType& v : sorted_parents) {
    const StateSpace& space = spaces.at(v);
    if (!space.states.empty() &&
        total > std::numeric_limits<std::size_t>::max() / space.states.size()) {
      throw Error(ErrorCode::atom_limit_exceeded,
                  "compression_stats: parent state space size overflows");
    }
    total *= space.states.size();
  }
  stats.dense_rows = total;
  stats.mapping_count = f.mappings.size();

  std::set<Atom> covered;
  for (const FactoredMapping& m : f.mappings) {
    AtomSet atom_set = atoms(m.brace, max_atoms);
    covered.insert(atom_set.atoms.begin(), atom_set.atoms.end());
    if (covered.size() > max_atoms) {
      throw Error(ErrorCode::atom_limit_exceeded,
                  "compression_stats: covered atoms exceed the limit of " +
                      std::to_string(max_atoms));
    }
  }
  stats.covered_atoms = covered.size();

  // Count equivalence classes of the mapped distributions.
  std::vector<const TypedDistribution*> representatives;
  for (const FactoredMapping& m : f.mappings) {
    bool known = false;
    for (const TypedDistribution* r : representatives) {
      if (distributions_equal(*r, m.dist)) {
        known = true;
        break;
      }
    }
    if (!known) representatives.push_back(&m.dist);
  }
  stats.distinct_distributions = representatives.size();
  stats.ratio = stats.mapping_count == 0
                    ? 0.0
                    : static_cast<double>(stats.dense_rows) /
                          static_cast<double>(stats.mapping_count);
  return stats;
}

}  // namespace asymnet
