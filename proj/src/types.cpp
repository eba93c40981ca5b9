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

#include "asymnet/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace asymnet {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::type_mismatch: return "type-mismatch";
    case ErrorCode::cross_distribution_operand: return "cross-distribution-operand";
    case ErrorCode::cross_mapping_mapping: return "cross-mapping-mapping";
    case ErrorCode::cross_overlapping_types: return "cross-overlapping-types";
    case ErrorCode::amap_overlapping_type: return "amap-overlapping-type";
    case ErrorCode::malformed_element: return "malformed-element";
    case ErrorCode::degenerate_distribution: return "degenerate-distribution";
    case ErrorCode::variable_set_mismatch: return "variable-set-mismatch";
    case ErrorCode::atom_limit_exceeded: return "atom-limit-exceeded";
    case ErrorCode::unknown_state_space: return "unknown-state-space";
    case ErrorCode::parent_not_subset: return "parent-not-subset";
    case ErrorCode::dependent_mismatch: return "dependent-mismatch";
    case ErrorCode::combine_conflict: return "combine-conflict";
    case ErrorCode::incomplete_coverage: return "incomplete-coverage";
    case ErrorCode::invalid_model: return "invalid-model";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::parse_failed: return "parse-failed";
    case ErrorCode::io_error: return "io-error";
  }
  return "unknown";
}

VariableType::VariableType(std::string name, AttributeBindings attributes)
    : name_(std::move(name)), attributes_(std::move(attributes)) {
  if (name_.empty()) {
    throw Error(ErrorCode::invalid_argument, "variable type name must be nonempty");
  }
  std::sort(attributes_.begin(), attributes_.end());
  for (std::size_t i = 1; i < attributes_.size(); ++i) {
    if (attributes_[i - 1].first == attributes_[i].first) {
      throw Error(ErrorCode::invalid_argument,
                  "duplicate attribute '" + attributes_[i].first +
                      "' on variable type " + name_);
    }
  }
}

std::string VariableType::display() const {
  if (attributes_.empty()) return name_;
  std::string out = name_;
  out += '(';
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (i != 0) out += ',';
    out += attributes_[i].first;
    if (attributes_[i].second) {
      out += '=';
      out += *attributes_[i].second;
    }
  }
  out += ')';
  return out;
}

std::optional<std::size_t> StateSpace::index_of(std::string_view state) const {
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i] == state) return i;
  }
  return std::nullopt;
}

void StateSpaceTable::add(StateSpace space) {
  auto key = space.variable;
  auto [it, inserted] = spaces_.emplace(std::move(key), std::move(space));
  if (!inserted) {
    throw Error(ErrorCode::invalid_argument,
                "state space for " + it->first.display() + " already registered");
  }
}

const StateSpace* StateSpaceTable::find(const VariableType& variable) const {
  auto it = spaces_.find(variable);
  return it == spaces_.end() ? nullptr : &it->second;
}

const StateSpace& StateSpaceTable::at(const VariableType& variable) const {
  const StateSpace* space = find(variable);
  if (space == nullptr) {
    throw Error(ErrorCode::unknown_state_space,
                "no state space registered for " + variable.display());
  }
  return *space;
}

bool StateSpaceTable::contains(const VariableType& variable) const {
  return spaces_.count(variable) != 0;
}

bool variable_types_disjoint(const std::set<VariableType>& a,
                             const std::set<VariableType>& b) {
  const std::set<VariableType>& small = a.size() <= b.size() ? a : b;
  const std::set<VariableType>& large = a.size() <= b.size() ? b : a;
  for (const VariableType& v : small) {
    if (large.count(v)) return false;
  }
  return true;
}

double total_weight(const TypedDistribution& d) {
  double total = 0.0;
  for (double w : d.weights) total += w;
  return total;
}

TypedDistribution normalize(const TypedDistribution& d) {
  for (double w : d.weights) {
    if (w < 0.0 || std::isnan(w)) {
      throw Error(ErrorCode::degenerate_distribution,
                  "distribution " + (d.name.empty() ? d.target.display() : d.name) +
                      " has a negative weight");
    }
  }
  double total = total_weight(d);
  if (!(total > 0.0) || std::isinf(total)) {
    throw Error(ErrorCode::degenerate_distribution,
                "distribution " + (d.name.empty() ? d.target.display() : d.name) +
                    " has nonpositive total weight");
  }
  TypedDistribution out = d;
  // Rescale until the sum is exactly one or dividing no longer changes any
  // component.  Both exit states are fixpoints, which makes normalize
  // idempotent under exact comparison.
  for (int iter = 0; iter < 100; ++iter) {
    double s = 0.0;
    for (double w : out.weights) s += w;
    if (s == 1.0) break;
    bool changed = false;
    for (double& w : out.weights) {
      double next = w / s;
      if (next != w) {
        w = next;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return out;
}

bool distributions_equal(const TypedDistribution& a, const TypedDistribution& b,
                         double tol) {
  if (!(a.target == b.target)) return false;
  if (a.weights.size() != b.weights.size()) return false;
  TypedDistribution na = normalize(a);
  TypedDistribution nb = normalize(b);
  for (std::size_t i = 0; i < na.weights.size(); ++i) {
    if (std::abs(na.weights[i] - nb.weights[i]) > tol) return false;
  }
  return true;
}

bool distributions_identical(const TypedDistribution& a,
                             const TypedDistribution& b) {
  return a.target == b.target && a.weights == b.weights;
}

std::string describe(const std::set<VariableType>& types) {
  std::string out = "{";
  bool first = true;
  for (const VariableType& v : types) {
    if (!first) out += ", ";
    out += v.display();
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace asymnet
