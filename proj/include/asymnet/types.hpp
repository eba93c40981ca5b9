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

#ifndef ASYMNET_TYPES_HPP_
#define ASYMNET_TYPES_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asymnet/errors.hpp"

namespace asymnet {

/// Default tolerance for comparing normalized weight vectors.
inline constexpr double kDefaultTol = 1e-9;

/// Attribute name -> optional value, kept sorted by attribute name.  An unset
/// value stands for an identifying attribute that has not been bound yet.
using AttributeBindings =
    std::vector<std::pair<std::string, std::optional<std::string>>>;

/// A random-variable type: a name plus identifying-attribute bindings.  Two
/// instances of the same named variable with different bindings (for example
/// two time slices) are distinct types and may appear side by side in one
/// joint context.
class VariableType {
 public:
  VariableType() = default;
  explicit VariableType(std::string name, AttributeBindings attributes = {});

  const std::string& name() const { return name_; }
  const AttributeBindings& attributes() const { return attributes_; }

  /// "X", or "Activity(time=t1)" when attributes are bound.
  std::string display() const;

  auto operator<=>(const VariableType&) const = default;

 private:
  std::string name_;
  AttributeBindings attributes_;  // sorted by attribute name, names unique
};

/// The finite set of states a variable ranges over.  Declaration order is the
/// canonical enumeration order; weight vectors align with it.
struct StateSpace {
  VariableType variable;
  std::vector<std::string> states;

  std::optional<std::size_t> index_of(std::string_view state) const;
};

/// A typed distribution: nonnegative weights over the states of its target
/// variable.  Weights need not sum to one; ratios and frequencies are fine.
struct TypedDistribution {
  std::string name;
  VariableType target;
  std::vector<double> weights;
};

/// Lookup table from variable type to its state space.
class StateSpaceTable {
 public:
  /// Registers a space.  A duplicate variable type is an error.
  void add(StateSpace space);

  const StateSpace* find(const VariableType& variable) const;

  /// Like find() but throws ErrorCode::unknown_state_space when absent.
  const StateSpace& at(const VariableType& variable) const;

  bool contains(const VariableType& variable) const;
  std::size_t size() const { return spaces_.size(); }
  const std::map<VariableType, StateSpace>& entries() const { return spaces_; }

 private:
  std::map<VariableType, StateSpace> spaces_;
};

bool variable_types_disjoint(const std::set<VariableType>& a,
                             const std::set<VariableType>& b);

double total_weight(const TypedDistribution& d);

/// Scales the weights to sum to one.  Idempotent: renormalizing a normalized
/// distribution returns it unchanged.  Throws degenerate_distribution when the
/// total is not positive or any weight is negative.
TypedDistribution normalize(const TypedDistribution& d);

/// True iff the targets are equal and the normalized weight vectors differ by
/// at most tol in every component.  Names are metadata and do not participate.
bool distributions_equal(const TypedDistribution& a, const TypedDistribution& b,
                         double tol = kDefaultTol);

/// Raw value equality: same target and bitwise-equal weights.  Names ignored.
bool distributions_identical(const TypedDistribution& a,
                             const TypedDistribution& b);

/// "{X, Y}" style rendering of a type set, for messages.
std::string describe(const std::set<VariableType>& types);

}  // namespace asymnet

#endif  // ASYMNET_TYPES_HPP_
