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

/// @file network.hpp
/// @brief Asymmetry networks: partition-shaped conditional distributions.
///
/// An asymmetry network replaces the row-per-assignment layout of a CPT with
/// a partition of the parent state space: each partition element is a brace,
/// and a total function assigns one typed distribution per element.  A
/// subnetwork keeps only some of the elements and may carry an explicit
/// conditioning context, which is how independently authored fragments of a
/// larger table are written down before being combined.

#ifndef ASYMNET_NETWORK_HPP_
#define ASYMNET_NETWORK_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asymnet/element.hpp"
#include "asymnet/factored.hpp"
#include "asymnet/validation.hpp"

namespace asymnet {

struct PartitionElement {
  std::string name;
  Element brace;  // pure brace over exactly the partition's parents
};

/// A named partition of the joint state space of the parent variables.
struct ConditioningPartition {
  std::string name;
  std::vector<VariableType> parents;  // declaration order
  std::vector<PartitionElement> elements;
};

/// A full asymmetry network: the partition must cover the parent state space
/// and every element carries a distribution over the dependent variable.
struct AsymmetryNetwork {
  std::string name;
  VariableType dependent;
  ConditioningPartition partition;
  std::map<std::size_t, TypedDistribution> mapping;  // element index -> dist
};

/// A subnetwork: any subset of a network's elements, so coverage is not
/// required.  The optional context records the conditioning circumstances
/// under which this fragment applies.
struct AsymmetrySubnetwork : AsymmetryNetwork {
  std::optional<Element> context;
};

/// Checks that every element is a pure brace over exactly the parents with
/// known states, and that the elements are pairwise disjoint.  When
/// require_cover is set, also checks that the union of the elements is the
/// whole parent state space; that check degrades to report.coverage_checked
/// == false once the space exceeds max_atoms.
ValidationReport validate_partition(const ConditioningPartition& partition,
                                    const StateSpaceTable& spaces,
                                    bool require_cover,
                                    std::size_t max_atoms = kDefaultAtomLimit);

/// validate_partition with coverage, plus: the mapping is total with
/// distributions targeting the dependent and matching its state count, and
/// the dependent does not occur among the parents.
ValidationReport validate_network(const AsymmetryNetwork& n,
                                  const StateSpaceTable& spaces,
                                  std::size_t max_atoms = kDefaultAtomLimit);

/// Like validate_network but without the coverage requirement, and with the
/// context (when present) checked to be a pure brace over variables disjoint
/// from both the parents and the dependent.
ValidationReport validate_subnetwork(const AsymmetrySubnetwork& s,
                                     const StateSpaceTable& spaces,
                                     std::size_t max_atoms = kDefaultAtomLimit);

/// True iff every element of sub matches an element of net with the same
/// atom set and a distribution equal within tol.  Networks over different
/// dependents or parent sets are never in the subnetwork relation.
bool is_subnetwork(const AsymmetrySubnetwork& sub, const AsymmetryNetwork& net,
                   double tol = kDefaultTol,
                   std::size_t max_atoms = kDefaultAtomLimit);

/// The subnetwork keeping exactly the elements at the given indices.
AsymmetrySubnetwork restrict_network(const AsymmetryNetwork& net,
                                     const std::vector<std::size_t>& indices);

/// Converts a valid network into its factored-CPT form, one asymmetry
/// mapping per partition element.  Throws ValidationError when invalid.
FactoredCPT network_to_factored(const AsymmetryNetwork& n,
                                const StateSpaceTable& spaces,
                                std::size_t max_atoms = kDefaultAtomLimit);

/// Subnetwork variant.  With lift set, the result is additionally crossed
/// with the context brace (when present), making the context explicit;
/// otherwise the context stays implicit and the parents are unchanged.
FactoredCPT network_to_factored(const AsymmetrySubnetwork& s,
                                const StateSpaceTable& spaces, bool lift,
                                std::size_t max_atoms = kDefaultAtomLimit);

}  // namespace asymnet

#endif  // ASYMNET_NETWORK_HPP_
