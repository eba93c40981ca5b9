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

/// @file factored.hpp
/// @brief Conditional probability tables factored into asymmetry mappings.
///
/// A factored CPT is a list of (brace, distribution) pairs over a fixed
/// parent set.  The braces must be pairwise disjoint but need not cover the
/// whole parent state space, so partial knowledge is representable.  The
/// operations here grow a factored CPT toward a full table: lifting it into
/// extra context variables, aligning two CPTs onto a common parent set,
/// combining independently specified fragments, and finally expanding to a
/// dense table.

#ifndef ASYMNET_FACTORED_HPP_
#define ASYMNET_FACTORED_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "asymnet/element.hpp"
#include "asymnet/validation.hpp"

namespace asymnet {

struct FactoredMapping {
  std::string name;  // element name for serialization; may be empty
  Element brace;     // pure brace over exactly the parents' types
  TypedDistribution dist;
};

struct FactoredCPT {
  std::string name;
  VariableType dependent;
  std::vector<VariableType> parents;  // sorted
  std::vector<FactoredMapping> mappings;
};

struct DenseCPT {
  VariableType dependent;
  std::vector<VariableType> parents;         // sorted
  std::vector<std::string> dependent_states; // column order of the rows
  std::map<Atom, std::vector<double>> rows;  // normalized, keyed by parent atom
};

struct CompressionStats {
  std::size_t dense_rows = 0;       // |parent state space|
  std::size_t mapping_count = 0;
  std::size_t distinct_distributions = 0;
  std::size_t covered_atoms = 0;
  double ratio = 0.0;               // dense_rows / mapping_count
};

struct CombinePolicy {
  enum class Kind {
    error_on_overlap,  // any shared atom is a conflict
    merge_if_equal,    // shared atoms allowed when the distributions agree
  };
  Kind kind = Kind::error_on_overlap;
  double tol = kDefaultTol;
};

/// Raised when combine finds an atom covered by both inputs with
/// disagreeing distributions (or covered at all, under error_on_overlap).
class ConflictError : public Error {
 public:
  ConflictError(const std::string& message, Atom witness,
                TypedDistribution left, TypedDistribution right);

  const Atom& witness() const noexcept { return witness_; }
  const TypedDistribution& left() const noexcept { return left_; }
  const TypedDistribution& right() const noexcept { return right_; }

 private:
  Atom witness_;
  TypedDistribution left_;
  TypedDistribution right_;
};

/// Raised by expand_to_cpt when the factored CPT is not exhaustive.
class CoverageError : public Error {
 public:
  CoverageError(const std::string& message, std::vector<Atom> sample,
                std::size_t uncovered_count);

  const std::vector<Atom>& sample() const noexcept { return sample_; }
  std::size_t uncovered_count() const noexcept { return uncovered_count_; }

 private:
  std::vector<Atom> sample_;
  std::size_t uncovered_count_;
};

/// Checks pairwise disjointness of the mapping braces, that every brace
/// ranges over exactly the parents with states drawn from their spaces, and
/// that every distribution targets the dependent with a well-formed weight
/// vector.  Coverage gaps are reported as information, not violations.
ValidationReport validate_factored(const FactoredCPT& f,
                                   const StateSpaceTable& spaces,
                                   std::size_t max_atoms = kDefaultAtomLimit);

/// Crosses every mapping brace with the given context brace, making an
/// implicit conditioning context explicit.  The context variables must be
/// disjoint from the parents and from the dependent.  A neutral context
/// returns the input unchanged.
FactoredCPT lift_context(const FactoredCPT& f, const Element& context);

/// Extends the parent set to target_parents by crossing every brace with the
/// whole element of each added variable.  The current parents must be a
/// subset of the target and every added variable needs a state space.
FactoredCPT align_parents(const FactoredCPT& f,
                          const std::vector<VariableType>& target_parents,
                          const StateSpaceTable& spaces);

/// Combines two factored CPTs for the same dependent variable.  Both are
/// aligned onto the union of their parent sets first.  Under
/// error_on_overlap any atom covered by both inputs raises ConflictError;
/// under merge_if_equal an overlap is accepted iff the two distributions
/// agree within tol, and each agreed atom is kept exactly once so the result
/// is again disjoint.  The resulting atom-to-distribution map does not
/// depend on argument order.
FactoredCPT combine(const FactoredCPT& a, const FactoredCPT& b,
                    const CombinePolicy& policy, const StateSpaceTable& spaces,
                    std::size_t max_atoms = kDefaultAtomLimit);

/// Expands an exhaustive factored CPT into a dense table with one normalized
/// row per parent atom.  Throws CoverageError (listing up to ten missing
/// atoms) when coverage is incomplete and ValidationError when the input is
/// otherwise invalid.
DenseCPT expand_to_cpt(const FactoredCPT& f, const StateSpaceTable& spaces,
                       std::size_t max_atoms = kDefaultAtomLimit);

CompressionStats compression_stats(const FactoredCPT& f,
                                   const StateSpaceTable& spaces,
                                   std::size_t max_atoms = kDefaultAtomLimit);

/// The ground semantics of a factored CPT: parent atom -> distribution over
/// the sorted parent list.  Throws on overlapping mappings.
std::map<Atom, TypedDistribution> atom_map(
    const FactoredCPT& f, std::size_t max_atoms = kDefaultAtomLimit);

/// Sorted copy with duplicates removed.
std::vector<VariableType> sorted_types(std::vector<VariableType> types);

}  // namespace asymnet

#endif  // ASYMNET_FACTORED_HPP_
