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

/// @file element.hpp
/// @brief Context algebra over conditioning contexts.
///
/// The value domain is a small term algebra.  A simple brace names one state
/// of one variable.  Braces combine with two operators: collect aggregates
/// alternatives of the same element type (set union at the atom level) and
/// cross pairs contexts of disjoint element types (Cartesian product at the
/// atom level).  An asymmetry mapping attaches a typed distribution to a
/// brace.  A distinguished neutral element is the identity of both operators.
///
/// Elements are immutable and cheap to copy; subterms are shared.  Every
/// element carries its element type, computed once on construction, so the
/// well-formedness rules (disjoint cross operands, uniform collect operands,
/// distribution type outside the brace type) hold for every value that can
/// exist.  Semantic questions -- equality, disjointness, canonical form --
/// are all answered by enumerating ground atoms, which is exact for the
/// finite state spaces considered here.

#ifndef ASYMNET_ELEMENT_HPP_
#define ASYMNET_ELEMENT_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "asymnet/types.hpp"

namespace asymnet {

/// Enumeration guard: operations that materialize atom sets refuse to produce
/// more than this many tuples unless told otherwise.
inline constexpr std::size_t kDefaultAtomLimit = 1'000'000;

/// The type of an element: the set of variable types its braces range over,
/// plus the target type of the attached distribution when one is present.
/// A pure brace has distribution_type unset; an asymmetry mapping has it set;
/// a typed distribution alone has empty brace_types and distribution_type set.
struct ElementType {
  std::set<VariableType> brace_types;
  std::optional<VariableType> distribution_type;

  bool operator==(const ElementType&) const = default;
};

class Element {
 public:
  enum class Kind {
    neutral,       // identity of collect and cross
    simple,        // one variable-value pair
    collection,    // collect of two or more operands of one element type
    crossing,      // cross of two or more operands with disjoint types
    distribution,  // typed distribution leaf
    mapping,       // brace with an attached distribution
  };

  /// Default-constructs the neutral element.
  Element();

  static Element neutral();
  static Element simple(VariableType variable, std::string state);
  static Element distribution(TypedDistribution d);

  Kind kind() const noexcept;
  bool is_neutral() const noexcept;

  /// True when no distribution occurs anywhere in the term.
  bool is_pure_brace() const noexcept;

  /// Cached element type.  Valid by construction.
  const ElementType& type() const noexcept;

  const VariableType& variable() const;        // simple only
  const std::string& state() const;            // simple only
  const std::vector<Element>& operands() const;  // collection / crossing only
  const TypedDistribution& dist() const;       // distribution / mapping only
  const Element& brace() const;                // mapping only

  /// Structural equality (same tree shape, values compared exactly).
  bool operator==(const Element& other) const;

 private:
  struct Node;
  explicit Element(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;

  friend Element collect(const Element& a, const Element& b);
  friend Element cross(const Element& a, const Element& b);
  friend Element amap(const Element& brace, const TypedDistribution& d);
};

/// An assignment of one state to each variable of a joint context.  States
/// are listed in the order of AtomSet::variables.
using Atom = std::vector<std::string>;

/// The ground semantics of an element: the set of parent-state tuples it
/// denotes, over a sorted variable list.  For an asymmetry mapping the atoms
/// additionally carry the distribution attached to each of them.
struct AtomSet {
  std::vector<VariableType> variables;  // sorted
  std::set<Atom> atoms;
  std::optional<std::map<Atom, TypedDistribution>> mapped;

  bool operator==(const AtomSet& other) const;
};

/// Returns the element type; identical to Element::type().
ElementType element_type_of(const Element& e);

/// Aggregates two elements of the same element type.  Either operand may be
/// neutral, in which case the other is returned unchanged.  Throws
/// type_mismatch otherwise when the types differ.
Element collect(const Element& a, const Element& b);

/// Pairs two elements whose type footprints are disjoint.  Typed
/// distributions are not valid operands, two mappings cannot be crossed, and
/// overlapping types are rejected; each case has its own error code.  A
/// mapping operand is normalized outward: the result is again a mapping whose
/// brace is the crossing.
Element cross(const Element& a, const Element& b);

/// Attaches a distribution to a pure brace, forming an asymmetry mapping.
/// Throws amap_overlapping_type when the distribution's target occurs among
/// the brace's variable types.
Element amap(const Element& brace, const TypedDistribution& d);

/// The brace collecting every state of one variable.
Element whole_element(const VariableType& variable, const StateSpace& space);

/// Enumerates the ground atoms of a pure brace, a mapping, or a collection of
/// mappings.  Throws atom_limit_exceeded once more than max_atoms tuples
/// would materialize.
AtomSet atoms(const Element& e, std::size_t max_atoms = kDefaultAtomLimit);

/// True iff both pure braces have the same element type and denote the same
/// atom set.
bool braces_equal(const Element& a, const Element& b,
                  std::size_t max_atoms = kDefaultAtomLimit);

/// True iff the two pure braces share no atom.  Requires the same variable
/// set; throws variable_set_mismatch otherwise.
bool braces_disjoint(const Element& a, const Element& b,
                     std::size_t max_atoms = kDefaultAtomLimit);

/// Rewrites an element into normal form: a collection of crossings of simple
/// braces, operands sorted lexicographically.  A mapping canonicalizes its
/// brace and keeps its distribution.  Idempotent; two braces are semantically
/// equal exactly when their canonical forms are structurally equal.
Element canonicalize(const Element& e,
                     std::size_t max_atoms = kDefaultAtomLimit);

/// Rebuilds the canonical brace denoting exactly the given atoms.
Element brace_from_atoms(const AtomSet& atom_set);

/// Debug rendering of the term structure, e.g. "[x1 (+) x2] (x) y1".
std::string to_string(const Element& e);

/// "(x1, y4)" rendering of one atom, for messages.
std::string to_string(const Atom& atom);

}  // namespace asymnet

#endif  // ASYMNET_ELEMENT_HPP_
