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

/// @file model.hpp
/// @brief The .acpt model language: parsing, canonical text, dense export.
///
/// A model document declares variables, named contexts, distributions,
/// networks and factored CPTs in any order; references are resolved in a
/// second pass.  The grammar, informally:
///
///   document     := decl*
///   decl         := variable | context | distribution | network | factored
///   variable     := "variable" varref "{" NAME ("," NAME)* "}"
///   context      := "context" NAME "=" brace
///   distribution := "distribution" NAME "for" varref
///                       "{" NAME ":" NUMBER ("," NAME ":" NUMBER)* "}"
///   network      := "network" NAME "for" varref "given" varref-list
///                       ("context" brace)? "{" element* "}"
///   factored     := "factored" NAME "for" varref "given" varref-list
///                       "{" element* "}"
///   element      := "element" NAME "=" brace "->" NAME
///   brace        := term ("+" term)*
///   term         := factor ("x" factor)*
///   factor       := varref "=" NAME | "(" brace ")"
///   varref       := NAME ("(" attr ("," attr)* ")")?
///   attr         := NAME ("=" NAME)?
///
/// "+" is collect and binds looser than "x" (cross); the Unicode operator
/// glyphs for the two are accepted as input aliases.  "#" starts a comment
/// running to the end of the line.  A network declaration without a context
/// clause claims full coverage of its parent space; one with a context is a
/// subnetwork and may be partial.

#ifndef ASYMNET_MODEL_HPP_
#define ASYMNET_MODEL_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "asymnet/factored.hpp"
#include "asymnet/network.hpp"

namespace asymnet {

struct NamedBrace {
  std::string name;
  Element brace;
};

struct ModelDocument {
  std::vector<StateSpace> variables;
  std::vector<NamedBrace> contexts;
  std::vector<TypedDistribution> distributions;
  std::vector<AsymmetrySubnetwork> networks;  // no context => full network
  std::vector<FactoredCPT> factored;

  StateSpaceTable spaces() const;
};

enum class DiagnosticCategory {
  lexical,
  syntax,
  unresolved_reference,
  duplicate_name,
  semantic,
};

const char* category_name(DiagnosticCategory category);

struct Diagnostic {
  DiagnosticCategory category = DiagnosticCategory::syntax;
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
  std::string message;
  std::vector<std::string> expected;  // candidate tokens, syntax errors only

  /// "file:line:col: category: message (expected ...)".
  std::string format(std::string_view filename = "") const;
};

class ParseError : public Error {
 public:
  explicit ParseError(Diagnostic diagnostic);

  const Diagnostic& diagnostic() const noexcept { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

/// Parses a model document.  Throws ParseError with a located diagnostic on
/// the first problem found; filename only decorates messages.
ModelDocument parse(std::string_view text, std::string_view filename = "");

/// Canonical text: header comment, declarations sorted by kind and name,
/// braces in canonical form, weights printed exactly.  Parsing the result
/// yields a semantically equal document, and serializing that reproduces the
/// same bytes.
std::string serialize(const ModelDocument& doc,
                      std::size_t max_atoms = kDefaultAtomLimit);

/// Tab-separated dense table: header line, then one row per parent atom in
/// lexicographic atom order with probabilities to 12 significant digits.
std::string export_dense(const DenseCPT& cpt);

/// Semantic comparison: variables, contexts, distributions, networks and
/// factored CPTs matched by name and compared at the atom-map level.
/// Returns human-readable difference lines; empty means equal.
std::vector<std::string> document_differences(
    const ModelDocument& a, const ModelDocument& b, double tol = kDefaultTol,
    std::size_t max_atoms = kDefaultAtomLimit);

}  // namespace asymnet

#endif  // ASYMNET_MODEL_HPP_
