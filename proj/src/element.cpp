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

#include "asymnet/element.hpp"

#include <algorithm>
#include <utility>

namespace asymnet {

struct Element::Node {
  Kind kind = Kind::neutral;
  ElementType type;
  bool pure = true;

  // simple
  VariableType variable;
  std::string state;

  // collection / crossing operands; for a mapping, operands[0] is the brace
  std::vector<Element> operands;

  // distribution leaf / mapping
  std::optional<TypedDistribution> dist;
};

Element::Element() {
  static const std::shared_ptr<const Node> node = std::make_shared<Node>();
  node_ = node;
}

Element Element::neutral() { return Element(); }

Element Element::simple(VariableType variable, std::string state) {
  if (state.empty()) {
    throw Error(ErrorCode::invalid_argument, "state name must be nonempty");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::simple;
  node->type.brace_types.insert(variable);
  node->variable = std::move(variable);
  node->state = std::move(state);
  return Element(std::move(node));
}

Element Element::distribution(TypedDistribution d) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::distribution;
  node->type.distribution_type = d.target;
  node->pure = false;
  node->dist = std::move(d);
  return Element(std::move(node));
}

Element::Kind Element::kind() const noexcept { return node_->kind; }

bool Element::is_neutral() const noexcept { return node_->kind == Kind::neutral; }

bool Element::is_pure_brace() const noexcept { return node_->pure; }

const ElementType& Element::type() const noexcept { return node_->type; }

const VariableType& Element::variable() const {
  if (node_->kind != Kind::simple) {
    throw Error(ErrorCode::invalid_argument, "variable(): not a simple brace");
  }
  return node_->variable;
}

const std::string& Element::state() const {
  if (node_->kind != Kind::simple) {
    throw Error(ErrorCode::invalid_argument, "state(): not a simple brace");
  }
  return node_->state;
}

const std::vector<Element>& Element::operands() const {
  if (node_->kind != Kind::collection && node_->kind != Kind::crossing) {
    throw Error(ErrorCode::invalid_argument,
                "operands(): not a collection or crossing");
  }
  return node_->operands;
}

const TypedDistribution& Element::dist() const {
  if (!node_->dist) {
    throw Error(ErrorCode::invalid_argument,
                "dist(): element carries no distribution");
  }
  return *node_->dist;
}

const Element& Element::brace() const {
  if (node_->kind != Kind::mapping) {
    throw Error(ErrorCode::invalid_argument, "brace(): not an asymmetry mapping");
  }
  return node_->operands[0];
}

bool Element::operator==(const Element& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::neutral:
      return true;
    case Kind::simple:
      return a.variable == b.variable && a.state == b.state;
    case Kind::distribution:
      return a.dist->name == b.dist->name &&
             distributions_identical(*a.dist, *b.dist);
    case Kind::mapping:
      if (!(a.dist->name == b.dist->name &&
            distributions_identical(*a.dist, *b.dist))) {
        return false;
      }
      return a.operands[0] == b.operands[0];
    case Kind::collection:
    case Kind::crossing:
      return a.operands == b.operands;
  }
  return false;
}

ElementType element_type_of(const Element& e) { return e.type(); }

bool AtomSet::operator==(const AtomSet& other) const {
  if (variables != other.variables || atoms != other.atoms) return false;
  if (mapped.has_value() != other.mapped.has_value()) return false;
  if (!mapped) return true;
  if (mapped->size() != other.mapped->size()) return false;
  auto it = other.mapped->begin();
  for (const auto& [atom, dist] : *mapped) {
    if (it->first != atom || !distributions_identical(it->second, dist)) {
      return false;
    }
    ++it;
  }
  return true;
}

namespace {

// Type footprint: brace types plus the distribution type when present.
std::set<VariableType> footprint(const ElementType& t) {
  std::set<VariableType> out = t.brace_types;
  if (t.distribution_type) out.insert(*t.distribution_type);
  return out;
}

void flatten_into(const Element& e, Element::Kind node_kind,
                  std::vector<Element>& out) {
  if (e.kind() == node_kind) {
    const auto& ops = e.operands();
    out.insert(out.end(), ops.begin(), ops.end());
  } else {
    out.push_back(e);
  }
}

std::string describe_type(const ElementType& t) {
  std::string out = describe(t.brace_types);
  if (t.distribution_type) {
    out = "(" + out + ", " + t.distribution_type->display() + ")";
  }
  return out;
}

}  // namespace

Element collect(const Element& a, const Element& b) {
  if (a.is_neutral()) return b;
  if (b.is_neutral()) return a;
  if (!(a.type() == b.type())) {
    throw Error(ErrorCode::type_mismatch,
                "collect requires equal element types, got " +
                    describe_type(a.type()) + " and " + describe_type(b.type()));
  }
  auto node = std::make_shared<Element::Node>();
  node->kind = Element::Kind::collection;
  node->type = a.type();
  flatten_into(a, Element::Kind::collection, node->operands);
  flatten_into(b, Element::Kind::collection, node->operands);
  node->pure = a.is_pure_brace() && b.is_pure_brace();
  return Element(std::move(node));
}

Element cross(const Element& a, const Element& b) {
  if (a.is_neutral()) return b;
  if (b.is_neutral()) return a;
  if (a.kind() == Element::Kind::distribution ||
      b.kind() == Element::Kind::distribution) {
    throw Error(ErrorCode::cross_distribution_operand,
                "cross is not defined for a typed distribution operand");
  }
  const ElementType& ta = a.type();
  const ElementType& tb = b.type();
  if (ta.distribution_type && tb.distribution_type) {
    throw Error(ErrorCode::cross_mapping_mapping,
                "cross is not defined for two asymmetry mappings");
  }
  std::set<VariableType> fa = footprint(ta);
  std::set<VariableType> fb = footprint(tb);
  if (!variable_types_disjoint(fa, fb)) {
    std::set<VariableType> shared;
    for (const VariableType& v : fa) {
      if (fb.count(v)) shared.insert(v);
    }
    throw Error(ErrorCode::cross_overlapping_types,
                "cross requires disjoint element types; shared: " +
                    describe(shared));
  }

  // A mapping operand moves outward: the distribution ends up at the root.
  // A collection of mappings distributes over its operands first.
  if (ta.distribution_type || tb.distribution_type) {
    bool a_mapped = ta.distribution_type.has_value();
    const Element& m = a_mapped ? a : b;
    if (m.kind() == Element::Kind::collection) {
      Element out = Element::neutral();
      for (const Element& op : m.operands()) {
        out = collect(out, a_mapped ? cross(op, b) : cross(a, op));
      }
      return out;
    }
    // m is a mapping node
    const Element& inner = m.brace();
    Element crossed = a_mapped ? cross(inner, b) : cross(a, inner);
    return amap(crossed, m.dist());
  }

  auto node = std::make_shared<Element::Node>();
  node->kind = Element::Kind::crossing;
  node->type.brace_types = std::move(fa);
  node->type.brace_types.insert(fb.begin(), fb.end());
  flatten_into(a, Element::Kind::crossing, node->operands);
  flatten_into(b, Element::Kind::crossing, node->operands);
  return Element(std::move(node));
}

Element amap(const Element& brace, const TypedDistribution& d) {
  if (!brace.is_pure_brace()) {
    throw Error(ErrorCode::invalid_argument,
                "amap requires a pure brace on the left of the mapping");
  }
  if (brace.type().brace_types.count(d.target)) {
    throw Error(ErrorCode::amap_overlapping_type,
                "amap: distribution type " + d.target.display() +
                    " occurs in the brace type " +
                    describe(brace.type().brace_types));
  }
  auto node = std::make_shared<Element::Node>();
  node->kind = Element::Kind::mapping;
  node->type.brace_types = brace.type().brace_types;
  node->type.distribution_type = d.target;
  node->pure = false;
  node->operands.push_back(brace);
  node->dist = d;
  return Element(std::move(node));
}

Element whole_element(const VariableType& variable, const StateSpace& space) {
  if (!(space.variable == variable)) {
    throw Error(ErrorCode::invalid_argument,
                "whole_element: state space belongs to " +
                    space.variable.display() + ", not " + variable.display());
  }
  if (space.states.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "whole_element: " + variable.display() + " has no states");
  }
  Element out = Element::neutral();
  for (const std::string& state : space.states) {
    out = collect(out, Element::simple(variable, state));
  }
  return out;
}

namespace {

void check_atom_budget(std::size_t count, std::size_t max_atoms) {
  if (count > max_atoms) {
    throw Error(ErrorCode::atom_limit_exceeded,
                "atom enumeration exceeds the limit of " +
                    std::to_string(max_atoms) + " tuples");
  }
}

AtomSet cross_atom_sets(const AtomSet& a, const AtomSet& b,
                        std::size_t max_atoms) {
  AtomSet out;
  // Merge the sorted, disjoint variable lists, remembering where each output
  // position draws its state from.
  struct Origin {
    bool from_a;
    std::size_t index;
  };
  std::vector<Origin> origins;
  std::size_t ia = 0;
  std::size_t ib = 0;
  while (ia < a.variables.size() || ib < b.variables.size()) {
    bool take_a =
        ib >= b.variables.size() ||
        (ia < a.variables.size() && a.variables[ia] < b.variables[ib]);
    if (take_a) {
      out.variables.push_back(a.variables[ia]);
      origins.push_back({true, ia});
      ++ia;
    } else {
      out.variables.push_back(b.variables[ib]);
      origins.push_back({false, ib});
      ++ib;
    }
  }
  if (!a.atoms.empty() && b.atoms.size() > max_atoms / a.atoms.size()) {
    check_atom_budget(max_atoms + 1, max_atoms);
  }
  for (const Atom& ta : a.atoms) {
    for (const Atom& tb : b.atoms) {
      Atom tuple;
      tuple.reserve(origins.size());
      for (const Origin& o : origins) {
        tuple.push_back(o.from_a ? ta[o.index] : tb[o.index]);
      }
      out.atoms.insert(std::move(tuple));
    }
  }
  return out;
}

}  // namespace

AtomSet atoms(const Element& e, std::size_t max_atoms) {
  switch (e.kind()) {
    case Element::Kind::neutral:
      return AtomSet{};
    case Element::Kind::simple: {
      AtomSet out;
      out.variables.push_back(e.variable());
      out.atoms.insert(Atom{e.state()});
      return out;
    }
    case Element::Kind::distribution:
      throw Error(ErrorCode::invalid_argument,
                  "atoms: a typed distribution has no atom semantics");
    case Element::Kind::mapping: {
      AtomSet out = atoms(e.brace(), max_atoms);
      std::map<Atom, TypedDistribution> mapped;
      for (const Atom& atom : out.atoms) {
        mapped.emplace(atom, e.dist());
      }
      out.mapped = std::move(mapped);
      return out;
    }
    case Element::Kind::collection: {
      const std::vector<Element>& ops = e.operands();
      AtomSet out = atoms(ops[0], max_atoms);
      for (std::size_t i = 1; i < ops.size(); ++i) {
        AtomSet next = atoms(ops[i], max_atoms);
        out.atoms.insert(next.atoms.begin(), next.atoms.end());
        check_atom_budget(out.atoms.size(), max_atoms);
        if (out.mapped) {
          for (auto& [atom, dist] : *next.mapped) {
            auto [it, inserted] = out.mapped->emplace(atom, dist);
            if (!inserted && !distributions_identical(it->second, dist)) {
              throw Error(ErrorCode::malformed_element,
                          "collection maps atom " + to_string(atom) +
                              " to two different distributions");
            }
          }
        }
      }
      return out;
    }
    case Element::Kind::crossing: {
      const std::vector<Element>& ops = e.operands();
      AtomSet out = atoms(ops[0], max_atoms);
      for (std::size_t i = 1; i < ops.size(); ++i) {
        out = cross_atom_sets(out, atoms(ops[i], max_atoms), max_atoms);
      }
      return out;
    }
  }
  throw Error(ErrorCode::malformed_element, "atoms: unknown element kind");
}

bool braces_equal(const Element& a, const Element& b, std::size_t max_atoms) {
  if (!a.is_pure_brace() || !b.is_pure_brace()) {
    throw Error(ErrorCode::invalid_argument,
                "braces_equal is defined for pure braces only");
  }
  if (!(a.type() == b.type())) return false;
  return atoms(a, max_atoms).atoms == atoms(b, max_atoms).atoms;
}

bool braces_disjoint(const Element& a, const Element& b,
                     std::size_t max_atoms) {
  if (!a.is_pure_brace() || !b.is_pure_brace()) {
    throw Error(ErrorCode::invalid_argument,
                "braces_disjoint is defined for pure braces only");
  }
  if (!(a.type() == b.type())) {
    throw Error(ErrorCode::variable_set_mismatch,
                "braces_disjoint requires the same variable set, got " +
                    describe(a.type().brace_types) + " and " +
                    describe(b.type().brace_types));
  }
  AtomSet sa = atoms(a, max_atoms);
  AtomSet sb = atoms(b, max_atoms);
  const std::set<Atom>& small = sa.atoms.size() <= sb.atoms.size() ? sa.atoms : sb.atoms;
  const std::set<Atom>& large = sa.atoms.size() <= sb.atoms.size() ? sb.atoms : sa.atoms;
  for (const Atom& atom : small) {
    if (large.count(atom)) return false;
  }
  return true;
}

Element brace_from_atoms(const AtomSet& atom_set) {
  Element out = Element::neutral();
  for (const Atom& atom : atom_set.atoms) {
    Element tuple = Element::neutral();
    for (std::size_t i = 0; i < atom_set.variables.size(); ++i) {
      tuple = cross(tuple, Element::simple(atom_set.variables[i], atom[i]));
    }
    out = collect(out, tuple);
  }
  return out;
}

Element canonicalize(const Element& e, std::size_t max_atoms) {
  if (e.is_neutral()) return e;
  if (e.kind() == Element::Kind::mapping) {
    return amap(canonicalize(e.brace(), max_atoms), e.dist());
  }
  if (!e.is_pure_brace()) {
    throw Error(ErrorCode::invalid_argument,
                "canonicalize is defined for pure braces and mappings only");
  }
  return brace_from_atoms(atoms(e, max_atoms));
}

std::string to_string(const Element& e) {
  switch (e.kind()) {
    case Element::Kind::neutral:
      return "{}";
    case Element::Kind::simple:
      return e.variable().display() + "=" + e.state();
    case Element::Kind::distribution:
      return "<" + (e.dist().name.empty() ? e.dist().target.display()
                                          : e.dist().name) + ">";
    case Element::Kind::mapping:
      return "[" + to_string(e.brace()) + " -> " +
             (e.dist().name.empty() ? e.dist().target.display()
                                    : e.dist().name) + "]";
    case Element::Kind::collection:
    case Element::Kind::crossing: {
      const char* sep = e.kind() == Element::Kind::collection ? " (+) " : " (x) ";
      std::string out = "[";
      const std::vector<Element>& ops = e.operands();
      for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i != 0) out += sep;
        out += to_string(ops[i]);
      }
      out += "]";
      return out;
    }
  }
  return "?";
}

std::string to_string(const Atom& atom) {
  std::string out = "(";
  for (std::size_t i = 0; i < atom.size(); ++i) {
    if (i != 0) out += ", ";
    out += atom[i];
  }
  out += ")";
  return out;
}

}  // namespace asymnet
