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

// Canonical text output and document-level comparison.  serialize() is a
// fixpoint under parse(): parsing its output and serializing again reproduces
// the same bytes.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "asymnet/model.hpp"

namespace asymnet {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
  if (!head(s.front())) return false;
  for (char c : s.substr(1)) {
    if (!tail(c)) return false;
  }
  return true;
}

void require_identifier(std::string_view what, std::string_view s) {
  if (!is_identifier(s)) {
    throw Error(ErrorCode::invalid_model,
                std::string(what) + " '" + std::string(s) +
                    "' is not serializable; use letters, digits and '_'");
  }
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) {
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
  }
  return std::string(buf, ptr);
}

std::string render_varref(const VariableType& v) {
  require_identifier("variable name", v.name());
  for (const auto& [attr, value] : v.attributes()) {
    require_identifier("attribute name", attr);
    if (value) require_identifier("attribute value", *value);
  }
  return v.display();
}

std::string render_simple(const Element& e) {
  require_identifier("state name", e.state());
  return render_varref(e.variable()) + "=" + e.state();
}

// Renders a pure brace in canonical form.  Cross binds tighter than collect,
// so no parentheses are ever needed.
std::string render_brace(const Element& e, std::size_t max_atoms) {
  Element canon = canonicalize(e, max_atoms);
  if (canon.is_neutral()) {
    throw Error(ErrorCode::invalid_model,
                "the neutral element has no textual form");
  }
  auto render_term = [](const Element& term) {
    if (term.kind() == Element::Kind::simple) return render_simple(term);
    std::string out;
    for (std::size_t i = 0; i < term.operands().size(); ++i) {
      if (i != 0) out += " x ";
      out += render_simple(term.operands()[i]);
    }
    return out;
  };
  if (canon.kind() == Element::Kind::collection) {
    std::string out;
    for (std::size_t i = 0; i < canon.operands().size(); ++i) {
      if (i != 0) out += " + ";
      out += render_term(canon.operands()[i]);
    }
    return out;
  }
  return render_term(canon);
}

// Assigns every distribution a unique document-level name; identical content
// under an already-claimed name reuses it.
class DistributionPool {
 public:
  std::string intern(const TypedDistribution& d) {
    std::string base = d.name.empty() ? "d" : d.name;
    require_identifier("distribution name", base);
    auto it = pool_.find(base);
    if (it == pool_.end()) {
      pool_.emplace(base, d);
      return base;
    }
    if (distributions_identical(it->second, d)) return base;
    for (int k = 2;; ++k) {
      std::string candidate = base + "_" + std::to_string(k);
      auto jt = pool_.find(candidate);
      if (jt == pool_.end()) {
        pool_.emplace(candidate, d);
        return candidate;
      }
      if (distributions_identical(jt->second, d)) return candidate;
    }
  }

  const std::map<std::string, TypedDistribution>& entries() const {
    return pool_;
  }

 private:
  std::map<std::string, TypedDistribution> pool_;
};

std::string render_distribution(const std::string& name,
                                const TypedDistribution& d,
                                const StateSpaceTable& spaces) {
  const StateSpace& space = spaces.at(d.target);
  if (space.states.size() != d.weights.size()) {
    throw Error(ErrorCode::invalid_model,
                "distribution " + name + " has " +
                    std::to_string(d.weights.size()) + " weights but " +
                    d.target.display() + " has " +
                    std::to_string(space.states.size()) + " states");
  }
  std::string out = "distribution " + name + " for " + render_varref(d.target) +
                    " { ";
  for (std::size_t i = 0; i < space.states.size(); ++i) {
    require_identifier("state name", space.states[i]);
    if (i != 0) out += ", ";
    out += space.states[i];
    out += ": ";
    out += format_double(d.weights[i]);
  }
  out += " }";
  return out;
}

// Element names must be unique inside a declaration; empty names are filled
// with m1, m2, ... skipping anything already taken.
std::vector<std::string> element_names(
    const std::vector<std::string>& declared) {
  std::set<std::string> used;
  for (const std::string& name : declared) {
    if (name.empty()) continue;
    require_identifier("element name", name);
    if (!used.insert(name).second) {
      throw Error(ErrorCode::invalid_model,
                  "element name '" + name + "' used twice in one declaration");
    }
  }
  std::vector<std::string> out;
  std::size_t next = 1;
  for (const std::string& name : declared) {
    if (!name.empty()) {
      out.push_back(name);
      continue;
    }
    std::string candidate;
    do {
      candidate = "m" + std::to_string(next++);
    } while (used.count(candidate) != 0);
    used.insert(candidate);
    out.push_back(std::move(candidate));
  }
  return out;
}

template <typename T>
std::vector<const T*> sorted_by_name(const std::vector<T>& items,
                                     const char* what) {
  std::vector<const T*> out;
  out.reserve(items.size());
  for (const T& item : items) out.push_back(&item);
  std::stable_sort(out.begin(), out.end(),
                   [](const T* a, const T* b) { return a->name < b->name; });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i - 1]->name == out[i]->name) {
      throw Error(ErrorCode::invalid_model,
                  std::string(what) + " name '" + out[i]->name +
                      "' used twice");
    }
  }
  return out;
}

}  // namespace

std::string serialize(const ModelDocument& doc, std::size_t max_atoms) {
  StateSpaceTable spaces = doc.spaces();

  std::vector<const StateSpace*> variables;
  for (const auto& [variable, space] : spaces.entries()) {
    variables.push_back(&space);
  }

  DistributionPool pool;
  for (const TypedDistribution* d :
       sorted_by_name(doc.distributions, "distribution")) {
    pool.intern(*d);
  }

  // Render network and factored bodies first so every referenced distribution
  // lands in the pool before the distribution section is emitted.
  std::vector<std::string> network_blocks;
  for (const AsymmetrySubnetwork* n : sorted_by_name(doc.networks, "network")) {
    std::string block = "network " + n->name;
    require_identifier("network name", n->name);
    block += " for " + render_varref(n->dependent) + " given ";
    for (std::size_t i = 0; i < n->partition.parents.size(); ++i) {
      if (i != 0) block += ", ";
      block += render_varref(n->partition.parents[i]);
    }
    if (n->context && !n->context->is_neutral()) {
      block += " context " + render_brace(*n->context, max_atoms);
    }
    block += " {\n";
    std::vector<std::string> declared;
    for (const PartitionElement& e : n->partition.elements) {
      declared.push_back(e.name);
    }
    std::vector<std::string> names = element_names(declared);
    for (std::size_t i = 0; i < n->partition.elements.size(); ++i) {
      auto it = n->mapping.find(i);
      if (it == n->mapping.end()) {
        throw Error(ErrorCode::invalid_model,
                    "network " + n->name + " element " + names[i] +
                        " has no distribution");
      }
      block += "  element " + names[i] + " = " +
               render_brace(n->partition.elements[i].brace, max_atoms) +
               " -> " + pool.intern(it->second) + "\n";
    }
    block += "}";
    network_blocks.push_back(std::move(block));
  }

  std::vector<std::string> factored_blocks;
  for (const FactoredCPT* f : sorted_by_name(doc.factored, "factored CPT")) {
    std::string block = "factored " + f->name;
    require_identifier("factored CPT name", f->name);
    block += " for " + render_varref(f->dependent) + " given ";
    for (std::size_t i = 0; i < f->parents.size(); ++i) {
      if (i != 0) block += ", ";
      block += render_varref(f->parents[i]);
    }
    block += " {\n";
    std::vector<std::string> declared;
    for (const FactoredMapping& m : f->mappings) declared.push_back(m.name);
    std::vector<std::string> names = element_names(declared);
    for (std::size_t i = 0; i < f->mappings.size(); ++i) {
      block += "  element " + names[i] + " = " +
               render_brace(f->mappings[i].brace, max_atoms) + " -> " +
               pool.intern(f->mappings[i].dist) + "\n";
    }
    block += "}";
    factored_blocks.push_back(std::move(block));
  }

  std::string out = "# acpt model\n";
  for (const StateSpace* space : variables) {
    out += "\nvariable " + render_varref(space->variable) + " { ";
    if (space->states.empty()) {
      throw Error(ErrorCode::invalid_model,
                  "variable " + space->variable.display() + " has no states");
    }
    for (std::size_t i = 0; i < space->states.size(); ++i) {
      require_identifier("state name", space->states[i]);
      if (i != 0) out += ", ";
      out += space->states[i];
    }
    out += " }\n";
  }
  for (const NamedBrace* c : sorted_by_name(doc.contexts, "context")) {
    require_identifier("context name", c->name);
    out += "\ncontext " + c->name + " = " + render_brace(c->brace, max_atoms) +
           "\n";
  }
  for (const auto& [name, d] : pool.entries()) {
    out += "\n" + render_distribution(name, d, spaces) + "\n";
  }
  for (const std::string& block : network_blocks) {
    out += "\n" + block + "\n";
  }
  for (const std::string& block : factored_blocks) {
    out += "\n" + block + "\n";
  }
  return out;
}

std::string export_dense(const DenseCPT& cpt) {
  std::string out;
  for (const VariableType& parent : cpt.parents) {
    out += parent.display();
    out += '\t';
  }
  for (std::size_t i = 0; i < cpt.dependent_states.size(); ++i) {
    if (i != 0) out += '\t';
    out += cpt.dependent.display();
    out += '=';
    out += cpt.dependent_states[i];
  }
  out += '\n';
  char buf[64];
  for (const auto& [atom, weights] : cpt.rows) {
    for (const std::string& value : atom) {
      out += value;
      out += '\t';
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (i != 0) out += '\t';
      std::snprintf(buf, sizeof(buf), "%.12g", weights[i]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

namespace {

// Comparison key that stays meaningful when two documents disagree about
// which variables a brace spans.
using Assignment = std::map<VariableType, std::string>;
using AssignmentDist = std::map<Assignment, TypedDistribution>;

std::string render_assignment(const Assignment& assignment) {
  std::string out = "(";
  bool first = true;
  for (const auto& [variable, state] : assignment) {
    if (!first) out += ", ";
    first = false;
    out += variable.display() + "=" + state;
  }
  out += ")";
  return out;
}

std::set<Assignment> brace_assignments(const Element& brace,
                                       std::size_t max_atoms) {
  std::set<Assignment> out;
  AtomSet s = atoms(brace, max_atoms);
  for (const Atom& atom : s.atoms) {
    Assignment assignment;
    for (std::size_t i = 0; i < s.variables.size(); ++i) {
      assignment.emplace(s.variables[i], atom[i]);
    }
    out.insert(std::move(assignment));
  }
  return out;
}

void add_brace(AssignmentDist& into, const Element& brace,
               const TypedDistribution& dist, std::size_t max_atoms) {
  for (Assignment assignment : brace_assignments(brace, max_atoms)) {
    into.emplace(std::move(assignment), dist);  // first element wins overlaps
  }
}

AssignmentDist network_assignments(const AsymmetrySubnetwork& n,
                                   std::size_t max_atoms) {
  AssignmentDist out;
  for (std::size_t i = 0; i < n.partition.elements.size(); ++i) {
    auto it = n.mapping.find(i);
    if (it == n.mapping.end()) continue;
    add_brace(out, n.partition.elements[i].brace, it->second, max_atoms);
  }
  return out;
}

AssignmentDist factored_assignments(const FactoredCPT& f,
                                    std::size_t max_atoms) {
  AssignmentDist out;
  for (const FactoredMapping& m : f.mappings) {
    add_brace(out, m.brace, m.dist, max_atoms);
  }
  return out;
}

void compare_assignment_dists(const std::string& label,
                              const AssignmentDist& left,
                              const AssignmentDist& right, double tol,
                              std::vector<std::string>& out) {
  auto lit = left.begin();
  auto rit = right.begin();
  while (lit != left.end() || rit != right.end()) {
    if (rit == right.end() || (lit != left.end() && lit->first < rit->first)) {
      out.push_back(label + ": " + render_assignment(lit->first) +
                    " covered only in first document");
      ++lit;
    } else if (lit == left.end() || rit->first < lit->first) {
      out.push_back(label + ": " + render_assignment(rit->first) +
                    " covered only in second document");
      ++rit;
    } else {
      if (!distributions_equal(lit->second, rit->second, tol)) {
        out.push_back(label + ": " + render_assignment(lit->first) +
                      " maps to different distributions");
      }
      ++lit;
      ++rit;
    }
  }
}

template <typename T, typename Compare>
void compare_by_name(const char* kind, const std::vector<T>& a,
                     const std::vector<T>& b, std::vector<std::string>& out,
                     Compare&& compare) {
  std::map<std::string, const T*> left, right;
  for (const T& item : a) left.emplace(item.name, &item);
  for (const T& item : b) right.emplace(item.name, &item);
  std::set<std::string> names;
  for (const auto& [name, _] : left) names.insert(name);
  for (const auto& [name, _] : right) names.insert(name);
  for (const std::string& name : names) {
    std::string label = std::string(kind) + " " + name;
    auto lit = left.find(name);
    auto rit = right.find(name);
    if (lit == left.end()) {
      out.push_back(label + ": only in second document");
      continue;
    }
    if (rit == right.end()) {
      out.push_back(label + ": only in first document");
      continue;
    }
    try {
      compare(label, *lit->second, *rit->second);
    } catch (const Error& e) {
      out.push_back(label + ": not comparable: " + e.what());
    }
  }
}

}  // namespace

std::vector<std::string> document_differences(const ModelDocument& a,
                                              const ModelDocument& b,
                                              double tol,
                                              std::size_t max_atoms) {
  std::vector<std::string> out;

  {
    std::map<VariableType, const StateSpace*> left, right;
    for (const StateSpace& space : a.variables) left.emplace(space.variable, &space);
    for (const StateSpace& space : b.variables) right.emplace(space.variable, &space);
    std::set<VariableType> types;
    for (const auto& [variable, _] : left) types.insert(variable);
    for (const auto& [variable, _] : right) types.insert(variable);
    for (const VariableType& variable : types) {
      std::string label = "variable " + variable.display();
      auto lit = left.find(variable);
      auto rit = right.find(variable);
      if (lit == left.end()) {
        out.push_back(label + ": only in second document");
      } else if (rit == right.end()) {
        out.push_back(label + ": only in first document");
      } else if (lit->second->states != rit->second->states) {
        out.push_back(label + ": state lists differ");
      }
    }
  }

  compare_by_name<NamedBrace>(
      "context", a.contexts, b.contexts, out,
      [&](const std::string& label, const NamedBrace& lhs,
          const NamedBrace& rhs) {
        if (brace_assignments(lhs.brace, max_atoms) !=
            brace_assignments(rhs.brace, max_atoms)) {
          out.push_back(label + ": atom sets differ");
        }
      });

  compare_by_name<TypedDistribution>(
      "distribution", a.distributions, b.distributions, out,
      [&](const std::string& label, const TypedDistribution& lhs,
          const TypedDistribution& rhs) {
        if (lhs.target != rhs.target) {
          out.push_back(label + ": targets differ");
        } else if (!distributions_equal(lhs, rhs, tol)) {
          out.push_back(label + ": weights differ");
        }
      });

  compare_by_name<AsymmetrySubnetwork>(
      "network", a.networks, b.networks, out,
      [&](const std::string& label, const AsymmetrySubnetwork& lhs,
          const AsymmetrySubnetwork& rhs) {
        if (lhs.dependent != rhs.dependent) {
          out.push_back(label + ": dependent variables differ");
          return;
        }
        if (sorted_types(lhs.partition.parents) !=
            sorted_types(rhs.partition.parents)) {
          out.push_back(label + ": parent sets differ");
          return;
        }
        bool lc = lhs.context && !lhs.context->is_neutral();
        bool rc = rhs.context && !rhs.context->is_neutral();
        if (lc != rc) {
          out.push_back(label + ": only one document declares a context");
        } else if (lc && brace_assignments(*lhs.context, max_atoms) !=
                             brace_assignments(*rhs.context, max_atoms)) {
          out.push_back(label + ": contexts differ");
        }
        compare_assignment_dists(label, network_assignments(lhs, max_atoms),
                                 network_assignments(rhs, max_atoms), tol, out);
      });

  compare_by_name<FactoredCPT>(
      "factored CPT", a.factored, b.factored, out,
      [&](const std::string& label, const FactoredCPT& lhs,
          const FactoredCPT& rhs) {
        if (lhs.dependent != rhs.dependent) {
          out.push_back(label + ": dependent variables differ");
          return;
        }
        if (sorted_types(lhs.parents) != sorted_types(rhs.parents)) {
          out.push_back(label + ": parent sets differ");
          return;
        }
        compare_assignment_dists(label, factored_assignments(lhs, max_atoms),
                                 factored_assignments(rhs, max_atoms), tol,
                                 out);
      });

  return out;
}

}  // namespace asymnet
