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

#ifndef ASYMNET_TESTS_GENERATORS_HPP_
#define ASYMNET_TESTS_GENERATORS_HPP_

// Deterministic random structure generators.  Every generated brace carries
// the oracle's view of its assignment set, built with plain set arithmetic
// alongside the library element.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "asymnet/element.hpp"
#include "asymnet/network.hpp"
#include "asymnet/types.hpp"
#include "oracle.hpp"

namespace gen {

using Rng = std::mt19937;

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

struct Universe {
  std::vector<asymnet::StateSpace> spaces;
  asymnet::StateSpaceTable table;
};

inline Universe make_universe(Rng& rng, std::size_t max_vars = 5,
                              std::size_t max_states = 5) {
  Universe u;
  std::size_t var_count = pick(rng, 1, max_vars);
  for (std::size_t v = 0; v < var_count; ++v) {
    asymnet::StateSpace space;
    space.variable = asymnet::VariableType("V" + std::to_string(v + 1));
    std::size_t state_count = pick(rng, 1, max_states);
    for (std::size_t s = 0; s < state_count; ++s) {
      space.states.push_back("v" + std::to_string(v + 1) + "s" +
                             std::to_string(s + 1));
    }
    u.table.add(space);
    u.spaces.push_back(std::move(space));
  }
  return u;
}

inline asymnet::TypedDistribution make_distribution(
    Rng& rng, const asymnet::StateSpace& space, const std::string& name) {
  asymnet::TypedDistribution d;
  d.name = name;
  d.target = space.variable;
  std::uniform_real_distribution<double> weight(0.05, 10.0);
  for (std::size_t i = 0; i < space.states.size(); ++i) {
    d.weights.push_back(weight(rng));
  }
  return d;
}

// A library element paired with the oracle's independently computed
// assignment set.
struct BracePair {
  asymnet::Element element;
  oracle::AssignmentSet set;
};

// Nonempty collection over one variable: a collect-fold of random simples.
inline BracePair make_single_var_brace(Rng& rng,
                                       const asymnet::StateSpace& space) {
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < space.states.size(); ++i) {
    if (coin(rng)) chosen.push_back(i);
  }
  if (chosen.empty()) chosen.push_back(pick(rng, 0, space.states.size() - 1));
  std::shuffle(chosen.begin(), chosen.end(), rng);

  BracePair out;
  out.element =
      asymnet::Element::simple(space.variable, space.states[chosen[0]]);
  out.set = oracle::single(space.variable, space.states[chosen[0]]);
  for (std::size_t i = 1; i < chosen.size(); ++i) {
    asymnet::Element next =
        asymnet::Element::simple(space.variable, space.states[chosen[i]]);
    out.element = asymnet::collect(out.element, next);
    out.set = oracle::unite(
        out.set, oracle::single(space.variable, space.states[chosen[i]]));
  }
  return out;
}

// Random pure brace spanning exactly the given variables (indices into
// u.spaces).  Structure mixes cross splits and collects of same-shaped
// braces, so nesting and operand order vary run to run.
inline BracePair make_brace(Rng& rng, const Universe& u,
                            std::vector<std::size_t> vars, int depth = 2) {
  if (vars.size() == 1) {
    BracePair out = make_single_var_brace(rng, u.spaces[vars[0]]);
    if (depth > 0 && coin(rng, 0.3)) {
      BracePair other = make_single_var_brace(rng, u.spaces[vars[0]]);
      out.element = asymnet::collect(out.element, other.element);
      out.set = oracle::unite(out.set, other.set);
    }
    return out;
  }
  if (depth > 0 && coin(rng, 0.25)) {
    BracePair a = make_brace(rng, u, vars, depth - 1);
    BracePair b = make_brace(rng, u, std::move(vars), depth - 1);
    return BracePair{asymnet::collect(a.element, b.element),
                     oracle::unite(a.set, b.set)};
  }
  std::shuffle(vars.begin(), vars.end(), rng);
  std::size_t split = pick(rng, 1, vars.size() - 1);
  std::vector<std::size_t> left(vars.begin(), vars.begin() + split);
  std::vector<std::size_t> right(vars.begin() + split, vars.end());
  BracePair a = make_brace(rng, u, std::move(left), depth - 1);
  BracePair b = make_brace(rng, u, std::move(right), depth - 1);
  return BracePair{asymnet::cross(a.element, b.element),
                   oracle::product(a.set, b.set)};
}

// Random subset of variable indices of the given size.
inline std::vector<std::size_t> pick_vars(Rng& rng, std::size_t universe_size,
                                          std::size_t count) {
  std::vector<std::size_t> all(universe_size);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  return all;
}

// A full random partition of the joint space of `parent_spaces` into
// 1..max_blocks nonempty blocks, as assignment sets.
inline std::vector<oracle::AssignmentSet> make_partition_blocks(
    Rng& rng, const std::vector<asymnet::StateSpace>& parent_spaces,
    std::size_t max_blocks) {
  std::vector<oracle::Assignment> all = oracle::enumerate_space(parent_spaces);
  std::shuffle(all.begin(), all.end(), rng);
  std::size_t block_count = pick(rng, 1, std::min(max_blocks, all.size()));
  std::vector<oracle::AssignmentSet> blocks(block_count);
  for (std::size_t i = 0; i < all.size(); ++i) {
    // First block_count atoms seed one block each so none is empty.
    std::size_t target = i < block_count ? i : pick(rng, 0, block_count - 1);
    blocks[target].insert(all[i]);
  }
  return blocks;
}

// Builds the element for a block as a collect-fold over per-assignment
// cross-folds of simples, in shuffled order.
inline asymnet::Element element_for_block(Rng& rng,
                                          const oracle::AssignmentSet& block) {
  std::vector<oracle::Assignment> atoms(block.begin(), block.end());
  std::shuffle(atoms.begin(), atoms.end(), rng);
  asymnet::Element out;
  bool first_atom = true;
  for (const oracle::Assignment& assignment : atoms) {
    std::vector<std::pair<asymnet::VariableType, std::string>> pairs(
        assignment.begin(), assignment.end());
    std::shuffle(pairs.begin(), pairs.end(), rng);
    asymnet::Element atom_element;
    for (const auto& [variable, state] : pairs) {
      asymnet::Element simple = asymnet::Element::simple(variable, state);
      atom_element = atom_element.is_neutral()
                         ? simple
                         : asymnet::cross(atom_element, simple);
    }
    out = first_atom ? atom_element : asymnet::collect(out, atom_element);
    first_atom = false;
  }
  return out;
}

// A random exhaustive asymmetry network plus the oracle blocks describing it.
struct NetworkCase {
  asymnet::AsymmetryNetwork network;
  std::vector<asymnet::StateSpace> parent_spaces;
  asymnet::StateSpace dependent_space;
  std::vector<oracle::Block> blocks;
};

inline NetworkCase make_full_network(Rng& rng, std::size_t max_parents = 4,
                                     std::size_t max_states = 4,
                                     std::size_t max_blocks = 6) {
  NetworkCase out;
  std::size_t parent_count = pick(rng, 1, max_parents);
  for (std::size_t v = 0; v < parent_count; ++v) {
    asymnet::StateSpace space;
    space.variable = asymnet::VariableType("P" + std::to_string(v + 1));
    std::size_t state_count = pick(rng, 1, max_states);
    for (std::size_t s = 0; s < state_count; ++s) {
      space.states.push_back("p" + std::to_string(v + 1) + "s" +
                             std::to_string(s + 1));
    }
    out.parent_spaces.push_back(std::move(space));
  }
  out.dependent_space.variable = asymnet::VariableType("Dep");
  std::size_t dep_states = pick(rng, 2, max_states);
  for (std::size_t s = 0; s < dep_states; ++s) {
    out.dependent_space.states.push_back("dep" + std::to_string(s + 1));
  }

  out.network.name = "N";
  out.network.dependent = out.dependent_space.variable;
  out.network.partition.name = "N";
  for (const asymnet::StateSpace& space : out.parent_spaces) {
    out.network.partition.parents.push_back(space.variable);
  }

  std::vector<oracle::AssignmentSet> blocks =
      make_partition_blocks(rng, out.parent_spaces, max_blocks);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    asymnet::PartitionElement element;
    element.name = "e" + std::to_string(i + 1);
    element.brace = element_for_block(rng, blocks[i]);
    out.network.partition.elements.push_back(std::move(element));
    asymnet::TypedDistribution d = make_distribution(
        rng, out.dependent_space, "d" + std::to_string(i + 1));
    out.blocks.push_back(oracle::Block{blocks[i], d.weights});
    out.network.mapping.emplace(i, std::move(d));
  }
  return out;
}

inline asymnet::StateSpaceTable table_for(const NetworkCase& c) {
  asymnet::StateSpaceTable table;
  for (const asymnet::StateSpace& space : c.parent_spaces) table.add(space);
  table.add(c.dependent_space);
  return table;
}

}  // namespace gen

#endif  // ASYMNET_TESTS_GENERATORS_HPP_
