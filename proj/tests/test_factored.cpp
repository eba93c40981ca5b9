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

#include <doctest.h>

#include "asymnet/factored.hpp"

using namespace asymnet;

namespace {

const VariableType kA("A");
const VariableType kB("B");
const VariableType kC("C");
const VariableType kD("D");

Element sa(const char* state) { return Element::simple(kA, state); }
Element sb(const char* state) { return Element::simple(kB, state); }

StateSpaceTable small_spaces() {
  StateSpaceTable table;
  table.add(StateSpace{kA, {"a1", "a2"}});
  table.add(StateSpace{kB, {"b1", "b2"}});
  table.add(StateSpace{kC, {"c1", "c2"}});
  table.add(StateSpace{kD, {"d1", "d2", "d3"}});
  return table;
}

TypedDistribution dd(const char* name, double w1, double w2, double w3) {
  return TypedDistribution{name, kD, {w1, w2, w3}};
}

// Quarter coverage of the A-B grid per mapping, two mappings present.
FactoredCPT half_cpt() {
  FactoredCPT f;
  f.name = "half";
  f.dependent = kD;
  f.parents = {kA, kB};
  f.mappings.push_back(
      FactoredMapping{"m1", cross(sa("a1"), sb("b1")), dd("D1", 2, 2, 4)});
  f.mappings.push_back(
      FactoredMapping{"m2", cross(sa("a1"), sb("b2")), dd("D2", 1, 1, 2)});
  return f;
}

}  // namespace

TEST_CASE("validation flags overlaps but tolerates gaps") {
  StateSpaceTable spaces = small_spaces();
  FactoredCPT f = half_cpt();
  ValidationReport ok = validate_factored(f, spaces);
  CHECK(ok.valid());
  CHECK(ok.uncovered_count == 2);  // informational, not a violation

  f.mappings.push_back(FactoredMapping{
      "m3", cross(sa("a1"), collect(sb("b1"), sb("b2"))), dd("D3", 1, 1, 1)});
  ValidationReport bad = validate_factored(f, spaces);
  CHECK_FALSE(bad.valid());
  bool overlap = false;
  for (const Violation& v : bad.violations) {
    overlap = overlap || v.kind == ViolationKind::overlap;
  }
  CHECK(overlap);
}

TEST_CASE("lifting a context crosses it into every brace") {
  FactoredCPT f = half_cpt();
  FactoredCPT lifted = lift_context(f, Element::simple(kC, "c1"));
  CHECK(lifted.parents == std::vector<VariableType>{kA, kB, kC});
  AtomSet s = atoms(lifted.mappings[0].brace);
  CHECK(s.atoms == std::set<Atom>{{"a1", "b1", "c1"}});

  // Lifting with the neutral element is the identity.
  FactoredCPT same = lift_context(f, Element::neutral());
  CHECK(same.parents == f.parents);

  try {
    lift_context(f, Element::simple(kD, "d1"));  // dependent in the context
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::amap_overlapping_type);
  }
  try {
    lift_context(f, sa("a1"));  // parent in the context
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::cross_overlapping_types);
  }
}

TEST_CASE("alignment extends braces with whole elements") {
  StateSpaceTable spaces = small_spaces();
  FactoredCPT f = half_cpt();
  FactoredCPT aligned = align_parents(f, {kA, kB, kC}, spaces);
  CHECK(aligned.parents == std::vector<VariableType>{kA, kB, kC});
  AtomSet s = atoms(aligned.mappings[0].brace);
  // (a1, b1) fans out over both states of C.
  CHECK(s.atoms == std::set<Atom>{{"a1", "b1", "c1"}, {"a1", "b1", "c2"}});

  try {
    align_parents(f, {kA, kC}, spaces);  // drops parent B
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parent_not_subset);
  }
}

TEST_CASE("combining distinct dependents is rejected") {
  StateSpaceTable spaces = small_spaces();
  FactoredCPT f = half_cpt();
  FactoredCPT g = half_cpt();
  g.dependent = kC;
  for (FactoredMapping& m : g.mappings) m.dist = {"x", kC, {1.0, 1.0}};
  try {
    combine(f, g, CombinePolicy{}, spaces);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::dependent_mismatch);
  }
}

TEST_CASE("combine joins disjoint halves and aligns parent sets") {
  StateSpaceTable spaces = small_spaces();
  FactoredCPT f = half_cpt();

  FactoredCPT g;
  g.name = "other_half";
  g.dependent = kD;
  g.parents = {kA};  // narrower parent set: alignment must widen it
  g.mappings.push_back(FactoredMapping{"m3", sa("a2"), dd("D3", 1, 0, 0)});

  FactoredCPT joined = combine(f, g, CombinePolicy{}, spaces);
  CHECK(joined.parents == std::vector<VariableType>{kA, kB});
  CHECK(joined.mappings.size() == 3);
  std::map<Atom, TypedDistribution> ground = atom_map(joined);
  CHECK(ground.size() == 4);  // a2 row fanned out over b1, b2
  CHECK(distributions_identical(ground.at(Atom{"a2", "b1"}), dd("", 1, 0, 0)));
  CHECK(distributions_identical(ground.at(Atom{"a2", "b2"}), dd("", 1, 0, 0)));
}

TEST_CASE("overlap handling follows the policy") {
  StateSpaceTable spaces = small_spaces();
  FactoredCPT f = half_cpt();
  FactoredCPT g;
  g.name = "clash";
  g.dependent = kD;
  g.parents = {kA, kB};
  // Same block as f's m1 with an equal-up-to-scale distribution.
  g.mappings.push_back(
      FactoredMapping{"m9", cross(sa("a1"), sb("b1")), dd("D9", 1, 1, 2)});

  try {
    combine(f, g, CombinePolicy{}, spaces);
    FAIL("expected an error");
  } catch (const ConflictError& e) {
    CHECK(e.code() == ErrorCode::combine_conflict);
    CHECK(e.witness() == Atom{"a1", "b1"});
  }

  CombinePolicy merge;
  merge.kind = CombinePolicy::Kind::merge_if_equal;
  FactoredCPT merged = combine(f, g, merge, spaces);
  CHECK(atom_map(merged).size() == 2);

  // Disagreeing weights conflict even under merge.
  g.mappings[0].dist = dd("D9", 5, 1, 2);
  try {
    combine(f, g, merge, spaces);
    FAIL("expected an error");
  } catch (const ConflictError& e) {
    CHECK(e.witness() == Atom{"a1", "b1"});
  }
}

TEST_CASE("merge keeps the same ground map regardless of order") {
  StateSpaceTable spaces = small_spaces();
  FactoredCPT f = half_cpt();
  FactoredCPT g;
  g.name = "wide";
  g.dependent = kD;
  g.parents = {kA, kB};
  // Overlaps f's m1 on (a1, b1) with the same distribution up to scale and
  // adds the whole a2 row.
  g.mappings.push_back(FactoredMapping{
      "w1", cross(collect(sa("a1"), sa("a2")), sb("b1")), dd("W1", 4, 4, 8)});

  CombinePolicy merge;
  merge.kind = CombinePolicy::Kind::merge_if_equal;
  std::map<Atom, TypedDistribution> fg = atom_map(combine(f, g, merge, spaces));
  std::map<Atom, TypedDistribution> gf = atom_map(combine(g, f, merge, spaces));
  REQUIRE(fg.size() == gf.size());
  auto it = gf.begin();
  for (const auto& [atom, dist] : fg) {
    CHECK(atom == it->first);
    CHECK(distributions_identical(dist, it->second));
    ++it;
  }
}

TEST_CASE("expansion normalizes each mapping once") {
  StateSpaceTable spaces = small_spaces();
  FactoredCPT f;
  f.name = "full";
  f.dependent = kD;
  f.parents = {kA, kB};
  f.mappings.push_back(FactoredMapping{
      "left", cross(sa("a1"), collect(sb("b1"), sb("b2"))), dd("L", 2, 2, 4)});
  f.mappings.push_back(FactoredMapping{
      "right", cross(sa("a2"), collect(sb("b1"), sb("b2"))), dd("R", 7, 3, 0)});

  DenseCPT dense = expand_to_cpt(f, spaces);
  CHECK(dense.rows.size() == 4);
  CHECK(dense.dependent_states == std::vector<std::string>{"d1", "d2", "d3"});
  const std::vector<double>& row = dense.rows.at(Atom{"a1", "b2"});
  CHECK(row == std::vector<double>{0.25, 0.25, 0.5});

  // Rows sharing a mapping are bitwise identical.
  CHECK(dense.rows.at(Atom{"a1", "b1"}) == dense.rows.at(Atom{"a1", "b2"}));
  CHECK(dense.rows.at(Atom{"a2", "b1"}) == dense.rows.at(Atom{"a2", "b2"}));
}

TEST_CASE("partial tables refuse dense expansion, naming the gap") {
  StateSpaceTable spaces = small_spaces();
  FactoredCPT f = half_cpt();
  try {
    expand_to_cpt(f, spaces);
    FAIL("expected an error");
  } catch (const CoverageError& e) {
    CHECK(e.code() == ErrorCode::incomplete_coverage);
    CHECK(e.uncovered_count() == 2);
    REQUIRE(e.sample().size() == 2);
    CHECK(e.sample()[0] == Atom{"a2", "b1"});
    CHECK(std::string(e.what()).find("(a2, b1)") != std::string::npos);
  }
}

TEST_CASE("compression statistics count rows, mappings and distinct rows") {
  StateSpaceTable spaces = small_spaces();
  FactoredCPT f = half_cpt();
  CompressionStats stats = compression_stats(f, spaces);
  CHECK(stats.dense_rows == 4);
  CHECK(stats.mapping_count == 2);
  CHECK(stats.covered_atoms == 2);
  CHECK(stats.ratio == 2.0);
  // D1 = (2,2,4) and D2 = (1,1,2) normalize identically.
  CHECK(stats.distinct_distributions == 1);
}
