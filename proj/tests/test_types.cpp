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

#include <cmath>
#include <limits>
#include <random>

#include <doctest.h>

#include "asymnet/types.hpp"

using namespace asymnet;

TEST_CASE("variable types order by name then attributes") {
  VariableType x("X");
  VariableType y("Y");
  CHECK(x < y);
  CHECK(x == VariableType("X"));

  VariableType xt1("X", {{"time", "t1"}});
  VariableType xt2("X", {{"time", "t2"}});
  CHECK(xt1 != xt2);
  CHECK(x < xt1);  // no attributes sorts first
  CHECK(xt1 < xt2);
  CHECK(xt1.display() == "X(time=t1)");

  VariableType multi("A", {{"z", "1"}, {"b", std::nullopt}});
  CHECK(multi.display() == "A(b,z=1)");  // attributes stored sorted
}

TEST_CASE("variable type rejects empty names and duplicate attributes") {
  CHECK_THROWS_AS(VariableType(""), Error);
  try {
    VariableType bad("X", {{"time", "t1"}, {"time", "t2"}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
  }
}

TEST_CASE("state space lookup") {
  StateSpace space{VariableType("X"), {"x1", "x2", "x3"}};
  CHECK(space.index_of("x1") == 0);
  CHECK(space.index_of("x3") == 2);
  CHECK_FALSE(space.index_of("x4").has_value());
}

TEST_CASE("state space table add, find, at") {
  StateSpaceTable table;
  table.add(StateSpace{VariableType("X"), {"x1", "x2"}});
  CHECK(table.contains(VariableType("X")));
  CHECK(table.find(VariableType("Y")) == nullptr);
  CHECK(table.at(VariableType("X")).states.size() == 2);
  try {
    table.at(VariableType("Y"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unknown_state_space);
  }
  CHECK_THROWS_AS(table.add(StateSpace{VariableType("X"), {"x1"}}), Error);
}

TEST_CASE("normalize scales ratios to probabilities") {
  TypedDistribution d{"counts", VariableType("X"), {2.0, 2.0, 4.0}};
  TypedDistribution n = normalize(d);
  CHECK(n.weights[0] == 0.25);
  CHECK(n.weights[1] == 0.25);
  CHECK(n.weights[2] == 0.5);

  TypedDistribution f{"freq", VariableType("X"), {7.0, 3.0}};
  TypedDistribution nf = normalize(f);
  CHECK(nf.weights[0] == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(nf.weights[1] == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("normalize is exactly idempotent") {
  std::mt19937 rng(20260821);
  std::uniform_real_distribution<double> weight(0.001, 50.0);
  for (int round = 0; round < 200; ++round) {
    TypedDistribution d;
    d.target = VariableType("X");
    std::size_t n = 1 + rng() % 6;
    for (std::size_t i = 0; i < n; ++i) d.weights.push_back(weight(rng));
    TypedDistribution once = normalize(d);
    TypedDistribution twice = normalize(once);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(once.weights[i] == twice.weights[i]);  // bitwise
    }
  }
}

TEST_CASE("normalize rejects degenerate inputs") {
  auto expect_degenerate = [](TypedDistribution d) {
    try {
      normalize(d);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::degenerate_distribution);
    }
  };
  expect_degenerate({"", VariableType("X"), {0.0, 0.0}});
  expect_degenerate({"", VariableType("X"), {1.0, -0.5}});
  expect_degenerate({"", VariableType("X"), {}});
  expect_degenerate(
      {"", VariableType("X"), {std::numeric_limits<double>::quiet_NaN()}});
  expect_degenerate(
      {"", VariableType("X"), {std::numeric_limits<double>::infinity()}});
}

TEST_CASE("distribution equality ignores names and scale") {
  TypedDistribution a{"a", VariableType("X"), {2.0, 2.0, 4.0}};
  TypedDistribution b{"b", VariableType("X"), {0.25, 0.25, 0.5}};
  CHECK(distributions_equal(a, b));
  CHECK_FALSE(distributions_identical(a, b));
  CHECK(distributions_identical(a, TypedDistribution{"c", VariableType("X"),
                                                     {2.0, 2.0, 4.0}}));

  TypedDistribution c{"c", VariableType("Y"), {0.25, 0.25, 0.5}};
  CHECK_FALSE(distributions_equal(b, c));  // different target

  TypedDistribution near{"", VariableType("X"), {0.25 + 5e-10, 0.25, 0.5}};
  CHECK(distributions_equal(b, near, 1e-8));
  CHECK_FALSE(distributions_equal(b, near, 1e-12));
}

TEST_CASE("type set helpers") {
  std::set<VariableType> xy{VariableType("X"), VariableType("Y")};
  std::set<VariableType> z{VariableType("Z")};
  std::set<VariableType> yz{VariableType("Y"), VariableType("Z")};
  CHECK(variable_types_disjoint(xy, z));
  CHECK_FALSE(variable_types_disjoint(xy, yz));
  CHECK(describe(xy) == "{X, Y}");
}
