// Copyright 2026 The Chomp Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <vector>

#include "chomp/error.hpp"
#include "chomp/generators.hpp"
#include "chomp/oracle.hpp"
#include "doctest.h"
#include "test_util.hpp"

namespace chomp {
namespace {

using testing::graph;

TEST_CASE("textbook positions") {
  CHECK(oracle_grundy(generate("complete:3")) == 0);
  CHECK(oracle_grundy(generate("complete:2")) == 2);
  CHECK(oracle_grundy(generate("complete:1")) == 1);
  CHECK(oracle_grundy(SimplicialComplex{}) == 0);
  CHECK(oracle_grundy(generate("path:3")) == 1);
}

TEST_CASE("frozen values") {
  // Computed once by this oracle and frozen.
  CHECK(oracle_grundy(generate("full_simplex:1")) == 1);
  CHECK(oracle_grundy(generate("full_simplex:2")) == 2);
  CHECK(oracle_grundy(generate("full_simplex:3")) == 3);
  CHECK(oracle_grundy(generate("full_simplex:4")) == 1);
  CHECK(oracle_grundy(generate("full_simplex:5")) == 2);
  CHECK(oracle_grundy(generate("figure8:4,4")) == 1);
  CHECK(oracle_grundy(generate("wheel:4")) == 1);
  CHECK(oracle_grundy(generate("wheel:5")) == 1);
  CHECK(oracle_grundy(generate("theta:2,2,2")) == 1);
  CHECK(oracle_grundy(generate("theta:2,2,3")) == 2);
  CHECK(oracle_grundy(generate("gmk:0,0")) == 4);
  CHECK(oracle_grundy(generate("gmk:1,0")) == 3);
  CHECK(oracle_grundy(generate("fig3_counterexample")) == 3);
  CHECK(oracle_grundy(generate("random_complex:n=6,facets=4,size=3,seed=1")) ==
        0);
  CHECK(oracle_grundy(generate("erdos_renyi:n=8,p=0.5,seed=7")) == 2);

  auto boundary = generate("full_simplex:4");
  std::vector<Face> triangles;
  for (Face f : boundary.faces()) {
    if (f.size() == 3) triangles.push_back(f);
  }
  CHECK(oracle_grundy(SimplicialComplex::close_down(triangles, 4)) == 0);
  CHECK(oracle_grundy(SimplicialComplex::close_down(
            {Face::of({0, 1, 2}), Face::of({1, 2, 3})}, 4)) == 2);
}

TEST_CASE("labels do not matter") {
  auto a = graph(4, {{0, 1}, {1, 2}, {2, 3}});
  auto b = graph(4, {{2, 0}, {0, 3}, {3, 1}});
  CHECK(oracle_grundy(a) == oracle_grundy(b));
}

TEST_CASE("mex rule by hand") {
  // Children of the full 2-simplex: remove the triangle (boundary, 0), an
  // edge (two edges on three vertices, path: 1), a vertex (an edge: 2).
  auto simplex = generate("full_simplex:3");
  CHECK(oracle_grundy(simplex.remove_face(Face::of({0, 1, 2}))) == 0);
  CHECK(oracle_grundy(simplex.remove_face(Face::of({0, 1}))) == 1);
  CHECK(oracle_grundy(simplex.remove_face(Face::of({0}))) == 2);
  CHECK(oracle_grundy(simplex) == 3);
}

TEST_CASE("refuses rather than guesses") {
  auto big = generate("erdos_renyi:n=8,p=0.5,seed=7");
  OracleBudget tight;
  tight.max_positions = 16;
  try {
    oracle_grundy(big, tight);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.code() == ErrorCode::kBudgetExceeded);
  }
  CHECK_FALSE(try_oracle_grundy(big, tight).has_value());

  OracleBudget few_faces;
  few_faces.max_faces = 5;
  CHECK_FALSE(try_oracle_grundy(generate("complete:3"), few_faces).has_value());
  CHECK(try_oracle_grundy(generate("complete:2"), few_faces) == 2U);

  // 9 vertices + 27 edges + 18 triangles is within the face cap, but far
  // beyond a small position budget.
  CHECK_FALSE(try_oracle_grundy(generate("torus_3x3"), tight).has_value());
  // 65 faces exceed the hard limit whatever the budget says.
  OracleBudget loose;
  loose.max_faces = 1000;
  CHECK_THROWS_AS(oracle_grundy(generate("complete:11"), loose),
                  BudgetExceeded);
}

}  // namespace
}  // namespace chomp
