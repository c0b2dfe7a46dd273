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

// Exhaustive enumeration of small graph families, up to isomorphism.

#ifndef CHOMP_ENUMERATE_HPP_
#define CHOMP_ENUMERATE_HPP_

#include <vector>

#include "chomp/complex.hpp"
#include "chomp/generators.hpp"

namespace chomp {

// Every rooted tree with n >= 1 vertices, once per isomorphism class, as a
// parent array (parent[0] == -1, parent[i] < i).
const std::vector<std::vector<int>>& rooted_trees(int n);

// Connected graphs with exactly one cycle, of the given length, and at most
// max_vertices vertices. The cycle is 0..cycle-1.
std::vector<SimplicialComplex> pseudotrees(int cycle, int max_vertices);

// Pseudotrees where exactly one cycle vertex (0) has degree 3 and its
// outside neighbor B (vertex `cycle`) roots the attached tree.
std::vector<SimplicialComplex> single_attachment_pseudotrees(int cycle,
                                                             int max_vertices);

// Hairballs: only paths hang off the cycle. Bare cycles excluded.
std::vector<SimplicialComplex> hairballs(int cycle, int max_vertices);

// figure8 and theta specs with at most max_vertices vertices.
std::vector<FamilySpec> figure8_specs(int max_vertices);
std::vector<FamilySpec> theta_specs(int max_vertices);

// Partitions of at most max_total vertices into parts, descending.
std::vector<std::vector<int>> npartite_shapes(int max_total);

}  // namespace chomp

#endif  // CHOMP_ENUMERATE_HPP_
