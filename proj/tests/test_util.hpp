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

// Shared fixtures for the unit tests.

#ifndef CHOMP_TESTS_TEST_UTIL_HPP_
#define CHOMP_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "chomp/complex.hpp"
#include "chomp/generators.hpp"

namespace chomp::testing {

// Seeded graphs (up to 8 vertices) and complexes (up to 6 vertices).
inline std::vector<SimplicialComplex> corpus(int graphs, int complexes,
                                             std::uint64_t seed = 1) {
  std::vector<SimplicialComplex> out;
  for (int i = 0; i < graphs; ++i) {
    FamilySpec s;
    s.family = Family::kErdosRenyi;
    s.n = 1 + i % 8;
    s.p = 0.5;
    s.seed = seed * 100003 + static_cast<std::uint64_t>(i);
    out.push_back(generate(s));
  }
  for (int i = 0; i < complexes; ++i) {
    FamilySpec s;
    s.family = Family::kRandomComplex;
    s.n = 2 + i % 5;
    s.facets = 1 + i % 5;
    s.max_facet = std::min(s.n, 4);
    s.seed = seed * 200003 + static_cast<std::uint64_t>(i);
    out.push_back(generate(s));
  }
  return out;
}

inline SimplicialComplex shuffled(const SimplicialComplex& c,
                                  std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(c.ground_size()));
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
  }
  return c.relabeled(perm, c.ground_size());
}

inline SimplicialComplex graph(int n,
                               std::vector<std::pair<Vertex, Vertex>> edges) {
  return graph_from_edges(n, edges);
}

}  // namespace chomp::testing

#endif  // CHOMP_TESTS_TEST_UTIL_HPP_
