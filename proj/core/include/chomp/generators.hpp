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

// Parametric graph and complex families.
//
// Family strings look like `name` or `name:args`, where args are either
// positional integers (`npartite:5,3,2`) or key=value pairs
// (`gmk:m=2,k=5,cycle=3`):
//
//   empty                          complete:N
//   npartite:A,B,...               path:N            cycle:N
//   wheel:N                        full_simplex:N    torus_3x3
//   figure8:C1,C2                  theta:L1,L2,L3    (path lengths in edges)
//   gmk:M,K | gmk:m=,k=,cycle=     fig3_counterexample
//   hairball:cycle=C,tails=T       (T: per cycle vertex, '/'-separated,
//                                   tails on one vertex joined by '+')
//   tree:n=,seed=                  forest:n=,c=,seed=
//   pseudotree:cycle=,n=,seed=     erdos_renyi:n=,p=,seed=
//   random_bipartite:a=,b=,p=,seed=
//   random_complex:n=,facets=,size=,seed=  (random facets of 2..size vertices)
//
// Seeded families draw from std::mt19937_64 using only raw engine outputs,
// so instances are identical on every platform.

#ifndef CHOMP_GENERATORS_HPP_
#define CHOMP_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "chomp/complex.hpp"
#include "chomp/grundy.hpp"

namespace chomp {

enum class Family {
  kEmpty,
  kComplete,
  kCompleteNpartite,
  kPath,
  kCycle,
  kTree,
  kForest,
  kPseudotree,
  kGmk,
  kHairball,
  kWheel,
  kFigure8,
  kTheta,
  kTorus3x3,
  kFullSimplex,
  kErdosRenyi,
  kRandomBipartite,
  kRandomComplex,
  kFig3Counterexample,
};

const char* to_string(Family f);

struct FamilySpec {
  Family family = Family::kEmpty;
  int n = 0;      // vertex count or size parameter
  int m = 0;      // gmk m-tail
  int k = 0;      // gmk k-tail
  int cycle = 0;  // cycle length for gmk, hairball, pseudotree
  int components = 1;
  int a = 0;  // bipartite sides
  int b = 0;
  double p = 0.5;
  int facets = 4;     // random_complex facet draws
  int max_facet = 3;  // random_complex largest facet size
  std::uint64_t seed = 0;
  std::vector<int> parts;               // npartite parts, figure8, theta
  std::vector<std::vector<int>> tails;  // hairball tails per cycle vertex

  // Canonical string form; parse(to_string()) round-trips.
  std::string to_string() const;
};

// Throws kParse on malformed strings, kInvalidInput on unknown families.
FamilySpec parse_family(std::string_view text);

// Throws kInvalidInput when parameters are out of range.
SimplicialComplex generate(const FamilySpec& spec);
SimplicialComplex generate(std::string_view text);

// Instance plus what the family itself tells us.
struct GeneratedInstance {
  FamilySpec spec;
  SimplicialComplex complex;
  // Value implied by the family's defining formula, when there is one.
  std::optional<Nimber> expected_value;
};
GeneratedInstance generate_instance(const FamilySpec& spec);

// Appends a path of k new vertices hanging from `at`, numbered from the
// first unused id. k = 0 returns c unchanged. Throws kInvalidInput when `at`
// is not a vertex, kCapacity past 64 vertices.
SimplicialComplex attach_tail(const SimplicialComplex& c, Vertex at, int k);

// Uniform draw in [0, bound) from raw engine output.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
bool bernoulli(std::mt19937_64& rng, double p);

// Graph from an edge list over vertices 0..n-1 (every vertex kept).
SimplicialComplex graph_from_edges(
    int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

}  // namespace chomp

#endif  // CHOMP_GENERATORS_HPP_
