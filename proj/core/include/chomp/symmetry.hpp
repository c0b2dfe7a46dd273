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

// Symmetry reduction of positions.
//
// An order-2 vertex permutation that maps faces to faces, and whose
// setwise-fixed faces again form a simplicial complex, leaves the nim-value
// unchanged when the position is replaced by that fixed-point complex. For a
// valid involution the fixed set is the subcomplex induced on the fixed
// vertices; validity fails exactly when some face contains a swapped pair.

#ifndef CHOMP_SYMMETRY_HPP_
#define CHOMP_SYMMETRY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chomp/complex.hpp"

namespace chomp {

class Involution {
 public:
  Involution() = default;
  explicit Involution(std::vector<Vertex> mapping)
      : mapping_(std::move(mapping)) {}

  static Involution identity(int ground_size);
  static Involution from_pairs(
      int ground_size, std::span<const std::pair<Vertex, Vertex>> pairs);

  const std::vector<Vertex>& mapping() const { return mapping_; }
  Vertex operator()(Vertex v) const { return mapping_[v]; }
  Face apply(Face f) const;

  // Swapped pairs (u < v), ascending.
  std::vector<std::pair<Vertex, Vertex>> pairs() const;
  VertexMask fixed_vertices(VertexMask among) const;
  bool is_identity() const;

  friend bool operator==(const Involution&, const Involution&) = default;

 private:
  std::vector<Vertex> mapping_;  // indexed by ground vertex
};

enum class InvolutionStatus {
  kValid,
  kNotOrder2,
  kNotFacePreserving,
  kFixedSetNotComplex,
};

const char* to_string(InvolutionStatus status);

struct InvolutionCheck {
  bool valid = false;
  InvolutionStatus reason = InvolutionStatus::kValid;
};

InvolutionCheck validate_involution(const SimplicialComplex& c,
                                    const Involution& t);

// Faces fixed by t, relabeled densely. Throws kInvalidInput when t is not a
// valid involution of c.
SimplicialComplex fixed_point_set(const SimplicialComplex& c,
                                  const Involution& t);

struct Reduction {
  Involution involution;
  SimplicialComplex fixed_set;  // dense labels
};

struct ReductionSearch {
  std::optional<Reduction> best;
  // False when the node budget cut the search short; an empty `best` then
  // means "none found", not "none exists".
  bool exhaustive = true;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultInvolutionNodeBudget = 2'000'000;

// Searches every non-identity valid involution (restricted to refinement
// color classes, which every automorphism preserves) and keeps the one whose
// fixed set has the fewest vertices, ties broken by smallest canonical key.
ReductionSearch search_reductions(
    const SimplicialComplex& c,
    std::uint64_t node_budget = kDefaultInvolutionNodeBudget);

std::optional<Reduction> find_reduction(const SimplicialComplex& c);

// First valid non-identity involution found: non-adjacent twin
// transpositions, then backtracking. Used on the solver's hot path where any
// reduction will do.
ReductionSearch find_any_reduction(
    const SimplicialComplex& c,
    std::uint64_t node_budget = kDefaultInvolutionNodeBudget);

// Every valid non-identity involution, up to `limit` of them.
std::vector<Involution> valid_involutions(const SimplicialComplex& c,
                                          std::size_t limit);

struct ReductionStep {
  Involution involution;        // labels of the position before the step
  SimplicialComplex fixed_set;  // dense labels
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;

  // [{"pairs": [[u,v],...], "fixed_vertices": [...]}, ...]
  std::string to_json() const;
  // Re-applies every step starting from c; throws if a step is invalid.
  SimplicialComplex replay(const SimplicialComplex& c) const;
};

enum class SimplestStatus {
  kSimplest,          // certified by exhaustive search
  kNoReductionFound,  // search budget ran out before certifying
  kBudgetExhausted,   // step budget ran out while reductions remained
};

const char* to_string(SimplestStatus status);

struct SimplestResult {
  SimplicialComplex position;
  ReductionTrace trace;
  SimplestStatus status = SimplestStatus::kSimplest;
};

struct ReduceBudget {
  int max_steps = 64;
  std::uint64_t node_budget = kDefaultInvolutionNodeBudget;
};

SimplestResult reduce_to_simplest(const SimplicialComplex& c,
                                  ReduceBudget budget = {});

// True only when exhaustive search proves no reduction exists.
bool is_certified_simplest(const SimplicialComplex& c);

}  // namespace chomp

#endif  // CHOMP_SYMMETRY_HPP_
