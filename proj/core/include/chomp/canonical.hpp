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

#ifndef CHOMP_CANONICAL_HPP_
#define CHOMP_CANONICAL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chomp/complex.hpp"

namespace chomp {

inline constexpr int kDefaultCanonicalBound = 16;

// Isomorphism-invariant fingerprint of a position. `faces` is the canonical
// face list itself, so equality is exact; `digest()` is a stable 64-bit
// summary for display and hashing.
//
// A labeled key (canonical == false) is the fallback for complexes above the
// canonicalization bound: still a sound memo key, but relabelings miss.
struct CanonicalKey {
  bool canonical = true;
  int vertex_count = 0;
  std::vector<VertexMask> faces;  // sorted by (popcount, mask)

  std::uint64_t digest() const;
  std::string hex() const;
  // Rebuilds the position this key describes (dense labels).
  SimplicialComplex to_complex() const;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept {
    return static_cast<std::size_t>(k.digest());
  }
};

struct CanonicalForm {
  CanonicalKey key;
  // labeling[v] = canonical index of ground vertex v (unused for
  // non-vertices).
  std::vector<Vertex> labeling;
};

// Throws kCapacity when the position has more than `bound` vertices.
CanonicalForm canonical_form(const SimplicialComplex& c,
                             int bound = kDefaultCanonicalBound);
CanonicalKey canonical_key(const SimplicialComplex& c,
                           int bound = kDefaultCanonicalBound);
CanonicalKey labeled_key(const SimplicialComplex& c);
// Canonical when within bound, labeled otherwise.
CanonicalKey position_key(const SimplicialComplex& c,
                          int bound = kDefaultCanonicalBound);

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

// Label-invariant vertex coloring from iterated partition refinement, indexed
// by ground vertex (-1 for non-vertices). Every automorphism preserves it.
std::vector<int> refined_colors(const SimplicialComplex& c);

}  // namespace chomp

#endif  // CHOMP_CANONICAL_HPP_
