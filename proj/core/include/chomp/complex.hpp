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

// Simplicial complexes as game positions for subset take-away.
//
// A face is a nonempty vertex set stored as a 64-bit mask, so the ground set
// is capped at 64 vertices. A complex stores every face explicitly (not just
// facets) because the move set of the game is exactly the face set.

#ifndef CHOMP_COMPLEX_HPP_
#define CHOMP_COMPLEX_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chomp {

using Vertex = unsigned;
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

class Face {
 public:
  constexpr Face() = default;
  constexpr explicit Face(VertexMask bits) : bits_(bits) {}

  static Face of(std::initializer_list<Vertex> members);
  static Face of(std::span<const Vertex> members);
  static constexpr Face vertex(Vertex v) { return Face(VertexMask{1} << v); }

  constexpr VertexMask bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int dimension() const { return size() - 1; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool is_subset_of(Face other) const {
    return (bits_ & other.bits_) == bits_;
  }
  // Highest vertex id plus one; 0 for the empty mask.
  constexpr int span_size() const { return 64 - std::countl_zero(bits_); }

  std::vector<Vertex> members() const;
  std::string to_string() const;

  friend constexpr bool operator==(Face a, Face b) = default;
  // Dimension first, then mask value: the canonical move order.
  friend constexpr std::strong_ordering operator<=>(Face a, Face b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  VertexMask bits_ = 0;
};

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // All nonempty subsets of the given facets. Throws kInvalidInput when a
  // facet is empty or mentions a vertex >= ground_size.
  static SimplicialComplex close_down(std::span<const Face> facets,
                                      int ground_size);
  static SimplicialComplex close_down(std::initializer_list<Face> facets,
                                      int ground_size);

  // Adopts a face list that the caller guarantees is closed; sorts it.
  static SimplicialComplex from_closed_faces(std::vector<Face> faces,
                                             int ground_size);

  int ground_size() const { return ground_size_; }
  std::span<const Face> faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }
  bool contains(Face f) const;

  // Vertices are the 1-sets; ground elements without a 1-set are not part of
  // the position.
  VertexMask vertex_mask() const;
  int vertex_count() const;
  std::vector<Vertex> vertices() const;
  std::size_t edge_count() const;
  int dimension() const;
  bool is_graph() const { return dimension() <= 1; }

  // Number of edges containing v.
  int degree(Vertex v) const;
  // Neighbor masks indexed by ground vertex, built from the 2-sets.
  std::vector<VertexMask> adjacency() const;

  // Deletes s and every face containing it. Throws kIllegalMove if s is not
  // a face.
  SimplicialComplex remove_face(Face s) const;

  // Legal moves: every face, ordered by dimension then mask.
  std::vector<Face> moves() const;

  // Connected components by shared vertices, each relabeled densely in
  // increasing order of original vertex id. Ordered by lowest original vertex.
  std::vector<SimplicialComplex> components() const;
  // Vertex masks of the components in original labels.
  std::vector<VertexMask> component_masks() const;

  // Subcomplex induced on a vertex subset, original labels kept.
  SimplicialComplex induced(VertexMask vertices) const;
  // Relabels vertices densely (0..vertex_count-1) in increasing id order.
  SimplicialComplex compacted() const;
  // Applies old->new vertex map; entries for non-vertices are ignored.
  SimplicialComplex relabeled(std::span<const Vertex> mapping,
                              int new_ground_size) const;

  std::vector<Face> facets() const;
  // Downward closure holds and every face lies inside the ground set.
  bool is_closed() const;

  friend bool operator==(const SimplicialComplex&,
                         const SimplicialComplex&) = default;

 private:
  int ground_size_ = 0;
  std::vector<Face> faces_;  // sorted by Face ordering, no duplicates
};

// Vertices of b are shifted past a's ground set.
SimplicialComplex disjoint_union(const SimplicialComplex& a,
                                 const SimplicialComplex& b);

// Maps a sub-mask of `from` to dense bit positions (bit i of result set iff
// the i-th set bit of `from` is in `mask`).
VertexMask compress_mask(VertexMask mask, VertexMask from);

struct GraphStats {
  int vertices = 0;
  int edges = 0;
  std::vector<int> degrees;  // indexed by ground vertex; 0 for non-vertices
  std::optional<std::pair<VertexMask, VertexMask>> bipartition;
  int components = 0;
  // e - v + components: number of independent cycles.
  int cycle_count = 0;
};

// Throws kInvalidInput for complexes with faces of size > 2.
GraphStats graph_stats(const SimplicialComplex& c);

}  // namespace chomp

#endif  // CHOMP_COMPLEX_HPP_
