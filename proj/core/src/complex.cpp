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

#include "chomp/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chomp/error.hpp"

namespace chomp {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
      return "invalid-input";
    case ErrorCode::kIllegalMove:
      return "illegal-move";
    case ErrorCode::kCapacity:
      return "capacity";
    case ErrorCode::kBudgetExceeded:
      return "budget-exceeded";
    case ErrorCode::kParse:
      return "parse";
  }
  return "unknown";
}

namespace {

constexpr int kMaxFacetSize = 24;

VertexMask ground_mask(int ground_size) {
  return ground_size >= 64 ? ~VertexMask{0}
                           : (VertexMask{1} << ground_size) - 1;
}

}  // namespace

Face Face::of(std::initializer_list<Vertex> members) {
  return of(std::span<const Vertex>(members.begin(), members.size()));
}

Face Face::of(std::span<const Vertex> members) {
  VertexMask bits = 0;
  for (Vertex v : members) {
    if (v >= static_cast<Vertex>(kMaxVertices)) {
      throw Error(ErrorCode::kInvalidInput,
                  "vertex id " + std::to_string(v) + " exceeds 64-vertex cap");
    }
    bits |= VertexMask{1} << v;
  }
  return Face(bits);
}

std::vector<Vertex> Face::members() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (VertexMask b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<Vertex>(std::countr_zero(b)));
  }
  return out;
}

std::string Face::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Vertex v : members()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

SimplicialComplex SimplicialComplex::close_down(std::span<const Face> facets,
                                                int ground_size) {
  if (ground_size < 0 || ground_size > kMaxVertices) {
    throw Error(ErrorCode::kInvalidInput,
                "ground size must lie in [0, 64], got " +
                    std::to_string(ground_size));
  }
  const VertexMask allowed = ground_mask(ground_size);
  std::vector<Face> faces;
  for (Face f : facets) {
    if (f.empty()) {
      throw Error(ErrorCode::kInvalidInput, "empty face");
    }
    if ((f.bits() & ~allowed) != 0) {
      throw Error(ErrorCode::kInvalidInput,
                  "face " + f.to_string() + " references a vertex >= " +
                      std::to_string(ground_size));
    }
    if (f.size() > kMaxFacetSize) {
      throw Error(ErrorCode::kCapacity, "facet too large to close down");
    }
    // Enumerate nonempty submasks.
    const VertexMask full = f.bits();
    for (VertexMask sub = full; sub != 0; sub = (sub - 1) & full) {
      faces.emplace_back(sub);
    }
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex c;
  c.ground_size_ = ground_size;
  c.faces_ = std::move(faces);
  return c;
}

SimplicialComplex SimplicialComplex::close_down(
    std::initializer_list<Face> facets, int ground_size) {
  return close_down(std::span<const Face>(facets.begin(), facets.size()),
                    ground_size);
}

SimplicialComplex SimplicialComplex::from_closed_faces(std::vector<Face> faces,
                                                       int ground_size) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex c;
  c.ground_size_ = ground_size;
  c.faces_ = std::move(faces);
  return c;
}

bool SimplicialComplex::contains(Face f) const {
  return std::binary_search(faces_.begin(), faces_.end(), f);
}

VertexMask SimplicialComplex::vertex_mask() const {
  VertexMask mask = 0;
  for (Face f : faces_) {
    if (f.size() != 1) break;
    mask |= f.bits();
  }
  return mask;
}

int SimplicialComplex::vertex_count() const {
  return std::popcount(vertex_mask());
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  return Face(vertex_mask()).members();
}

std::size_t SimplicialComplex::edge_count() const {
  return static_cast<std::size_t>(std::count_if(
      faces_.begin(), faces_.end(), [](Face f) { return f.size() == 2; }));
}

int SimplicialComplex::dimension() const {
  return faces_.empty() ? -1 : faces_.back().dimension();
}

int SimplicialComplex::degree(Vertex v) const {
  int d = 0;
  for (Face f : faces_) {
    if (f.size() == 2 && f.contains(v)) ++d;
    if (f.size() > 2) break;
  }
  return d;
}

std::vector<VertexMask> SimplicialComplex::adjacency() const {
  std::vector<VertexMask> adj(static_cast<std::size_t>(ground_size_), 0);
  for (Face f : faces_) {
    if (f.size() < 2) continue;
    if (f.size() > 2) break;
    const VertexMask b = f.bits();
    const auto u = static_cast<std::size_t>(std::countr_zero(b));
    const auto w = static_cast<std::size_t>(63 - std::countl_zero(b));
    adj[u] |= VertexMask{1} << w;
    adj[w] |= VertexMask{1} << u;
  }
  return adj;
}

SimplicialComplex SimplicialComplex::remove_face(Face s) const {
  if (!contains(s)) {
    throw Error(ErrorCode::kIllegalMove,
                "face " + s.to_string() + " is not in the complex");
  }
  SimplicialComplex out;
  out.ground_size_ = ground_size_;
  out.faces_.reserve(faces_.size() - 1);
  for (Face f : faces_) {
    if (!s.is_subset_of(f)) out.faces_.push_back(f);
  }
  return out;
}

std::vector<Face> SimplicialComplex::moves() const { return faces_; }

std::vector<VertexMask> SimplicialComplex::component_masks() const {
  const VertexMask verts = vertex_mask();
  if (verts == 0) return {};
  const auto adj = adjacency();
  std::vector<VertexMask> out;
  VertexMask remaining = verts;
  while (remaining != 0) {
    VertexMask comp = remaining & (~remaining + 1);
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask b = frontier; b != 0; b &= b - 1) {
        next |= adj[static_cast<std::size_t>(std::countr_zero(b))];
      }
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

std::vector<SimplicialComplex> SimplicialComplex::components() const {
  std::vector<SimplicialComplex> out;
  for (VertexMask m : component_masks()) {
    out.push_back(induced(m).compacted());
  }
  return out;
}

SimplicialComplex SimplicialComplex::induced(VertexMask vertices) const {
  SimplicialComplex out;
  out.ground_size_ = ground_size_;
  for (Face f : faces_) {
    if ((f.bits() & ~vertices) == 0) out.faces_.push_back(f);
  }
  return out;
}

VertexMask compress_mask(VertexMask mask, VertexMask from) {
  VertexMask out = 0;
  int pos = 0;
  for (VertexMask b = from; b != 0; b &= b - 1, ++pos) {
    if (mask & (b & (~b + 1))) out |= VertexMask{1} << pos;
  }
  return out;
}

SimplicialComplex SimplicialComplex::compacted() const {
  const VertexMask verts = vertex_mask();
  SimplicialComplex out;
  out.ground_size_ = std::popcount(verts);
  if (verts == ground_mask(ground_size_)) {
    out.faces_ = faces_;
    return out;
  }
  out.faces_.reserve(faces_.size());
  for (Face f : faces_) {
    out.faces_.emplace_back(compress_mask(f.bits(), verts));
  }
  // Compression is monotone on masks of equal popcount, so order survives.
  return out;
}

SimplicialComplex SimplicialComplex::relabeled(std::span<const Vertex> mapping,
                                               int new_ground_size) const {
  std::vector<Face> faces;
  faces.reserve(faces_.size());
  for (Face f : faces_) {
    VertexMask bits = 0;
    for (VertexMask b = f.bits(); b != 0; b &= b - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(b));
      if (v >= mapping.size() ||
          mapping[v] >= static_cast<Vertex>(new_ground_size)) {
        throw Error(ErrorCode::kInvalidInput, "relabeling out of range");
      }
      bits |= VertexMask{1} << mapping[v];
    }
    faces.emplace_back(bits);
  }
  return from_closed_faces(std::move(faces), new_ground_size);
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  // A face is a facet iff no face one dimension up contains it.
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    const Face f = faces_[i];
    bool maximal = true;
    for (std::size_t j = i + 1; j < faces_.size(); ++j) {
      if (faces_[j].size() > f.size() + 1) break;
      if (faces_[j].size() == f.size() + 1 && f.is_subset_of(faces_[j])) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

bool SimplicialComplex::is_closed() const {
  const VertexMask allowed = ground_mask(ground_size_);
  for (Face f : faces_) {
    if (f.empty() || (f.bits() & ~allowed) != 0) return false;
    if (f.size() == 1) continue;
    // Codimension-one faces suffice: closure then follows by induction.
    for (VertexMask b = f.bits(); b != 0; b &= b - 1) {
      if (!contains(Face(f.bits() & ~(b & (~b + 1))))) return false;
    }
  }
  return true;
}

SimplicialComplex disjoint_union(const SimplicialComplex& a,
                                 const SimplicialComplex& b) {
  const int shift = a.ground_size();
  if (shift + b.ground_size() > kMaxVertices) {
    throw Error(ErrorCode::kCapacity, "disjoint union exceeds 64 vertices");
  }
  std::vector<Face> faces(a.faces().begin(), a.faces().end());
  for (Face f : b.faces()) faces.emplace_back(f.bits() << shift);
  return SimplicialComplex::from_closed_faces(std::move(faces),
                                              shift + b.ground_size());
}

GraphStats graph_stats(const SimplicialComplex& c) {
  if (!c.is_graph()) {
    throw Error(ErrorCode::kInvalidInput,
                "graph_stats requires a complex without 2-simplices");
  }
  GraphStats s;
  s.vertices = c.vertex_count();
  s.edges = static_cast<int>(c.edge_count());
  const auto adj = c.adjacency();
  s.degrees.assign(static_cast<std::size_t>(c.ground_size()), 0);
  for (std::size_t v = 0; v < adj.size(); ++v) {
    s.degrees[v] = std::popcount(adj[v]);
  }
  const auto comps = c.component_masks();
  s.components = static_cast<int>(comps.size());
  s.cycle_count = s.edges - s.vertices + s.components;

  // BFS two-coloring per component.
  VertexMask side0 = 0;
  VertexMask side1 = 0;
  bool ok = true;
  for (VertexMask comp : comps) {
    VertexMask seed = comp & (~comp + 1);
    side0 |= seed;
    VertexMask frontier = seed;
    bool parity = false;
    VertexMask seen = seed;
    while (frontier != 0 && ok) {
      VertexMask next = 0;
      for (VertexMask b = frontier; b != 0; b &= b - 1) {
        next |= adj[static_cast<std::size_t>(std::countr_zero(b))];
      }
      // Neighbors of this layer must sit on the opposite side.
      const VertexMask same = parity ? side1 : side0;
      if ((next & same & comp) != 0) ok = false;
      next &= ~seen;
      parity = !parity;
      (parity ? side1 : side0) |= next;
      seen |= next;
      frontier = next;
    }
  }
  if (ok) s.bipartition = std::make_pair(side0, side1);
  return s;
}

}  // namespace chomp
