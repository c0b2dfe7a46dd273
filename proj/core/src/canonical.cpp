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

// Canonical labeling by individualization-refinement.
//
// Vertices are colored by iterated refinement on face incidences, then the
// search individualizes each vertex of the first non-singleton cell in turn
// and recurses. Every discrete leaf yields a relabeled face list; the
// lexicographically least one is the canonical form. Vertices that can be
// swapped by an automorphism transposition ("twins") produce identical
// subtrees, so only one per twin class is expanded at each node.

#include "chomp/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <numeric>

#include "chomp/error.hpp"

namespace chomp {
namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool mask_less(VertexMask a, VertexMask b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const SimplicialComplex& c) {
    verts_ = c.vertices();
    n_ = static_cast<int>(verts_.size());
    const VertexMask vmask = c.vertex_mask();
    faces_.reserve(c.face_count());
    for (Face f : c.faces()) faces_.push_back(compress_mask(f.bits(), vmask));
    // Already sorted: compression is monotone within a popcount class.
    incident_.resize(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      if (std::popcount(faces_[i]) < 2) continue;
      for (VertexMask b = faces_[i]; b != 0; b &= b - 1) {
        incident_[static_cast<std::size_t>(std::countr_zero(b))].push_back(
            static_cast<int>(i));
      }
    }
  }

  int vertex_count() const { return n_; }
  const std::vector<Vertex>& vertices() const { return verts_; }

  // Refines until the number of cells stops growing. Colors are dense ranks
  // ordered by (previous color, signature), so the result is label-invariant.
  void refine(std::vector<int>& color) const {
    const auto n = static_cast<std::size_t>(n_);
    std::vector<std::uint64_t> hashed(n);
    std::vector<std::uint64_t> sig(n);
    std::vector<int> order(n);
    int cells = count_cells(color);
    while (true) {
      for (std::size_t v = 0; v < n; ++v) {
        hashed[v] = mix(static_cast<std::uint64_t>(color[v]) + 1);
      }
      for (std::size_t v = 0; v < n; ++v) {
        std::uint64_t acc = 0;
        for (int fi : incident_[v]) {
          const VertexMask f = faces_[static_cast<std::size_t>(fi)];
          std::uint64_t others = 0;
          for (VertexMask b = f; b != 0; b &= b - 1) {
            const auto u = static_cast<std::size_t>(std::countr_zero(b));
            if (u != v) others += hashed[u];
          }
          acc += mix(others ^ (static_cast<std::uint64_t>(std::popcount(f))
                               << 56));
        }
        sig[v] = acc;
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto ua = static_cast<std::size_t>(a);
        const auto ub = static_cast<std::size_t>(b);
        if (color[ua] != color[ub]) return color[ua] < color[ub];
        return sig[ua] < sig[ub];
      });
      std::vector<int> next(n);
      int rank = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const auto v = static_cast<std::size_t>(order[i]);
        if (i > 0) {
          const auto p = static_cast<std::size_t>(order[i - 1]);
          if (color[p] != color[v] || sig[p] != sig[v]) ++rank;
        }
        next[v] = rank;
      }
      const int new_cells = n == 0 ? 0 : rank + 1;
      color.swap(next);
      if (new_cells == cells) break;
      cells = new_cells;
    }
  }

  // Twin classes among vertices of equal refined color.
  void compute_twins(const std::vector<int>& color) {
    const auto n = static_cast<std::size_t>(n_);
    twin_.resize(n);
    std::iota(twin_.begin(), twin_.end(), 0);
    for (std::size_t u = 0; u < n; ++u) {
      if (twin_[u] != static_cast<int>(u)) continue;
      for (std::size_t w = u + 1; w < n; ++w) {
        if (twin_[w] != static_cast<int>(w) || color[w] != color[u]) continue;
        if (swap_is_automorphism(static_cast<int>(u), static_cast<int>(w))) {
          twin_[w] = static_cast<int>(u);
        }
      }
    }
  }

  bool swap_is_automorphism(int u, int w) const {
    const VertexMask bu = VertexMask{1} << u;
    const VertexMask bw = VertexMask{1} << w;
    for (VertexMask f : faces_) {
      const bool hu = (f & bu) != 0;
      const bool hw = (f & bw) != 0;
      if (hu == hw) continue;
      const VertexMask g = f ^ bu ^ bw;
      if (!std::binary_search(faces_.begin(), faces_.end(), g, mask_less)) {
        return false;
      }
    }
    return true;
  }

  void search(std::vector<int> color) {
    refine(color);
    const auto n = static_cast<std::size_t>(n_);
    // First non-singleton cell.
    std::vector<int> cell_size(n, 0);
    for (int c : color) ++cell_size[static_cast<std::size_t>(c)];
    int target = -1;
    for (std::size_t c = 0; c < n; ++c) {
      if (cell_size[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    }
    if (target < 0) {
      leaf(color);
      return;
    }
    std::vector<int> tried;
    for (std::size_t v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      const int cls = twin_[v];
      if (std::find(tried.begin(), tried.end(), cls) != tried.end()) continue;
      tried.push_back(cls);
      std::vector<int> child(n);
      for (std::size_t u = 0; u < n; ++u) child[u] = 2 * color[u] + 1;
      child[v] = 2 * color[v];
      search(std::move(child));
    }
  }

  void leaf(const std::vector<int>& color) {
    std::vector<VertexMask> cert;
    cert.reserve(faces_.size());
    for (VertexMask f : faces_) {
      VertexMask g = 0;
      for (VertexMask b = f; b != 0; b &= b - 1) {
        g |= VertexMask{1}
             << color[static_cast<std::size_t>(std::countr_zero(b))];
      }
      cert.push_back(g);
    }
    std::sort(cert.begin(), cert.end(), mask_less);
    if (!have_best_ || std::lexicographical_compare(
                           cert.begin(), cert.end(), best_.begin(),
                           best_.end(), mask_less)) {
      best_ = std::move(cert);
      best_color_ = color;
      have_best_ = true;
    }
  }

  void run() {
    std::vector<int> color(static_cast<std::size_t>(n_), 0);
    refine(color);
    compute_twins(color);
    search(std::move(color));
  }

  const std::vector<VertexMask>& best() const { return best_; }
  const std::vector<int>& best_color() const { return best_color_; }

 private:
  static int count_cells(std::vector<int> color) {
    std::sort(color.begin(), color.end());
    return static_cast<int>(
        std::unique(color.begin(), color.end()) - color.begin());
  }

  int n_ = 0;
  std::vector<Vertex> verts_;
  std::vector<VertexMask> faces_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> twin_;
  std::vector<VertexMask> best_;
  std::vector<int> best_color_;
  bool have_best_ = false;
};

}  // namespace

std::uint64_t CanonicalKey::digest() const {
  // FNV-1a over a fixed little-endian serialization; stable across runs.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::uint64_t word) {
    for (int i = 0; i < 8; ++i) {
      h ^= (word >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  feed(canonical ? 1 : 0);
  feed(static_cast<std::uint64_t>(vertex_count));
  for (VertexMask f : faces) feed(f);
  return h;
}

std::string CanonicalKey::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(digest()));
  return buf;
}

SimplicialComplex CanonicalKey::to_complex() const {
  std::vector<Face> fs;
  fs.reserve(faces.size());
  for (VertexMask f : faces) fs.emplace_back(f);
  return SimplicialComplex::from_closed_faces(std::move(fs), vertex_count);
}

CanonicalForm canonical_form(const SimplicialComplex& c, int bound) {
  const int n = c.vertex_count();
  if (n > bound) {
    throw Error(ErrorCode::kCapacity,
                "position has " + std::to_string(n) +
                    " vertices, above canonicalization bound " +
                    std::to_string(bound));
  }
  CanonicalForm out;
  out.key.canonical = true;
  out.key.vertex_count = n;
  out.labeling.assign(static_cast<std::size_t>(c.ground_size()), 0);
  if (n == 0) return out;
  Canonicalizer canon(c);
  canon.run();
  out.key.faces = canon.best();
  const auto& verts = canon.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    out.labeling[verts[i]] = static_cast<Vertex>(canon.best_color()[i]);
  }
  return out;
}

CanonicalKey canonical_key(const SimplicialComplex& c, int bound) {
  return canonical_form(c, bound).key;
}

CanonicalKey labeled_key(const SimplicialComplex& c) {
  CanonicalKey k;
  k.canonical = false;
  k.vertex_count = c.ground_size();
  k.faces.reserve(c.face_count());
  for (Face f : c.faces()) k.faces.push_back(f.bits());
  return k;
}

CanonicalKey position_key(const SimplicialComplex& c, int bound) {
  if (c.vertex_count() > bound) return labeled_key(c);
  return canonical_key(c, bound);
}

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.face_count() != b.face_count()) {
    return false;
  }
  return canonical_key(a, kMaxVertices) == canonical_key(b, kMaxVertices);
}

std::vector<int> refined_colors(const SimplicialComplex& c) {
  std::vector<int> out(static_cast<std::size_t>(c.ground_size()), -1);
  Canonicalizer canon(c);
  std::vector<int> color(static_cast<std::size_t>(canon.vertex_count()), 0);
  canon.refine(color);
  const auto& verts = canon.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) out[verts[i]] = color[i];
  return out;
}

}  // namespace chomp
