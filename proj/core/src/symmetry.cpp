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

#include "chomp/symmetry.hpp"

#include <algorithm>
#include <numeric>

#include "chomp/canonical.hpp"
#include "chomp/error.hpp"
#include "json.hpp"

namespace chomp {

Involution Involution::identity(int ground_size) {
  std::vector<Vertex> m(static_cast<std::size_t>(ground_size));
  std::iota(m.begin(), m.end(), Vertex{0});
  return Involution(std::move(m));
}

Involution Involution::from_pairs(
    int ground_size, std::span<const std::pair<Vertex, Vertex>> pairs) {
  Involution t = identity(ground_size);
  for (auto [u, v] : pairs) {
    if (u >= static_cast<Vertex>(ground_size) ||
        v >= static_cast<Vertex>(ground_size)) {
      throw Error(ErrorCode::kInvalidInput, "involution pair out of range");
    }
    t.mapping_[u] = v;
    t.mapping_[v] = u;
  }
  return t;
}

Face Involution::apply(Face f) const {
  VertexMask out = 0;
  for (VertexMask b = f.bits(); b != 0; b &= b - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(b));
    out |= VertexMask{1} << mapping_[v];
  }
  return Face(out);
}

std::vector<std::pair<Vertex, Vertex>> Involution::pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t v = 0; v < mapping_.size(); ++v) {
    if (mapping_[v] > v) out.emplace_back(static_cast<Vertex>(v), mapping_[v]);
  }
  return out;
}

VertexMask Involution::fixed_vertices(VertexMask among) const {
  VertexMask out = 0;
  for (VertexMask b = among; b != 0; b &= b - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(b));
    if (v < mapping_.size() && mapping_[v] == v) out |= b & (~b + 1);
  }
  return out;
}

bool Involution::is_identity() const {
  for (std::size_t v = 0; v < mapping_.size(); ++v) {
    if (mapping_[v] != v) return false;
  }
  return true;
}

const char* to_string(InvolutionStatus status) {
  switch (status) {
    case InvolutionStatus::kValid:
      return "valid";
    case InvolutionStatus::kNotOrder2:
      return "not-order-2";
    case InvolutionStatus::kNotFacePreserving:
      return "not-face-preserving";
    case InvolutionStatus::kFixedSetNotComplex:
      return "fixed-set-not-complex";
  }
  return "unknown";
}

const char* to_string(SimplestStatus status) {
  switch (status) {
    case SimplestStatus::kSimplest:
      return "simplest";
    case SimplestStatus::kNoReductionFound:
      return "no-reduction-found";
    case SimplestStatus::kBudgetExhausted:
      return "budget-exhausted";
  }
  return "unknown";
}

InvolutionCheck validate_involution(const SimplicialComplex& c,
                                    const Involution& t) {
  const VertexMask verts = c.vertex_mask();
  const auto& m = t.mapping();
  for (VertexMask b = verts; b != 0; b &= b - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(b));
    if (v >= m.size() || m[v] >= m.size() || ((verts >> m[v]) & 1U) == 0 ||
        m[m[v]] != v) {
      return {false, InvolutionStatus::kNotOrder2};
    }
  }
  for (Face f : c.faces()) {
    if (!c.contains(t.apply(f))) {
      return {false, InvolutionStatus::kNotFacePreserving};
    }
  }
  // The setwise-fixed faces are closed iff each of them has only fixed
  // vertices (its 1-subsets must be fixed too).
  const VertexMask fixed = t.fixed_vertices(verts);
  for (Face f : c.faces()) {
    if (t.apply(f) == f && (f.bits() & ~fixed) != 0) {
      return {false, InvolutionStatus::kFixedSetNotComplex};
    }
  }
  return {true, InvolutionStatus::kValid};
}

SimplicialComplex fixed_point_set(const SimplicialComplex& c,
                                  const Involution& t) {
  const auto check = validate_involution(c, t);
  if (!check.valid) {
    throw Error(ErrorCode::kInvalidInput,
                std::string("not a valid involution: ") +
                    to_string(check.reason));
  }
  return c.induced(t.fixed_vertices(c.vertex_mask())).compacted();
}

namespace {

// Backtracking over involutions that respect the refinement coloring. A
// partial assignment is extended one vertex at a time (pair it with a later
// same-colored non-adjacent vertex, or fix it) and every face whose vertices
// are all assigned must map to a face.
class InvolutionSearch {
 public:
  enum class Mode { kBest, kFirst, kAll };

  InvolutionSearch(const SimplicialComplex& c, Mode mode,
                   std::uint64_t node_budget, std::size_t limit)
      : c_(c), mode_(mode), budget_(node_budget), limit_(limit) {
    verts_ = c.vertices();
    colors_ = refined_colors(c);
    adj_ = c.adjacency();
    const auto g = static_cast<std::size_t>(c.ground_size());
    incident_.resize(g);
    const auto faces = c.faces();
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (faces[i].size() < 2) continue;
      for (Vertex v : faces[i].members()) {
        incident_[v].push_back(static_cast<int>(i));
      }
    }
    map_.assign(g, kUnassigned);
    for (Vertex v : verts_) {
      ++class_unassigned_[colors_[v]];
    }
  }

  ReductionSearch run_best() {
    recurse(0, 0);
    ReductionSearch out;
    out.exhaustive = !aborted_;
    out.nodes = nodes_;
    if (best_) out.best = std::move(best_);
    return out;
  }

  ReductionSearch run_first() {
    ReductionSearch out;
    // Cheap pass: twin transpositions.
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      for (std::size_t j = i + 1; j < verts_.size(); ++j) {
        const Vertex u = verts_[i];
        const Vertex w = verts_[j];
        if (colors_[u] != colors_[w] || ((adj_[u] >> w) & 1U) != 0) continue;
        std::pair<Vertex, Vertex> p{u, w};
        Involution t = Involution::from_pairs(
            c_.ground_size(), std::span<const std::pair<Vertex, Vertex>>(&p, 1));
        ++nodes_;
        if (validate_involution(c_, t).valid) {
          out.best = Reduction{t, fixed_point_set(c_, t)};
          out.nodes = nodes_;
          return out;
        }
      }
    }
    recurse(0, 0);
    out.exhaustive = !aborted_;
    out.nodes = nodes_;
    if (!all_.empty()) {
      out.best = Reduction{all_.front(), fixed_point_set(c_, all_.front())};
    }
    return out;
  }

  std::vector<Involution> run_all() {
    recurse(0, 0);
    return std::move(all_);
  }

 private:
  static constexpr Vertex kUnassigned = ~Vertex{0};

  bool done() const {
    if (aborted_) return true;
    if (mode_ == Mode::kFirst) return !all_.empty();
    if (mode_ == Mode::kAll) return all_.size() >= limit_;
    return false;
  }

  // Faces touching `touched` with all vertices assigned must map to faces.
  bool consistent(VertexMask touched, VertexMask assigned) const {
    const auto faces = c_.faces();
    for (VertexMask b = touched; b != 0; b &= b - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(b));
      for (int fi : incident_[v]) {
        const Face f = faces[static_cast<std::size_t>(fi)];
        if ((f.bits() & ~assigned) != 0) continue;
        VertexMask img = 0;
        for (VertexMask m = f.bits(); m != 0; m &= m - 1) {
          img |= VertexMask{1} << map_[static_cast<std::size_t>(
                     std::countr_zero(m))];
        }
        if (!c_.contains(Face(img))) return false;
      }
    }
    return true;
  }

  int parity_lower_bound() const {
    int lb = 0;
    for (const auto& [color, count] : class_unassigned_) lb += count & 1;
    return lb;
  }

  void recurse(std::size_t index, int fixed_count) {
    if (done()) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    while (index < verts_.size() && map_[verts_[index]] != kUnassigned) {
      ++index;
    }
    if (mode_ == Mode::kBest && best_ &&
        fixed_count + parity_lower_bound() > best_fixed_) {
      return;
    }
    if (index == verts_.size()) {
      leaf(fixed_count);
      return;
    }
    const Vertex v = verts_[index];
    const int color = colors_[v];
    assigned_ |= VertexMask{1} << v;
    --class_unassigned_[color];
    // Pair v with a later same-colored vertex first.
    for (std::size_t j = index + 1; j < verts_.size() && !done(); ++j) {
      const Vertex w = verts_[j];
      if (map_[w] != kUnassigned || colors_[w] != color) continue;
      if (((adj_[v] >> w) & 1U) != 0) continue;  // swapped pair on an edge
      map_[v] = w;
      map_[w] = v;
      const VertexMask wbit = VertexMask{1} << w;
      assigned_ |= wbit;
      --class_unassigned_[color];
      if (consistent((VertexMask{1} << v) | wbit, assigned_)) {
        recurse(index + 1, fixed_count);
      }
      ++class_unassigned_[color];
      assigned_ &= ~wbit;
      map_[w] = kUnassigned;
    }
    if (!done()) {
      map_[v] = v;
      if (consistent(VertexMask{1} << v, assigned_)) {
        recurse(index + 1, fixed_count + 1);
      }
    }
    map_[v] = kUnassigned;
    ++class_unassigned_[color];
    assigned_ &= ~(VertexMask{1} << v);
  }

  void leaf(int fixed_count) {
    if (fixed_count == static_cast<int>(verts_.size())) return;  // identity
    std::vector<Vertex> m(static_cast<std::size_t>(c_.ground_size()));
    std::iota(m.begin(), m.end(), Vertex{0});
    for (Vertex v : verts_) m[v] = map_[v];
    Involution t(std::move(m));
    if (mode_ != Mode::kBest) {
      all_.push_back(std::move(t));
      return;
    }
    SimplicialComplex fixed = c_.induced(t.fixed_vertices(c_.vertex_mask()))
                                  .compacted();
    CanonicalKey key = position_key(fixed, kMaxVertices);
    if (!best_ || fixed_count < best_fixed_ ||
        (fixed_count == best_fixed_ && key < best_key_)) {
      best_ = Reduction{std::move(t), std::move(fixed)};
      best_fixed_ = fixed_count;
      best_key_ = std::move(key);
    }
  }

  const SimplicialComplex& c_;
  Mode mode_;
  std::uint64_t budget_;
  std::size_t limit_;
  std::vector<Vertex> verts_;
  std::vector<int> colors_;
  std::vector<VertexMask> adj_;
  std::vector<std::vector<int>> incident_;
  std::vector<Vertex> map_;
  struct ClassCounts {
    std::vector<std::pair<int, int>> data;
    int& operator[](int color) {
      for (auto& [c, n] : data) {
        if (c == color) return n;
      }
      data.emplace_back(color, 0);
      return data.back().second;
    }
    std::vector<std::pair<int, int>>::const_iterator begin() const {
      return data.begin();
    }
    std::vector<std::pair<int, int>>::const_iterator end() const {
      return data.end();
    }
  } class_unassigned_;
  VertexMask assigned_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::optional<Reduction> best_;
  int best_fixed_ = 0;
  CanonicalKey best_key_;
  std::vector<Involution> all_;
};

bool has_nontrivial_color_class(const SimplicialComplex& c) {
  auto colors = refined_colors(c);
  std::vector<int> seen;
  for (int col : colors) {
    if (col < 0) continue;
    if (std::find(seen.begin(), seen.end(), col) != seen.end()) return true;
    seen.push_back(col);
  }
  return false;
}

}  // namespace

ReductionSearch search_reductions(const SimplicialComplex& c,
                                  std::uint64_t node_budget) {
  if (!has_nontrivial_color_class(c)) return {};
  InvolutionSearch s(c, InvolutionSearch::Mode::kBest, node_budget, 0);
  return s.run_best();
}

std::optional<Reduction> find_reduction(const SimplicialComplex& c) {
  return search_reductions(c).best;
}

ReductionSearch find_any_reduction(const SimplicialComplex& c,
                                   std::uint64_t node_budget) {
  if (!has_nontrivial_color_class(c)) return {};
  InvolutionSearch s(c, InvolutionSearch::Mode::kFirst, node_budget, 0);
  return s.run_first();
}

std::vector<Involution> valid_involutions(const SimplicialComplex& c,
                                          std::size_t limit) {
  if (limit == 0 || !has_nontrivial_color_class(c)) return {};
  InvolutionSearch s(c, InvolutionSearch::Mode::kAll,
                     kDefaultInvolutionNodeBudget, limit);
  return s.run_all();
}

std::string ReductionTrace::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& step : steps) {
    nlohmann::json j;
    auto pairs = nlohmann::json::array();
    for (auto [u, v] : step.involution.pairs()) pairs.push_back({u, v});
    j["pairs"] = std::move(pairs);
    std::vector<Vertex> fixed;
    for (std::size_t v = 0; v < step.involution.mapping().size(); ++v) {
      if (step.involution.mapping()[v] == v) {
        fixed.push_back(static_cast<Vertex>(v));
      }
    }
    j["fixed_vertices"] = fixed;
    arr.push_back(std::move(j));
  }
  return arr.dump();
}

SimplicialComplex ReductionTrace::replay(const SimplicialComplex& c) const {
  SimplicialComplex cur = c;
  for (const auto& step : steps) cur = fixed_point_set(cur, step.involution);
  return cur;
}

SimplestResult reduce_to_simplest(const SimplicialComplex& c,
                                  ReduceBudget budget) {
  SimplestResult out;
  out.position = c;
  for (int step = 0;; ++step) {
    auto found = search_reductions(out.position, budget.node_budget);
    if (!found.best) {
      out.status = found.exhaustive ? SimplestStatus::kSimplest
                                    : SimplestStatus::kNoReductionFound;
      return out;
    }
    if (step >= budget.max_steps) {
      out.status = SimplestStatus::kBudgetExhausted;
      return out;
    }
    out.trace.steps.push_back(
        ReductionStep{found.best->involution, found.best->fixed_set});
    out.position = std::move(found.best->fixed_set);
  }
}

bool is_certified_simplest(const SimplicialComplex& c) {
  const auto found = search_reductions(c);
  return !found.best && found.exhaustive;
}

}  // namespace chomp
