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

#include "chomp/closed_forms.hpp"

#include <algorithm>
#include <bit>

#include "chomp/symmetry.hpp"

namespace chomp {
namespace {

Nimber parity_table(bool v_odd, bool e_odd) {
  return static_cast<Nimber>((v_odd ? 1 : 0) | (e_odd ? 2 : 0));
}

Vertex lowest(VertexMask m) { return static_cast<Vertex>(std::countr_zero(m)); }

// Follows a hanging path from `start` (entered from `from`). Returns its
// vertex count, or nullopt if it branches or runs into `stop`.
std::optional<int> walk_tail(const std::vector<VertexMask>& adj, Vertex from,
                             Vertex start, VertexMask stop) {
  int len = 1;
  Vertex prev = from;
  Vertex cur = start;
  while (true) {
    const VertexMask nb = adj[cur] & ~(VertexMask{1} << prev);
    const int d = std::popcount(nb);
    if (d == 0) return len;
    if (d > 1 || (nb & stop) != 0) return std::nullopt;
    prev = cur;
    cur = lowest(nb);
    ++len;
  }
}

struct Evaluation {
  std::vector<FormulaResult> rules;
};

// Collects matching rules; stops at the first exact one when `first_exact`.
std::vector<FormulaResult> collect_rules(const SimplicialComplex& c,
                                         bool first_exact) {
  std::vector<FormulaResult> out;
  auto add = [&](FormulaResult r) {
    if (!r.applies()) return false;
    out.push_back(std::move(r));
    return first_exact && out.back().is_exact();
  };
  if (!c.is_graph()) return out;
  const GraphStats s = graph_stats(c);

  if (auto parts = complete_npartite_parts(c)) {
    const bool all_singletons =
        std::all_of(parts->begin(), parts->end(), [](int p) { return p == 1; });
    if (all_singletons && add(complete_graph_value(s.vertices))) return out;
    if (add(complete_npartite_value(*parts))) return out;
  }
  if (s.bipartition) {
    if (s.cycle_count == 0 && add(forest_value(s.vertices, s.components))) {
      return out;
    }
    if (s.components == 1 && s.cycle_count == 1 &&
        add(even_cycle_pseudotree_value(s.vertices))) {
      return out;
    }
    if (add(bipartite_value(s.vertices, s.edges))) return out;
    return out;
  }
  if (s.components != 1) return out;

  if (s.cycle_count == 1) {
    if (s.edges == s.vertices &&
        std::all_of(s.degrees.begin(), s.degrees.end(),
                    [](int d) { return d == 0 || d == 2; })) {
      if (add(FormulaResult::exact(0, "cycle"))) return out;
    }
    if (auto g = gmk_classify(c)) {
      Nimber v = 0;
      if (g->m == 0 && g->k == 0) {
        v = 4;
      } else if (g->k == 0) {
        v = g->m % 2 == 1 ? 3 : 0;
      } else {
        v = gmk_value(g->m, g->k).value;
      }
      if (add(FormulaResult::exact(v, "gmk"))) return out;
    }
    // Remaining odd-cycle rules need simplest form; reduction preserves the
    // value and keeps the odd cycle pointwise fixed.
    const SimplestResult reduced = reduce_to_simplest(c);
    auto shape = pseudotree_classify(reduced.position, false);
    if (shape) {
      shape->simplest = reduced.status == SimplestStatus::kSimplest;
      if (shape->vertex_count == static_cast<int>(shape->cycle.size())) {
        if (shape->simplest &&
            add(FormulaResult::exact(0, "cycle (reduced)"))) {
          return out;
        }
      }
      if (add(hairball_value(*shape))) return out;
      if (add(single_attachment_value(*shape))) return out;
    }
    return out;
  }
  if (s.cycle_count == 2) {
    if (add(figure8_value(c))) return out;
    if (add(theta_value(c))) return out;
  }
  return out;
}

}  // namespace

FormulaResult complete_graph_value(int n) {
  if (n < 0) return FormulaResult::not_applicable("complete");
  return FormulaResult::exact(static_cast<Nimber>(n % 3), "complete");
}

FormulaResult complete_npartite_value(std::span<const int> parts) {
  int odd = 0;
  for (int p : parts) {
    if (p < 1) return FormulaResult::not_applicable("complete_npartite");
    odd += p % 2;
  }
  return FormulaResult::exact(static_cast<Nimber>(odd % 3),
                              "complete_npartite");
}

FormulaResult bipartite_value(int vertices, int edges) {
  return FormulaResult::exact(parity_table(vertices % 2 == 1, edges % 2 == 1),
                              "bipartite");
}

FormulaResult forest_value(int vertices, int components) {
  const bool v_odd = vertices % 2 == 1;
  const Nimber v = components % 2 == 0 ? (v_odd ? 3 : 0) : (v_odd ? 1 : 2);
  return FormulaResult::exact(v, "forest");
}

FormulaResult even_cycle_pseudotree_value(int vertices) {
  return FormulaResult::exact(vertices % 2 == 1 ? 3 : 0,
                              "even_cycle_pseudotree");
}

DegreeWitnesses degree_witnesses(const SimplicialComplex& g) {
  DegreeWitnesses w;
  for (Vertex v : g.vertices()) {
    const int d = g.degree(v);
    if (d % 2 == 0 && !w.even_degree) w.even_degree = v;
    if (d % 2 == 1 && !w.odd_degree) w.odd_degree = v;
  }
  return w;
}

std::optional<std::vector<int>> complete_npartite_parts(
    const SimplicialComplex& g) {
  if (!g.is_graph()) return std::nullopt;
  const VertexMask verts = g.vertex_mask();
  const auto adj = g.adjacency();
  std::vector<VertexMask> classes;
  for (VertexMask b = verts; b != 0; b &= b - 1) {
    const Vertex v = lowest(b);
    const VertexMask cls = verts & ~adj[v];
    for (VertexMask u = cls; u != 0; u &= u - 1) {
      if ((verts & ~adj[lowest(u)]) != cls) return std::nullopt;
    }
    if (std::find(classes.begin(), classes.end(), cls) == classes.end()) {
      classes.push_back(cls);
    }
  }
  std::vector<int> parts;
  for (VertexMask cls : classes) parts.push_back(std::popcount(cls));
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

int PseudotreeShape::attachment_count() const {
  return static_cast<int>(std::count_if(cycle_degrees.begin(),
                                        cycle_degrees.end(),
                                        [](int d) { return d >= 3; }));
}

std::optional<PseudotreeShape> pseudotree_classify(const SimplicialComplex& c,
                                                   bool certify_simplest) {
  if (!c.is_graph() || c.empty()) return std::nullopt;
  const GraphStats s = graph_stats(c);
  if (s.components != 1 || s.edges != s.vertices) return std::nullopt;
  const auto adj = c.adjacency();

  // Strip leaves until only the cycle remains.
  VertexMask alive = c.vertex_mask();
  std::vector<int> deg = s.degrees;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexMask b = alive; b != 0; b &= b - 1) {
      const Vertex v = lowest(b);
      if (deg[v] <= 1) {
        alive &= ~(VertexMask{1} << v);
        for (VertexMask n = adj[v] & alive; n != 0; n &= n - 1) {
          --deg[lowest(n)];
        }
        changed = true;
      }
    }
  }
  const VertexMask cycle = alive;

  PseudotreeShape shape;
  shape.vertex_count = s.vertices;
  Vertex prev = lowest(cycle);
  Vertex cur = prev;
  shape.cycle.push_back(cur);
  cur = lowest(adj[cur] & cycle);
  while (cur != shape.cycle.front()) {
    shape.cycle.push_back(cur);
    const VertexMask next =
        adj[cur] & cycle & ~(VertexMask{1} << prev);
    prev = cur;
    cur = lowest(next);
  }

  shape.hairball = true;
  for (Vertex x : shape.cycle) {
    shape.cycle_degrees.push_back(s.degrees[x]);
    std::vector<int> tails;
    bool paths = true;
    for (VertexMask n = adj[x] & ~cycle; n != 0; n &= n - 1) {
      if (auto len = walk_tail(adj, x, lowest(n), cycle)) {
        tails.push_back(*len);
      } else {
        paths = false;
      }
    }
    std::sort(tails.begin(), tails.end());
    shape.tails.push_back(std::move(tails));
    shape.tails_are_paths.push_back(paths);
    if (!paths) shape.hairball = false;
  }

  int heavy = 0;
  std::optional<Vertex> a;
  bool others_two = true;
  for (std::size_t i = 0; i < shape.cycle.size(); ++i) {
    const int d = shape.cycle_degrees[i];
    if (d == 3) {
      ++heavy;
      a = shape.cycle[i];
    } else if (d != 2) {
      others_two = false;
    }
  }
  if (heavy == 1 && others_two) {
    shape.attach_a = a;
    shape.attach_b = lowest(adj[*a] & ~cycle);
    shape.degree_b = s.degrees[*shape.attach_b];
  }
  if (certify_simplest) shape.simplest = is_certified_simplest(c);
  return shape;
}

FormulaResult single_attachment_value(const PseudotreeShape& shape) {
  if (!shape.odd_cycle() || !shape.attach_a || !shape.simplest) {
    return FormulaResult::not_applicable("single_attachment");
  }
  if (shape.degree_b % 2 == 1) {
    return FormulaResult::lower_bound(4, "single_attachment");
  }
  return FormulaResult::exact(shape.vertex_count % 2 == 1 ? 3 : 0,
                              "single_attachment");
}

FormulaResult gmk_value(int m, int k) {
  if (m < 1 || k < 1) return FormulaResult::not_applicable("gmk");
  const int a = (m - 1) / 3;
  const int b = (k - 1) / 3;
  const int i = (m - 1) % 3 + 1;
  const int j = (k - 1) % 3 + 1;
  const auto n = static_cast<Nimber>((a ^ b) + 1);
  return FormulaResult::exact((i + j) % 2 == 0 ? 4 * n : 4 * n + 2, "gmk");
}

Nimber GmkRecurrence::operator()(int m, int k) {
  if (m == 0 && k == 0) return 4;
  if (k == 0) return m % 2 == 1 ? 3 : 0;
  if (m == 0) return k % 2 == 1 ? 3 : 0;
  if (auto it = memo_.find({m, k}); it != memo_.end()) return it->second;

  std::vector<Nimber> reach = {0, 1, 2, 3};
  const Nimber left = (*this)(m - 1, k);
  const Nimber up = (*this)(m, k - 1);
  reach.insert(reach.end(), {left, left ^ 1U, up, up ^ 1U});
  for (int i = 0; i <= m - 2; ++i) {
    const Nimber g = (*this)(i, k);
    reach.insert(reach.end(), {g ^ 1U, g ^ 2U});
  }
  for (int j = 0; j <= k - 2; ++j) {
    const Nimber g = (*this)(m, j);
    reach.insert(reach.end(), {g ^ 1U, g ^ 2U});
  }
  const Nimber v = mex(reach);
  memo_.emplace(std::make_pair(m, k), v);
  return v;
}

Nimber gmk_recurrence(int m, int k, GmkRecurrence& memo) { return memo(m, k); }

std::optional<GmkShape> gmk_classify(const SimplicialComplex& c) {
  auto shape = pseudotree_classify(c, false);
  if (!shape || !shape->odd_cycle() || !shape->attach_a) return std::nullopt;
  const auto adj = c.adjacency();
  const Vertex a = *shape->attach_a;
  const Vertex b = *shape->attach_b;
  if (shape->degree_b > 3) return std::nullopt;
  std::vector<int> tails;
  for (VertexMask n = adj[b] & ~(VertexMask{1} << a); n != 0; n &= n - 1) {
    auto len = walk_tail(adj, b, lowest(n), VertexMask{1} << a);
    if (!len) return std::nullopt;
    tails.push_back(*len);
  }
  std::sort(tails.rbegin(), tails.rend());
  GmkShape g;
  g.cycle = static_cast<int>(shape->cycle.size());
  if (!tails.empty()) g.m = tails[0];
  if (tails.size() > 1) g.k = tails[1];
  return g;
}

FormulaResult hairball_value(const PseudotreeShape& shape) {
  const bool bare = shape.vertex_count == static_cast<int>(shape.cycle.size());
  if (!shape.hairball || !shape.odd_cycle() || !shape.simplest || bare) {
    return FormulaResult::not_applicable("hairball");
  }
  if (shape.vertex_count % 2 == 1) return FormulaResult::exact(3, "hairball");
  int loaded = 0;
  const std::vector<int>* tails = nullptr;
  for (const auto& t : shape.tails) {
    if (!t.empty()) {
      ++loaded;
      tails = &t;
    }
  }
  bool consecutive = false;
  if (loaded == 1) {
    const auto& t = *tails;
    consecutive = (t.size() == 1 && t[0] == 1) ||
                  (t.size() == 2 && t[1] == t[0] + 1);
  }
  return FormulaResult::exact(consecutive ? 4 : 0, "hairball");
}

FormulaResult figure8_value(const SimplicialComplex& c) {
  const auto na = FormulaResult::not_applicable("figure8");
  if (!c.is_graph() || c.empty()) return na;
  const GraphStats s = graph_stats(c);
  if (s.components != 1 || s.edges != s.vertices + 1) return na;
  int fours = 0;
  for (Vertex v : c.vertices()) {
    const int d = s.degrees[v];
    if (d == 4) {
      ++fours;
    } else if (d != 2) {
      return na;
    }
  }
  return fours == 1 ? FormulaResult::exact(1, "figure8") : na;
}

FormulaResult theta_value(const SimplicialComplex& c) {
  const auto na = FormulaResult::not_applicable("theta");
  if (!c.is_graph() || c.empty()) return na;
  const GraphStats s = graph_stats(c);
  if (s.components != 1 || s.edges != s.vertices + 1) return na;
  VertexMask branch = 0;
  for (Vertex v : c.vertices()) {
    const int d = s.degrees[v];
    if (d == 3) {
      branch |= VertexMask{1} << v;
    } else if (d != 2) {
      return na;
    }
  }
  if (std::popcount(branch) != 2) return na;
  // All three walks out of A must arrive at B; a walk back to A means two
  // cycles joined by a path instead.
  const auto adj = c.adjacency();
  const Vertex a = lowest(branch);
  const Vertex b = lowest(branch & (branch - 1));
  for (VertexMask n = adj[a]; n != 0; n &= n - 1) {
    Vertex prev = a;
    Vertex cur = lowest(n);
    while (((branch >> cur) & 1U) == 0) {
      const Vertex next = lowest(adj[cur] & ~(VertexMask{1} << prev));
      prev = cur;
      cur = next;
    }
    if (cur != b) return na;
  }
  return FormulaResult::exact(s.vertices % 2 == 1 ? 1 : 2, "theta");
}

std::vector<FormulaResult> all_rules(const SimplicialComplex& c) {
  return collect_rules(c, false);
}

FormulaResult evaluate(const SimplicialComplex& c) {
  const auto rules = collect_rules(c, false);
  for (const auto& r : rules) {
    if (r.is_exact()) return r;
  }
  for (const auto& r : rules) {
    if (r.kind == FormulaKind::kLowerBound) return r;
  }
  return FormulaResult::not_applicable("none");
}

std::optional<Nimber> closed_form_value(const SimplicialComplex& c) {
  const auto rules = collect_rules(c, true);
  if (!rules.empty() && rules.back().is_exact()) return rules.back().value;
  return std::nullopt;
}

}  // namespace chomp
