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

#include "chomp/enumerate.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "chomp/canonical.hpp"

namespace chomp {
namespace {

using Edges = std::vector<std::pair<Vertex, Vertex>>;

// Appends a rooted tree whose root is `root`, new vertices from `next`.
Vertex graft(Edges& edges, const std::vector<int>& parent, Vertex root,
             Vertex next) {
  std::vector<Vertex> ids(parent.size());
  ids[0] = root;
  for (std::size_t i = 1; i < parent.size(); ++i) {
    ids[i] = next++;
    edges.emplace_back(ids[static_cast<std::size_t>(parent[i])], ids[i]);
  }
  return next;
}

void cycle_edges(Edges& edges, int cycle) {
  for (int i = 0; i < cycle; ++i) {
    edges.emplace_back(static_cast<Vertex>(i),
                       static_cast<Vertex>((i + 1) % cycle));
  }
}

class Deduper {
 public:
  void add(const SimplicialComplex& c) {
    if (seen_.insert(canonical_key(c, kMaxVertices)).second) out_.push_back(c);
  }
  std::vector<SimplicialComplex> take() { return std::move(out_); }

 private:
  std::set<CanonicalKey> seen_;
  std::vector<SimplicialComplex> out_;
};

// Multisets of lengths >= 1 with sum <= budget, as ascending lists.
void tail_multisets(int budget, int min_len, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  for (int len = min_len; len <= budget; ++len) {
    cur.push_back(len);
    tail_multisets(budget - len, len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<std::vector<int>>& rooted_trees(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<int>>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  if (n < 1) throw Error(ErrorCode::kInvalidInput, "rooted trees need n >= 1");

  // Subtree catalog for every smaller size, computed without the lock held
  // recursively: sizes are filled bottom-up.
  for (int s = 1; s <= n; ++s) {
    if (cache.contains(s)) continue;
    std::vector<std::vector<int>> trees;
    // Children as a non-increasing sequence of (size, index) pairs.
    std::vector<std::pair<int, std::size_t>> kids;
    std::function<void(int, int, std::size_t)> pick = [&](int left, int max_size,
                                                          std::size_t max_idx) {
      if (left == 0) {
        std::vector<int> parent = {-1};
        for (auto [size, idx] : kids) {
          const auto& sub = cache.at(size)[idx];
          const int base = static_cast<int>(parent.size());
          parent.push_back(0);
          for (std::size_t i = 1; i < sub.size(); ++i) {
            parent.push_back(base + sub[i]);
          }
        }
        trees.push_back(std::move(parent));
        return;
      }
      for (int size = std::min(left, max_size); size >= 1; --size) {
        const auto& options = cache.at(size);
        const std::size_t top =
            size == max_size ? max_idx : options.size() - 1;
        for (std::size_t idx = 0; idx <= top && idx < options.size(); ++idx) {
          kids.emplace_back(size, idx);
          pick(left - size, size, idx);
          kids.pop_back();
        }
      }
    };
    pick(s - 1, s - 1, static_cast<std::size_t>(-1));
    cache.emplace(s, std::move(trees));
  }
  return cache.at(n);
}

std::vector<SimplicialComplex> pseudotrees(int cycle, int max_vertices) {
  Deduper dedupe;
  const int extra = max_vertices - cycle;
  if (cycle < 3 || extra < 0) return {};
  std::vector<int> sizes(static_cast<std::size_t>(cycle), 1);
  std::vector<std::size_t> pick(static_cast<std::size_t>(cycle), 0);
  std::function<void(std::size_t, int)> sizes_at = [&](std::size_t i, int left) {
    if (i == sizes.size()) {
      std::function<void(std::size_t)> trees_at = [&](std::size_t j) {
        if (j == sizes.size()) {
          Edges edges;
          cycle_edges(edges, cycle);
          auto next = static_cast<Vertex>(cycle);
          for (std::size_t x = 0; x < sizes.size(); ++x) {
            next = graft(edges, rooted_trees(sizes[x])[pick[x]],
                         static_cast<Vertex>(x), next);
          }
          dedupe.add(graph_from_edges(static_cast<int>(next), edges));
          return;
        }
        for (std::size_t t = 0; t < rooted_trees(sizes[j]).size(); ++t) {
          pick[j] = t;
          trees_at(j + 1);
        }
      };
      trees_at(0);
      return;
    }
    for (int s = 1; s <= left + 1; ++s) {
      sizes[i] = s;
      sizes_at(i + 1, left - (s - 1));
    }
  };
  sizes_at(0, extra);
  return dedupe.take();
}

std::vector<SimplicialComplex> single_attachment_pseudotrees(int cycle,
                                                             int max_vertices) {
  std::vector<SimplicialComplex> out;
  for (int t = 1; cycle + t <= max_vertices; ++t) {
    for (const auto& tree : rooted_trees(t)) {
      Edges edges;
      cycle_edges(edges, cycle);
      const auto b = static_cast<Vertex>(cycle);
      edges.emplace_back(0, b);
      const Vertex next = graft(edges, tree, b, b + 1);
      out.push_back(graph_from_edges(static_cast<int>(next), edges));
    }
  }
  return out;
}

std::vector<SimplicialComplex> hairballs(int cycle, int max_vertices) {
  Deduper dedupe;
  const int extra = max_vertices - cycle;
  if (cycle < 3 || extra < 1) return {};
  std::vector<std::vector<std::vector<int>>> by_budget;
  for (int b = 0; b <= extra; ++b) {
    std::vector<int> cur;
    std::vector<std::vector<int>> all;
    tail_multisets(b, 1, cur, all);
    by_budget.push_back(std::move(all));
  }
  FamilySpec spec;
  spec.family = Family::kHairball;
  spec.cycle = cycle;
  spec.tails.assign(static_cast<std::size_t>(cycle), {});
  std::function<void(std::size_t, int)> fill = [&](std::size_t i, int left) {
    if (i == spec.tails.size()) {
      if (left < extra) dedupe.add(generate(spec));
      return;
    }
    for (const auto& tails : by_budget[static_cast<std::size_t>(left)]) {
      int used = 0;
      for (int len : tails) used += len;
      spec.tails[i] = tails;
      fill(i + 1, left - used);
    }
    spec.tails[i].clear();
  };
  fill(0, extra);
  return dedupe.take();
}

std::vector<FamilySpec> figure8_specs(int max_vertices) {
  std::vector<FamilySpec> out;
  for (int a = 3; a + 2 <= max_vertices; ++a) {
    for (int b = a; a + b - 1 <= max_vertices; ++b) {
      FamilySpec s;
      s.family = Family::kFigure8;
      s.parts = {a, b};
      out.push_back(s);
    }
  }
  return out;
}

std::vector<FamilySpec> theta_specs(int max_vertices) {
  std::vector<FamilySpec> out;
  for (int x = 1; x <= max_vertices; ++x) {
    for (int y = std::max(x, 2); y <= max_vertices; ++y) {
      for (int z = y; 2 + (x - 1) + (y - 1) + (z - 1) <= max_vertices; ++z) {
        FamilySpec s;
        s.family = Family::kTheta;
        s.parts = {x, y, z};
        out.push_back(s);
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> npartite_shapes(int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (!cur.empty()) out.push_back(cur);
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(max_total, max_total);
  return out;
}

}  // namespace chomp
