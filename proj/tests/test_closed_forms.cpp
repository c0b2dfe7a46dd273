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

#include <string>
#include <vector>

#include "chomp/closed_forms.hpp"
#include "chomp/enumerate.hpp"
#include "chomp/error.hpp"
#include "chomp/generators.hpp"
#include "chomp/grundy.hpp"
#include "chomp/oracle.hpp"
#include "chomp/symmetry.hpp"
#include "chomp/tables.hpp"
#include "doctest.h"
#include "test_util.hpp"

namespace chomp {
namespace {

using testing::graph;

// g(G_{m,k}) for 1 <= m, k <= 12, reference values.
constexpr Nimber kGmkTable[12][12] = {
    {4, 6, 4, 8, 10, 8, 12, 14, 12, 16, 18, 16},
    {6, 4, 6, 10, 8, 10, 14, 12, 14, 18, 16, 18},
    {4, 6, 4, 8, 10, 8, 12, 14, 12, 16, 18, 16},
    {8, 10, 8, 4, 6, 4, 16, 18, 16, 12, 14, 12},
    {10, 8, 10, 6, 4, 6, 18, 16, 18, 14, 12, 14},
    {8, 10, 8, 4, 6, 4, 16, 18, 16, 12, 14, 12},
    {12, 14, 12, 16, 18, 16, 4, 6, 4, 8, 10, 8},
    {14, 12, 14, 18, 16, 18, 6, 4, 6, 10, 8, 10},
    {12, 14, 12, 16, 18, 16, 4, 6, 4, 8, 10, 8},
    {16, 18, 16, 12, 14, 12, 8, 10, 8, 4, 6, 4},
    {18, 16, 18, 14, 12, 14, 10, 8, 10, 6, 4, 6},
    {16, 18, 16, 12, 14, 12, 8, 10, 8, 4, 6, 4},
};

// g(G_{3a+1,3b+1}) for 0 <= a, b <= 7, reference values.
constexpr Nimber kBlockTable[8][8] = {
    {4, 8, 12, 16, 20, 24, 28, 32},  {8, 4, 16, 12, 24, 20, 32, 28},
    {12, 16, 4, 8, 28, 32, 20, 24},  {16, 12, 8, 4, 32, 28, 24, 20},
    {20, 24, 28, 32, 4, 8, 12, 16},  {24, 20, 32, 28, 8, 4, 16, 12},
    {28, 32, 20, 24, 12, 16, 4, 8},  {32, 28, 24, 20, 16, 12, 8, 4},
};

Nimber exact_value(const FormulaResult& r) {
  REQUIRE(r.is_exact());
  return r.value;
}

Nimber solve(const SimplicialComplex& c) {
  TranspositionTable table;
  EngineConfig cfg;
  cfg.use_closed_forms = false;
  return Engine(cfg, table).value(c);
}

TEST_CASE("complete graphs") {
  CHECK(exact_value(complete_graph_value(3)) == 0);
  CHECK(exact_value(complete_graph_value(0)) == 0);
  CHECK(exact_value(complete_graph_value(7)) == 1);
  CHECK(exact_value(complete_graph_value(5)) == 2);
}

TEST_CASE("complete multipartite graphs") {
  CHECK(exact_value(complete_npartite_value(std::vector<int>{1, 1, 1})) == 0);
  CHECK(exact_value(complete_npartite_value(std::vector<int>{2, 2})) == 0);
  CHECK(exact_value(complete_npartite_value(std::vector<int>{5, 3, 2})) == 2);
  CHECK(exact_value(complete_npartite_value(std::vector<int>{1, 3, 5, 7})) ==
        1);
  auto parts = complete_npartite_parts(generate("npartite:2,5,3"));
  REQUIRE(parts.has_value());
  CHECK(*parts == std::vector<int>{5, 3, 2});
  CHECK(complete_npartite_parts(generate("complete:4")) ==
        std::vector<int>{1, 1, 1, 1});
  CHECK_FALSE(complete_npartite_parts(generate("path:4")).has_value());
}

TEST_CASE("bipartite parity table") {
  CHECK(exact_value(bipartite_value(4, 3)) == 2);
  CHECK(exact_value(bipartite_value(3, 2)) == 1);
  CHECK(exact_value(bipartite_value(4, 4)) == 0);
  CHECK(exact_value(bipartite_value(5, 5)) == 3);
  // A union of parts adds by nim-sum, for every pair of parity classes.
  for (int v1 = 0; v1 < 2; ++v1) {
    for (int e1 = 0; e1 < 2; ++e1) {
      for (int v2 = 0; v2 < 2; ++v2) {
        for (int e2 = 0; e2 < 2; ++e2) {
          const Nimber whole =
              exact_value(bipartite_value(v1 + v2, e1 + e2));
          const Nimber split = exact_value(bipartite_value(v1, e1)) ^
                               exact_value(bipartite_value(v2, e2));
          CHECK(whole == split);
        }
      }
    }
  }
}

TEST_CASE("forest table") {
  CHECK(exact_value(forest_value(7, 2)) == 3);
  CHECK(exact_value(forest_value(1, 1)) == 1);
  CHECK(exact_value(forest_value(6, 3)) == 2);
  CHECK(exact_value(forest_value(4, 2)) == 0);
}

TEST_CASE("even-cycle pseudotrees") {
  CHECK(exact_value(even_cycle_pseudotree_value(6)) == 0);
  CHECK(exact_value(even_cycle_pseudotree_value(7)) == 3);
  for (int v = 4; v < 12; ++v) {
    CHECK(exact_value(even_cycle_pseudotree_value(v)) ==
          exact_value(bipartite_value(v, v)));
  }
}

TEST_CASE("degree witnesses") {
  auto odd = generate("cycle:5");
  CHECK(degree_witnesses(odd).even_degree.has_value());
  auto bip = generate("path:4");  // e = 3
  CHECK(degree_witnesses(bip).odd_degree.has_value());
  auto point = generate("complete:1");
  auto w = degree_witnesses(point);
  CHECK(w.even_degree == Vertex{0});
  CHECK_FALSE(w.odd_degree.has_value());
  for (const auto& c : testing::corpus(100, 0, 43)) {
    const auto stats = graph_stats(c);
    if (stats.vertices % 2 == 1) {
      CHECK(degree_witnesses(c).even_degree.has_value());
    }
    if (stats.bipartition && stats.edges % 2 == 1) {
      CHECK(degree_witnesses(c).odd_degree.has_value());
    }
  }
}

TEST_CASE("pseudotree classification") {
  auto g = pseudotree_classify(generate("gmk:1,1"));
  REQUIRE(g.has_value());
  CHECK(g->cycle.size() == 3);
  CHECK(g->odd_cycle());
  CHECK(g->attach_a == Vertex{0});
  CHECK(g->attach_b == Vertex{3});
  CHECK(g->degree_b == 3);
  CHECK(g->attachment_count() == 1);
  CHECK_FALSE(g->simplest);  // the two leaves swap

  CHECK_FALSE(pseudotree_classify(generate("path:5")).has_value());
  CHECK_FALSE(pseudotree_classify(generate("theta:2,2,2")).has_value());

  auto h = pseudotree_classify(generate("hairball:cycle=3,tails=1+2//"));
  REQUIRE(h.has_value());
  CHECK(h->hairball);
  CHECK(h->tails[0] == std::vector<int>{1, 2});
  CHECK(h->simplest);
}

TEST_CASE("single attachment rule") {
  SUBCASE("deg(B) even, v odd") {
    auto c = generate("gmk:1,0");  // v = 5
    auto shape = pseudotree_classify(c);
    REQUIRE(shape.has_value());
    CHECK(shape->degree_b == 2);
    CHECK(exact_value(single_attachment_value(*shape)) == 3);
    CHECK(solve(c) == 3);
  }
  SUBCASE("deg(B) even, v even") {
    auto c = generate("gmk:2,0");  // v = 6
    auto shape = pseudotree_classify(c);
    REQUIRE(shape.has_value());
    CHECK(exact_value(single_attachment_value(*shape)) == 0);
    CHECK(solve(c) == 0);
  }
  SUBCASE("deg(B) odd is only a bound") {
    auto c = generate("gmk:0,0");
    auto shape = pseudotree_classify(c);
    REQUIRE(shape.has_value());
    auto r = single_attachment_value(*shape);
    CHECK(r.kind == FormulaKind::kLowerBound);
    CHECK(r.value == 4);
    CHECK(solve(c) == 4);
  }
}

TEST_CASE("gmk closed form") {
  CHECK(exact_value(gmk_value(1, 1)) == 4);
  CHECK(exact_value(gmk_value(2, 5)) == 8);
  CHECK(exact_value(gmk_value(7, 4)) == 16);
  CHECK(exact_value(gmk_value(4, 4)) == 4);
  CHECK_FALSE(gmk_value(0, 3).applies());
}

TEST_CASE("gmk recurrence reproduces the reference tables") {
  GmkRecurrence g;
  CHECK(g(0, 0) == 4);
  for (int m = 1; m <= 12; ++m) {
    for (int k = 1; k <= 12; ++k) {
      CHECK(g(m, k) == kGmkTable[m - 1][k - 1]);
    }
  }
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      CHECK(g(3 * a + 1, 3 * b + 1) == kBlockTable[a][b]);
      CHECK(kBlockTable[a][b] == 4 * static_cast<Nimber>((a ^ b) + 1));
    }
  }
}

TEST_CASE("gmk recurrence matches the closed form up to 30") {
  GmkRecurrence g;
  for (int m = 1; m <= 30; ++m) {
    for (int k = 1; k <= 30; ++k) {
      CHECK(gmk_recurrence(m, k, g) == exact_value(gmk_value(m, k)));
    }
  }
}

TEST_CASE("gmk classifier") {
  auto g = gmk_classify(generate("gmk:m=2,k=5,cycle=5"));
  REQUIRE(g.has_value());
  CHECK(g->m == 5);
  CHECK(g->k == 2);
  CHECK(g->cycle == 5);
  CHECK_FALSE(gmk_classify(generate("cycle:5")).has_value());
  CHECK_FALSE(gmk_classify(generate("hairball:cycle=3,tails=1/1/")).has_value());
}

TEST_CASE("hairball rule") {
  auto value_of = [](const char* family) {
    auto reduced = reduce_to_simplest(generate(family));
    auto shape = pseudotree_classify(reduced.position);
    REQUIRE(shape.has_value());
    return hairball_value(*shape);
  };
  CHECK(exact_value(value_of("hairball:cycle=3,tails=1+2//")) == 4);
  CHECK(exact_value(value_of("hairball:cycle=3,tails=1/1/")) == 3);
  CHECK(exact_value(value_of("hairball:cycle=3,tails=1/2/")) == 0);
  CHECK(exact_value(value_of("hairball:cycle=5,tails=1////")) == 4);
  CHECK(solve(generate("hairball:cycle=3,tails=1+2//")) == 4);
  CHECK(solve(generate("hairball:cycle=3,tails=1/2/")) == 0);
  auto bare = pseudotree_classify(generate("cycle:5"));
  REQUIRE(bare.has_value());
  CHECK_FALSE(hairball_value(*bare).applies());
}

TEST_CASE("figure-8 and theta graphs") {
  CHECK(exact_value(figure8_value(generate("figure8:3,4"))) == 1);
  CHECK(exact_value(figure8_value(generate("figure8:3,3"))) == 1);
  CHECK(exact_value(figure8_value(generate("figure8:4,4"))) == 1);
  CHECK(solve(generate("figure8:4,4")) == 1);
  CHECK_FALSE(figure8_value(generate("theta:2,2,2")).applies());

  CHECK(exact_value(theta_value(generate("theta:2,3,3"))) == 1);  // v = 7
  CHECK(exact_value(theta_value(generate("theta:3,3,3"))) == 2);  // v = 8
  CHECK(solve(generate("theta:2,3,3")) == 1);
  CHECK(solve(generate("theta:3,3,3")) == 2);
  CHECK_FALSE(theta_value(generate("figure8:3,3")).applies());
  // Two triangles joined by a path: two cycles, but not a theta.
  auto dumbbell =
      graph(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(theta_value(dumbbell).applies());
}

TEST_CASE("K_4 minus an edge is a theta graph on a 4-cycle") {
  // The 4-cycle 2-0-3-1 plus the chord 2-3 joining two opposite vertices.
  auto c = generate("complete:4").remove_face(Face::of({0, 1}));
  CHECK(exact_value(theta_value(c)) == 2);
  CHECK(exact_value(complete_npartite_value(std::vector<int>{2, 1, 1})) == 2);
  CHECK(solve(c) == 2);
}

TEST_CASE("rule precedence picks the most specific rule") {
  CHECK(evaluate(generate("complete:4")).rule == "complete");
  CHECK(evaluate(generate("npartite:3,2")).rule == "complete_npartite");
  CHECK(evaluate(generate("path:5")).rule == "forest");
  CHECK(evaluate(generate("pseudotree:cycle=4,n=7,seed=2")).rule ==
        "even_cycle_pseudotree");
  CHECK(evaluate(generate("cycle:7")).rule == "cycle");
  CHECK(evaluate(generate("gmk:2,5")).rule == "gmk");
  CHECK(evaluate(generate("hairball:cycle=3,tails=1+2//")).rule == "hairball");
  CHECK(evaluate(generate("figure8:3,4")).rule == "figure8");
  CHECK(evaluate(generate("wheel:5")).kind == FormulaKind::kNotApplicable);
  CHECK_FALSE(closed_form_value(generate("wheel:5")).has_value());
  CHECK_FALSE(closed_form_value(generate("full_simplex:3")).has_value());
  CHECK(closed_form_value(generate("gmk:7,4")) == Nimber{16});
}

TEST_CASE("every matching rule agrees with the oracle") {
  std::vector<SimplicialComplex> pool = testing::corpus(200, 0, 47);
  for (const auto& c : single_attachment_pseudotrees(3, 8)) pool.push_back(c);
  for (const auto& c : hairballs(3, 8)) pool.push_back(c);
  for (const auto& c : hairballs(5, 8)) pool.push_back(c);
  for (const auto& s : theta_specs(8)) pool.push_back(generate(s));
  for (const auto& s : figure8_specs(8)) pool.push_back(generate(s));
  int exact = 0;
  for (const auto& c : pool) {
    const auto truth = oracle_grundy(c);
    for (const auto& r : all_rules(c)) {
      if (r.is_exact()) {
        CHECK_MESSAGE(r.value == truth, r.rule);
        ++exact;
      } else if (r.kind == FormulaKind::kLowerBound) {
        CHECK_MESSAGE(r.value <= truth, r.rule);
      }
    }
  }
  CHECK(exact > 200);
}

TEST_CASE("rendered tables") {
  const auto gmk = gmk_table(12, TableFormat::kCsv);
  CHECK(gmk.find("5,10,8,10,6,4,6,18,16,18,14,12,14") != std::string::npos);
  const auto blocks = gmk_block_table(8, TableFormat::kCsv);
  CHECK(blocks.find("2,12,16,4,8,28,32,20,24") != std::string::npos);
  CHECK(render_tables("all", TableFormat::kText) ==
        render_tables("all", TableFormat::kText));
  CHECK(forest_table(TableFormat::kCsv).find("even,0,2") != std::string::npos);
  CHECK_THROWS_AS(render_tables("table9", TableFormat::kText), Error);
}

}  // namespace
}  // namespace chomp
