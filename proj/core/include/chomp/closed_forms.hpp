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

// Closed-form nim-values for graph families.
//
// Each rule is a classifier (does the position satisfy the hypothesis?) plus
// an evaluator. Rules that only bound the value report kLowerBound and are
// never used as solver shortcuts.

#ifndef CHOMP_CLOSED_FORMS_HPP_
#define CHOMP_CLOSED_FORMS_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chomp/complex.hpp"
#include "chomp/grundy.hpp"

namespace chomp {

enum class FormulaKind { kExact, kLowerBound, kNotApplicable };

struct FormulaResult {
  FormulaKind kind = FormulaKind::kNotApplicable;
  Nimber value = 0;
  std::string rule;

  static FormulaResult exact(Nimber v, std::string rule) {
    return {FormulaKind::kExact, v, std::move(rule)};
  }
  static FormulaResult lower_bound(Nimber v, std::string rule) {
    return {FormulaKind::kLowerBound, v, std::move(rule)};
  }
  static FormulaResult not_applicable(std::string rule) {
    return {FormulaKind::kNotApplicable, 0, std::move(rule)};
  }

  bool is_exact() const { return kind == FormulaKind::kExact; }
  bool applies() const { return kind != FormulaKind::kNotApplicable; }
};

// K_n: n mod 3.
FormulaResult complete_graph_value(int n);
// K_{a1,...,an}: (number of odd parts) mod 3.
FormulaResult complete_npartite_value(std::span<const int> parts);
// Any bipartite graph, by the parities of v and e:
//   (even, even) -> 0, (odd, even) -> 1, (even, odd) -> 2, (odd, odd) -> 3.
FormulaResult bipartite_value(int vertices, int edges);
// Forests: even component count gives 0 / 3 for even / odd v; odd component
// count gives 2 / 1.
FormulaResult forest_value(int vertices, int components);
// Even-cycle pseudotree: 0 for even v, 3 for odd v.
FormulaResult even_cycle_pseudotree_value(int vertices);

struct DegreeWitnesses {
  std::optional<Vertex> even_degree;
  std::optional<Vertex> odd_degree;
};
// Lowest-numbered vertex of even degree and of odd degree.
DegreeWitnesses degree_witnesses(const SimplicialComplex& g);

// Partition sizes when the graph is complete multipartite (non-adjacency is
// an equivalence relation), sorted descending.
std::optional<std::vector<int>> complete_npartite_parts(
    const SimplicialComplex& g);

// Connected graph with exactly one cycle.
struct PseudotreeShape {
  std::vector<Vertex> cycle;       // in cyclic order, starting at lowest id
  std::vector<int> cycle_degrees;  // parallel to `cycle`
  // Per cycle vertex: lengths of the hanging paths, ascending. Only complete
  // when tails_are_paths[i].
  std::vector<std::vector<int>> tails;
  std::vector<bool> tails_are_paths;
  int vertex_count = 0;
  bool hairball = false;  // every non-cycle vertex has degree <= 2
  bool simplest = false;  // certified by exhaustive involution search
  // Set when exactly one cycle vertex has degree 3 and the rest degree 2.
  std::optional<Vertex> attach_a;
  std::optional<Vertex> attach_b;
  int degree_b = 0;

  bool odd_cycle() const { return cycle.size() % 2 == 1; }
  int attachment_count() const;
};

// nullopt unless c is a connected graph with e == v. `certify_simplest`
// runs the exhaustive involution search to fill `simplest`.
std::optional<PseudotreeShape> pseudotree_classify(const SimplicialComplex& c,
                                                   bool certify_simplest = true);

// Odd cycle with a single degree-3 vertex A whose outside neighbor is B, in
// simplest form: lower bound 4 when deg(B) is odd, else 3 / 0 by v parity.
FormulaResult single_attachment_value(const PseudotreeShape& shape);

// g(G_{m,k}) for m, k >= 1. With m = 3a+i, k = 3b+j (i, j in 1..3) and
// n = (a xor b) + 1: 4n when i + j is even, 4n + 2 otherwise.
FormulaResult gmk_value(int m, int k);

// g(G_{m,k}) from the mex recursion over tail moves, independent of
// gmk_value. Boundary: g(0,0) = 4; g(m,0) = g(0,m) = 3 for odd m and 0 for
// even m >= 2 (B then has even degree).
class GmkRecurrence {
 public:
  Nimber operator()(int m, int k);

 private:
  std::map<std::pair<int, int>, Nimber> memo_;
};

Nimber gmk_recurrence(int m, int k, GmkRecurrence& memo);

struct GmkShape {
  int m = 0;
  int k = 0;
  int cycle = 0;
};
// Odd cycle, one degree-3 cycle vertex A, its outside neighbor B carrying at
// most two paths (the m- and k-tails, m >= k).
std::optional<GmkShape> gmk_classify(const SimplicialComplex& c);

// Odd-cycle hairball in simplest form that is not a bare cycle.
//   v odd -> 3; v even with one loaded cycle vertex whose tails are
//   {k, k+1} (k >= 0) -> 4; otherwise v even -> 0.
FormulaResult hairball_value(const PseudotreeShape& shape);

// Two cycles sharing one degree-4 vertex: 1.
FormulaResult figure8_value(const SimplicialComplex& c);
// Two degree-3 vertices joined by three internally disjoint paths: 1 for odd
// v, 2 for even v.
FormulaResult theta_value(const SimplicialComplex& c);

// Every rule whose hypothesis holds (odd-cycle pseudotrees are first reduced
// to simplest form), most specific first.
std::vector<FormulaResult> all_rules(const SimplicialComplex& c);
// First exact rule, else the first lower bound, else not applicable.
FormulaResult evaluate(const SimplicialComplex& c);
// Solver fast path: value of the first exact rule.
std::optional<Nimber> closed_form_value(const SimplicialComplex& c);

}  // namespace chomp

#endif  // CHOMP_CLOSED_FORMS_HPP_
