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

#include "verify.hpp"

#include <functional>
#include <random>

#include "chomp/closed_forms.hpp"
#include "chomp/enumerate.hpp"
#include "chomp/generators.hpp"
#include "chomp/oracle.hpp"
#include "chomp/symmetry.hpp"

namespace chomp::tools {
namespace {

struct Case {
  std::string label;
  SimplicialComplex position;
  FormulaResult expected;
};

using Cases = std::vector<Case>;

Case from_spec(const FamilySpec& spec,
               const std::function<FormulaResult(const SimplicialComplex&)>& f) {
  SimplicialComplex c = generate(spec);
  FormulaResult r = f(c);
  return {spec.to_string(), std::move(c), std::move(r)};
}

std::string edge_label(const SimplicialComplex& c) {
  std::string out = "edges:";
  for (Face f : c.faces()) {
    if (f.size() != 2) continue;
    const auto m = f.members();
    out += " " + std::to_string(m[0]) + "-" + std::to_string(m[1]);
  }
  return out;
}

FormulaResult pick_rule(const SimplicialComplex& c,
                        std::initializer_list<std::string_view> names) {
  for (const auto& r : all_rules(c)) {
    for (auto n : names) {
      if (r.rule == n) return r;
    }
  }
  return FormulaResult::not_applicable("none");
}

Cases forest_cases(const VerifyOptions& o) {
  Cases out;
  const int max_v = o.max_v.value_or(9);
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < o.samples; ++i) {
    FamilySpec s;
    s.family = Family::kForest;
    s.n = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_v)));
    s.components =
        1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(s.n)));
    s.seed = rng();
    out.push_back(from_spec(s, [&](const SimplicialComplex&) {
      return forest_value(s.n, s.components);
    }));
  }
  return out;
}

Cases bipartite_cases(const VerifyOptions& o) {
  Cases out;
  const int max_v = o.max_v.value_or(8);
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < o.samples; ++i) {
    FamilySpec s;
    s.family = Family::kRandomBipartite;
    s.a = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_v + 1)));
    s.b = static_cast<int>(
        uniform_below(rng, static_cast<std::uint64_t>(max_v - s.a + 1)));
    s.p = 0.5;
    s.seed = rng();
    out.push_back(from_spec(s, [](const SimplicialComplex& c) {
      return bipartite_value(c.vertex_count(), static_cast<int>(c.edge_count()));
    }));
  }
  return out;
}

Cases complete_cases(const VerifyOptions& o) {
  Cases out;
  for (int n = 0; n <= o.max_v.value_or(7); ++n) {
    FamilySpec s;
    s.family = Family::kComplete;
    s.n = n;
    out.push_back(from_spec(
        s, [n](const SimplicialComplex&) { return complete_graph_value(n); }));
  }
  return out;
}

Cases npartite_cases(const VerifyOptions& o) {
  Cases out;
  for (const auto& parts : npartite_shapes(o.max_v.value_or(9))) {
    FamilySpec s;
    s.family = Family::kCompleteNpartite;
    s.parts = parts;
    out.push_back(from_spec(s, [&](const SimplicialComplex&) {
      return complete_npartite_value(parts);
    }));
  }
  return out;
}

Cases cycle_cases(const VerifyOptions& o) {
  Cases out;
  for (int n = 3; n <= o.max_v.value_or(10); ++n) {
    FamilySpec s;
    s.family = Family::kCycle;
    s.n = n;
    out.push_back(from_spec(s, [](const SimplicialComplex&) {
      return FormulaResult::exact(0, "cycle");
    }));
  }
  return out;
}

Cases gmk_cases(const VerifyOptions& o) {
  Cases out;
  const int max = o.max.value_or(6);
  for (int m = 0; m <= max; ++m) {
    for (int k = 0; m + k <= max; ++k) {
      FamilySpec s;
      s.family = Family::kGmk;
      s.m = m;
      s.k = k;
      s.cycle = 3;
      out.push_back(from_spec(s, [](const SimplicialComplex& c) {
        return pick_rule(c, {"gmk"});
      }));
    }
  }
  return out;
}

Cases single_attachment_cases(const VerifyOptions& o) {
  Cases out;
  const int max_v = o.max_v.value_or(10);
  for (int cycle = 3; cycle < max_v; cycle += 2) {
    for (auto& g : single_attachment_pseudotrees(cycle, max_v)) {
      auto shape = pseudotree_classify(g, true);
      if (!shape || !shape->simplest) continue;
      FormulaResult r = single_attachment_value(*shape);
      out.push_back({edge_label(g), std::move(g), std::move(r)});
    }
  }
  return out;
}

Cases hairball_cases(const VerifyOptions& o) {
  Cases out;
  const int max_v = o.max_v.value_or(11);
  for (int cycle : {3, 5}) {
    for (auto& g : hairballs(cycle, max_v)) {
      FormulaResult r = pick_rule(g, {"hairball", "cycle (reduced)"});
      out.push_back({edge_label(g), std::move(g), std::move(r)});
    }
  }
  return out;
}

Cases figure8_cases(const VerifyOptions& o) {
  Cases out;
  for (const auto& s : figure8_specs(o.max_v.value_or(9))) {
    out.push_back(from_spec(s, figure8_value));
  }
  return out;
}

Cases theta_cases(const VerifyOptions& o) {
  Cases out;
  for (const auto& s : theta_specs(o.max_v.value_or(9))) {
    out.push_back(from_spec(s, theta_value));
  }
  return out;
}

Cases wheel_cases(const VerifyOptions& o) {
  Cases out;
  for (int n = 3; n <= o.max.value_or(7); ++n) {
    FamilySpec s;
    s.family = Family::kWheel;
    s.n = n;
    out.push_back(from_spec(s, [](const SimplicialComplex&) {
      return FormulaResult::exact(1, "wheel conjecture");
    }));
  }
  return out;
}

using Builder = Cases (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> table = {
      {"forest", forest_cases},
      {"bipartite", bipartite_cases},
      {"complete", complete_cases},
      {"npartite", npartite_cases},
      {"cycle", cycle_cases},
      {"gmk", gmk_cases},
      {"single_attachment", single_attachment_cases},
      {"hairball", hairball_cases},
      {"figure8", figure8_cases},
      {"theta", theta_cases},
      {"wheel", wheel_cases},
  };
  return table;
}

}  // namespace

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.agree ? 0 : 1;
  return n;
}

const std::vector<std::string>& verify_families() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : builders()) out.push_back(name);
    return out;
  }();
  return names;
}

VerifyReport run_verify(const VerifyOptions& options, EngineConfig engine) {
  Builder build = nullptr;
  for (const auto& [name, fn] : builders()) {
    if (name == options.family) build = fn;
  }
  if (build == nullptr) {
    throw Error(ErrorCode::kInvalidInput,
                "unknown verify family '" + options.family + "'");
  }
  engine.use_closed_forms = false;
  TranspositionTable table;
  Engine solver(engine, table);

  VerifyReport report;
  report.family = options.family;
  for (auto& c : build(options)) {
    VerifyRow row;
    row.label = c.label;
    row.rule = c.expected.rule;
    row.lower_bound = c.expected.kind == FormulaKind::kLowerBound;
    row.expected = c.expected.value;
    try {
      row.engine = solver.value(c.position);
    } catch (const BudgetExceeded&) {
      row.engine.reset();
    }
    if (c.position.vertex_count() <= options.oracle_max_v) {
      OracleBudget budget;
      budget.max_positions = options.oracle_budget;
      row.oracle = try_oracle_grundy(c.position, budget);
    }
    const bool applicable = c.expected.applies();
    if (row.engine && applicable) {
      row.agree = row.lower_bound ? *row.engine >= row.expected
                                  : *row.engine == row.expected;
      if (row.oracle && *row.oracle != *row.engine) row.agree = false;
    }
    report.rows.push_back(std::move(row));
  }

  if (options.family == "gmk") {
    GmkRecurrence rec;
    const int max = options.max.value_or(6);
    for (int m = 1; m <= max; ++m) {
      for (int k = 1; k <= max; ++k) {
        VerifyRow row;
        row.label = "recurrence m=" + std::to_string(m) + ",k=" + std::to_string(k);
        row.rule = "gmk";
        row.solver = "recurrence";
        row.expected = gmk_value(m, k).value;
        row.engine = rec(m, k);
        row.agree = *row.engine == row.expected;
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

}  // namespace chomp::tools
