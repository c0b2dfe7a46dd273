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

// Formula-versus-solver sweeps behind `chomp verify`.

#ifndef CHOMP_TOOLS_VERIFY_HPP_
#define CHOMP_TOOLS_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chomp/grundy.hpp"

namespace chomp::tools {

struct VerifyOptions {
  std::string family;
  std::optional<int> max_v;  // family default when unset
  std::optional<int> max;    // gmk and wheel parameter bound
  int samples = 200;
  std::uint64_t seed = 1;
  // Oracle cross-check for instances with at most this many vertices.
  int oracle_max_v = 8;
  std::size_t oracle_budget = std::size_t{1} << 20;
};

struct VerifyRow {
  std::string label;
  std::string rule;
  bool lower_bound = false;
  Nimber expected = 0;
  std::string solver = "engine";  // or "recurrence" for gmk table rows
  std::optional<Nimber> engine;
  std::optional<Nimber> oracle;
  bool agree = false;
};

struct VerifyReport {
  std::string family;
  std::vector<VerifyRow> rows;
  std::size_t failures() const;
};

// Families: forest, bipartite, complete, npartite, cycle, gmk,
// single_attachment, hairball, figure8, theta, wheel. The engine runs with
// closed forms disabled so formulas are never checked against themselves.
VerifyReport run_verify(const VerifyOptions& options, EngineConfig engine);

const std::vector<std::string>& verify_families();

}  // namespace chomp::tools

#endif  // CHOMP_TOOLS_VERIFY_HPP_
