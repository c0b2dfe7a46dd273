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

// Brute-force Grundy values straight from the mex rule.
//
// Positions are subsets of the root's face list, memoized by that labeled
// subset only: no canonical forms, no component splitting, no formulas. The
// oracle shares nothing with the engine beyond the complex type, so the two
// can check each other.

#ifndef CHOMP_ORACLE_HPP_
#define CHOMP_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "chomp/complex.hpp"
#include "chomp/error.hpp"

namespace chomp {

struct OracleBudget {
  // Refuse roots with more faces than this (hard limit 64).
  std::size_t max_faces = 64;
  // Refuse once the memo would hold more positions than this.
  std::size_t max_positions = std::size_t{1} << 22;
};

// Throws BudgetExceeded instead of answering when the budget is too small.
std::uint32_t oracle_grundy(const SimplicialComplex& c,
                            OracleBudget budget = {});

// nullopt on refusal.
std::optional<std::uint32_t> try_oracle_grundy(const SimplicialComplex& c,
                                               OracleBudget budget = {});

}  // namespace chomp

#endif  // CHOMP_ORACLE_HPP_
