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

#include "chomp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>
#include <vector>

namespace chomp {
namespace {

class Oracle {
 public:
  Oracle(const SimplicialComplex& c, OracleBudget budget)
      : faces_(c.faces().begin(), c.faces().end()), budget_(budget) {
    const std::size_t limit = std::min<std::size_t>(budget.max_faces, 64);
    if (faces_.size() > limit) {
      throw BudgetExceeded("oracle refuses " + std::to_string(faces_.size()) +
                               " faces (limit " + std::to_string(limit) + ")",
                           {});
    }
    // up_[i]: every face containing face i, itself included.
    up_.assign(faces_.size(), 0);
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      for (std::size_t j = 0; j < faces_.size(); ++j) {
        if (faces_[i].is_subset_of(faces_[j])) up_[i] |= std::uint64_t{1} << j;
      }
    }
  }

  std::uint32_t root() {
    if (faces_.empty()) return 0;
    const std::uint64_t all =
        faces_.size() == 64 ? ~std::uint64_t{0}
                            : (std::uint64_t{1} << faces_.size()) - 1;
    return value(all);
  }

 private:
  std::uint32_t value(std::uint64_t position) {
    if (position == 0) return 0;
    if (auto it = memo_.find(position); it != memo_.end()) return it->second;

    std::vector<bool> seen(static_cast<std::size_t>(std::popcount(position)) + 1);
    for (std::uint64_t rest = position; rest != 0; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      const std::uint32_t v = value(position & ~up_[i]);
      if (v < seen.size()) seen[v] = true;
    }
    std::uint32_t m = 0;
    while (seen[m]) ++m;

    if (memo_.size() >= budget_.max_positions) {
      SearchStats stats;
      stats.entries = memo_.size();
      throw BudgetExceeded("oracle memo reached " +
                               std::to_string(budget_.max_positions) +
                               " positions",
                           stats);
    }
    memo_.emplace(position, m);
    return m;
  }

  std::vector<Face> faces_;
  std::vector<std::uint64_t> up_;
  OracleBudget budget_;
  std::unordered_map<std::uint64_t, std::uint32_t> memo_;
};

}  // namespace

std::uint32_t oracle_grundy(const SimplicialComplex& c, OracleBudget budget) {
  return Oracle(c, budget).root();
}

std::optional<std::uint32_t> try_oracle_grundy(const SimplicialComplex& c,
                                               OracleBudget budget) {
  try {
    return oracle_grundy(c, budget);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

}  // namespace chomp
