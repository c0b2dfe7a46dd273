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

#ifndef CHOMP_ERROR_HPP_
#define CHOMP_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chomp {

enum class ErrorCode {
  kInvalidInput,
  kIllegalMove,
  kCapacity,
  kBudgetExceeded,
  kParse,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Counters reported alongside a computation that ran out of budget.
struct SearchStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t inserts = 0;
  std::uint64_t entries = 0;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, SearchStats stats)
      : Error(ErrorCode::kBudgetExceeded, what), stats_(stats) {}

  const SearchStats& stats() const noexcept { return stats_; }

 private:
  SearchStats stats_;
};

}  // namespace chomp

#endif  // CHOMP_ERROR_HPP_
