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

// Exact Sprague-Grundy values by memoized mex recursion.
//
// Per position the engine (1) splits into connected components and xors
// their values, (2) consults the transposition table under the canonical
// key, (3) tries proven closed forms, (4) replaces the position by the fixed
// set of a symmetry reduction, and only then (5) recurses over every move.
// Steps 1, 3 and 4 are independently switchable.

#ifndef CHOMP_GRUNDY_HPP_
#define CHOMP_GRUNDY_HPP_

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "chomp/canonical.hpp"
#include "chomp/complex.hpp"
#include "chomp/error.hpp"

namespace chomp {

using Nimber = std::uint32_t;

// Least nonnegative integer not in `values`.
Nimber mex(std::span<const Nimber> values);
Nimber nim_sum(std::span<const Nimber> values);

struct EngineConfig {
  bool use_reduction = true;
  bool use_closed_forms = true;
  bool use_decomposition = true;
  // The engine refuses to grow the table beyond this many entries.
  std::size_t memo_capacity = std::size_t{1} << 24;
  int canonicalization_bound = kDefaultCanonicalBound;
  // Keep the value of every child of the root in GrundyRecord::spectrum.
  bool record_spectrum = false;
};

// Memo from position keys to nim-values. Safe for concurrent lookup and
// insert; re-inserting a key must carry the same value.
class TranspositionTable {
 public:
  TranspositionTable() = default;
  TranspositionTable(const TranspositionTable&) = delete;
  TranspositionTable& operator=(const TranspositionTable&) = delete;

  std::optional<Nimber> lookup(const CanonicalKey& key) const;
  // Throws kInvalidInput when `key` is already stored with another value.
  void insert(const CanonicalKey& key, Nimber value);

  std::size_t size() const;
  SearchStats stats() const;
  void clear();

  // Versioned little-endian binary file; entries are written in key order so
  // identical tables produce identical files.
  void save(const std::filesystem::path& path) const;
  // Merges entries from `path` (idempotent-insert rules apply).
  void load(const std::filesystem::path& path);

  std::vector<std::pair<CanonicalKey, Nimber>> entries() const;

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<CanonicalKey, Nimber, CanonicalKeyHash> map_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
  std::atomic<std::uint64_t> inserts_{0};
};

struct GrundyRecord {
  Nimber value = 0;
  // First move (in move order) reaching each value below `value`, plus any
  // value + 1 child met before the scan stopped.
  std::map<Nimber, Face> witness_moves;
  CanonicalKey position_key;
  // Every (move, child value) pair when EngineConfig::record_spectrum is set.
  std::vector<std::pair<Face, Nimber>> spectrum;
};

enum class Outcome { kP, kN };
const char* to_string(Outcome o);

struct EngineCounters {
  std::uint64_t expansions = 0;
  std::uint64_t closed_form_hits = 0;
  std::uint64_t reductions = 0;
};

class Engine {
 public:
  Engine(EngineConfig config, TranspositionTable& table);

  // Full record for the undecomposed position, including witness moves.
  // Throws BudgetExceeded when the table would outgrow memo_capacity.
  GrundyRecord solve(const SimplicialComplex& c);
  Nimber value(const SimplicialComplex& c);
  // A move to a value-0 child (first in move order), absent for P-positions.
  std::optional<Face> optimal_move(const SimplicialComplex& c);
  Outcome classify(const SimplicialComplex& c);

  const EngineConfig& config() const { return config_; }
  const EngineCounters& counters() const { return counters_; }

 private:
  Nimber position_value(const SimplicialComplex& c);
  Nimber node_value(const SimplicialComplex& c);
  void store(const CanonicalKey& key, Nimber v);

  EngineConfig config_;
  TranspositionTable& table_;
  EngineCounters counters_;
};

}  // namespace chomp

#endif  // CHOMP_GRUNDY_HPP_
