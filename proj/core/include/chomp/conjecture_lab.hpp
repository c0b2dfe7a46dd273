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

// Experimental sweeps over the open pseudotree and wheel questions.
//
// Scans report what the engine computes and whether it fits a conjectured
// pattern; they never turn a budget failure into a verdict.

#ifndef CHOMP_CONJECTURE_LAB_HPP_
#define CHOMP_CONJECTURE_LAB_HPP_

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chomp/complex.hpp"
#include "chomp/grundy.hpp"

namespace chomp {

struct ScanConfig {
  EngineConfig engine;
  // Trailing entries that must match before a pattern is claimed.
  int window = 6;
  // Cross-check the first this-many tail values with the oracle.
  int oracle_checks = 3;
  int threads = 1;
};

enum class SequencePattern { kUnclassified, kPeriod2, kTableRow };
const char* to_string(SequencePattern p);

struct SequenceClass {
  SequencePattern pattern = SequencePattern::kUnclassified;
  Nimber n = 0;     // period-2 pattern alternates 4n and 4n+3
  int row = 0;      // table row pattern: values[i] == g(G_{row, i+offset})
  int offset = 0;
  int stabilized_at = -1;  // first index from which the pattern holds
};

// Conservative: a pattern is claimed only when the last `window` entries
// match it exactly.
SequenceClass classify_sequence(const std::vector<Nimber>& values, int window);

struct TailSequence {
  std::string base;  // family string or file name, for replay
  Vertex attach = 0;
  std::vector<Nimber> values;  // values[k]: base with a k-tail at `attach`
  bool truncated = false;
  std::string truncation_reason;
  SequenceClass classification;
  int window = 0;
  std::vector<int> residue_one;  // indices k with values[k] % 4 == 1
  int oracle_checked = 0;
  bool oracle_agrees = true;
  EngineConfig engine;

  std::string to_json() const;
};

// Highest-numbered leaf, or nullopt if the graph has none.
std::optional<Vertex> default_tail_vertex(const SimplicialComplex& c);

// Checks the tail-scan hypothesis: odd-cycle pseudotree in simplest form
// with exactly one cycle vertex of degree >= 3, attach vertex a leaf.
// Returns an explanation when it fails.
std::optional<std::string> tail_scan_rejection(const SimplicialComplex& base,
                                               Vertex attach);

// Throws kInvalidInput when the hypothesis fails.
TailSequence scan_tails(const SimplicialComplex& base, const std::string& label,
                        Vertex attach, int k_max, const ScanConfig& config,
                        TranspositionTable& table);

struct MultiAttachmentRow {
  std::string id;  // canonical key digest
  int cycle = 0;
  int vertices = 0;
  std::string edges;  // "a-b a-b ..." for replay
  std::optional<Nimber> value;
  Nimber conjectured = 0;  // 3 for odd v, 0 for even v
  std::string verdict;     // agree, violate, unverified
  EngineConfig engine;

  std::string to_json() const;
};

// Rejection reason when c is not an odd-cycle pseudotree in simplest form
// with at least two cycle vertices of degree >= 3.
std::optional<std::string> multi_attachment_rejection(
    const SimplicialComplex& c);

MultiAttachmentRow evaluate_multi_attachment(const SimplicialComplex& c,
                                             const ScanConfig& config,
                                             TranspositionTable& table);

// Every qualifying instance with the given odd cycle and at most v_max
// vertices, skipping ids listed in `done`.
std::vector<MultiAttachmentRow> scan_multi_attachment(
    int cycle, int v_max, const ScanConfig& config, TranspositionTable& table,
    const std::set<std::string>& done = {});

struct WheelRow {
  int n = 0;
  std::optional<Nimber> value;
  std::string method;   // reduction or engine
  std::string verdict;  // agree, violate, unverified
  std::string detail;   // involution pairs or budget message
  EngineConfig engine;

  std::string id() const { return "wheel:" + std::to_string(n); }
  std::string to_json() const;
};

WheelRow scan_wheel(int n, const ScanConfig& config, TranspositionTable& table);
std::vector<WheelRow> scan_wheels(int n_max, const ScanConfig& config,
                                  TranspositionTable& table,
                                  const std::set<std::string>& done = {});

// Ids of rows already present in a JSONL report (missing file: empty).
std::set<std::string> report_ids(const std::filesystem::path& path);

}  // namespace chomp

#endif  // CHOMP_CONJECTURE_LAB_HPP_
