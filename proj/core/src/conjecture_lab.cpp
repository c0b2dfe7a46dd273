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

#include "chomp/conjecture_lab.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <thread>

#include "chomp/canonical.hpp"
#include "chomp/closed_forms.hpp"
#include "chomp/enumerate.hpp"
#include "chomp/generators.hpp"
#include "chomp/oracle.hpp"
#include "chomp/symmetry.hpp"
#include "json.hpp"

namespace chomp {
namespace {

using Json = nlohmann::ordered_json;

Json engine_json(const EngineConfig& e) {
  Json j;
  j["reduction"] = e.use_reduction;
  j["closed_forms"] = e.use_closed_forms;
  j["decomposition"] = e.use_decomposition;
  j["memo_capacity"] = e.memo_capacity;
  return j;
}

std::string edge_string(const SimplicialComplex& c) {
  std::string out;
  for (Face f : c.faces()) {
    if (f.size() != 2) continue;
    const auto vs = f.members();
    if (!out.empty()) out += ' ';
    out += std::to_string(vs[0]) + "-" + std::to_string(vs[1]);
  }
  return out;
}

// Runs body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& body) {
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mu;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

bool matches_row(const std::vector<Nimber>& v, std::size_t from, int row,
                 int offset) {
  for (std::size_t i = from; i < v.size(); ++i) {
    const int k = static_cast<int>(i) + offset;
    if (k < 1 || v[i] != gmk_value(row, k).value) return false;
  }
  return true;
}

}  // namespace

const char* to_string(SequencePattern p) {
  switch (p) {
    case SequencePattern::kPeriod2:
      return "period2";
    case SequencePattern::kTableRow:
      return "table_row";
    case SequencePattern::kUnclassified:
      break;
  }
  return "unclassified";
}

SequenceClass classify_sequence(const std::vector<Nimber>& values,
                                int window) {
  SequenceClass out;
  const std::size_t t = values.size();
  if (window < 2 || t < static_cast<std::size_t>(window)) return out;
  const std::size_t from = t - static_cast<std::size_t>(window);

  const Nimber lo = std::min(values[t - 1], values[t - 2]);
  const Nimber hi = std::max(values[t - 1], values[t - 2]);
  bool period2 = lo % 4 == 0 && hi == lo + 3;
  for (std::size_t i = from + 2; period2 && i < t; ++i) {
    period2 = values[i] == values[i - 2];
  }
  if (period2) {
    out.pattern = SequencePattern::kPeriod2;
    out.n = lo / 4;
    std::size_t s = t - 1;
    while (s > 0 && (values[s - 1] == lo || values[s - 1] == hi) &&
           values[s - 1] != values[s]) {
      --s;
    }
    out.stabilized_at = static_cast<int>(s);
    return out;
  }

  const int max_row = 3 * 32;
  for (int row = 1; row <= max_row; ++row) {
    for (int offset = 1 - static_cast<int>(from); offset <= max_row; ++offset) {
      if (!matches_row(values, from, row, offset)) continue;
      out.pattern = SequencePattern::kTableRow;
      out.row = row;
      out.offset = offset;
      std::size_t s = from;
      while (s > 0 && matches_row(values, s - 1, row, offset)) --s;
      out.stabilized_at = static_cast<int>(s);
      return out;
    }
  }
  return out;
}

std::string TailSequence::to_json() const {
  Json j;
  j["id"] = "tails:" + base + "@" + std::to_string(attach);
  j["base"] = base;
  j["attach"] = attach;
  j["values"] = values;
  j["truncated"] = truncated;
  if (truncated) j["truncation_reason"] = truncation_reason;
  j["pattern"] = to_string(classification.pattern);
  if (classification.pattern == SequencePattern::kPeriod2) {
    j["n"] = classification.n;
  } else if (classification.pattern == SequencePattern::kTableRow) {
    j["row"] = classification.row;
    j["offset"] = classification.offset;
  }
  j["stabilized_at"] = classification.stabilized_at;
  j["window"] = window;
  j["residue_one"] = residue_one;
  j["oracle_checked"] = oracle_checked;
  j["oracle_agrees"] = oracle_agrees;
  j["engine"] = engine_json(engine);
  return j.dump();
}

std::optional<Vertex> default_tail_vertex(const SimplicialComplex& c) {
  std::optional<Vertex> leaf;
  for (Vertex v : c.vertices()) {
    if (c.degree(v) == 1) leaf = v;
  }
  return leaf;
}

std::optional<std::string> tail_scan_rejection(const SimplicialComplex& base,
                                               Vertex attach) {
  const auto shape = pseudotree_classify(base, true);
  if (!shape) return "base is not a pseudotree";
  if (!shape->odd_cycle()) return "base cycle is even";
  if (!shape->simplest) return "base is not in simplest form";
  if (shape->attachment_count() != 1) {
    return "base needs exactly one cycle vertex of degree >= 3";
  }
  if (((base.vertex_mask() >> attach) & 1U) == 0 || base.degree(attach) != 1) {
    return "vertex " + std::to_string(attach) + " is not a leaf";
  }
  return std::nullopt;
}

TailSequence scan_tails(const SimplicialComplex& base, const std::string& label,
                        Vertex attach, int k_max, const ScanConfig& config,
                        TranspositionTable& table) {
  if (auto why = tail_scan_rejection(base, attach)) {
    throw Error(ErrorCode::kInvalidInput, "tail scan: " + *why);
  }
  TailSequence seq;
  seq.base = label;
  seq.attach = attach;
  seq.window = config.window;
  seq.engine = config.engine;
  Engine engine(config.engine, table);
  for (int k = 0; k <= k_max; ++k) {
    const SimplicialComplex g = attach_tail(base, attach, k);
    Nimber v = 0;
    try {
      v = engine.value(g);
    } catch (const BudgetExceeded& e) {
      seq.truncated = true;
      seq.truncation_reason = e.what();
      break;
    }
    seq.values.push_back(v);
    if (v % 4 == 1) seq.residue_one.push_back(k);
    if (k < config.oracle_checks) {
      if (auto o = try_oracle_grundy(g)) {
        ++seq.oracle_checked;
        if (*o != v) seq.oracle_agrees = false;
      }
    }
  }
  seq.classification = classify_sequence(seq.values, config.window);
  return seq;
}

std::string MultiAttachmentRow::to_json() const {
  Json j;
  j["id"] = id;
  j["cycle"] = cycle;
  j["vertices"] = vertices;
  j["edges"] = edges;
  if (value) {
    j["value"] = *value;
  } else {
    j["value"] = nullptr;
  }
  j["conjectured"] = conjectured;
  j["verdict"] = verdict;
  j["engine"] = engine_json(engine);
  return j.dump();
}

std::optional<std::string> multi_attachment_rejection(
    const SimplicialComplex& c) {
  const auto shape = pseudotree_classify(c, true);
  if (!shape) return "not a pseudotree";
  if (!shape->odd_cycle()) return "cycle is even";
  if (shape->attachment_count() < 2) {
    return "fewer than two cycle vertices of degree >= 3";
  }
  if (!shape->simplest) return "not in simplest form";
  return std::nullopt;
}

MultiAttachmentRow evaluate_multi_attachment(const SimplicialComplex& c,
                                             const ScanConfig& config,
                                             TranspositionTable& table) {
  if (auto why = multi_attachment_rejection(c)) {
    throw Error(ErrorCode::kInvalidInput, "multi-attachment scan: " + *why);
  }
  MultiAttachmentRow row;
  row.id = "multi:" + canonical_key(c, kMaxVertices).hex();
  row.cycle = static_cast<int>(pseudotree_classify(c, false)->cycle.size());
  row.vertices = c.vertex_count();
  row.edges = edge_string(c);
  row.conjectured = row.vertices % 2 == 1 ? 3 : 0;
  row.engine = config.engine;
  Engine engine(config.engine, table);
  try {
    row.value = engine.value(c);
    row.verdict = *row.value == row.conjectured ? "agree" : "violate";
  } catch (const BudgetExceeded&) {
    row.verdict = "unverified";
  }
  return row;
}

std::vector<MultiAttachmentRow> scan_multi_attachment(
    int cycle, int v_max, const ScanConfig& config, TranspositionTable& table,
    const std::set<std::string>& done) {
  if (cycle < 3 || cycle % 2 == 0) {
    throw Error(ErrorCode::kInvalidInput, "cycle must be odd and >= 3");
  }
  std::vector<SimplicialComplex> todo;
  for (const auto& g : pseudotrees(cycle, v_max)) {
    if (multi_attachment_rejection(g)) continue;
    if (done.contains("multi:" + canonical_key(g, kMaxVertices).hex())) continue;
    todo.push_back(g);
  }
  std::vector<MultiAttachmentRow> rows(todo.size());
  parallel_for(todo.size(), config.threads, [&](std::size_t i) {
    rows[i] = evaluate_multi_attachment(todo[i], config, table);
  });
  return rows;
}

std::string WheelRow::to_json() const {
  Json j;
  j["id"] = id();
  j["n"] = n;
  if (value) {
    j["value"] = *value;
  } else {
    j["value"] = nullptr;
  }
  j["method"] = method;
  j["verdict"] = verdict;
  j["detail"] = detail;
  j["engine"] = engine_json(engine);
  return j.dump();
}

WheelRow scan_wheel(int n, const ScanConfig& config,
                    TranspositionTable& table) {
  WheelRow row;
  row.n = n;
  row.engine = config.engine;
  FamilySpec spec;
  spec.family = Family::kWheel;
  spec.n = n;
  const SimplicialComplex w = generate(spec);
  Engine engine(config.engine, table);
  if (n % 2 == 0) {
    spec.family = Family::kPath;
    spec.n = 3;
    const SimplicialComplex p3 = generate(spec);
    for (const auto& t : valid_involutions(w, 4096)) {
      const SimplicialComplex fixed = fixed_point_set(w, t);
      if (!isomorphic(fixed, p3)) continue;
      row.method = "reduction";
      row.value = engine.value(fixed);
      for (auto [a, b] : t.pairs()) {
        if (!row.detail.empty()) row.detail += ' ';
        row.detail += std::to_string(a) + "<->" + std::to_string(b);
      }
      break;
    }
  }
  if (!row.value) {
    row.method = "engine";
    try {
      row.value = engine.value(w);
    } catch (const BudgetExceeded& e) {
      row.detail = e.what();
    }
  }
  if (!row.value) {
    row.verdict = "unverified";
  } else {
    row.verdict = *row.value == 1 ? "agree" : "violate";
  }
  return row;
}

std::vector<WheelRow> scan_wheels(int n_max, const ScanConfig& config,
                                  TranspositionTable& table,
                                  const std::set<std::string>& done) {
  if (n_max < 3) throw Error(ErrorCode::kInvalidInput, "wheels need n >= 3");
  std::vector<int> todo;
  for (int n = 3; n <= n_max; ++n) {
    if (!done.contains("wheel:" + std::to_string(n))) todo.push_back(n);
  }
  std::vector<WheelRow> rows(todo.size());
  parallel_for(todo.size(), config.threads, [&](std::size_t i) {
    rows[i] = scan_wheel(todo[i], config, table);
  });
  return rows;
}

std::set<std::string> report_ids(const std::filesystem::path& path) {
  std::set<std::string> ids;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const Json j = Json::parse(line, nullptr, false);
    if (j.is_object() && j.contains("id") && j["id"].is_string()) {
      ids.insert(j["id"].get<std::string>());
    }
  }
  return ids;
}

}  // namespace chomp
