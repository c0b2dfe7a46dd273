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

#include "chomp/grundy.hpp"

#include <algorithm>

#include "chomp/closed_forms.hpp"
#include "chomp/symmetry.hpp"

namespace chomp {

Nimber mex(std::span<const Nimber> values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (Nimber v : values) {
    if (v < seen.size()) seen[v] = true;
  }
  Nimber m = 0;
  while (seen[m]) ++m;
  return m;
}

Nimber nim_sum(std::span<const Nimber> values) {
  Nimber acc = 0;
  for (Nimber v : values) acc ^= v;
  return acc;
}

const char* to_string(Outcome o) { return o == Outcome::kP ? "P" : "N"; }

Engine::Engine(EngineConfig config, TranspositionTable& table)
    : config_(config), table_(table) {}

void Engine::store(const CanonicalKey& key, Nimber v) {
  if (table_.size() >= config_.memo_capacity) {
    throw BudgetExceeded("transposition table reached capacity of " +
                             std::to_string(config_.memo_capacity) +
                             " entries",
                         table_.stats());
  }
  table_.insert(key, v);
}

Nimber Engine::position_value(const SimplicialComplex& c) {
  if (c.empty()) return 0;
  if (!config_.use_decomposition) return node_value(c.compacted());
  const auto masks = c.component_masks();
  if (masks.size() == 1) return node_value(c.compacted());
  Nimber acc = 0;
  for (VertexMask m : masks) acc ^= node_value(c.induced(m).compacted());
  return acc;
}

Nimber Engine::node_value(const SimplicialComplex& c) {
  if (c.empty()) return 0;
  const CanonicalKey key = position_key(c, config_.canonicalization_bound);
  if (auto hit = table_.lookup(key)) return *hit;

  if (config_.use_closed_forms) {
    if (auto v = closed_form_value(c)) {
      ++counters_.closed_form_hits;
      store(key, *v);
      return *v;
    }
  }
  if (config_.use_reduction) {
    auto found = find_any_reduction(c);
    if (found.best) {
      ++counters_.reductions;
      const Nimber v = position_value(found.best->fixed_set);
      store(key, v);
      return v;
    }
  }

  ++counters_.expansions;
  const auto faces = c.faces();
  // Child values never exceed the number of moves.
  std::vector<bool> seen(faces.size() + 2, false);
  for (Face f : faces) {
    const Nimber v = position_value(c.remove_face(f));
    if (v < seen.size()) seen[v] = true;
  }
  Nimber m = 0;
  while (seen[m]) ++m;
  store(key, m);
  return m;
}

GrundyRecord Engine::solve(const SimplicialComplex& c) {
  GrundyRecord rec;
  rec.position_key = position_key(c.compacted(), config_.canonicalization_bound);
  rec.value = position_value(c);
  // Children are scanned in move order only until every smaller value has a
  // witness, so a P-position found by reduction costs no expansion.
  std::size_t below = 0;
  for (Face f : c.moves()) {
    if (!config_.record_spectrum && below == rec.value) break;
    const Nimber v = position_value(c.remove_face(f));
    if (v <= rec.value + 1 && !rec.witness_moves.contains(v)) {
      rec.witness_moves.emplace(v, f);
      if (v < rec.value) ++below;
    }
    if (config_.record_spectrum) rec.spectrum.emplace_back(f, v);
  }
  return rec;
}

Nimber Engine::value(const SimplicialComplex& c) { return position_value(c); }

std::optional<Face> Engine::optimal_move(const SimplicialComplex& c) {
  const auto rec = solve(c);
  if (rec.value == 0) return std::nullopt;
  return rec.witness_moves.at(0);
}

Outcome Engine::classify(const SimplicialComplex& c) {
  return value(c) == 0 ? Outcome::kP : Outcome::kN;
}

}  // namespace chomp
