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

#include <algorithm>
#include <array>
#include <fstream>
#include <mutex>

#include "chomp/grundy.hpp"

namespace chomp {
namespace {

// File layout (all integers little-endian):
//   magic "CHOMPTT1", u32 version, u64 entry count, then per entry
//   u8 canonical, u8 vertex count, u32 face count, u64 faces..., u32 value.
constexpr std::array<char, 8> kMagic = {'C', 'H', 'O', 'M', 'P', 'T', 'T', '1'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ostream& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.put(static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) &
                              0xffU));
  }
}

template <typename T>
T get(std::istream& in) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    const int ch = in.get();
    if (ch == std::char_traits<char>::eof()) {
      throw Error(ErrorCode::kParse, "truncated cache file");
    }
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(ch)) << (8 * i);
  }
  return static_cast<T>(v);
}

}  // namespace

std::optional<Nimber> TranspositionTable::lookup(const CanonicalKey& key) const {
  std::shared_lock lock(mu_);
  auto it = map_.find(key);
  if (it == map_.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

void TranspositionTable::insert(const CanonicalKey& key, Nimber value) {
  std::unique_lock lock(mu_);
  auto [it, fresh] = map_.emplace(key, value);
  if (!fresh && it->second != value) {
    throw Error(ErrorCode::kInvalidInput,
                "transposition table conflict for key " + key.hex() + ": " +
                    std::to_string(it->second) + " vs " +
                    std::to_string(value));
  }
  if (fresh) inserts_.fetch_add(1, std::memory_order_relaxed);
}

std::size_t TranspositionTable::size() const {
  std::shared_lock lock(mu_);
  return map_.size();
}

SearchStats TranspositionTable::stats() const {
  SearchStats s;
  s.hits = hits_.load();
  s.misses = misses_.load();
  s.inserts = inserts_.load();
  s.entries = size();
  return s;
}

void TranspositionTable::clear() {
  std::unique_lock lock(mu_);
  map_.clear();
  hits_ = 0;
  misses_ = 0;
  inserts_ = 0;
}

std::vector<std::pair<CanonicalKey, Nimber>> TranspositionTable::entries()
    const {
  std::vector<std::pair<CanonicalKey, Nimber>> out;
  {
    std::shared_lock lock(mu_);
    out.assign(map_.begin(), map_.end());
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void TranspositionTable::save(const std::filesystem::path& path) const {
  const auto all = entries();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kInvalidInput,
                "cannot write cache file " + path.string());
  }
  out.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(out, kVersion);
  put<std::uint64_t>(out, all.size());
  for (const auto& [key, value] : all) {
    put<std::uint8_t>(out, key.canonical ? 1 : 0);
    put<std::uint8_t>(out, static_cast<std::uint8_t>(key.vertex_count));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(key.faces.size()));
    for (VertexMask f : key.faces) put<std::uint64_t>(out, f);
    put<std::uint32_t>(out, value);
  }
}

void TranspositionTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kInvalidInput,
                "cannot open cache file " + path.string());
  }
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) {
    throw Error(ErrorCode::kParse, path.string() + " is not a chomp cache");
  }
  const auto version = get<std::uint32_t>(in);
  if (version != kVersion) {
    throw Error(ErrorCode::kParse,
                "unsupported cache version " + std::to_string(version));
  }
  const auto count = get<std::uint64_t>(in);
  for (std::uint64_t i = 0; i < count; ++i) {
    CanonicalKey key;
    key.canonical = get<std::uint8_t>(in) != 0;
    key.vertex_count = get<std::uint8_t>(in);
    const auto faces = get<std::uint32_t>(in);
    key.faces.reserve(faces);
    for (std::uint32_t j = 0; j < faces; ++j) {
      key.faces.push_back(get<std::uint64_t>(in));
    }
    insert(key, get<std::uint32_t>(in));
  }
}

}  // namespace chomp
