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

// Plain-text and CSV renderings of the closed-form value tables.

#ifndef CHOMP_TABLES_HPP_
#define CHOMP_TABLES_HPP_

#include <string>
#include <string_view>

namespace chomp {

enum class TableFormat { kText, kCsv };

// Forest values by vertex parity (rows) and component parity (columns).
std::string forest_table(TableFormat format);
// Bipartite values by vertex parity (rows) and edge parity (columns).
std::string bipartite_table(TableFormat format);
// g(G_{m,k}) for 1 <= m, k <= size.
std::string gmk_table(int size, TableFormat format);
// g(G_{3a+1,3b+1}) for 0 <= a, b <= size - 1.
std::string gmk_block_table(int size, TableFormat format);

// `which` is one of forest, bipartite, gmk, blocks, all. Throws
// kInvalidInput otherwise.
std::string render_tables(std::string_view which, TableFormat format);

}  // namespace chomp

#endif  // CHOMP_TABLES_HPP_
