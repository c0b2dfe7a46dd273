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

#include "chomp/tables.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "chomp/closed_forms.hpp"
#include "chomp/error.hpp"

namespace chomp {
namespace {

using Grid = std::vector<std::vector<std::string>>;

std::string render(const std::string& title, const Grid& grid,
                   TableFormat format) {
  std::string out;
  if (format == TableFormat::kCsv) {
    for (const auto& row : grid) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j > 0) out += ',';
        out += row[j];
      }
      out += '\n';
    }
    return out;
  }
  std::vector<std::size_t> width;
  for (const auto& row : grid) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      width[j] = std::max(width[j], row[j].size());
    }
  }
  out += title + '\n';
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) line += "  ";
      line += std::string(width[j] - row[j].size(), ' ') + row[j];
    }
    out += line + '\n';
  }
  return out;
}

Grid square(const std::string& corner, const std::vector<std::string>& rows,
            const std::vector<std::string>& cols,
            const std::function<unsigned(std::size_t, std::size_t)>& cell) {
  Grid grid;
  grid.push_back({corner});
  for (const auto& c : cols) grid[0].push_back(c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::string> row = {rows[i]};
    for (std::size_t j = 0; j < cols.size(); ++j) {
      row.push_back(std::to_string(cell(i, j)));
    }
    grid.push_back(std::move(row));
  }
  return grid;
}

std::vector<std::string> numbers(int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(std::to_string(i));
  return out;
}

const std::vector<std::string> kParity = {"even", "odd"};

}  // namespace

std::string forest_table(TableFormat format) {
  // Representative sizes with the requested parities.
  return render("forest values (rows: vertices, columns: components)",
                square("v\\c", kParity, kParity,
                       [](std::size_t i, std::size_t j) {
                         const int comps = j == 0 ? 2 : 1;
                         const int v = i == 0 ? 4 : 3;
                         return forest_value(v, comps).value;
                       }),
                format);
}

std::string bipartite_table(TableFormat format) {
  return render("bipartite values (rows: vertices, columns: edges)",
                square("v\\e", kParity, kParity,
                       [](std::size_t i, std::size_t j) {
                         return bipartite_value(static_cast<int>(i),
                                                static_cast<int>(j))
                             .value;
                       }),
                format);
}

std::string gmk_table(int size, TableFormat format) {
  if (size < 1) throw Error(ErrorCode::kInvalidInput, "table size must be >= 1");
  return render("g(G_{m,k}) (rows: m, columns: k)",
                square("m\\k", numbers(1, size), numbers(1, size),
                       [](std::size_t i, std::size_t j) {
                         return gmk_value(static_cast<int>(i) + 1,
                                          static_cast<int>(j) + 1)
                             .value;
                       }),
                format);
}

std::string gmk_block_table(int size, TableFormat format) {
  if (size < 1) throw Error(ErrorCode::kInvalidInput, "table size must be >= 1");
  return render("g(G_{3a+1,3b+1}) (rows: a, columns: b)",
                square("a\\b", numbers(0, size - 1), numbers(0, size - 1),
                       [](std::size_t i, std::size_t j) {
                         return gmk_value(3 * static_cast<int>(i) + 1,
                                          3 * static_cast<int>(j) + 1)
                             .value;
                       }),
                format);
}

std::string render_tables(std::string_view which, TableFormat format) {
  const bool all = which == "all";
  std::vector<std::string> parts;
  if (all || which == "forest") parts.push_back(forest_table(format));
  if (all || which == "bipartite") parts.push_back(bipartite_table(format));
  if (all || which == "gmk") parts.push_back(gmk_table(12, format));
  if (all || which == "blocks") parts.push_back(gmk_block_table(8, format));
  if (parts.empty()) {
    throw Error(ErrorCode::kInvalidInput,
                "unknown table '" + std::string(which) + "'");
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += '\n';
    out += parts[i];
  }
  return out;
}

}  // namespace chomp
