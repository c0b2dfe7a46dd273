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

// Text formats for positions.
//
//   .cplx   vertices N            .edges   vertices N
//           face v1 v2 ...                 edge a b
//           # comment                      vertex a
//
// A .cplx file lists facets and is closed down on load. An .edges file is a
// graph; isolated vertices need an explicit `vertex` line.

#ifndef CHOMP_IO_HPP_
#define CHOMP_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "chomp/complex.hpp"

namespace chomp {

SimplicialComplex read_cplx(std::istream& in);
SimplicialComplex read_edges(std::istream& in);
void write_cplx(std::ostream& out, const SimplicialComplex& c);
// Throws kInvalidInput for non-graphs.
void write_edges(std::ostream& out, const SimplicialComplex& c);

// Dispatches on extension: ".edges" is a graph, anything else is ".cplx".
SimplicialComplex load_position(const std::filesystem::path& path);
void save_position(const std::filesystem::path& path,
                   const SimplicialComplex& c);

// {"vertices": N, "facets": [[...], ...]}
std::string position_json(const SimplicialComplex& c);

}  // namespace chomp

#endif  // CHOMP_IO_HPP_
