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

#include "chomp/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "chomp/error.hpp"
#include "json.hpp"

namespace chomp {
namespace {

struct Line {
  int number = 0;
  std::string keyword;
  std::vector<long> args;
};

[[noreturn]] void parse_error(int line, const std::string& msg) {
  throw Error(ErrorCode::kParse,
              "line " + std::to_string(line) + ": " + msg);
}

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream ls(raw);
    Line line;
    line.number = number;
    if (!(ls >> line.keyword)) continue;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        const long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        line.args.push_back(v);
      } catch (const std::exception&) {
        parse_error(number, "expected an integer, got '" + tok + "'");
      }
    }
    out.push_back(std::move(line));
  }
  return out;
}

int read_header(const std::vector<Line>& lines) {
  if (lines.empty() || lines.front().keyword != "vertices" ||
      lines.front().args.size() != 1) {
    parse_error(lines.empty() ? 1 : lines.front().number,
                "expected 'vertices N' header");
  }
  const long n = lines.front().args[0];
  if (n < 0 || n > kMaxVertices) {
    parse_error(lines.front().number, "vertex count must lie in [0, 64]");
  }
  return static_cast<int>(n);
}

Face checked_face(const Line& line, int ground) {
  VertexMask bits = 0;
  for (long v : line.args) {
    if (v < 0 || v >= ground) {
      throw Error(ErrorCode::kInvalidInput,
                  "line " + std::to_string(line.number) + ": vertex " +
                      std::to_string(v) + " outside ground set of size " +
                      std::to_string(ground));
    }
    bits |= VertexMask{1} << v;
  }
  return Face(bits);
}

}  // namespace

SimplicialComplex read_cplx(std::istream& in) {
  const auto lines = tokenize(in);
  const int ground = read_header(lines);
  std::vector<Face> facets;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.keyword != "face") {
      parse_error(line.number, "unknown keyword '" + line.keyword + "'");
    }
    if (line.args.empty()) parse_error(line.number, "empty face");
    facets.push_back(checked_face(line, ground));
  }
  return SimplicialComplex::close_down(facets, ground);
}

SimplicialComplex read_edges(std::istream& in) {
  const auto lines = tokenize(in);
  const int ground = read_header(lines);
  std::vector<Face> facets;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.keyword == "edge") {
      if (line.args.size() != 2 || line.args[0] == line.args[1]) {
        parse_error(line.number, "edge needs two distinct endpoints");
      }
    } else if (line.keyword == "vertex") {
      if (line.args.size() != 1) {
        parse_error(line.number, "vertex needs one id");
      }
    } else {
      parse_error(line.number, "unknown keyword '" + line.keyword + "'");
    }
    facets.push_back(checked_face(line, ground));
  }
  return SimplicialComplex::close_down(facets, ground);
}

void write_cplx(std::ostream& out, const SimplicialComplex& c) {
  out << "vertices " << c.ground_size() << '\n';
  for (Face f : c.facets()) {
    out << "face";
    for (Vertex v : f.members()) out << ' ' << v;
    out << '\n';
  }
}

void write_edges(std::ostream& out, const SimplicialComplex& c) {
  if (!c.is_graph()) {
    throw Error(ErrorCode::kInvalidInput,
                ".edges output requires a graph (no 2-simplices)");
  }
  out << "vertices " << c.ground_size() << '\n';
  VertexMask covered = 0;
  for (Face f : c.faces()) {
    if (f.size() != 2) continue;
    covered |= f.bits();
    const auto m = f.members();
    out << "edge " << m[0] << ' ' << m[1] << '\n';
  }
  for (Vertex v : Face(c.vertex_mask() & ~covered).members()) {
    out << "vertex " << v << '\n';
  }
}

SimplicialComplex load_position(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInvalidInput,
                "cannot open position file " + path.string());
  }
  if (path.extension() == ".edges") return read_edges(in);
  return read_cplx(in);
}

void save_position(const std::filesystem::path& path,
                   const SimplicialComplex& c) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kInvalidInput,
                "cannot write position file " + path.string());
  }
  if (path.extension() == ".edges") {
    write_edges(out, c);
  } else {
    write_cplx(out, c);
  }
}

std::string position_json(const SimplicialComplex& c) {
  nlohmann::json j;
  j["vertices"] = c.ground_size();
  auto facets = nlohmann::json::array();
  for (Face f : c.facets()) facets.push_back(f.members());
  j["facets"] = std::move(facets);
  return j.dump();
}

}  // namespace chomp
