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

#include "chomp/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "chomp/closed_forms.hpp"

namespace chomp {
namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

struct FamilyName {
  Family family;
  const char* name;
};

constexpr std::array<FamilyName, 19> kNames = {{
    {Family::kEmpty, "empty"},
    {Family::kComplete, "complete"},
    {Family::kCompleteNpartite, "npartite"},
    {Family::kPath, "path"},
    {Family::kCycle, "cycle"},
    {Family::kTree, "tree"},
    {Family::kForest, "forest"},
    {Family::kPseudotree, "pseudotree"},
    {Family::kGmk, "gmk"},
    {Family::kHairball, "hairball"},
    {Family::kWheel, "wheel"},
    {Family::kFigure8, "figure8"},
    {Family::kTheta, "theta"},
    {Family::kTorus3x3, "torus_3x3"},
    {Family::kFullSimplex, "full_simplex"},
    {Family::kErdosRenyi, "erdos_renyi"},
    {Family::kRandomBipartite, "random_bipartite"},
    {Family::kRandomComplex, "random_complex"},
    {Family::kFig3Counterexample, "fig3_counterexample"},
}};

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::kInvalidInput, what);
}

void require(bool ok, const FamilySpec& spec, const char* what) {
  if (!ok) bad(spec.to_string() + ": " + what);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view s, std::string_view context) {
  T value{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw Error(ErrorCode::kParse, "bad number '" + std::string(s) + "' in '" +
                                       std::string(context) + "'");
  }
  return value;
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::vector<std::vector<int>> parse_tails(std::string_view s,
                                          std::string_view context) {
  std::vector<std::vector<int>> out;
  for (auto slot : split(s, '/')) {
    std::vector<int> lens;
    if (!slot.empty()) {
      for (auto t : split(slot, '+')) lens.push_back(parse_number<int>(t, context));
    }
    out.push_back(std::move(lens));
  }
  return out;
}

std::string format_tails(const std::vector<std::vector<int>>& tails) {
  std::string out;
  for (std::size_t i = 0; i < tails.size(); ++i) {
    if (i > 0) out += '/';
    for (std::size_t j = 0; j < tails[i].size(); ++j) {
      if (j > 0) out += '+';
      out += std::to_string(tails[i][j]);
    }
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

void add_cycle(EdgeList& edges, Vertex first, int len) {
  for (int i = 0; i < len; ++i) {
    edges.emplace_back(first + static_cast<Vertex>(i),
                       first + static_cast<Vertex>((i + 1) % len));
  }
}

// Path of `len` new vertices starting at `next`, hanging from `from`.
Vertex add_tail(EdgeList& edges, Vertex from, Vertex next, int len) {
  Vertex prev = from;
  for (int i = 0; i < len; ++i) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  return next;
}

SimplicialComplex random_graph(int n, const FamilySpec& spec,
                               const std::function<bool(int, int)>& allowed) {
  std::mt19937_64 rng(spec.seed);
  EdgeList edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (allowed(i, j) && bernoulli(rng, spec.p)) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return graph_from_edges(n, edges);
}

// Vertex i >= roots attaches to a uniform earlier vertex.
SimplicialComplex random_attachments(int n, int roots, EdgeList edges,
                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = roots; i < n; ++i) {
    const auto parent = uniform_below(rng, static_cast<std::uint64_t>(i));
    edges.emplace_back(static_cast<Vertex>(parent), static_cast<Vertex>(i));
  }
  return graph_from_edges(n, edges);
}

SimplicialComplex torus_3x3() {
  auto id = [](int i, int j) {
    return static_cast<Vertex>(3 * ((i + 3) % 3) + (j + 3) % 3);
  };
  std::vector<Face> facets;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      facets.push_back(Face::of({id(i, j), id(i + 1, j), id(i + 1, j + 1)}));
      facets.push_back(Face::of({id(i, j), id(i, j + 1), id(i + 1, j + 1)}));
    }
  }
  return SimplicialComplex::close_down(facets, 9);
}

}  // namespace

const char* to_string(Family f) {
  for (const auto& [family, name] : kNames) {
    if (family == f) return name;
  }
  return "unknown";
}

std::string FamilySpec::to_string() const {
  std::string out = chomp::to_string(family);
  auto seeded = [&](std::string args) {
    return out + ":" + args + "seed=" + std::to_string(seed);
  };
  switch (family) {
    case Family::kEmpty:
    case Family::kTorus3x3:
    case Family::kFig3Counterexample:
      return out;
    case Family::kComplete:
    case Family::kPath:
    case Family::kCycle:
    case Family::kWheel:
    case Family::kFullSimplex:
      return out + ":" + std::to_string(n);
    case Family::kCompleteNpartite:
    case Family::kFigure8:
    case Family::kTheta:
      return out + ":" + join(parts);
    case Family::kGmk:
      return out + ":m=" + std::to_string(m) + ",k=" + std::to_string(k) +
             ",cycle=" + std::to_string(cycle);
    case Family::kHairball:
      return out + ":cycle=" + std::to_string(cycle) +
             ",tails=" + format_tails(tails);
    case Family::kTree:
      return seeded("n=" + std::to_string(n) + ",");
    case Family::kForest:
      return seeded("n=" + std::to_string(n) +
                    ",c=" + std::to_string(components) + ",");
    case Family::kPseudotree:
      return seeded("cycle=" + std::to_string(cycle) +
                    ",n=" + std::to_string(n) + ",");
    case Family::kErdosRenyi:
      return seeded("n=" + std::to_string(n) + ",p=" + format_double(p) + ",");
    case Family::kRandomBipartite:
      return seeded("a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                    ",p=" + format_double(p) + ",");
    case Family::kRandomComplex:
      return seeded("n=" + std::to_string(n) +
                    ",facets=" + std::to_string(facets) +
                    ",size=" + std::to_string(max_facet) + ",");
  }
  return out;
}

FamilySpec parse_family(std::string_view text) {
  FamilySpec spec;
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const auto it = std::find_if(kNames.begin(), kNames.end(),
                               [&](const FamilyName& f) { return f.name == name; });
  if (it == kNames.end()) bad("unknown family '" + std::string(name) + "'");
  spec.family = it->family;
  if (colon == std::string_view::npos) return spec;

  std::vector<int> positional;
  for (auto arg : split(text.substr(colon + 1), ',')) {
    const auto eq = arg.find('=');
    if (eq == std::string_view::npos) {
      positional.push_back(parse_number<int>(arg, text));
      continue;
    }
    const auto key = arg.substr(0, eq);
    const auto val = arg.substr(eq + 1);
    if (key == "n") {
      spec.n = parse_number<int>(val, text);
    } else if (key == "m") {
      spec.m = parse_number<int>(val, text);
    } else if (key == "k") {
      spec.k = parse_number<int>(val, text);
    } else if (key == "cycle") {
      spec.cycle = parse_number<int>(val, text);
    } else if (key == "c") {
      spec.components = parse_number<int>(val, text);
    } else if (key == "a") {
      spec.a = parse_number<int>(val, text);
    } else if (key == "b") {
      spec.b = parse_number<int>(val, text);
    } else if (key == "p") {
      spec.p = parse_number<double>(val, text);
    } else if (key == "seed") {
      spec.seed = parse_number<std::uint64_t>(val, text);
    } else if (key == "facets") {
      spec.facets = parse_number<int>(val, text);
    } else if (key == "size") {
      spec.max_facet = parse_number<int>(val, text);
    } else if (key == "tails") {
      spec.tails = parse_tails(val, text);
    } else {
      throw Error(ErrorCode::kParse, "unknown parameter '" + std::string(key) +
                                         "' in '" + std::string(text) + "'");
    }
  }

  auto take = [&](std::size_t count) {
    if (positional.size() > count) {
      throw Error(ErrorCode::kParse,
                  "too many arguments in '" + std::string(text) + "'");
    }
  };
  switch (spec.family) {
    case Family::kCompleteNpartite:
    case Family::kFigure8:
    case Family::kTheta:
      spec.parts = positional;
      break;
    case Family::kGmk:
      take(3);
      if (!positional.empty()) spec.m = positional[0];
      if (positional.size() > 1) spec.k = positional[1];
      if (positional.size() > 2) spec.cycle = positional[2];
      if (spec.cycle == 0) spec.cycle = 3;
      break;
    case Family::kHairball:
      take(0);
      if (spec.cycle == 0) spec.cycle = 3;
      break;
    default:
      take(1);
      if (!positional.empty()) spec.n = positional[0];
      break;
  }
  return spec;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

bool bernoulli(std::mt19937_64& rng, double p) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

SimplicialComplex graph_from_edges(int n, const EdgeList& edges) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorCode::kCapacity,
                "graph needs " + std::to_string(n) + " vertices");
  }
  std::vector<Face> facets;
  for (int v = 0; v < n; ++v) facets.push_back(Face::vertex(static_cast<Vertex>(v)));
  for (auto [u, v] : edges) {
    if (u == v) bad("self-loop at vertex " + std::to_string(u));
    facets.push_back(Face::of({u, v}));
  }
  return SimplicialComplex::close_down(facets, n);
}

SimplicialComplex attach_tail(const SimplicialComplex& c, Vertex at, int k) {
  if (at >= static_cast<Vertex>(kMaxVertices) ||
      ((c.vertex_mask() >> at) & 1U) == 0) {
    bad("attach point " + std::to_string(at) + " is not a vertex");
  }
  if (k < 0) bad("tail length must be nonnegative");
  if (k == 0) return c;
  const int first = std::max(c.ground_size(), Face(c.vertex_mask()).span_size());
  const int ground = first + k;
  if (ground > kMaxVertices) {
    throw Error(ErrorCode::kCapacity, "tail would exceed 64 vertices");
  }
  std::vector<Face> faces(c.faces().begin(), c.faces().end());
  Vertex prev = at;
  for (int i = 0; i < k; ++i) {
    const auto v = static_cast<Vertex>(first + i);
    faces.push_back(Face::vertex(v));
    faces.push_back(Face::of({prev, v}));
    prev = v;
  }
  return SimplicialComplex::from_closed_faces(std::move(faces), ground);
}

SimplicialComplex generate(const FamilySpec& spec) {
  EdgeList edges;
  switch (spec.family) {
    case Family::kEmpty:
      return {};
    case Family::kComplete:
      require(spec.n >= 0 && spec.n <= kMaxVertices, spec, "need 0 <= n <= 64");
      for (int i = 0; i < spec.n; ++i) {
        for (int j = i + 1; j < spec.n; ++j) {
          edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
      }
      return graph_from_edges(spec.n, edges);
    case Family::kCompleteNpartite: {
      require(!spec.parts.empty(), spec, "need at least one part");
      int total = 0;
      std::vector<int> part_of;
      for (std::size_t p = 0; p < spec.parts.size(); ++p) {
        require(spec.parts[p] >= 1, spec, "parts must be positive");
        total += spec.parts[p];
        require(total <= kMaxVertices, spec, "more than 64 vertices");
        part_of.insert(part_of.end(), static_cast<std::size_t>(spec.parts[p]),
                       static_cast<int>(p));
      }
      for (int i = 0; i < total; ++i) {
        for (int j = i + 1; j < total; ++j) {
          if (part_of[static_cast<std::size_t>(i)] !=
              part_of[static_cast<std::size_t>(j)]) {
            edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
          }
        }
      }
      return graph_from_edges(total, edges);
    }
    case Family::kPath:
      require(spec.n >= 0 && spec.n <= kMaxVertices, spec, "need 0 <= n <= 64");
      for (int i = 0; i + 1 < spec.n; ++i) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
      }
      return graph_from_edges(spec.n, edges);
    case Family::kCycle:
      require(spec.n >= 3 && spec.n <= kMaxVertices, spec, "need 3 <= n <= 64");
      add_cycle(edges, 0, spec.n);
      return graph_from_edges(spec.n, edges);
    case Family::kWheel:
      require(spec.n >= 3 && spec.n < kMaxVertices, spec, "need 3 <= n <= 63");
      add_cycle(edges, 0, spec.n);
      for (int i = 0; i < spec.n; ++i) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(spec.n));
      }
      return graph_from_edges(spec.n + 1, edges);
    case Family::kFullSimplex: {
      require(spec.n >= 1 && spec.n <= 24, spec, "need 1 <= n <= 24");
      const VertexMask all = (VertexMask{1} << spec.n) - 1;
      return SimplicialComplex::close_down({Face(all)}, spec.n);
    }
    case Family::kTorus3x3:
      return torus_3x3();
    case Family::kFig3Counterexample:
      return graph_from_edges(3, {{0, 1}});
    case Family::kFigure8: {
      require(spec.parts.size() == 2 && spec.parts[0] >= 3 &&
                  spec.parts[1] >= 3,
              spec, "need two cycle lengths >= 3");
      const int n = spec.parts[0] + spec.parts[1] - 1;
      require(n <= kMaxVertices, spec, "more than 64 vertices");
      add_cycle(edges, 0, spec.parts[0]);
      // Second cycle runs 0, c1, ..., c1 + c2 - 2, back to 0.
      Vertex prev = 0;
      for (int i = 0; i < spec.parts[1] - 1; ++i) {
        const auto v = static_cast<Vertex>(spec.parts[0] + i);
        edges.emplace_back(prev, v);
        prev = v;
      }
      edges.emplace_back(prev, 0);
      return graph_from_edges(n, edges);
    }
    case Family::kTheta: {
      require(spec.parts.size() == 3, spec, "need three path lengths");
      int ones = 0;
      int n = 2;
      for (int len : spec.parts) {
        require(len >= 1, spec, "path lengths must be >= 1");
        ones += len == 1 ? 1 : 0;
        n += len - 1;
      }
      require(ones <= 1, spec, "at most one path of length 1");
      require(n <= kMaxVertices, spec, "more than 64 vertices");
      Vertex next = 2;
      for (int len : spec.parts) {
        Vertex prev = 0;
        for (int i = 0; i < len - 1; ++i) {
          edges.emplace_back(prev, next);
          prev = next++;
        }
        edges.emplace_back(prev, 1);
      }
      return graph_from_edges(n, edges);
    }
    case Family::kGmk: {
      require(spec.cycle >= 3 && spec.cycle % 2 == 1, spec,
              "cycle must be odd and >= 3");
      require(spec.m >= 0 && spec.k >= 0, spec, "tails must be nonnegative");
      const int n = spec.cycle + 1 + spec.m + spec.k;
      require(n <= kMaxVertices, spec, "more than 64 vertices");
      add_cycle(edges, 0, spec.cycle);
      const auto b = static_cast<Vertex>(spec.cycle);
      edges.emplace_back(0, b);
      Vertex next = add_tail(edges, b, b + 1, spec.m);
      add_tail(edges, b, next, spec.k);
      return graph_from_edges(n, edges);
    }
    case Family::kHairball: {
      require(spec.cycle >= 3, spec, "cycle must be >= 3");
      require(spec.tails.size() <= static_cast<std::size_t>(spec.cycle), spec,
              "more tail slots than cycle vertices");
      int n = spec.cycle;
      for (const auto& slot : spec.tails) {
        for (int len : slot) {
          require(len >= 1, spec, "tail lengths must be >= 1");
          n += len;
        }
      }
      require(n <= kMaxVertices, spec, "more than 64 vertices");
      add_cycle(edges, 0, spec.cycle);
      auto next = static_cast<Vertex>(spec.cycle);
      for (std::size_t i = 0; i < spec.tails.size(); ++i) {
        for (int len : spec.tails[i]) {
          next = add_tail(edges, static_cast<Vertex>(i), next, len);
        }
      }
      return graph_from_edges(n, edges);
    }
    case Family::kTree:
      require(spec.n >= 1 && spec.n <= kMaxVertices, spec, "need 1 <= n <= 64");
      return random_attachments(spec.n, 1, {}, spec.seed);
    case Family::kForest:
      require(spec.components >= 1 && spec.n >= spec.components &&
                  spec.n <= kMaxVertices,
              spec, "need 1 <= c <= n <= 64");
      return random_attachments(spec.n, spec.components, {}, spec.seed);
    case Family::kPseudotree:
      require(spec.cycle >= 3 && spec.n >= spec.cycle &&
                  spec.n <= kMaxVertices,
              spec, "need 3 <= cycle <= n <= 64");
      add_cycle(edges, 0, spec.cycle);
      return random_attachments(spec.n, spec.cycle, edges, spec.seed);
    case Family::kErdosRenyi:
      require(spec.n >= 0 && spec.n <= kMaxVertices, spec, "need 0 <= n <= 64");
      require(spec.p >= 0.0 && spec.p <= 1.0, spec, "need 0 <= p <= 1");
      return random_graph(spec.n, spec, [](int, int) { return true; });
    case Family::kRandomBipartite: {
      require(spec.a >= 0 && spec.b >= 0 && spec.a + spec.b <= kMaxVertices,
              spec, "need a, b >= 0 and a + b <= 64");
      require(spec.p >= 0.0 && spec.p <= 1.0, spec, "need 0 <= p <= 1");
      const int a = spec.a;
      return random_graph(a + spec.b, spec,
                          [a](int i, int j) { return i < a && j >= a; });
    }
    case Family::kRandomComplex: {
      require(spec.n >= 1 && spec.n <= 24, spec, "need 1 <= n <= 24");
      require(spec.max_facet >= 2 && spec.max_facet <= spec.n, spec,
              "need 2 <= size <= n");
      require(spec.facets >= 0, spec, "facets must be nonnegative");
      std::mt19937_64 rng(spec.seed);
      std::vector<Face> facets;
      for (int v = 0; v < spec.n; ++v) facets.push_back(Face::vertex(static_cast<Vertex>(v)));
      for (int f = 0; f < spec.facets; ++f) {
        const int size =
            2 + static_cast<int>(uniform_below(
                    rng, static_cast<std::uint64_t>(spec.max_facet - 1)));
        // Partial Fisher-Yates over the vertex list.
        std::vector<Vertex> pool(static_cast<std::size_t>(spec.n));
        std::iota(pool.begin(), pool.end(), Vertex{0});
        VertexMask mask = 0;
        for (int i = 0; i < size; ++i) {
          const auto j = static_cast<std::size_t>(i) +
                         uniform_below(rng, static_cast<std::uint64_t>(spec.n - i));
          std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
          mask |= VertexMask{1} << pool[static_cast<std::size_t>(i)];
        }
        facets.push_back(Face(mask));
      }
      return SimplicialComplex::close_down(facets, spec.n);
    }
  }
  bad("unhandled family");
}

SimplicialComplex generate(std::string_view text) {
  return generate(parse_family(text));
}

GeneratedInstance generate_instance(const FamilySpec& spec) {
  GeneratedInstance out{spec, generate(spec), std::nullopt};
  const auto& c = out.complex;
  switch (spec.family) {
    case Family::kEmpty:
    case Family::kCycle:
    case Family::kTorus3x3:
      out.expected_value = 0;
      break;
    case Family::kComplete:
      out.expected_value = complete_graph_value(spec.n).value;
      break;
    case Family::kCompleteNpartite:
      out.expected_value = complete_npartite_value(spec.parts).value;
      break;
    case Family::kPath:
    case Family::kTree:
    case Family::kForest:
      if (c.vertex_count() > 0) {
        out.expected_value =
            forest_value(c.vertex_count(), graph_stats(c).components).value;
      } else {
        out.expected_value = 0;
      }
      break;
    case Family::kRandomBipartite:
      out.expected_value =
          bipartite_value(c.vertex_count(), static_cast<int>(c.edge_count()))
              .value;
      break;
    case Family::kFig3Counterexample:
      out.expected_value = 3;
      break;
    case Family::kGmk:
      if (spec.m >= 1 && spec.k >= 1) {
        out.expected_value = gmk_value(spec.m, spec.k).value;
      } else if (spec.m == 0 && spec.k == 0) {
        out.expected_value = 4;
      } else {
        out.expected_value = (spec.m + spec.k) % 2 == 1 ? 3 : 0;
      }
      break;
    case Family::kFigure8:
      out.expected_value = 1;
      break;
    case Family::kTheta:
      out.expected_value = theta_value(c).value;
      break;
    default:
      break;
  }
  return out;
}

}  // namespace chomp
