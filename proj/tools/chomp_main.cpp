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

// chomp: solve, reduce, verify and explore subset take-away positions.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "chomp/closed_forms.hpp"
#include "chomp/conjecture_lab.hpp"
#include "chomp/generators.hpp"
#include "chomp/io.hpp"
#include "chomp/oracle.hpp"
#include "chomp/symmetry.hpp"
#include "chomp/tables.hpp"
#include "json.hpp"
#include "verify.hpp"

namespace {

using namespace chomp;
using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

struct Globals {
  std::string cache;
  bool no_reduction = false;
  bool no_closed_forms = false;
  bool no_decomposition = false;
  bool oracle = false;
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t budget = 0;
  int threads = 1;

  EngineConfig engine() const {
    EngineConfig c;
    c.use_reduction = !no_reduction;
    c.use_closed_forms = !no_closed_forms;
    c.use_decomposition = !no_decomposition;
    if (budget > 0) c.memo_capacity = budget;
    return c;
  }

  OracleBudget oracle_budget() const {
    OracleBudget b;
    if (budget > 0) b.max_positions = budget;
    return b;
  }

  // Flag wins over CHOMP_CACHE.
  std::string cache_path() const {
    if (!cache.empty()) return cache;
    if (const char* env = std::getenv("CHOMP_CACHE")) return env;
    return {};
  }
};

struct PositionArgs {
  std::string family;
  std::string input;

  SimplicialComplex load() const {
    if (!family.empty() && !input.empty()) {
      throw Error(ErrorCode::kInvalidInput, "give --family or --input, not both");
    }
    if (!family.empty()) return generate(family);
    if (!input.empty()) return load_position(input);
    throw Error(ErrorCode::kInvalidInput, "a position is required (--family or --input)");
  }

  std::string label() const { return family.empty() ? input : family; }

  void add_to(CLI::App* cmd) {
    cmd->add_option("-f,--family", family, "family spec, e.g. gmk:m=2,k=5,cycle=3");
    cmd->add_option("-i,--input", input, "position file (.cplx or .edges)");
  }
};

// Loads the persistent table on construction, writes it back on save().
class Cache {
 public:
  explicit Cache(std::string path) : path_(std::move(path)) {
    if (!path_.empty() && std::filesystem::exists(path_)) table_.load(path_);
  }
  TranspositionTable& table() { return table_; }
  void save() const {
    if (!path_.empty()) table_.save(path_);
  }

 private:
  std::string path_;
  TranspositionTable table_;
};

Json face_json(Face f) { return f.members(); }

Json config_json(const EngineConfig& c) {
  Json j;
  j["reduction"] = c.use_reduction;
  j["closed_forms"] = c.use_closed_forms;
  j["decomposition"] = c.use_decomposition;
  j["memo_capacity"] = c.memo_capacity;
  return j;
}

std::string face_text(Face f) {
  std::string out = "{";
  const auto m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(m[i]);
  }
  return out + "}";
}

std::string position_text(const SimplicialComplex& c) {
  if (c.empty()) return "(empty)";
  std::string out;
  for (Face f : c.facets()) {
    if (!out.empty()) out += ' ';
    out += face_text(f);
  }
  return out;
}

// ---- solve ----------------------------------------------------------------

int cmd_solve(const Globals& g, const PositionArgs& pos) {
  const SimplicialComplex c = pos.load();
  Json j;
  j["position"] = pos.label();
  j["vertices"] = c.vertex_count();
  j["faces"] = c.face_count();

  if (g.oracle) {
    const OracleBudget budget = g.oracle_budget();
    const auto value = oracle_grundy(c, budget);
    std::optional<Face> best;
    if (value != 0) {
      for (Face f : c.moves()) {
        if (oracle_grundy(c.remove_face(f), budget) == 0) {
          best = f;
          break;
        }
      }
    }
    j["solver"] = "oracle";
    j["value"] = value;
    j["classification"] = value == 0 ? "P" : "N";
    j["optimal_move"] = best ? face_json(*best) : Json(nullptr);
  } else {
    Cache cache(g.cache_path());
    const EngineConfig config = g.engine();
    Engine engine(config, cache.table());
    const GrundyRecord rec = engine.solve(c);
    j["solver"] = "engine";
    j["value"] = rec.value;
    j["classification"] = rec.value == 0 ? "P" : "N";
    auto best = rec.witness_moves.find(0);
    j["optimal_move"] = rec.value != 0 && best != rec.witness_moves.end()
                            ? face_json(best->second)
                            : Json(nullptr);
    auto witnesses = Json::array();
    for (const auto& [v, f] : rec.witness_moves) {
      witnesses.push_back({{"value", v}, {"move", face_json(f)}});
    }
    j["witness_moves"] = witnesses;
    const FormulaResult formula = evaluate(c);
    j["closed_form"] = formula.applies()
                           ? Json{{"rule", formula.rule},
                                  {"kind", formula.is_exact() ? "exact"
                                                              : "lower_bound"},
                                  {"value", formula.value}}
                           : Json(nullptr);
    j["config"] = config_json(config);
    const SearchStats s = cache.table().stats();
    j["stats"] = {{"expansions", engine.counters().expansions},
                  {"closed_form_hits", engine.counters().closed_form_hits},
                  {"reductions", engine.counters().reductions},
                  {"table_entries", s.entries},
                  {"table_hits", s.hits},
                  {"table_misses", s.misses}};
    cache.save();
  }

  if (g.json) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "position:       " << pos.label() << '\n'
              << "value:          " << j["value"].get<Nimber>() << " ("
              << j["classification"].get<std::string>() << "-position)\n"
              << "optimal move:   "
              << (j["optimal_move"].is_null()
                      ? std::string("none")
                      : face_text(Face::of(j["optimal_move"].get<std::vector<Vertex>>())))
              << '\n';
    if (j.contains("closed_form") && !j["closed_form"].is_null()) {
      std::cout << "closed form:    " << j["closed_form"]["rule"].get<std::string>()
                << " (" << j["closed_form"]["kind"].get<std::string>() << ")\n";
    }
    if (j.contains("stats")) {
      std::cout << "expansions:     " << j["stats"]["expansions"] << '\n'
                << "table entries:  " << j["stats"]["table_entries"] << '\n';
    }
  }
  return kOk;
}

// ---- reduce ---------------------------------------------------------------

int cmd_reduce(const Globals& g, const PositionArgs& pos, const std::string& output,
               int max_steps) {
  const SimplicialComplex c = pos.load();
  ReduceBudget budget;
  budget.max_steps = max_steps;
  const SimplestResult r = reduce_to_simplest(c, budget);
  const SimplicialComplex final_position = r.position.compacted();

  Cache cache(g.cache_path());
  Engine engine(g.engine(), cache.table());
  const Nimber value = engine.value(final_position);
  cache.save();
  if (!output.empty()) save_position(output, final_position);

  const bool partial = r.status != SimplestStatus::kSimplest;
  if (g.json) {
    Json j;
    j["position"] = pos.label();
    j["status"] = to_string(r.status);
    j["partial"] = partial;
    j["trace"] = Json::parse(r.trace.to_json());
    j["final"] = Json::parse(position_json(final_position));
    j["final_vertices"] = final_position.vertex_count();
    j["final_edges"] = final_position.edge_count();
    j["value"] = value;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "position:  " << pos.label() << '\n';
    for (std::size_t i = 0; i < r.trace.steps.size(); ++i) {
      const auto& step = r.trace.steps[i];
      std::cout << "step " << i + 1 << ":   swap";
      for (auto [a, b] : step.involution.pairs()) std::cout << ' ' << a << "<->" << b;
      std::cout << " -> " << step.fixed_set.vertex_count() << " vertices, "
                << step.fixed_set.face_count() << " faces\n";
    }
    std::cout << "final:     " << position_text(final_position) << '\n'
              << "status:    " << to_string(r.status) << (partial ? " (partial)" : "")
              << '\n'
              << "value:     " << value << '\n';
  }
  return kOk;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const Globals& g, tools::VerifyOptions options) {
  options.seed = g.seed;
  const tools::VerifyReport report = tools::run_verify(options, g.engine());
  const std::size_t bad = report.failures();
  if (g.json) {
    Json j;
    j["family"] = report.family;
    j["cases"] = report.rows.size();
    j["agree"] = report.rows.size() - bad;
    j["disagree"] = bad;
    auto failures = Json::array();
    for (const auto& r : report.rows) {
      if (r.agree) continue;
      failures.push_back({{"label", r.label},
                          {"rule", r.rule},
                          {"expected", r.expected},
                          {"lower_bound", r.lower_bound},
                          {r.solver, r.engine ? Json(*r.engine) : Json(nullptr)},
                          {"oracle", r.oracle ? Json(*r.oracle) : Json(nullptr)}});
    }
    j["failures"] = failures;
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& r : report.rows) {
      if (r.agree) continue;
      std::cout << "DISAGREE " << r.label << ": " << r.rule << " says "
                << (r.lower_bound ? ">= " : "") << r.expected << ", " << r.solver
                << " " << (r.engine ? std::to_string(*r.engine) : "n/a")
                << ", oracle " << (r.oracle ? std::to_string(*r.oracle) : "n/a")
                << '\n';
    }
    std::cout << "verify " << report.family << ": " << report.rows.size()
              << " cases, " << report.rows.size() - bad << " agree, " << bad
              << " disagree -> " << (bad == 0 ? "pass" : "FAIL") << '\n';
  }
  return bad == 0 ? kOk : kFailed;
}

// ---- play -----------------------------------------------------------------

std::optional<Face> parse_face(const std::string& line, const SimplicialComplex& c,
                               std::string& error) {
  std::vector<Vertex> vs;
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return true;
    if (digits.size() > 2) return false;
    vs.push_back(static_cast<Vertex>(std::stoul(digits)));
    digits.clear();
    return vs.back() < static_cast<Vertex>(kMaxVertices);
  };
  for (char ch : line) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
    } else if (!flush()) {
      error = "vertex ids must lie in [0, 63]";
      return std::nullopt;
    }
  }
  if (!flush()) {
    error = "vertex ids must lie in [0, 63]";
    return std::nullopt;
  }
  if (vs.empty()) {
    error = "enter a face as vertex ids, e.g. 0 1";
    return std::nullopt;
  }
  const Face f = Face::of(vs);
  if (!c.contains(f)) {
    error = face_text(f) + " is not a face of the position";
    return std::nullopt;
  }
  return f;
}

int cmd_play(const Globals& g, const PositionArgs& pos, const std::string& first,
             const std::string& transcript_path) {
  SimplicialComplex c = pos.load();
  Cache cache(g.cache_path());
  Engine engine(g.engine(), cache.table());
  std::ostringstream transcript;
  transcript << "position " << pos.label() << '\n';

  bool solver_turn = false;
  if (first == "solver") {
    solver_turn = true;
  } else if (first == "auto") {
    solver_turn = engine.value(c) != 0;
  } else if (first != "human") {
    throw Error(ErrorCode::kInvalidInput, "--first must be human, solver or auto");
  }

  std::string last_mover;
  while (!c.empty()) {
    std::cout << "position: " << position_text(c) << '\n';
    Face move;
    if (solver_turn) {
      const GrundyRecord rec = engine.solve(c);
      auto best = rec.witness_moves.find(0);
      move = best != rec.witness_moves.end() ? best->second : c.moves().front();
      std::cout << "solver takes " << face_text(move) << " (value " << rec.value
                << ")\n";
      transcript << "solver " << face_text(move) << '\n';
      last_mover = "solver";
    } else {
      std::cout << "your move> " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) {
        std::cout << "\nsession ended\n";
        transcript << "eof\n";
        break;
      }
      std::string error;
      auto f = parse_face(line, c, error);
      if (!f) {
        std::cout << error << "; try again\n";
        continue;
      }
      move = *f;
      transcript << "human " << face_text(move) << '\n';
      last_mover = "human";
    }
    c = c.remove_face(move);
    solver_turn = !solver_turn;
  }
  if (c.empty() && !last_mover.empty()) {
    std::cout << "position empty: " << last_mover << " wins\n";
    transcript << "winner " << last_mover << '\n';
  }
  cache.save();
  if (!transcript_path.empty()) {
    std::ofstream out(transcript_path);
    out << transcript.str();
  }
  return kOk;
}

// ---- scan -----------------------------------------------------------------

struct ScanArgs {
  std::string base;
  std::string input;
  int attach = -1;
  int kmax = 9;
  int vmax = 8;
  int cycle = 0;
  int max = 7;
  std::string report;
  bool resume = false;
  int window = 6;
};

class ReportSink {
 public:
  ReportSink(const std::string& path, bool resume) {
    if (path.empty()) return;
    if (resume) done_ = report_ids(path);
    out_.open(path, resume ? std::ios::app : std::ios::trunc);
    if (!out_) throw Error(ErrorCode::kInvalidInput, "cannot write report " + path);
  }
  const std::set<std::string>& done() const { return done_; }
  void write(const std::string& line) {
    if (out_.is_open()) out_ << line << '\n';
  }

 private:
  std::set<std::string> done_;
  std::ofstream out_;
};

ScanConfig scan_config(const Globals& g, int window) {
  ScanConfig cfg;
  cfg.engine = g.engine();
  cfg.window = window;
  cfg.threads = g.threads;
  return cfg;
}

int cmd_scan_tails(const Globals& g, const ScanArgs& a) {
  PositionArgs pos{a.base, a.input};
  const SimplicialComplex base = pos.load();
  std::optional<Vertex> attach;
  if (a.attach >= 0) {
    attach = static_cast<Vertex>(a.attach);
  } else {
    attach = default_tail_vertex(base);
  }
  if (!attach) throw Error(ErrorCode::kInvalidInput, "base has no leaf to extend");
  ReportSink sink(a.report, a.resume);
  Cache cache(g.cache_path());
  const TailSequence seq =
      scan_tails(base, pos.label(), *attach, a.kmax, scan_config(g, a.window),
                 cache.table());
  cache.save();
  const std::string line = seq.to_json();
  if (!sink.done().contains(Json::parse(line)["id"].get<std::string>())) {
    sink.write(line);
  }
  if (g.json) {
    std::cout << line << '\n';
  } else {
    std::cout << "base " << seq.base << ", tail at vertex " << seq.attach << '\n'
              << "values:";
    for (Nimber v : seq.values) std::cout << ' ' << v;
    std::cout << (seq.truncated ? " (truncated: " + seq.truncation_reason + ")" : "")
              << '\n'
              << "pattern: " << to_string(seq.classification.pattern);
    if (seq.classification.pattern == SequencePattern::kPeriod2) {
      std::cout << " n=" << seq.classification.n;
    } else if (seq.classification.pattern == SequencePattern::kTableRow) {
      std::cout << " row=" << seq.classification.row
                << " offset=" << seq.classification.offset;
    }
    std::cout << ", stable from index " << seq.classification.stabilized_at << '\n'
              << "values = 1 mod 4: " << seq.residue_one.size() << '\n'
              << "oracle checks: " << seq.oracle_checked
              << (seq.oracle_agrees ? " agree" : " DISAGREE") << '\n';
  }
  return seq.residue_one.empty() && seq.oracle_agrees ? kOk : kFailed;
}

int cmd_scan_multi(const Globals& g, const ScanArgs& a) {
  ReportSink sink(a.report, a.resume);
  Cache cache(g.cache_path());
  const ScanConfig cfg = scan_config(g, a.window);
  std::vector<int> cycles;
  if (a.cycle > 0) {
    cycles.push_back(a.cycle);
  } else {
    for (int c = 3; c < a.vmax; c += 2) cycles.push_back(c);
  }
  std::size_t total = 0, agree = 0, violate = 0, unverified = 0;
  for (int cycle : cycles) {
    for (const auto& row : scan_multi_attachment(cycle, a.vmax, cfg, cache.table(),
                                                 sink.done())) {
      sink.write(row.to_json());
      ++total;
      if (row.verdict == "agree") ++agree;
      if (row.verdict == "violate") ++violate;
      if (row.verdict == "unverified") ++unverified;
      if (g.json) {
        std::cout << row.to_json() << '\n';
      } else if (row.verdict != "agree") {
        std::cout << row.verdict << ": cycle " << row.cycle << ", v=" << row.vertices
                  << ", edges " << row.edges << '\n';
      }
    }
  }
  cache.save();
  if (!g.json) {
    std::cout << "multi-attachment: " << total << " instances, " << agree
              << " agree, " << violate << " violate, " << unverified
              << " unverified\n";
  }
  return violate == 0 ? kOk : kFailed;
}

int cmd_scan_wheels(const Globals& g, const ScanArgs& a) {
  ReportSink sink(a.report, a.resume);
  Cache cache(g.cache_path());
  const auto rows =
      scan_wheels(a.max, scan_config(g, a.window), cache.table(), sink.done());
  cache.save();
  bool violation = false;
  if (!g.json) std::cout << "   n  value  method     verdict\n";
  for (const auto& r : rows) {
    sink.write(r.to_json());
    violation = violation || r.verdict == "violate";
    if (g.json) {
      std::cout << r.to_json() << '\n';
    } else {
      std::printf("%4d  %5s  %-9s  %s\n", r.n,
                  r.value ? std::to_string(*r.value).c_str() : "-",
                  r.method.c_str(), r.verdict.c_str());
    }
  }
  return violation ? kFailed : kOk;
}

// ---- cache ----------------------------------------------------------------

int cmd_cache(const Globals& g, const std::string& action) {
  const std::string path = g.cache_path();
  if (path.empty()) {
    throw Error(ErrorCode::kInvalidInput, "no cache file (use --cache or CHOMP_CACHE)");
  }
  if (action == "clear") {
    std::filesystem::remove(path);
    std::cout << "removed " << path << '\n';
    return kOk;
  }
  Cache cache(path);
  std::size_t canonical = 0;
  std::map<Nimber, std::size_t> by_value;
  const auto entries = cache.table().entries();
  for (const auto& [key, value] : entries) {
    canonical += key.canonical ? 1 : 0;
    ++by_value[value];
  }
  if (g.json) {
    Json j;
    j["path"] = path;
    j["entries"] = entries.size();
    j["canonical"] = canonical;
    Json values = Json::object();
    for (const auto& [v, n] : by_value) values[std::to_string(v)] = n;
    j["values"] = values;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << path << ": " << entries.size() << " entries (" << canonical
              << " canonical, " << entries.size() - canonical << " labeled)\n";
    for (const auto& [v, n] : by_value) {
      std::cout << "  value " << v << ": " << n << '\n';
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and verification lab for subset take-away"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--cache", g.cache, "persistent table file (overrides CHOMP_CACHE)");
  app.add_flag("--no-reduction", g.no_reduction, "disable symmetry reduction");
  app.add_flag("--no-closed-forms", g.no_closed_forms, "disable closed-form shortcuts");
  app.add_flag("--no-decomposition", g.no_decomposition,
               "disable splitting into components");
  app.add_flag("--oracle", g.oracle, "solve with the brute-force oracle");
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "seed for sampled sweeps");
  app.add_option("--budget", g.budget, "memo entry limit (engine and oracle)");
  app.add_option("--threads", g.threads, "worker threads for scans")
      ->check(CLI::PositiveNumber);

  PositionArgs solve_pos;
  auto* solve = app.add_subcommand("solve", "nim-value, P/N class and a winning move");
  solve_pos.add_to(solve);

  PositionArgs reduce_pos;
  std::string reduce_out;
  int reduce_steps = 64;
  auto* reduce = app.add_subcommand("reduce", "apply involutions down to simplest form");
  reduce_pos.add_to(reduce);
  reduce->add_option("-o,--output", reduce_out, "write the final position here");
  reduce->add_option("--max-steps", reduce_steps, "reduction step budget");

  tools::VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "check a closed form against the solver");
  verify->add_option("family", vopt.family, "family to sweep")
      ->required()
      ->check(CLI::IsMember(tools::verify_families()));
  verify->add_option("--max-v", vopt.max_v, "largest vertex count");
  verify->add_option("--max", vopt.max, "parameter bound (gmk: m+k, wheel: n)");
  verify->add_option("--samples", vopt.samples, "random samples for sampled families");

  std::string which = "all";
  bool csv = false;
  auto* tables = app.add_subcommand("tables", "print the closed-form value tables");
  tables->add_option("--which", which, "forest, bipartite, gmk, blocks or all")
      ->check(CLI::IsMember({"forest", "bipartite", "gmk", "blocks", "all"}));
  tables->add_flag("--csv", csv, "CSV instead of aligned text");

  PositionArgs play_pos;
  std::string first = "auto";
  std::string transcript;
  auto* play = app.add_subcommand("play", "play against the solver on stdin");
  play_pos.add_to(play);
  play->add_option("--first", first, "human, solver or auto")
      ->check(CLI::IsMember({"human", "solver", "auto"}));
  play->add_option("--transcript", transcript, "save the move list here");

  ScanArgs sargs;
  auto* scan = app.add_subcommand("scan", "conjecture sweeps");
  scan->require_subcommand(1);
  scan->add_option("--report", sargs.report, "JSONL report file");
  scan->add_flag("--resume", sargs.resume, "skip rows already in the report");
  scan->add_option("--window", sargs.window, "trailing entries needed for a pattern");
  auto* tails = scan->add_subcommand("tails", "grow a tail at a leaf");
  tails->add_option("--base", sargs.base, "base family spec");
  tails->add_option("--input", sargs.input, "base position file");
  tails->add_option("--attach", sargs.attach, "leaf to extend (default: highest leaf)");
  tails->add_option("--kmax", sargs.kmax, "longest tail");
  auto* multi = scan->add_subcommand("multi", "odd cycles with several attachments");
  multi->add_option("--vmax", sargs.vmax, "largest vertex count");
  multi->add_option("--cycle", sargs.cycle, "only this odd cycle length");
  auto* wheels = scan->add_subcommand("wheels", "wheel graphs W_3..W_max");
  wheels->add_option("--max", sargs.max, "largest rim size")->check(CLI::Range(3, 62));

  std::string cache_action = "stats";
  auto* cache = app.add_subcommand("cache", "inspect or clear the persistent table");
  cache->add_option("action", cache_action, "stats or clear")
      ->check(CLI::IsMember({"stats", "clear"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(g, solve_pos);
    if (reduce->parsed()) return cmd_reduce(g, reduce_pos, reduce_out, reduce_steps);
    if (verify->parsed()) return cmd_verify(g, vopt);
    if (tables->parsed()) {
      std::cout << render_tables(which, csv ? TableFormat::kCsv : TableFormat::kText);
      return kOk;
    }
    if (play->parsed()) return cmd_play(g, play_pos, first, transcript);
    if (tails->parsed()) return cmd_scan_tails(g, sargs);
    if (multi->parsed()) return cmd_scan_multi(g, sargs);
    if (wheels->parsed()) return cmd_scan_wheels(g, sargs);
    if (cache->parsed()) return cmd_cache(g, cache_action);
  } catch (const BudgetExceeded& e) {
    std::cerr << "chomp: budget exceeded: " << e.what() << " (table entries "
              << e.stats().entries << ")\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "chomp: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::kIllegalMove ? kFailed : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "chomp: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
