#include "hamstar/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hamstar/errors.hpp"
#include "hamstar/extractor.hpp"
#include "hamstar/families.hpp"
#include "hamstar/graph6.hpp"
#include "hamstar/verifier.hpp"

namespace hamstar::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string_view threshold_name(Threshold mode) {
  return mode == Threshold::Strict ? "strict" : "non_strict";
}

Json to_json(const StarWitness& w) {
  return Json{{"center", w.center}, {"leaves", w.leaves}};
}

Json to_json(const Verdict& v) {
  Json j{{"kind", to_string(kind_of(v))}};
  if (auto* p = std::get_if<HamPath>(&v)) j["path"] = p->path.vertices;
  if (auto* s = std::get_if<Star>(&v)) j["witness"] = to_json(s->witness);
  if (auto* c = std::get_if<Counterexample>(&v)) {
    j["graph6"] = c->graph6;
    j["failed_step"] = c->failed_step;
  }
  return j;
}

Json to_json(const ExtractionTrace& tr) {
  return Json{{"cycle", tr.cycle.vertices}, {"u", tr.u},
              {"v", tr.v},                  {"I", tr.i_set.members},
              {"l", tr.center_l},           {"j_indices", tr.j_indices},
              {"witness", to_json(tr.witness)}, {"u_attempts", tr.u_attempts}};
}

Json to_json(const SweepReport& r, bool timing) {
  Json histogram = Json::object();
  for (const auto& [k, v] : r.histogram) histogram[k] = v;
  Json found = Json::array();
  for (const auto& c : r.counterexamples) {
    found.push_back({{"graph6", c.graph6}, {"failed_step", c.failed_step}});
  }
  Json j{{"schema", kSchema},
         {"t", r.t},
         {"mode", to_string(r.mode)},
         {"threshold", threshold_name(r.threshold)},
         {"n_range", {r.n_min, r.n_max}},
         {"examined", r.examined},
         {"histogram", histogram},
         {"counterexamples", found}};
  j["seconds"] = timing ? r.seconds : 0.0;
  return j;
}

std::string join_ints(const std::vector<int>& xs, char sep = ' ') {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? std::string(1, sep) : "") << xs[i];
  return os.str();
}

std::string describe(const Verdict& v) {
  std::ostringstream os;
  os << to_string(kind_of(v));
  if (auto* p = std::get_if<HamPath>(&v)) os << " path=" << join_ints(p->path.vertices, ',');
  if (auto* s = std::get_if<Star>(&v)) {
    os << " center=" << s->witness.center << " leaves=" << join_ints(s->witness.leaves, ',');
  }
  if (auto* c = std::get_if<Counterexample>(&v)) os << " step=" << c->failed_step;
  return os.str();
}

// Where graphs come from: an inline graph6 string, a file, or `in`.
struct Source {
  std::optional<std::string> graph;
  std::optional<std::string> input;
};

void for_each_line(const Source& src, std::istream& in,
                   const std::function<void(const std::string&, std::size_t)>& f) {
  if (src.graph) {
    f(*src.graph, 1);
    return;
  }
  std::ifstream file;
  std::istream* stream = &in;
  if (src.input && *src.input != "-") {
    file.open(*src.input);
    if (!file) throw UsageError("cannot open " + *src.input);
    stream = &file;
  }
  std::string line;
  for (std::size_t number = 1; std::getline(*stream, line); ++number) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) f(line, number);
  }
}

void for_each_graph(const Source& src, std::istream& in,
                    const std::function<void(const Graph&)>& f) {
  for_each_line(src, in, [&](const std::string& line, std::size_t number) {
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const ParseError& e) {
      throw ParseError(e.reason(), e.offset(), number);
    }
    f(g);
  });
}

void add_source(CLI::App* cmd, Source& src) {
  auto* graph = cmd->add_option("--graph", src.graph, "Graph in graph6 format");
  cmd->add_option("--input", src.input, "File of graph6 lines, '-' for stdin")
      ->excludes(graph);
}

int default_jobs() {
  const char* env = std::getenv("HAMSTAR_JOBS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) {
    throw UsageError(std::string("HAMSTAR_JOBS must be a positive integer, got '") + env + "'");
  }
  return static_cast<int>(v);
}

struct Context {
  std::istream& in;
  std::ostream& out;
  bool text = false;
};

struct CheckArgs {
  int t = 5;
  bool strict = true;
  Source src;
};

int run_check(const Context& cx, const CheckArgs& a) {
  const Threshold mode = a.strict ? Threshold::Strict : Threshold::NonStrict;
  int code = kOk;
  for_each_graph(a.src, cx.in, [&](const Graph& g) {
    const Verdict v = check_main_theorem(g, a.t, mode);
    if (kind_of(v) == VerdictKind::Counterexample) code = kCounterexample;
    if (cx.text) {
      cx.out << to_graph6(g) << ' ' << describe(v) << '\n';
    } else {
      cx.out << Json{{"schema", kSchema},      {"graph6", to_graph6(g)},
                     {"t", a.t},               {"threshold", threshold_name(mode)},
                     {"verdict", to_json(v)}}
                    .dump()
             << '\n';
    }
  });
  return code;
}

int run_extract(const Context& cx, const CheckArgs& a) {
  const Threshold mode = a.strict ? Threshold::Strict : Threshold::NonStrict;
  int code = kOk;
  for_each_graph(a.src, cx.in, [&](const Graph& g) {
    const Extraction e = extract_star(g, a.t, mode);
    if (kind_of(e.verdict) == VerdictKind::Counterexample) code = kCounterexample;
    if (cx.text) {
      cx.out << to_graph6(g) << ' ' << describe(e.verdict) << '\n';
      if (e.trace) {
        const ExtractionTrace& tr = *e.trace;
        cx.out << "  cycle " << join_ints(tr.cycle.vertices) << '\n'
               << "  u " << tr.u << "  v " << tr.v << '\n'
               << "  I " << join_ints(tr.i_set.members) << '\n'
               << "  l " << tr.center_l << "  j " << join_ints(tr.j_indices) << '\n';
      }
    } else {
      Json doc{{"schema", kSchema},
               {"graph6", to_graph6(g)},
               {"t", a.t},
               {"threshold", threshold_name(mode)},
               {"verdict", to_json(e.verdict)}};
      doc["trace"] = e.trace ? to_json(*e.trace) : Json(nullptr);
      cx.out << doc.dump() << '\n';
    }
  });
  return code;
}

struct SweepArgs {
  int t = 5;
  int n_min = 1;
  std::optional<int> n_max;
  std::optional<std::string> input;
  std::string mode = "main";
  bool strict = true;
  int jobs = 1;
  bool cross_check = true;
  bool timing = false;
};

int run_sweep(const Context& cx, const SweepArgs& a) {
  SweepOptions o;
  o.t = a.t;
  o.mode = *parse_sweep_mode(a.mode);
  o.threshold = a.strict ? Threshold::Strict : Threshold::NonStrict;
  o.jobs = a.jobs;
  o.cross_check_extractor = a.cross_check;

  SweepReport r;
  if (a.n_max) {
    r = sweep_enumerated(a.n_min, *a.n_max, o);
  } else if (a.input && *a.input != "-") {
    std::ifstream file(*a.input);
    if (!file) throw UsageError("cannot open " + *a.input);
    r = sweep_stream(file, o);
  } else {
    r = sweep_stream(cx.in, o);
  }

  if (cx.text) {
    cx.out << "t=" << r.t << " mode=" << to_string(r.mode)
           << " threshold=" << threshold_name(r.threshold) << " n=" << r.n_min << ".." << r.n_max
           << '\n'
           << "examined " << r.examined << '\n';
    for (const auto& [k, v] : r.histogram) cx.out << "  " << k << ' ' << v << '\n';
    for (const auto& c : r.counterexamples) {
      cx.out << "counterexample " << c.graph6 << ' ' << c.failed_step << '\n';
    }
    if (a.timing) cx.out << "seconds " << r.seconds << '\n';
  } else {
    cx.out << to_json(r, a.timing).dump() << '\n';
  }
  return r.counterexamples.empty() ? kOk : kCounterexample;
}

struct FamilyArgs {
  int t = 5;
  std::optional<std::string> h_graph;
};

int run_gen_family(const Context& cx, const FamilyArgs& a) {
  const Graph g = a.h_graph ? equality_family(parse_graph6(*a.h_graph), a.t)
                            : sharpness_family(a.t);
  cx.out << to_graph6(g) << '\n';
  return kOk;
}

struct CodecArgs {
  bool encode = false;
  bool decode = false;
  Source src;
};

Graph graph_from_json(const std::string& line, std::size_t number) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw ParseError("invalid JSON", e.byte ? e.byte - 1 : 0, number);
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw UsageError("line " + std::to_string(number) + ": expected an object with integer \"n\"");
  }
  const int n = j["n"].get<int>();
  if (n < 0 || n > kMaxVertices) {
    throw CapacityError("line " + std::to_string(number) + ": order " + std::to_string(n) +
                        " outside 0..64");
  }
  Graph g(n);
  for (const Json& e : j.value("edges", Json::array())) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw UsageError("line " + std::to_string(number) + ": edges must be [u, v] pairs");
    }
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

int run_codec(const Context& cx, const CodecArgs& a) {
  if (a.encode) {
    for_each_line(a.src, cx.in, [&](const std::string& line, std::size_t number) {
      cx.out << to_graph6(graph_from_json(line, number)) << '\n';
    });
    return kOk;
  }
  for_each_graph(a.src, cx.in, [&](const Graph& g) {
    if (cx.text) {
      cx.out << "n=" << g.order() << " edges=";
      bool first = true;
      for (auto [u, v] : g.edges()) {
        cx.out << (first ? "" : ",") << u << '-' << v;
        first = false;
      }
      cx.out << '\n';
    } else {
      Json edges = Json::array();
      for (auto [u, v] : g.edges()) edges.push_back({u, v});
      cx.out << Json{{"schema", kSchema}, {"n", g.order()}, {"edges", edges}}.dump() << '\n';
    }
  });
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Checks sigma_2 conditions for Hamiltonian paths and induced stars", "hamstar"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  const auto t_range = CLI::Range(1, kMaxVertices);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Main-theorem verdict for each graph");
  check_cmd->add_option("--t", check.t, "Star size t (>= 5)")->check(t_range)->capture_default_str();
  check_cmd->add_flag("--strict,!--no-strict", check.strict, "Strict sigma_2 threshold");
  add_source(check_cmd, check.src);

  CheckArgs extract;
  auto* extract_cmd = app.add_subcommand("extract", "Certifying star extraction with full trace");
  extract_cmd->add_option("--t", extract.t, "Star size t (>= 5)")
      ->check(t_range)
      ->capture_default_str();
  extract_cmd->add_flag("--strict,!--no-strict", extract.strict, "Strict sigma_2 threshold");
  add_source(extract_cmd, extract.src);

  SweepArgs sweep;
  int jobs_default = 1;
  auto* sweep_cmd = app.add_subcommand("sweep", "Exhaustive or streamed sweep");
  sweep_cmd->add_option("--t", sweep.t, "Star size t")->check(t_range)->capture_default_str();
  sweep_cmd->add_option("--n-min", sweep.n_min, "Smallest enumerated order")
      ->capture_default_str();
  auto* n_max = sweep_cmd->add_option("--n-max", sweep.n_max, "Largest enumerated order");
  sweep_cmd->add_option("--input", sweep.input, "File of graph6 lines, '-' for stdin")
      ->excludes(n_max);
  sweep_cmd->add_option("--mode", sweep.mode, "main|equality|lemma1|lemma2|classical")
      ->check(CLI::IsMember({"main", "equality", "lemma1", "lemma2", "classical"}))
      ->capture_default_str();
  sweep_cmd->add_flag("--strict,!--no-strict", sweep.strict, "Strict sigma_2 threshold");
  auto* jobs = sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads (default HAMSTAR_JOBS)")
                   ->check(CLI::Range(1, 1024));
  sweep_cmd->add_flag("!--no-cross-check", sweep.cross_check,
                      "Skip the extractor agreement check");
  sweep_cmd->add_flag("--timing,!--no-timing", sweep.timing,
                      "Report wall time; without it seconds is 0 so output is reproducible");

  FamilyArgs family;
  auto* family_cmd = app.add_subcommand("gen-family", "Print an extremal graph in graph6");
  family_cmd->add_option("--t", family.t, "Star size t (>= 5)")->required()->check(t_range);
  family_cmd->add_option("--h-graph", family.h_graph,
                         "graph6 H on t-3 vertices; prints H joined with t-1 isolated vertices");

  CodecArgs codec;
  auto* codec_cmd = app.add_subcommand("codec", "graph6 <-> JSON edge lists");
  auto* enc = codec_cmd->add_flag("--encode", codec.encode, "JSON lines {n, edges} to graph6");
  auto* dec = codec_cmd->add_flag("--decode", codec.decode, "graph6 to JSON lines {n, edges}");
  enc->excludes(dec);
  add_source(codec_cmd, codec.src);

  try {
    jobs_default = default_jobs();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (codec_cmd->parsed() && !codec.encode && !codec.decode) {
      throw CLI::RequiredError("--encode or --decode");
    }
    if (sweep_cmd->parsed() && !sweep.n_max && !sweep.input) {
      throw CLI::RequiredError("--n-max or --input");
    }
    if ((check_cmd->parsed() && !check.src.graph && !check.src.input) ||
        (extract_cmd->parsed() && !extract.src.graph && !extract.src.input)) {
      throw CLI::RequiredError("--graph or --input");
    }
  } catch (const CLI::CallForHelp&) {
    const auto chosen = app.get_subcommands();
    out << (chosen.empty() ? app.help() : chosen.front()->help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    const auto chosen = app.get_subcommands();
    err << "hamstar: " << e.what() << "\n\n" << (chosen.empty() ? app.help() : chosen.front()->help());
    return kUsage;
  } catch (const UsageError& e) {
    err << "hamstar: " << e.what() << '\n';
    return kUsage;
  }
  if (jobs->count() == 0) sweep.jobs = jobs_default;

  const Context cx{in, out, format == "text"};
  try {
    if (check_cmd->parsed()) return run_check(cx, check);
    if (extract_cmd->parsed()) return run_extract(cx, extract);
    if (sweep_cmd->parsed()) return run_sweep(cx, sweep);
    if (family_cmd->parsed()) return run_gen_family(cx, family);
    return run_codec(cx, codec);
  } catch (const ParseError& e) {
    err << "hamstar: parse error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "hamstar: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace hamstar::cli
