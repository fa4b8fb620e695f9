#include "hamstar/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <string>
#include <thread>

#include "hamstar/enumerate.hpp"
#include "hamstar/errors.hpp"
#include "hamstar/extractor.hpp"
#include "hamstar/graph6.hpp"
#include "hamstar/ham_search.hpp"
#include "hamstar/star_search.hpp"

namespace hamstar {

Verdict check_main_theorem(const Graph& g, int t, Threshold mode) {
  if (t < 5) throw ArgumentError("main theorem needs t >= 5, got " + std::to_string(t));
  if (!is_connected(g)) throw ArgumentError("main theorem needs a connected graph");
  const int n = g.order();
  if (n >= 2 && !meets_ore_threshold(sigma_k(g, 2), n, t, mode)) return HypothesisNotMet{};
  if (n == 0) return Counterexample{to_graph6(g), "empty-graph"};
  SearchResult path = longest_path(g);
  if (path.length == n) return HamPath{std::move(*path.witness)};
  if (auto star = find_induced_star(g, t)) return Star{std::move(*star)};
  return Counterexample{to_graph6(g), "no-path-no-star"};
}

std::optional<VertexMask> join_independent_side(const Graph& g, int size) {
  const VertexMask all = g.vertices();
  for (Vertex x = 0; x < g.order(); ++x) {
    const VertexMask side = all & ~g.neighbors(x);
    if (popcount(side) != size) continue;
    bool ok = true;
    for_each_vertex(side, [&](Vertex y) { ok = ok && g.neighbors(y) == (all & ~side); });
    if (ok) return side;
  }
  return std::nullopt;
}

bool check_equality_characterization(const Graph& g, int t) {
  if (t < 5) throw ArgumentError("equality characterisation needs t >= 5");
  const int n = g.order();
  if (n != 2 * t - 4) throw RegimeError("equality characterisation needs n = 2t-4");
  if (!is_connected(g)) throw RegimeError("equality characterisation needs a connected graph");
  if (!meets_ore_threshold(sigma_k(g, 2), n, t, Threshold::NonStrict)) {
    throw RegimeError("equality characterisation needs (t-2)σ₂ >= (t-3)n");
  }
  if (has_hamiltonian_path(g)) throw RegimeError("graph has a Hamiltonian path");
  return join_independent_side(g, t - 1).has_value();
}

bool check_lemma1(const Graph& g, int k) {
  if (k < 1 || k > g.order() - 1) throw ArgumentError("check_lemma1 needs 1 <= k <= n-1");
  const Sigma lo = sigma_k(g, k);
  const Sigma hi = sigma_k(g, k + 1);
  if (!lo.is_finite() || !hi.is_finite()) throw RegimeError("σ_k or σ_{k+1} undefined");
  return static_cast<long long>(k) * hi.value() >= static_cast<long long>(k + 1) * lo.value();
}

bool check_lemma2(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw RegimeError("check_lemma2 needs σ₃, so n >= 3");
  if (!is_connected(g)) throw RegimeError("check_lemma2 needs a connected graph");
  const Sigma s3 = sigma_k(g, 3);
  if (!s3.is_finite() || s3.value() < n) throw RegimeError("check_lemma2 needs σ₃ >= n");
  const SearchResult path = longest_path(g);
  if (path.length > n - 1) throw RegimeError("check_lemma2 needs p(G) <= n-1");
  const SearchResult cycle = longest_cycle(g);
  if (!cycle.witness || cycle.length != path.length - 1) return false;
  return check_dominating_cycle(g, *cycle.witness);
}

std::string_view to_string(ClassicalTheorem which) {
  switch (which) {
    case ClassicalTheorem::Dirac:
      return "dirac";
    case ClassicalTheorem::Ore:
      return "ore";
    case ClassicalTheorem::Momege:
      return "momege";
  }
  return "unknown";
}

bool classical_hypothesis_holds(const Graph& g, ClassicalTheorem which) {
  const int n = g.order();
  switch (which) {
    case ClassicalTheorem::Dirac:
      return n >= 3 && 2 * min_degree(g) >= n;
    case ClassicalTheorem::Ore: {
      if (n < 3) return false;
      const Sigma s2 = sigma_k(g, 2);
      return !s2.is_finite() || s2.value() >= n;
    }
    case ClassicalTheorem::Momege: {
      if (n == 0 || !is_connected(g)) return false;
      if (n == 1) return true;
      const Sigma s2 = sigma_k(g, 2);
      return !s2.is_finite() || 3 * s2.value() >= 2 * n;
    }
  }
  return false;
}

bool check_classical(const Graph& g, ClassicalTheorem which) {
  if (!classical_hypothesis_holds(g, which)) {
    throw RegimeError(std::string(to_string(which)) + " hypothesis not met");
  }
  if (which == ClassicalTheorem::Momege) {
    return has_hamiltonian_path(g) || find_induced_star(g, 4).has_value();
  }
  return has_hamiltonian_cycle(g);
}

std::string_view to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::Main:
      return "main";
    case SweepMode::Equality:
      return "equality";
    case SweepMode::Lemma1:
      return "lemma1";
    case SweepMode::Lemma2:
      return "lemma2";
    case SweepMode::Classical:
      return "classical";
  }
  return "unknown";
}

std::optional<SweepMode> parse_sweep_mode(std::string_view text) {
  for (SweepMode m : {SweepMode::Main, SweepMode::Equality, SweepMode::Lemma1, SweepMode::Lemma2,
                      SweepMode::Classical}) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

namespace {

GraphOutcome holds() { return {"holds", {}}; }
GraphOutcome skipped() { return {"regime_skipped", {}}; }
GraphOutcome failed(std::string step) { return {"counterexample", std::move(step)}; }

bool witness_valid(const Graph& g, const Verdict& v, int t) {
  if (auto* p = std::get_if<HamPath>(&v)) {
    return p->path.size() == g.order() && is_valid_sequence(g, p->path);
  }
  if (auto* s = std::get_if<Star>(&v)) return verify_star_witness(g, s->witness, t);
  return true;
}

// The certifying route has to land on the same kind of verdict as the
// oracle route, with a witness that checks out.
std::optional<GraphOutcome> cross_check(const Graph& g, int t, Threshold mode,
                                        VerdictKind expected) {
  const Extraction e = extract_star(g, t, mode);
  if (auto* c = std::get_if<Counterexample>(&e.verdict)) {
    return failed("extractor:" + c->failed_step);
  }
  if (kind_of(e.verdict) != expected) {
    return failed("extractor-disagreement:" + std::string(to_string(kind_of(e.verdict))));
  }
  if (!witness_valid(g, e.verdict, t)) return failed("extractor-witness-invalid");
  return std::nullopt;
}

GraphOutcome classify_main(const Graph& g, const SweepOptions& o) {
  if (g.order() == 0 || !is_connected(g)) return skipped();
  if (o.threshold == Threshold::NonStrict && g.order() <= 2 * o.t - 4) return skipped();
  const Verdict v = check_main_theorem(g, o.t, o.threshold);
  if (auto* c = std::get_if<Counterexample>(&v)) return failed(c->failed_step);
  if (!witness_valid(g, v, o.t)) return failed("oracle-witness-invalid");
  const VerdictKind kind = kind_of(v);
  if (o.cross_check_extractor && kind != VerdictKind::HypothesisNotMet) {
    if (auto bad = cross_check(g, o.t, o.threshold, kind)) return *bad;
  }
  return {std::string(to_string(kind)), {}};
}

// The boundary statement in full: under (t-2)σ₂ >= (t-3)n a graph without
// a Hamiltonian path has n >= 2t-4; at n = 2t-4 it is a join with K̄_{t-1};
// above that it has an induced K_{1,t}.
GraphOutcome classify_equality(const Graph& g, const SweepOptions& o) {
  const int n = g.order();
  const int t = o.t;
  if (n == 0 || !is_connected(g)) return skipped();
  if (n >= 2 && !meets_ore_threshold(sigma_k(g, 2), n, t, Threshold::NonStrict)) {
    return {"hypothesis_not_met", {}};
  }
  const SearchResult path = longest_path(g);
  if (path.length == n) return {"ham_path", {}};
  if (n < 2 * t - 4) return failed("order-below-2t-4");
  if (n == 2 * t - 4) {
    return check_equality_characterization(g, t) ? GraphOutcome{"join_form", {}}
                                                 : failed("not-join-form");
  }
  if (!find_induced_star(g, t)) return failed("no-path-no-star");
  if (o.cross_check_extractor) {
    if (auto bad = cross_check(g, t, Threshold::NonStrict, VerdictKind::Star)) return *bad;
  }
  return {"star", {}};
}

GraphOutcome classify_lemma1(const Graph& g) {
  bool any = false;
  for (int k = 1; k + 1 <= g.order(); ++k) {
    const Sigma lo = sigma_k(g, k);
    const Sigma hi = sigma_k(g, k + 1);
    if (!lo.is_finite() || !hi.is_finite()) continue;
    any = true;
    if (!check_lemma1(g, k)) return failed("lemma1-k=" + std::to_string(k));
  }
  return any ? holds() : skipped();
}

GraphOutcome classify_lemma2(const Graph& g) {
  try {
    return check_lemma2(g) ? holds() : failed("lemma2");
  } catch (const RegimeError&) {
    return skipped();
  }
}

GraphOutcome classify_classical(const Graph& g) {
  bool any = false;
  for (ClassicalTheorem which :
       {ClassicalTheorem::Dirac, ClassicalTheorem::Ore, ClassicalTheorem::Momege}) {
    if (!classical_hypothesis_holds(g, which)) continue;
    any = true;
    if (!check_classical(g, which)) return failed(std::string(to_string(which)));
  }
  return any ? holds() : skipped();
}

// Per-worker partial results; `order` keys keep counterexamples in input
// order after the merge.
struct Tally {
  std::uint64_t examined = 0;
  std::map<std::string, std::uint64_t> histogram;
  std::vector<std::pair<std::uint64_t, CounterexampleRecord>> counterexamples;

  void add(const Graph& g, const GraphOutcome& out, std::uint64_t order) {
    ++examined;
    ++histogram[out.bucket];
    if (out.bucket == "counterexample") {
      counterexamples.push_back({order, {to_graph6(g), out.failed_step}});
    }
  }
};

template <typename Body>
void parallel_for(std::size_t count, int jobs, Body body) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(0, i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = next++; i < count; i = next++) body(w, i);
    });
  }
  for (auto& t : workers) t.join();
}

void merge_into(SweepReport& report, std::vector<Tally>& tallies) {
  std::vector<std::pair<std::uint64_t, CounterexampleRecord>> found;
  for (Tally& t : tallies) {
    report.examined += t.examined;
    for (auto& [k, v] : t.histogram) report.histogram[k] += v;
    for (auto& c : t.counterexamples) found.push_back(std::move(c));
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& c : found) report.counterexamples.push_back(std::move(c.second));
}

SweepReport empty_report(const SweepOptions& o) {
  SweepReport r;
  r.t = o.t;
  r.mode = o.mode;
  r.threshold = o.threshold;
  for (const char* key : {"hypothesis_not_met", "ham_path", "star", "regime_skipped",
                          "counterexample"}) {
    if (o.mode == SweepMode::Main || o.mode == SweepMode::Equality) r.histogram[key] = 0;
  }
  if (o.mode == SweepMode::Equality) r.histogram["join_form"] = 0;
  if (o.mode != SweepMode::Main && o.mode != SweepMode::Equality) {
    r.histogram["holds"] = 0;
    r.histogram["regime_skipped"] = 0;
    r.histogram["counterexample"] = 0;
  }
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

GraphOutcome classify(const Graph& g, const SweepOptions& options) {
  switch (options.mode) {
    case SweepMode::Main:
      return classify_main(g, options);
    case SweepMode::Equality:
      return classify_equality(g, options);
    case SweepMode::Lemma1:
      return classify_lemma1(g);
    case SweepMode::Lemma2:
      return classify_lemma2(g);
    case SweepMode::Classical:
      return classify_classical(g);
  }
  return skipped();
}

SweepReport sweep_enumerated(int n_min, int n_max, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (n_min < 1 || n_max > kEnumerationCap || n_min > n_max) {
    throw CapacityError("enumerated sweep needs 1 <= n_min <= n_max <= " +
                        std::to_string(kEnumerationCap));
  }
  SweepReport report = empty_report(options);
  report.n_min = n_min;
  report.n_max = n_max;
  const bool every_graph =
      options.mode == SweepMode::Lemma1 || options.mode == SweepMode::Classical;
  GraphEnumerator source(every_graph ? GraphClass::All : GraphClass::Connected);
  const int jobs = std::max(1, options.jobs);

  for (int n = n_min; n <= n_max; ++n) {
    const std::size_t units = source.unit_count(n);
    std::vector<Tally> tallies(jobs);
    std::vector<std::vector<Graph>> scratch(jobs);
    parallel_for(units, jobs, [&](int w, std::size_t unit) {
      scratch[w].clear();
      source.unit_children(n, unit, scratch[w]);
      for (std::size_t c = 0; c < scratch[w].size(); ++c) {
        const Graph& g = scratch[w][c];
        tallies[w].add(g, classify(g, options), (static_cast<std::uint64_t>(unit) << 20) | c);
      }
    });
    merge_into(report, tallies);
  }
  report.seconds = seconds_since(start);
  return report;
}

namespace {

constexpr std::size_t kStreamBatch = 1 << 16;

void tally_batch(std::span<const Graph> graphs, std::uint64_t first_ordinal,
                 const SweepOptions& options, SweepReport& report) {
  if (graphs.empty()) return;
  const bool first_batch = report.examined == 0;
  const int jobs = std::max(1, options.jobs);
  std::vector<Tally> tallies(jobs);
  parallel_for(graphs.size(), jobs, [&](int w, std::size_t i) {
    tallies[w].add(graphs[i], classify(graphs[i], options), first_ordinal + i);
  });
  merge_into(report, tallies);
  auto [lo, hi] = std::minmax_element(graphs.begin(), graphs.end(), [](auto& a, auto& b) {
    return a.order() < b.order();
  });
  report.n_min = first_batch ? lo->order() : std::min(report.n_min, lo->order());
  report.n_max = first_batch ? hi->order() : std::max(report.n_max, hi->order());
}

}  // namespace

SweepReport sweep_graphs(std::span<const Graph> graphs, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport report = empty_report(options);
  tally_batch(graphs, 0, options, report);
  report.seconds = seconds_since(start);
  return report;
}

SweepReport sweep_stream(std::istream& in, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport report = empty_report(options);
  std::vector<Graph> batch;
  std::uint64_t ordinal = 0;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      batch.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(e.reason(), e.offset(), number);
    }
    if (batch.size() == kStreamBatch) {
      tally_batch(batch, ordinal, options, report);
      ordinal += batch.size();
      batch.clear();
    }
  }
  tally_batch(batch, ordinal, options, report);
  report.seconds = seconds_since(start);
  return report;
}

}  // namespace hamstar
