#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamstar/graph.hpp"
#include "hamstar/verdict.hpp"

namespace hamstar {

// Oracle route for the main theorem, independent of the extractor: test
// the sigma_2 threshold, then search for a Hamiltonian path, then for an
// induced K_{1,t}. Counterexample only if both searches come back empty.
// Throws ArgumentError for t < 5 or a disconnected graph.
Verdict check_main_theorem(const Graph& g, int t, Threshold mode);

// An independent set S of the given size whose members are adjacent to
// every vertex outside S, i.e. g = (g - S) ∨ K̄_|S|.
std::optional<VertexMask> join_independent_side(const Graph& g, int size);

// Boundary case n = 2t-4: true iff g = H ∨ K̄_{t-1} with |H| = t-3.
// Throws RegimeError unless g is connected, n = 2t-4, (t-2)σ₂ >= (t-3)n and
// g has no Hamiltonian path.
bool check_equality_characterization(const Graph& g, int t);

// k·σ_{k+1} >= (k+1)·σ_k. Throws ArgumentError unless 1 <= k <= n-1 and
// RegimeError if either value is undefined.
bool check_lemma1(const Graph& g, int k);

// c(G) = p(G)-1 and the longest cycle found is dominating. Throws
// RegimeError unless g is connected with σ₃ >= n and p(G) <= n-1.
bool check_lemma2(const Graph& g);

enum class ClassicalTheorem { Dirac, Ore, Momege };

std::string_view to_string(ClassicalTheorem which);

// Dirac: n >= 3 and 2δ >= n. Ore: n >= 3 and σ₂ >= n. Momege: connected
// and 3σ₂ >= 2n. An undefined σ₂ satisfies the σ₂ conditions.
bool classical_hypothesis_holds(const Graph& g, ClassicalTheorem which);

// Hamiltonian cycle for Dirac and Ore, Hamiltonian path or induced K_{1,4}
// for Momege. Throws RegimeError if the hypothesis fails.
bool check_classical(const Graph& g, ClassicalTheorem which);

enum class SweepMode { Main, Equality, Lemma1, Lemma2, Classical };

std::string_view to_string(SweepMode mode);
std::optional<SweepMode> parse_sweep_mode(std::string_view text);

struct SweepOptions {
  int t = 5;
  SweepMode mode = SweepMode::Main;
  Threshold threshold = Threshold::Strict;
  int jobs = 1;
  // Main and Equality modes: also run extract_star and require agreement.
  bool cross_check_extractor = true;
};

struct CounterexampleRecord {
  std::string graph6;
  std::string failed_step;

  friend bool operator==(const CounterexampleRecord&, const CounterexampleRecord&) = default;
};

struct SweepReport {
  int t = 0;
  SweepMode mode = SweepMode::Main;
  Threshold threshold = Threshold::Strict;
  int n_min = 0;
  int n_max = 0;
  std::uint64_t examined = 0;
  std::map<std::string, std::uint64_t> histogram;
  std::vector<CounterexampleRecord> counterexamples;  // in input order
  double seconds = 0;
};

// Per-graph outcome of one sweep mode. `bucket` is the histogram key;
// `failed_step` is set only for the "counterexample" bucket.
struct GraphOutcome {
  std::string bucket;
  std::string failed_step;
};

GraphOutcome classify(const Graph& g, const SweepOptions& options);

// Lemma1 and Classical sweep every graph; the other modes sweep connected
// graphs only. Orders must lie in 1..kEnumerationCap.
SweepReport sweep_enumerated(int n_min, int n_max, const SweepOptions& options);

SweepReport sweep_graphs(std::span<const Graph> graphs, const SweepOptions& options);

// One graph6 graph per line; blank lines are skipped. A malformed line
// aborts with a ParseError carrying the line number.
SweepReport sweep_stream(std::istream& in, const SweepOptions& options);

}  // namespace hamstar
