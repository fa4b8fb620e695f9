#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamstar/graph.hpp"
#include "hamstar/ham_search.hpp"
#include "hamstar/star_search.hpp"
#include "hamstar/verdict.hpp"

namespace hamstar {

// Positions on a cycle c_1 c_2 ... c_m, 1-based. All arithmetic on positions
// wraps modulo m, so c_0 = c_m and c_{m+1} = c_1.
class CycleView {
 public:
  explicit CycleView(const VertexSequence& cycle);

  int length() const { return static_cast<int>(vertices_.size()); }
  // Any integer is accepted and reduced into 1..m.
  int wrap(int i) const;
  Vertex at(int i) const { return vertices_[wrap(i) - 1]; }
  VertexMask on_cycle() const { return mask_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

 private:
  std::vector<Vertex> vertices_;
  VertexMask mask_ = 0;
};

// I(v) = { i in 1..m : v c_i and v c_{i+2} are edges }.
struct IndexSet {
  int cycle_length = 0;
  std::vector<int> members;  // increasing

  bool contains(int i) const;
  int size() const { return static_cast<int>(members.size()); }
};

struct ClaimViolation {
  int claim = 0;  // 1: consecutive c_i, c_{i+1}; 2: chord c_i c_j
  int i = 0;
  int j = 0;
  Vertex x = 0;  // off-cycle neighbour of the first vertex named
  Vertex y = 0;  // off-cycle neighbour of the second
};

// Every step of the constructive argument, recorded for replay.
struct ExtractionTrace {
  VertexSequence cycle;
  Vertex u = 0;
  Vertex v = 0;
  IndexSet i_set;
  int center_l = 0;  // cycle position of the star centre
  std::vector<int> j_indices;
  StarWitness witness;
  // Partners for u in the order they were tried; the last one succeeded.
  std::vector<Vertex> u_attempts;
};

struct CenterChoice {
  int l = 0;
  std::vector<int> j_indices;
};

// Every vertex off `cycle` has all its neighbours on `cycle`. Throws
// ArgumentError if `cycle` is not a valid cycle of g.
bool check_dominating_cycle(const Graph& g, const VertexSequence& cycle);

// Throws ArgumentError if v lies on the cycle or is out of range.
IndexSet compute_i(const Graph& g, const VertexSequence& cycle, Vertex v);

// Violations of the two exchange arguments on a longest cycle:
//   (1) consecutive c_i, c_{i+1} never both have off-cycle neighbours;
//   (2) for a chord c_i c_j, c_{i+1} and c_{j+1} never both do.
// Throws RegimeError unless g is connected, sigma_3 >= n and p(G) <= n-1.
std::vector<ClaimViolation> check_cycle_claims(const Graph& g, const VertexSequence& cycle);

// Same checks without verifying the regime.
std::vector<ClaimViolation> cycle_claim_violations(const Graph& g, const VertexSequence& cycle);

// v: off-cycle vertex of largest degree (lowest index on ties). u: the
// lowest other off-cycle vertex sharing a cycle neighbour with v, or the
// lowest other off-cycle vertex if none does. Throws StructureError with
// fewer than two off-cycle vertices.
std::pair<Vertex, Vertex> select_uv(const Graph& g, const VertexSequence& cycle, int t);

// Scans l = 1..m with c_l in N(u) ∩ N(v), and for each l takes the first
// t-4 members j of I(v) (increasing) with c_{j+1} in N(c_l) \ {c_{l-1},
// c_{l+1}}. Throws ArgumentError if N(u) ∩ N(v) misses the cycle and
// ExtractionFailure if no l works.
CenterChoice find_center_and_indices(const Graph& g, const VertexSequence& cycle, Vertex u,
                                     Vertex v, int t);

struct Extraction {
  Verdict verdict;
  std::optional<ExtractionTrace> trace;  // present exactly for Star
};

// Certifying extraction for t >= 5 on a connected graph. Returns HamPath
// when one exists, HypothesisNotMet when sigma_2 misses the threshold, and
// otherwise follows the longest-cycle argument to an induced K_{1,t}. Any
// step that fails yields a Counterexample naming the step.
//
// Threshold::NonStrict covers the boundary case sigma_2 = (t-3)n/(t-2) and
// is only meaningful for n > 2t-4; a graph without a Hamiltonian path at
// n <= 2t-4 raises RegimeError in that mode.
Extraction extract_star(const Graph& g, int t, Threshold mode = Threshold::Strict);

}  // namespace hamstar
