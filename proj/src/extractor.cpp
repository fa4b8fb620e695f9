#include "hamstar/extractor.hpp"

#include <algorithm>
#include <string>

#include "hamstar/errors.hpp"
#include "hamstar/graph6.hpp"

namespace hamstar {

CycleView::CycleView(const VertexSequence& cycle) : vertices_(cycle.vertices) {
  if (vertices_.empty()) throw ArgumentError("empty cycle");
  mask_ = cycle.mask();
}

int CycleView::wrap(int i) const {
  const int m = length();
  return ((i - 1) % m + m) % m + 1;
}

bool IndexSet::contains(int i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

namespace {

void require_cycle(const Graph& g, const VertexSequence& cycle) {
  if (cycle.kind != VertexSequence::Kind::Cycle || !is_valid_sequence(g, cycle)) {
    throw ArgumentError("not a valid cycle of the graph");
  }
}

VertexMask off_cycle_vertices(const Graph& g, const CycleView& c) {
  return g.vertices() & ~c.on_cycle();
}

}  // namespace

bool check_dominating_cycle(const Graph& g, const VertexSequence& cycle) {
  require_cycle(g, cycle);
  const CycleView c(cycle);
  bool dominated = true;
  for_each_vertex(off_cycle_vertices(g, c), [&](Vertex w) {
    dominated = dominated && (g.neighbors(w) & ~c.on_cycle()) == 0;
  });
  return dominated;
}

IndexSet compute_i(const Graph& g, const VertexSequence& cycle, Vertex v) {
  require_cycle(g, cycle);
  const CycleView c(cycle);
  if (v < 0 || v >= g.order()) throw ArgumentError("vertex out of range");
  if (c.on_cycle() & bit(v)) throw ArgumentError("I(v) needs v off the cycle");
  IndexSet out{c.length(), {}};
  for (int i = 1; i <= c.length(); ++i) {
    if (g.adjacent(v, c.at(i)) && g.adjacent(v, c.at(i + 2))) out.members.push_back(i);
  }
  return out;
}

std::vector<ClaimViolation> cycle_claim_violations(const Graph& g, const VertexSequence& cycle) {
  require_cycle(g, cycle);
  const CycleView c(cycle);
  const VertexMask off = off_cycle_vertices(g, c);
  const int m = c.length();
  auto outside = [&](int i) { return g.neighbors(c.at(i)) & off; };

  std::vector<ClaimViolation> out;
  for (int i = 1; i <= m; ++i) {
    if (outside(i) && outside(i + 1)) {
      out.push_back({1, i, c.wrap(i + 1), lowest(outside(i)), lowest(outside(i + 1))});
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 2; j <= m; ++j) {
      if (i == 1 && j == m) continue;  // c_m c_1 is a cycle edge
      if (!g.adjacent(c.at(i), c.at(j))) continue;
      if (outside(i + 1) && outside(j + 1)) {
        out.push_back({2, i, j, lowest(outside(i + 1)), lowest(outside(j + 1))});
      }
    }
  }
  return out;
}

std::vector<ClaimViolation> check_cycle_claims(const Graph& g, const VertexSequence& cycle) {
  require_cycle(g, cycle);
  const int n = g.order();
  if (!is_connected(g)) throw RegimeError("cycle claims need a connected graph");
  if (n < 3) throw RegimeError("cycle claims need sigma_3, so n >= 3");
  const Sigma s3 = sigma_k(g, 3);
  if (!s3.is_finite() || s3.value() < n) throw RegimeError("cycle claims need sigma_3 >= n");
  if (longest_path(g).length > n - 1) throw RegimeError("cycle claims need p(G) <= n-1");
  return cycle_claim_violations(g, cycle);
}

std::pair<Vertex, Vertex> select_uv(const Graph& g, const VertexSequence& cycle, int t) {
  if (t < 4) throw ArgumentError("select_uv needs t >= 4");
  require_cycle(g, cycle);
  const CycleView c(cycle);
  const std::vector<Vertex> off = to_vector(off_cycle_vertices(g, c));
  if (off.size() < 2) {
    throw StructureError("need two vertices off the cycle, found " + std::to_string(off.size()));
  }
  Vertex v = off.front();
  for (Vertex w : off) {
    if (g.degree(w) > g.degree(v)) v = w;
  }
  Vertex u = -1;
  for (Vertex w : off) {
    if (w != v && (g.neighbors(w) & g.neighbors(v) & c.on_cycle())) {
      u = w;
      break;
    }
  }
  if (u < 0) u = off.front() != v ? off.front() : off[1];
  return {u, v};
}

CenterChoice find_center_and_indices(const Graph& g, const VertexSequence& cycle, Vertex u,
                                     Vertex v, int t) {
  if (t < 4) throw ArgumentError("centre search needs t >= 4");
  const IndexSet iv = compute_i(g, cycle, v);
  const CycleView c(cycle);
  if (u < 0 || u >= g.order() || (c.on_cycle() & bit(u)) || u == v) {
    throw ArgumentError("u must be a second vertex off the cycle");
  }
  const VertexMask common = g.neighbors(u) & g.neighbors(v) & c.on_cycle();
  if (!common) throw ArgumentError("N(u) and N(v) share no cycle vertex");

  const int need = t - 4;
  std::string searched;
  for (int l = 1; l <= c.length(); ++l) {
    const Vertex centre = c.at(l);
    if (!(common & bit(centre))) continue;
    const VertexMask excluded = bit(c.at(l - 1)) | bit(c.at(l + 1));
    CenterChoice choice{l, {}};
    for (int j : iv.members) {
      if (static_cast<int>(choice.j_indices.size()) == need) break;
      const Vertex next = c.at(j + 1);
      if ((g.neighbors(centre) & ~excluded) & bit(next)) choice.j_indices.push_back(j);
    }
    if (static_cast<int>(choice.j_indices.size()) == need) return choice;
    searched += (searched.empty() ? "" : ",") + std::to_string(l) + ":" +
                std::to_string(choice.j_indices.size());
  }
  throw ExtractionFailure("no centre with " + std::to_string(need) +
                          " usable indices; tried l:found = " + searched);
}

Extraction extract_star(const Graph& g, int t, Threshold mode) {
  if (t < 5) throw ArgumentError("extraction needs t >= 5, got " + std::to_string(t));
  if (!is_connected(g)) throw ArgumentError("extraction needs a connected graph");
  const int n = g.order();
  if (n == 0) throw ArgumentError("extraction on the empty graph");

  const SearchResult path = longest_path(g);
  if (path.length == n) return {HamPath{*path.witness}, std::nullopt};

  auto fail = [&](std::string step) -> Extraction {
    return {Counterexample{to_graph6(g), std::move(step)}, std::nullopt};
  };

  const Sigma s2 = sigma_k(g, 2);
  // An undefined sigma_2 means g is complete, which always has the path.
  if (!s2.is_finite()) return fail("complete-graph-without-path");
  if (!meets_ore_threshold(s2, n, t, mode)) return {HypothesisNotMet{}, std::nullopt};
  if (mode == Threshold::NonStrict && n <= 2 * t - 4) {
    throw RegimeError("boundary extraction applies only for n > 2t-4");
  }

  const Sigma s3 = sigma_k(g, 3);
  if (!s3.is_finite() || s3.value() < n) return fail("sigma3-lower-bound");

  const SearchResult longest = longest_cycle(g);
  if (!longest.witness) return fail("longest-cycle");
  const VertexSequence& cycle = *longest.witness;
  if (longest.length != path.length - 1) return fail("cycle-path-gap");
  if (!check_dominating_cycle(g, cycle)) return fail("dominating-cycle");
  if (!cycle_claim_violations(g, cycle).empty()) return fail("cycle-claims");

  const CycleView c(cycle);
  if (popcount(g.vertices() & ~c.on_cycle()) < 2) return fail("two-off-cycle-vertices");
  auto [u, v] = select_uv(g, cycle, t);

  const long long lhs = 2LL * (t - 2) * g.degree(v);
  const long long rhs = static_cast<long long>(t - 3) * n;
  if (mode == Threshold::Strict ? lhs <= rhs : lhs < rhs) return fail("degree-of-v");

  ExtractionTrace trace;
  trace.cycle = cycle;
  trace.v = v;
  trace.i_set = compute_i(g, cycle, v);
  // Strictly: |I(v)| >= 3deg(v) - |C| > t-3. At the boundary the same count
  // only gives |I(v)| >= t-3 + (t-5)/(2t-4), which is not strict for t = 5.
  const int min_index_set = mode == Threshold::Strict ? t - 2 : t - 3;
  if (trace.i_set.size() < min_index_set) return fail("index-set-size");

  // Preferred partner first, then every other off-cycle vertex that shares
  // a cycle neighbour with v.
  std::vector<Vertex> partners{u};
  for_each_vertex(g.vertices() & ~c.on_cycle() & ~bit(v) & ~bit(u), [&](Vertex w) {
    if (g.neighbors(w) & g.neighbors(v) & c.on_cycle()) partners.push_back(w);
  });
  std::optional<CenterChoice> choice;
  for (Vertex w : partners) {
    trace.u_attempts.push_back(w);
    if (!(g.neighbors(w) & g.neighbors(v) & c.on_cycle())) continue;
    try {
      choice = find_center_and_indices(g, cycle, w, v, t);
      trace.u = w;
      break;
    } catch (const ExtractionFailure&) {
    }
  }
  if (!choice) return fail("center-and-indices");
  trace.center_l = choice->l;
  trace.j_indices = choice->j_indices;

  const int l = choice->l;
  std::vector<Vertex> leaves{trace.u, v, c.at(l - 1), c.at(l + 1)};
  for (int j : choice->j_indices) leaves.push_back(c.at(j + 1));
  std::sort(leaves.begin(), leaves.end());
  if (std::adjacent_find(leaves.begin(), leaves.end()) != leaves.end()) {
    return fail("star-verification");
  }
  trace.witness = StarWitness{c.at(l), leaves};
  if (!verify_star_witness(g, trace.witness, t)) return fail("star-verification");

  Star star{trace.witness};
  return {star, std::move(trace)};
}

}  // namespace hamstar
