#include "hamstar/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "hamstar/errors.hpp"

namespace hamstar {

std::vector<Vertex> to_vector(VertexMask m) {
  std::vector<Vertex> out;
  out.reserve(popcount(m));
  for_each_vertex(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

VertexMask to_mask(std::span<const Vertex> vs, int n) {
  VertexMask m = 0;
  for (Vertex v : vs) {
    if (v < 0 || v >= n) {
      throw ArgumentError("vertex " + std::to_string(v) + " out of range for n=" +
                          std::to_string(n));
    }
    m |= bit(v);
  }
  return m;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(n) + " outside [0, 64]");
  }
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph Graph::from_rows(int n, std::span<const VertexMask> rows) {
  Graph g(n);
  std::copy(rows.begin(), rows.begin() + n, g.rows_.begin());
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw ArgumentError("vertex " + std::to_string(v) + " out of range for n=" +
                        std::to_string(n_));
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u) {
    for_each_vertex(rows_[u] & ~low_bits(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
  }
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ArgumentError("self-loop on vertex " + std::to_string(u));
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

bool Graph::well_formed() const {
  const VertexMask all = vertices();
  for (Vertex v = 0; v < n_; ++v) {
    if (rows_[v] & ~all) return false;
    if (rows_[v] & bit(v)) return false;
    bool symmetric = true;
    for_each_vertex(rows_[v], [&](Vertex u) { symmetric = symmetric && adjacent(u, v); });
    if (!symmetric) return false;
  }
  for (Vertex v = n_; v < kMaxVertices; ++v) {
    if (rows_[v]) return false;
  }
  return true;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

std::ostream& operator<<(std::ostream& os, const Graph& g) {
  os << "Graph(n=" << g.order() << ", E={";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? "" : ", ") << u << '-' << v;
    first = false;
  }
  return os << "})";
}

VertexMask reachable(const Graph& g, Vertex from, VertexMask within) {
  VertexMask seen = bit(from);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
    frontier = next & within & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool is_connected_within(const Graph& g, VertexMask subset) {
  if (popcount(subset) <= 1) return true;
  return reachable(g, lowest(subset), subset) == subset;
}

bool is_connected(const Graph& g) { return is_connected_within(g, g.vertices()); }

bool is_independent_set(const Graph& g, VertexMask s) {
  if (s & ~g.vertices()) throw ArgumentError("vertex set contains indices >= n");
  bool ok = true;
  for_each_vertex(s, [&](Vertex v) { ok = ok && (g.neighbors(v) & s) == 0; });
  return ok;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> s) {
  return is_independent_set(g, to_mask(s, g.order()));
}

int min_degree(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::ostream& operator<<(std::ostream& os, const Sigma& s) {
  if (s.is_finite()) return os << s.value();
  return os << "undefined";
}

namespace {

// Depth-first over vertices sorted by ascending degree. Because later
// candidates never have smaller degree, sum + remaining*deg(next) is a
// valid lower bound for every completion.
class SigmaSearch {
 public:
  SigmaSearch(const Graph& g, int k) : g_(g), k_(k), order_(g.order()) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  }

  Sigma run() {
    dfs(0, g_.vertices(), 0, 0);
    return best_ == kNone ? Sigma::undefined() : Sigma::finite(best_);
  }

 private:
  static constexpr int kNone = std::numeric_limits<int>::max();

  void dfs(std::size_t pos, VertexMask allowed, int chosen, int sum) {
    if (chosen == k_) {
      best_ = std::min(best_, sum);
      return;
    }
    const int need = k_ - chosen;
    for (std::size_t i = pos; i < order_.size(); ++i) {
      const Vertex v = order_[i];
      if (!(allowed & bit(v))) continue;
      if (popcount(allowed) < need) return;
      if (best_ != kNone && sum + need * g_.degree(v) >= best_) return;
      dfs(i + 1, allowed & ~g_.neighbors(v) & ~bit(v), chosen + 1, sum + g_.degree(v));
      allowed &= ~bit(v);
    }
  }

  const Graph& g_;
  int k_;
  std::vector<Vertex> order_;
  int best_ = kNone;
};

}  // namespace

Sigma sigma_k(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1 || k > n) {
    throw ArgumentError("sigma_k needs 1 <= k <= n, got k=" + std::to_string(k) +
                        ", n=" + std::to_string(n));
  }
  if (k == 1) return Sigma::finite(min_degree(g));
  if (k == 2) {
    int best = std::numeric_limits<int>::max();
    for (Vertex u = 0; u < n; ++u) {
      const VertexMask later_non_neighbors = g.vertices() & ~low_bits(u + 1) & ~g.neighbors(u);
      for_each_vertex(later_non_neighbors,
                      [&](Vertex v) { best = std::min(best, g.degree(u) + g.degree(v)); });
    }
    return best == std::numeric_limits<int>::max() ? Sigma::undefined() : Sigma::finite(best);
  }
  return SigmaSearch(g, k).run();
}

bool meets_ore_threshold(const Sigma& sigma2, int n, int t, Threshold mode) {
  if (!sigma2.is_finite()) return true;
  const long long lhs = static_cast<long long>(t - 2) * sigma2.value();
  const long long rhs = static_cast<long long>(t - 3) * n;
  return mode == Threshold::Strict ? lhs > rhs : lhs >= rhs;
}

}  // namespace hamstar
