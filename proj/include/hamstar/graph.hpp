#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hamstar {

using Vertex = int;
// Bit v set <=> vertex v is a member.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

constexpr VertexMask low_bits(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

constexpr int popcount(VertexMask m) { return std::popcount(m); }

constexpr Vertex lowest(VertexMask m) { return std::countr_zero(m); }

// Calls f(v) for every member of `m`, lowest index first.
template <typename F>
void for_each_vertex(VertexMask m, F&& f) {
  while (m) {
    f(lowest(m));
    m &= m - 1;
  }
}

std::vector<Vertex> to_vector(VertexMask m);
VertexMask to_mask(std::span<const Vertex> vs, int n);

// Simple undirected graph on vertices 0..n-1, one 64-bit adjacency row per
// vertex. Rows are kept symmetric and irreflexive by every mutator.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  // Rows are taken as given; callers guarantee symmetry and irreflexivity.
  static Graph from_rows(int n, std::span<const VertexMask> rows);

  int order() const { return n_; }
  VertexMask vertices() const { return low_bits(n_); }
  VertexMask neighbors(Vertex v) const { return rows_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1; }
  int degree(Vertex v) const { return popcount(rows_[v]); }
  int edge_count() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  // Checks symmetry, irreflexivity and that no row mentions a vertex >= n.
  bool well_formed() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::array<VertexMask, kMaxVertices> rows_{};
};

std::ostream& operator<<(std::ostream& os, const Graph& g);

bool is_connected(const Graph& g);
bool is_connected_within(const Graph& g, VertexMask subset);
// Vertices reachable from `from` using only vertices of `within`.
VertexMask reachable(const Graph& g, Vertex from, VertexMask within);

bool is_independent_set(const Graph& g, VertexMask s);
bool is_independent_set(const Graph& g, std::span<const Vertex> s);

int min_degree(const Graph& g);

// sigma_k: least degree sum over k pairwise nonadjacent vertices. Undefined
// when the graph has no independent set of size k.
class Sigma {
 public:
  static Sigma finite(int sum) { return Sigma(sum); }
  static Sigma undefined() { return Sigma(); }

  bool is_finite() const { return value_.has_value(); }
  int value() const { return value_.value(); }

  friend bool operator==(const Sigma&, const Sigma&) = default;

 private:
  Sigma() = default;
  explicit Sigma(int v) : value_(v) {}
  std::optional<int> value_;
};

std::ostream& operator<<(std::ostream& os, const Sigma& s);

// Throws ArgumentError unless 1 <= k <= n.
Sigma sigma_k(const Graph& g, int k);

enum class Threshold { Strict, NonStrict };

// (t-2)*sigma2 > (t-3)*n, or >= for NonStrict, in integer arithmetic.
// An undefined sigma2 satisfies the condition vacuously.
bool meets_ore_threshold(const Sigma& sigma2, int n, int t, Threshold mode);

}  // namespace hamstar
