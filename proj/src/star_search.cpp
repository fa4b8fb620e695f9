#include "hamstar/star_search.hpp"

#include <ostream>
#include <string>

#include "hamstar/errors.hpp"

namespace hamstar {

std::ostream& operator<<(std::ostream& os, const StarWitness& w) {
  os << "star(center=" << w.center << ", leaves={";
  for (std::size_t i = 0; i < w.leaves.size(); ++i) os << (i ? "," : "") << w.leaves[i];
  return os << "})";
}

namespace {

// Greedy partition of the pool into cliques. An independent set meets each
// clique at most once, so the clique count bounds what the pool can add.
int clique_cover_bound(const Graph& g, VertexMask pool) {
  int cliques = 0;
  while (pool) {
    VertexMask joinable = pool;
    while (joinable) {
      const Vertex v = lowest(joinable);
      pool &= ~bit(v);
      joinable &= g.neighbors(v);
    }
    ++cliques;
  }
  return cliques;
}

bool search(const Graph& g, VertexMask pool, int need, VertexMask& chosen) {
  if (need == 0) return true;
  // Vertices with no neighbour left in the pool never hurt: take them,
  // lowest first, as long as that keeps the lexicographic order intact.
  while (pool) {
    const Vertex v = lowest(pool);
    if (g.neighbors(v) & pool) break;
    chosen |= bit(v);
    pool &= ~bit(v);
    if (--need == 0) return true;
  }
  while (pool) {
    if (popcount(pool) < need) return false;
    if (clique_cover_bound(g, pool) < need) return false;
    const Vertex v = lowest(pool);
    pool &= ~bit(v);
    VertexMask with = chosen | bit(v);
    if (search(g, pool & ~g.neighbors(v), need - 1, with)) {
      chosen = with;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<VertexMask> find_independent_subset(const Graph& g, VertexMask pool, int size) {
  if (size < 0) throw ArgumentError("negative independent set size");
  VertexMask chosen = 0;
  if (search(g, pool & g.vertices(), size, chosen)) return chosen;
  return std::nullopt;
}

std::optional<StarWitness> find_induced_star(const Graph& g, int t) {
  if (t < 1) throw ArgumentError("star size t must be >= 1, got " + std::to_string(t));
  for (Vertex c = 0; c < g.order(); ++c) {
    if (g.degree(c) < t) continue;
    if (auto leaves = find_independent_subset(g, g.neighbors(c), t)) {
      return StarWitness{c, to_vector(*leaves)};
    }
  }
  return std::nullopt;
}

bool verify_star_witness(const Graph& g, const StarWitness& w, int t) {
  const int n = g.order();
  if (w.center < 0 || w.center >= n) {
    throw ArgumentError("star center " + std::to_string(w.center) + " out of range");
  }
  const VertexMask leaves = to_mask(w.leaves, n);
  if (static_cast<int>(w.leaves.size()) != t || popcount(leaves) != t) return false;
  if (leaves & bit(w.center)) return false;
  if ((leaves & ~g.neighbors(w.center)) != 0) return false;
  return is_independent_set(g, leaves);
}

}  // namespace hamstar
